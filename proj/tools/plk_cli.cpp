#include <fstream>
#include <iostream>
#include <map>
#include <regex>

#include "CLI11.hpp"
#include "plk/report.hpp"

namespace {

bool parse_rational(const std::string& s, plk::Rational& out) {
  static const std::regex re(R"(\s*[+-]?\d+(/[+-]?\d+)?\s*)");
  if (!std::regex_match(s, re)) return false;
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t[0] == '+') t.erase(0, 1);
  plk::Rational q;
  if (q.set_str(t, 10) != 0 || q.get_den() == 0) return false;
  q.canonicalize();
  out = q;
  return true;
}

plk::Rational rational_arg(const std::string& name, const std::string& s) {
  plk::Rational q;
  if (!parse_rational(s, q)) throw CLI::ValidationError(name, "expected an integer or p/q, got '" + s + "'");
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-Lie algebras, quantum Riemannian calculi and their checks"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  plk::RunOptions opt;
  bool as_json = false;
  std::string out_path, lambda_s = "1", alpha_s, beta_s, c1_s = "1", c2_s = "0", c3_s = "1";
  std::size_t max_len = 0;
  int case_no = 0;

  app.add_option("--instance", opt.ids, "instance id (repeatable)");
  app.add_option("--instance-file", opt.instance_files, "JSON instance file overlaid on the catalog")->check(CLI::ExistingFile);
  auto* ml = app.add_option("--max-len", max_len, "word length bound for calculus and groupdga");
  app.add_option("--lambda", lambda_s, "value of lambda for kernel computations");
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write the report to this file");
  auto* co = app.add_option("--case", case_no, "standard metric case (1, 2, 4, 5)");
  auto* ao = app.add_option("--alpha", alpha_s, "case 1 parameter");
  auto* bo = app.add_option("--beta", beta_s, "case 2 parameter");
  app.add_option("--c1", c1_s, "metric coefficient c1");
  app.add_option("--c2", c2_s, "metric coefficient c2");
  app.add_option("--c3", c3_s, "metric coefficient c3");

  const std::map<std::string, std::string> help{
      {"check", "run the axiom checks for each instance"},
      {"construct", "build the derived structure (bisum, tangent, double cross sum, Xi)"},
      {"calculus", "check the enveloping-algebra calculus of a pre-Lie instance"},
      {"groupdga", "check the group DGA of a group instance"},
      {"metric", "print and check a quantum metric"},
      {"curvature", "classical scalar curvature against the closed form"},
      {"su2", "the su2 semiclassical and bicrossproduct verifications"},
      {"catalog", "list the catalog, or print payloads of the given ids"}};
  for (const auto& cmd : plk::report_commands()) {
    auto it = help.find(cmd);
    app.add_subcommand(cmd, it == help.end() ? cmd : it->second);
  }

  try {
    app.parse(argc, argv);
    if (*ml) opt.max_len = max_len;
    opt.lambda = rational_arg("--lambda", lambda_s);
    if (*co) opt.case_no = case_no;
    if (*ao) opt.alpha = rational_arg("--alpha", alpha_s);
    if (*bo) opt.beta = rational_arg("--beta", beta_s);
    opt.c1 = rational_arg("--c1", c1_s);
    opt.c2 = rational_arg("--c2", c2_s);
    opt.c3 = rational_arg("--c3", c3_s);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return plk::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  plk::RunResult r = plk::run_report(command, opt);
  std::string body = as_json ? r.json.dump(2) + "\n" : r.text;
  if (r.exit_code == plk::kExitUsage || r.exit_code == plk::kExitSchema) std::cerr << r.text;

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return plk::kExitUsage;
    }
    out << body;
  } else if (as_json || (r.exit_code != plk::kExitUsage && r.exit_code != plk::kExitSchema)) {
    std::cout << body;
  }
  return r.exit_code;
}
