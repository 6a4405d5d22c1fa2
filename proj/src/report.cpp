#include "plk/report.hpp"

#include <future>
#include <sstream>

#include "plk/su2.hpp"

namespace plk {

namespace {

struct Section {
  Section(std::string i, std::string k) : id(std::move(i)), kind(std::move(k)) {}
  std::string id, kind;
  std::vector<Report> reports;
  Json data = Json::object();
  std::vector<std::string> lines;

  bool ok() const {
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

std::string vec_str(const Vec& v, const Names& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].str();
    bool compound = !v[k].is_real();
    std::string term;
    if (c == "1") term = names[k];
    else if (c == "-1") term = "-" + names[k];
    else term = (compound ? "(" + c + ")" : c) + " " + names[k];
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::vector<std::string> product_lines(const PreLieProduct& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j) {
      Vec v = p.mul(unit(p.dim, i), unit(p.dim, j));
      bool zero = true;
      for (const auto& s : v) zero = zero && s.is_zero();
      if (!zero) out.push_back(p.basis_names[i] + " o " + p.basis_names[j] + " = " + vec_str(v, p.basis_names));
    }
  if (out.empty()) out.push_back("zero product");
  return out;
}

std::vector<std::string> bracket_lines(const LieAlgebra& l) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j) {
      Vec v = l.br(unit(l.dim, i), unit(l.dim, j));
      bool zero = true;
      for (const auto& s : v) zero = zero && s.is_zero();
      if (!zero) out.push_back("[" + l.basis_names[i] + ", " + l.basis_names[j] + "] = " + vec_str(v, l.basis_names));
    }
  if (out.empty()) out.push_back("abelian");
  return out;
}

std::vector<std::string> cobracket_lines(const LieBialgebra& b) {
  std::vector<std::string> out;
  const Names& n = b.names();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::string rhs;
    for (const auto& [idx, c] : b.coalgebra.cobracket.entries()) {
      if (idx[0] != i || idx[1] >= idx[2]) continue;
      std::string cs = c.str();
      std::string term = cs == "1" ? "" : cs == "-1" ? "-" : (c.is_real() ? cs : "(" + cs + ")") + " ";
      term += n[idx[1]] + "^" + n[idx[2]];
      if (rhs.empty()) rhs = term;
      else rhs += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    }
    if (!rhs.empty()) out.push_back("delta " + n[i] + " = " + rhs);
  }
  return out;
}

std::vector<std::string> bialgebra_lines(const LieBialgebra& b) {
  std::vector<std::string> out = bracket_lines(b.algebra);
  std::vector<std::string> co = cobracket_lines(b);
  if (co.empty()) out.push_back("zero cobracket");
  out.insert(out.end(), co.begin(), co.end());
  return out;
}

std::string ratfunc_expr(const RatFunc& f) {
  if (f.den() == GenPoly(1)) return function_to_expr(f.num());
  return "(" + function_to_expr(f.num()) + ") / (" + function_to_expr(f.den()) + ")";
}

std::string form_expr(const OneForm& w) {
  return "(" + function_to_expr(w.c[0].poly()) + ") dx + (" + function_to_expr(w.c[1].poly()) + ") dt";
}

Report single(std::string name, Check c) {
  Report r(std::move(name));
  r.add(std::move(c));
  return r;
}

Check named(Check c, std::string name) {
  c.name = std::move(name);
  return c;
}

// Runs body; a violated construction hypothesis becomes a failed check.
template <class F>
void guarded_build(Section& s, F&& body) {
  try {
    body();
  } catch (const PreconditionError& e) {
    Check c("preconditions");
    c.fail({});
    c.note = e.what();
    s.reports.push_back(single("construction", c));
  }
}

// The pre-Lie axioms, then bicovariance as a separate property.
std::vector<Report> prelie_suite(const PreLieProduct& xi, const LieBialgebra& carrier) {
  LieAlgebra dual = dual_lie_algebra(carrier);
  Report r("prelie");
  r.add(named(check_left_symmetry(xi), "left_symmetry"));
  r.add(named(check_compatibility(xi, dual), "compatibility"));
  r.add(named(check_flat_right_action(xi, dual), "flat_right_action"));
  return {r, single("covariance", named(check_bicovariance(xi, carrier), "bicovariance"))};
}

Report rmatrix_suite(const RMatrix& rm, PreLieProduct* out) {
  Report r("rmatrix");
  r.add(named(check_cybe(rm), "cybe"));
  Check& sym = r.add(named(check_rmatrix_symmetric_part(rm), "symmetric_part"));
  if (!sym.ok) return r;
  PreLieProduct xi = xi_from_rmatrix(rm);
  r.add(named(check_left_symmetry(xi), "xi_left_symmetry"));
  r.add(named(check_compatibility(xi, dual_lie_algebra(rm.carrier)), "xi_compatibility"));
  if (out) *out = xi;
  return r;
}

void metric_details(Section& s, const MetricCandidate& m) {
  s.reports.push_back(check_metric(m));
  s.data["metric"] = metric_to_json(m);
  const char* legs[2] = {"dx", "dt"};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      s.lines.push_back(std::string("g[") + legs[a] + "@" + legs[b] + "] = " + function_to_expr(m.g.c[a][b].poly()));
}

struct CaseSpec {
  int case_no = 0;
  Rational param{0};
  Scalar c1{1}, c2{0}, c3{1};
};

std::optional<CaseSpec> case_of_payload(const Json& p) {
  if (!p.contains("case")) return std::nullopt;
  CaseSpec c;
  c.case_no = int(p.at("case").get<long long>());
  if (p.contains("param")) c.param = rational_from_json(p.at("param"));
  c.c1 = scalar_from_json(p.at("c")[0]);
  c.c2 = scalar_from_json(p.at("c")[1]);
  c.c3 = scalar_from_json(p.at("c")[2]);
  return c;
}

void standard_form_details(Section& s, const CaseSpec& c) {
  CentralForms f = central_forms(c.case_no, c.param);
  LocalizedCalculus calc = localized_calculus(f.calculus_id);
  OneForm vs = star_form(f.v, calc);
  OneForm diff{{vs.c[0] - f.v.c[0], vs.c[1] - f.v.c[1]}};
  s.lines.push_back("calculus " + f.calculus_id);
  s.lines.push_back("u = " + form_expr(f.u));
  s.lines.push_back("v = " + form_expr(f.v));
  s.lines.push_back("v* - v = " + form_expr(diff));
  s.data["u"] = form_expr(f.u);
  s.data["v"] = form_expr(f.v);
  s.data["v_star_minus_v"] = form_expr(diff);
}

void curvature_details(Section& s, const MetricCandidate& m, const std::optional<CaseSpec>& spec) {
  CurvatureResult r = scalar_curvature_classical(m);
  std::string R = ratfunc_expr(r.scalar_curvature);
  s.lines.push_back("E = " + function_to_expr(r.E));
  s.lines.push_back("F = " + function_to_expr(r.F));
  s.lines.push_back("G = " + function_to_expr(r.G));
  s.lines.push_back("R = " + R);
  s.data["E"] = function_to_expr(r.E);
  s.data["F"] = function_to_expr(r.F);
  s.data["G"] = function_to_expr(r.G);
  s.data["R"] = R;
  std::optional<RatFunc> pub;
  if (spec) pub = closed_form_curvature(spec->case_no, spec->param, spec->c1, spec->c2, spec->c3);
  Report rep("curvature");
  if (pub) {
    Check c("closed_form");
    c.require(ratfunc_equal(r.scalar_curvature, *pub), {});
    c.note = "closed form R = " + ratfunc_expr(*pub);
    rep.add(c);
    s.data["closed_form_R"] = ratfunc_expr(*pub);
    s.lines.push_back(std::string("verdict: ") + (c.ok ? "matches" : "differs from") + " the closed form");
  } else {
    s.lines.push_back("verdict: no closed form for these parameters");
  }
  s.reports.push_back(rep);
}

std::size_t max_len_or(const RunOptions& o, std::size_t d) { return o.max_len ? *o.max_len : d; }

Section check_instance(const Instance& inst, const RunOptions& opt) {
  Section s{inst.id, kind_name(inst.kind)};
  const Json& p = inst.payload;
  switch (inst.kind) {
    case InstanceKind::lie: {
      LieAlgebra l = lie_from_json(p);
      s.reports.push_back(check_lie_algebra(l));
      s.lines = bracket_lines(l);
      break;
    }
    case InstanceKind::bialgebra: {
      LieBialgebra b = bialgebra_from_json(p);
      s.reports.push_back(check_lie_bialgebra(b));
      s.lines = bialgebra_lines(b);
      break;
    }
    case InstanceKind::prelie: {
      PreLieData d = prelie_from_json(p);
      s.reports = prelie_suite(d.xi, d.carrier);
      s.lines = product_lines(d.xi);
      break;
    }
    case InstanceKind::matched_pair:
      s.reports.push_back(check_matched_pair(matched_pair_from_json(p)));
      break;
    case InstanceKind::rmatrix:
      s.reports.push_back(rmatrix_suite(rmatrix_from_json(p), nullptr));
      break;
    case InstanceKind::metric: {
      metric_details(s, metric_from_json(p));
      if (auto c = case_of_payload(p)) standard_form_details(s, *c);
      break;
    }
    case InstanceKind::group_dga: {
      GroupDGAData g = group_from_json(p);
      Report v = validate_group_data(g);
      s.reports.push_back(v);
      if (!v.ok()) break;
      GroupDGACheck c = check_group_dga(GroupDGA(g), max_len_or(opt, 3));
      s.reports.push_back(c.report);
      s.data["omega_rank"] = c.omega_rank;
      s.lines.push_back("omega rank " + std::to_string(c.omega_rank));
      if (!c.warning.empty()) s.lines.push_back("warning: " + c.warning);
      break;
    }
    case InstanceKind::cotangent_input: {
      CotangentInput c = cotangent_from_json(p);
      Report pre = cotangent_preconditions(c);
      s.reports.push_back(pre);
      if (pre.ok()) s.reports.push_back(single("output", named(check_left_symmetry(cotangent_prelie(c)), "left_symmetry")));
      break;
    }
    case InstanceKind::tangent_input: {
      TangentInput t = tangent_from_json(p);
      Report pre = tangent_preconditions(t.circ, t.star, t.carrier);
      s.reports.push_back(pre);
      if (pre.ok())
        s.reports.push_back(
            single("output", named(check_left_symmetry(tangent_prelie(t.circ, t.star, t.carrier)), "left_symmetry")));
      break;
    }
  }
  return s;
}

Section construct_instance(const Instance& inst, const RunOptions&) {
  Section s{inst.id, kind_name(inst.kind)};
  const Json& p = inst.payload;
  guarded_build(s, [&] {
    switch (inst.kind) {
      case InstanceKind::prelie: {
        PreLieData d = prelie_from_json(p);
        LieBialgebra b = bisum_bialgebra(d.xi, d.carrier);
        s.reports.push_back(check_lie_bialgebra(b));
        s.data["result"] = bialgebra_to_json(b);
        s.lines = bialgebra_lines(b);
        break;
      }
      case InstanceKind::bialgebra: {
        LieBialgebra b = tangent_bialgebra(bialgebra_from_json(p));
        s.reports.push_back(check_lie_bialgebra(b));
        s.data["result"] = bialgebra_to_json(b);
        s.lines = bialgebra_lines(b);
        break;
      }
      case InstanceKind::matched_pair: {
        LieAlgebra l = double_cross_sum(matched_pair_from_json(p));
        s.reports.push_back(check_lie_algebra(l));
        s.data["result"] = lie_to_json(l);
        s.lines = bracket_lines(l);
        break;
      }
      case InstanceKind::rmatrix: {
        RMatrix rm = rmatrix_from_json(p);
        PreLieProduct xi;
        Report r = rmatrix_suite(rm, &xi);
        s.reports.push_back(r);
        if (r.get("symmetric_part").ok) {
          s.data["result"] = prelie_to_json({xi, rm.carrier});
          s.lines = product_lines(xi);
        }
        break;
      }
      case InstanceKind::cotangent_input: {
        PreLieProduct out = cotangent_prelie(cotangent_from_json(p));
        s.reports.push_back(single("output", named(check_left_symmetry(out), "left_symmetry")));
        s.data["result"] = prelie_product_to_json(out);
        s.lines = product_lines(out);
        break;
      }
      case InstanceKind::tangent_input: {
        TangentInput t = tangent_from_json(p);
        PreLieProduct out = tangent_prelie(t.circ, t.star, t.carrier);
        s.reports.push_back(single("output", named(check_left_symmetry(out), "left_symmetry")));
        s.data["result"] = prelie_product_to_json(out);
        s.lines = product_lines(out);
        break;
      }
      default:
        throw UsageError("construct does not apply to kind " + kind_name(inst.kind));
    }
  });
  return s;
}

Section calculus_instance(const Instance& inst, const RunOptions& opt) {
  if (inst.kind != InstanceKind::prelie) throw UsageError("calculus needs a prelie instance, got " + inst.id);
  Section s{inst.id, kind_name(inst.kind)};
  PreLieData d = prelie_from_json(inst.payload);
  std::size_t n = max_len_or(opt, 3);
  LieAlgebra m = dual_lie_algebra(d.carrier);
  s.data["max_len"] = n;
  s.data["lambda"] = rational_to_json(opt.lambda);
  guarded_build(s, [&] {
    s.reports.push_back(check_first_order(m, d.xi, n));
    EnvelopingCalculus calc(m, d.xi);
    s.reports.push_back(check_exterior(calc, n));
    KernelResult k = kernel_of_d(calc, n, Scalar(opt.lambda));
    Check c("kernel_dimension_one");
    c.require(k.dimension == 1, {k.dimension});
    s.reports.push_back(single("connectedness", c));
    s.data["kernel_dimension"] = k.dimension;
    s.lines.push_back("ker d on U_" + std::to_string(n) + " at lam = " + rational_str(opt.lambda) + ": dimension " +
                      std::to_string(k.dimension));
  });
  return s;
}

Section groupdga_instance(const Instance& inst, const RunOptions& opt) {
  if (inst.kind != InstanceKind::group_dga) throw UsageError("groupdga needs a group_dga instance, got " + inst.id);
  return check_instance(inst, opt);
}

Section metric_instance(const std::string& command, const Instance& inst) {
  if (inst.kind != InstanceKind::metric) throw UsageError(command + " needs a metric instance, got " + inst.id);
  Section s{inst.id, kind_name(inst.kind)};
  MetricCandidate m = metric_from_json(inst.payload);
  std::optional<CaseSpec> spec = case_of_payload(inst.payload);
  if (command == "metric") {
    metric_details(s, m);
    if (spec) standard_form_details(s, *spec);
  } else {
    curvature_details(s, m, spec);
  }
  return s;
}

Section metric_case(const std::string& command, const RunOptions& opt) {
  CaseSpec c;
  c.case_no = *opt.case_no;
  if (c.case_no == 1) {
    if (!opt.alpha) throw UsageError("case 1 needs --alpha");
    c.param = *opt.alpha;
  } else if (c.case_no == 2) {
    if (!opt.beta) throw UsageError("case 2 needs --beta");
    c.param = *opt.beta;
  }
  c.c1 = Scalar(opt.c1);
  c.c2 = Scalar(opt.c2);
  c.c3 = Scalar(opt.c3);
  MetricCandidate m = standard_metric(c.case_no, c.param, c.c1, c.c2, c.c3);
  std::string id = "case" + std::to_string(c.case_no);
  if (c.case_no <= 2) id += "(" + rational_str(c.param) + ")";
  Section s{id, "metric"};
  s.data["c"] = Json::array({rational_to_json(opt.c1), rational_to_json(opt.c2), rational_to_json(opt.c3)});
  if (command == "metric") {
    metric_details(s, m);
    standard_form_details(s, c);
  } else {
    curvature_details(s, m, c);
  }
  return s;
}

Json section_json(const Section& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(report_to_json(r));
  return {{"id", s.id}, {"kind", s.kind}, {"ok", s.ok()}, {"reports", reports}, {"data", s.data}};
}

std::string section_text(const Section& s) {
  std::ostringstream os;
  os << "[" << s.id << "] " << s.kind << "\n";
  for (const auto& l : s.lines) os << "  " << l << "\n";
  for (const auto& r : s.reports) {
    std::istringstream in(r.describe());
    for (std::string line; std::getline(in, line);) os << "  " << line << "\n";
  }
  return os.str();
}

RunResult error_result(const std::string& command, int code, const std::string& msg) {
  RunResult r;
  r.exit_code = code;
  r.json = {{"command", command}, {"error", msg}, {"exit_code", code}};
  r.text = "error: " + msg + "\n";
  return r;
}

std::vector<Section> run_sections(const std::string& command, const RunOptions& opt) {
  std::vector<Instance> all = load_catalog();
  for (const auto& f : opt.instance_files) all = overlay(all, load_instance_file(f));

  const bool wants_ids = command == "check" || command == "construct" || command == "calculus" || command == "groupdga";
  if (wants_ids && opt.ids.empty()) throw UsageError(command + " needs at least one --instance");
  if (command == "su2") {
    if (!opt.ids.empty()) throw UsageError("su2 takes no instances");
    Section s{"su2", "su2"};
    s.reports.push_back(verify_su2_semiclassical());
    s.reports.push_back(verify_su2_bicrossproduct_omega());
    return {s};
  }
  if (command == "catalog") {
    std::vector<Section> out;
    if (opt.ids.empty()) {
      Section s{"catalog", "catalog"};
      for (const auto& i : all) {
        s.lines.push_back(i.id + " " + kind_name(i.kind));
        s.data[i.id] = kind_name(i.kind);
      }
      out.push_back(s);
    }
    for (const auto& id : opt.ids) {
      const Instance& i = find_instance(all, id);
      Section s{i.id, kind_name(i.kind)};
      s.data["payload"] = i.payload;
      s.lines.push_back(i.payload.dump());
      out.push_back(s);
    }
    return out;
  }
  if (command == "metric" || command == "curvature") {
    if (opt.case_no && !opt.ids.empty()) throw UsageError("give either --case or --instance, not both");
    if (!opt.case_no && opt.ids.empty()) throw UsageError(command + " needs --case or --instance");
    if (opt.case_no) return {metric_case(command, opt)};
  }

  std::vector<const Instance*> targets;
  for (const auto& id : opt.ids) targets.push_back(&find_instance(all, id));

  auto eval = [&command, &opt](const Instance& inst) -> Section {
    if (command == "check") return check_instance(inst, opt);
    if (command == "construct") return construct_instance(inst, opt);
    if (command == "calculus") return calculus_instance(inst, opt);
    if (command == "groupdga") return groupdga_instance(inst, opt);
    return metric_instance(command, inst);
  };
  std::vector<std::future<Section>> jobs;
  for (const Instance* t : targets) jobs.push_back(std::async(std::launch::async, eval, std::cref(*t)));
  std::vector<Section> out;
  // Collect every job before rethrowing so no thread outlives the catalog.
  std::exception_ptr first_error;
  for (auto& j : jobs) {
    try {
      out.push_back(j.get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace

const std::vector<std::string>& report_commands() {
  static const std::vector<std::string> c{"check", "construct", "calculus", "groupdga", "metric", "curvature", "su2", "catalog"};
  return c;
}

RunResult run_report(const std::string& command, const RunOptions& opt) {
  if (std::find(report_commands().begin(), report_commands().end(), command) == report_commands().end())
    return error_result(command, kExitUsage, "unknown command '" + command + "'");
  std::vector<Section> sections;
  try {
    sections = run_sections(command, opt);
  } catch (const UsageError& e) {
    return error_result(command, kExitUsage, e.what());
  } catch (const UnknownInstance& e) {
    return error_result(command, kExitUsage, e.what());
  } catch (const SchemaError& e) {
    return error_result(command, kExitSchema, e.what());
  } catch (const UnsupportedFunction& e) {
    return error_result(command, kExitUsage, e.what());
  } catch (const PreconditionError& e) {
    return error_result(command, kExitCheckFailed, e.what());
  } catch (const std::invalid_argument& e) {
    return error_result(command, kExitUsage, e.what());
  }

  RunResult r;
  bool ok = true;
  Json results = Json::array();
  for (const auto& s : sections) {
    ok = ok && s.ok();
    results.push_back(section_json(s));
    r.text += section_text(s);
  }
  r.exit_code = ok ? kExitPass : kExitCheckFailed;
  r.text += std::string("overall: ") + (ok ? "pass" : "FAIL") + "\n";
  r.json = {{"command", command}, {"ok", ok}, {"exit_code", r.exit_code}, {"results", results}};
  return r;
}

}  // namespace plk
