#include "plk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "plk/catalog.hpp"

namespace plk {

namespace {

const std::vector<std::pair<InstanceKind, std::string>>& kind_table() {
  static const std::vector<std::pair<InstanceKind, std::string>> t{
      {InstanceKind::lie, "lie"},
      {InstanceKind::bialgebra, "bialgebra"},
      {InstanceKind::prelie, "prelie"},
      {InstanceKind::matched_pair, "matched_pair"},
      {InstanceKind::rmatrix, "rmatrix"},
      {InstanceKind::metric, "metric"},
      {InstanceKind::group_dga, "group_dga"},
      {InstanceKind::cotangent_input, "cotangent_input"},
      {InstanceKind::tangent_input, "tangent_input"},
  };
  return t;
}

[[noreturn]] void schema(const std::string& msg) { throw SchemaError(msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) schema("bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  schema("expected an integer, got " + j.dump());
}

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Rational ratio(const Json& num, const Json& den) {
  mpz_class d = integer_from_json(den);
  if (d == 0) schema("zero denominator");
  Rational q(integer_from_json(num), d);
  q.canonicalize();
  return q;
}

Names names_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) schema("basis must be a nonempty array of names");
  Names n;
  for (const auto& e : j) {
    if (!e.is_string()) schema("basis names must be strings");
    n.push_back(e.get<std::string>());
  }
  return n;
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) schema(std::string(what) + " has dimension " + std::to_string(got) + ", expected " +
                          std::to_string(want));
}

std::vector<std::size_t> index_rows(const Json& j) {
  if (!j.is_array()) schema("expected an array of nonnegative integers");
  std::vector<std::size_t> v;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) schema("expected a nonnegative integer, got " + e.dump());
    v.push_back(std::size_t(e.get<long long>()));
  }
  return v;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  } catch (const std::logic_error& e) {
    throw SchemaError(e.what());
  }
}

std::string term_factors(const Rational& c, unsigned lam_degree, const Monomial& m, bool imaginary) {
  std::vector<std::string> f;
  if (abs(c) != 1) f.push_back(rational_str(abs(c)));
  if (imaginary) f.push_back("i");
  if (lam_degree == 1) f.push_back("lam");
  else if (lam_degree > 1) f.push_back("lam^" + std::to_string(lam_degree));
  if (m.xexp == 1) f.push_back("x");
  else if (m.xexp > 0 && m.xexp.get_den() == 1) f.push_back("x^" + rational_str(m.xexp));
  else if (m.xexp != 0) f.push_back("x^(" + rational_str(m.xexp) + ")");
  if (m.texp == 1) f.push_back("t");
  else if (m.texp > 1) f.push_back("t^" + std::to_string(m.texp));
  if (f.empty()) return "1";
  std::string out = f[0];
  for (std::size_t k = 1; k < f.size(); ++k) out += " " + f[k];
  return out;
}

}  // namespace

std::string kind_name(InstanceKind k) {
  for (const auto& [kind, name] : kind_table())
    if (kind == k) return name;
  return "?";
}

InstanceKind parse_kind(const std::string& s) {
  for (const auto& [kind, name] : kind_table())
    if (name == s) return kind;
  schema("unknown instance kind '" + s + "'");
}

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return ratio(j, 1);
  if (!j.is_array() || j.empty() || j.size() > 2) schema("rational must be n or [num, den], got " + j.dump());
  return j.size() == 1 ? ratio(j[0], 1) : ratio(j[0], j[1]);
}

Json scalar_to_json(const Scalar& s) {
  return Json::array({integer_to_json(s.re().get_num()), integer_to_json(s.re().get_den()),
                      integer_to_json(s.im().get_num()), integer_to_json(s.im().get_den())});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Scalar(ratio(j, 1));
  if (!j.is_array()) schema("scalar must be an array, got " + j.dump());
  switch (j.size()) {
    case 1: return Scalar(ratio(j[0], 1));
    case 2: return Scalar(ratio(j[0], j[1]));
    case 4: return Scalar(ratio(j[0], j[1]), ratio(j[2], j[3]));
    default: schema("scalar must have 1, 2 or 4 parts, got " + j.dump());
  }
}

Json tensor_to_json(const Tensor& t) {
  Json out = Json::array();
  for (const auto& [idx, c] : t.entries()) {
    Json e = Json::array();
    for (auto i : idx) e.push_back(i);
    for (const auto& part : scalar_to_json(c)) e.push_back(part);
    out.push_back(e);
  }
  return out;
}

Tensor tensor_from_json(const Json& j, const std::vector<std::size_t>& shape) {
  if (!j.is_array()) schema("tensor entries must be an array");
  Tensor t(shape);
  const std::size_t r = shape.size();
  for (const auto& e : j) {
    if (!e.is_array() || e.size() < r + 1 || e.size() == r + 3 || e.size() > r + 4)
      schema("entry must hold " + std::to_string(r) + " indices and 1, 2 or 4 scalar parts: " + e.dump());
    Index idx;
    for (std::size_t a = 0; a < r; ++a) {
      if (!e[a].is_number_integer() || e[a].get<long long>() < 0 ||
          std::size_t(e[a].get<long long>()) >= shape[a])
        schema("index out of range in entry " + e.dump());
      idx.push_back(std::size_t(e[a].get<long long>()));
    }
    Json parts(std::vector<Json>(e.begin() + long(r), e.end()));
    if (!t.get(idx).is_zero()) schema("duplicate entry " + e.dump());
    t.set(idx, scalar_from_json(parts));
  }
  return t;
}

Json lie_to_json(const LieAlgebra& l) { return {{"basis", l.basis_names}, {"bracket", tensor_to_json(l.bracket)}}; }

LieAlgebra lie_from_json(const Json& j) {
  return guarded([&] {
    LieAlgebra l;
    l.basis_names = names_from_json(field(j, "basis"));
    l.dim = l.basis_names.size();
    l.bracket = tensor_from_json(field(j, "bracket"), {l.dim, l.dim, l.dim});
    return l;
  });
}

Json bialgebra_to_json(const LieBialgebra& b) {
  Json j = lie_to_json(b.algebra);
  j["cobracket"] = tensor_to_json(b.coalgebra.cobracket);
  return j;
}

LieBialgebra bialgebra_from_json(const Json& j) {
  return guarded([&] {
    LieAlgebra l = lie_from_json(j);
    LieCoalgebra c;
    c.dim = l.dim;
    c.basis_names = l.basis_names;
    c.cobracket = j.contains("cobracket") ? tensor_from_json(j.at("cobracket"), {l.dim, l.dim, l.dim})
                                          : Tensor({l.dim, l.dim, l.dim});
    LieBialgebra b;
    b.algebra = l;
    b.coalgebra = c;
    return b;
  });
}

Json action_to_json(const ActionTensor& a) {
  return {{"actor_dim", a.actor_dim}, {"target_dim", a.target_dim}, {"coeffs", tensor_to_json(a.coeffs)}};
}

ActionTensor action_from_json(const Json& j) {
  return guarded([&] {
    const Json& ad = field(j, "actor_dim");
    const Json& td = field(j, "target_dim");
    if (!ad.is_number_integer() || !td.is_number_integer() || ad.get<long long>() <= 0 || td.get<long long>() <= 0)
      schema("action dimensions must be positive integers");
    ActionTensor a(std::size_t(ad.get<long long>()), std::size_t(td.get<long long>()));
    a.coeffs = tensor_from_json(field(j, "coeffs"), {a.actor_dim, a.target_dim, a.target_dim});
    return a;
  });
}

Json prelie_product_to_json(const PreLieProduct& p) {
  return {{"basis", p.basis_names}, {"xi", tensor_to_json(p.xi)}};
}

PreLieProduct prelie_product_from_json(const Json& j) {
  return guarded([&] {
    PreLieProduct p;
    p.basis_names = names_from_json(field(j, "basis"));
    p.dim = p.basis_names.size();
    p.xi = tensor_from_json(field(j, "xi"), {p.dim, p.dim, p.dim});
    return p;
  });
}

Json prelie_to_json(const PreLieData& p) {
  Json j = prelie_product_to_json(p.xi);
  j["carrier"] = bialgebra_to_json(p.carrier);
  return j;
}

PreLieData prelie_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_object() && j.contains("family")) {
      const Json& f = j.at("family");
      if (!f.is_string()) schema("family must be a string");
      std::string fam = f.get<std::string>();
      LieBialgebra bc = catalog::carrier_of(catalog::lie_b());
      bool has_param = j.contains("param");
      if (fam == "b1" || fam == "b2") {
        if (!has_param) schema("family " + fam + " needs param");
        Rational q = rational_from_json(j.at("param"));
        return PreLieData{fam == "b1" ? catalog::b1(q) : catalog::b2(q), bc};
      }
      if (has_param) schema("family " + fam + " takes no param");
      if (fam == "b3") return PreLieData{catalog::b3(), bc};
      if (fam == "b4") return PreLieData{catalog::b4(), bc};
      if (fam == "b5") return PreLieData{catalog::b5(), bc};
      schema("unknown family '" + fam + "'");
    }
    PreLieData d{prelie_product_from_json(j), bialgebra_from_json(field(j, "carrier"))};
    require_dim(d.carrier.dim(), d.xi.dim, "carrier");
    return d;
  });
}

Json matched_pair_to_json(const MatchedPair& p) {
  return {{"g", lie_to_json(p.g)},
          {"m", lie_to_json(p.m)},
          {"right_action", action_to_json(p.right_action)},
          {"left_action", action_to_json(p.left_action)}};
}

MatchedPair matched_pair_from_json(const Json& j) {
  return guarded([&] {
    MatchedPair p{lie_from_json(field(j, "g")), lie_from_json(field(j, "m")),
                  action_from_json(field(j, "right_action")), action_from_json(field(j, "left_action"))};
    // right action of g on m, left action of m on g
    require_dim(p.right_action.actor_dim, p.g.dim, "right_action actor");
    require_dim(p.right_action.target_dim, p.m.dim, "right_action target");
    require_dim(p.left_action.actor_dim, p.m.dim, "left_action actor");
    require_dim(p.left_action.target_dim, p.g.dim, "left_action target");
    return p;
  });
}

Json rmatrix_to_json(const RMatrix& r) { return {{"algebra", lie_to_json(r.carrier.algebra)}, {"r", tensor_to_json(r.r)}}; }

RMatrix rmatrix_from_json(const Json& j) {
  return guarded([&] {
    LieAlgebra l = lie_from_json(field(j, "algebra"));
    Tensor r = tensor_from_json(field(j, "r"), {l.dim, l.dim});
    return RMatrix{coboundary_bialgebra(l, r), r};
  });
}

std::string function_to_expr(const GenPoly& f) {
  std::vector<std::pair<bool, std::string>> terms;  // (negative, body)
  for (const auto& [m, c] : f.terms())
    for (unsigned k = 0; k <= c.degree(); ++k) {
      Scalar s = c.coeff(k);
      if (sgn(s.re()) != 0) terms.push_back({sgn(s.re()) < 0, term_factors(s.re(), k, m, false)});
      if (sgn(s.im()) != 0) terms.push_back({sgn(s.im()) < 0, term_factors(s.im(), k, m, true)});
    }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (n == 0) out += terms[n].first ? "-" : "";
    else out += terms[n].first ? " - " : " + ";
    out += terms[n].second;
  }
  return out;
}

Json metric_to_json(const MetricCandidate& m) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < 2; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < 2; ++b) row.push_back(function_to_expr(m.g.c[a][b].poly()));
    rows.push_back(row);
  }
  return {{"calculus", m.calculus_id}, {"coefficients", rows}};
}

MetricCandidate metric_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_object() && j.contains("case")) {
      const Json& cj = field(j, "case");
      if (!cj.is_number_integer()) schema("case must be an integer");
      int case_no = int(cj.get<long long>());
      Rational param = j.contains("param") ? rational_from_json(j.at("param")) : Rational(0);
      const Json& c = field(j, "c");
      if (!c.is_array() || c.size() != 3) schema("c must hold three scalars");
      return standard_metric(case_no, param, scalar_from_json(c[0]), scalar_from_json(c[1]), scalar_from_json(c[2]));
    }
    const Json& calc = field(j, "calculus");
    if (!calc.is_string()) schema("calculus must be a string");
    std::string id = calc.get<std::string>();
    LocalizedCalculus lc = localized_calculus(id);
    const Json& rows = field(j, "coefficients");
    if (!rows.is_array() || rows.size() != 2) schema("coefficients must be a 2x2 array");
    MetricCandidate m;
    m.calculus_id = id;
    for (std::size_t a = 0; a < 2; ++a) {
      if (!rows[a].is_array() || rows[a].size() != 2) schema("coefficients must be a 2x2 array");
      for (std::size_t b = 0; b < 2; ++b) {
        if (!rows[a][b].is_string()) schema("coefficients must be expression strings");
        NormalOrdered n = normal_order_localized(rows[a][b].get<std::string>(), lc);
        if (n.grade != 0) schema("metric coefficient '" + rows[a][b].get<std::string>() + "' is not a function");
        m.g.c[a][b] = n.function;
      }
    }
    return m;
  });
}

Json group_to_json(const GroupDGAData& g) {
  Json theta = Json::array();
  for (const auto& s : g.theta) theta.push_back(scalar_to_json(s));
  return {{"cayley", g.cayley}, {"action", g.action}, {"theta", theta}};
}

GroupDGAData group_from_json(const Json& j) {
  return guarded([&] {
    GroupDGAData g;
    for (const auto& row : field(j, "cayley")) g.cayley.push_back(index_rows(row));
    for (const auto& row : field(j, "action")) g.action.push_back(index_rows(row));
    const Json& th = field(j, "theta");
    if (!th.is_array() || th.empty()) schema("theta must be a nonempty array");
    for (const auto& s : th) g.theta.push_back(scalar_from_json(s));
    std::size_t n = g.cayley.size();
    if (n == 0) schema("cayley table is empty");
    for (const auto& row : g.cayley) {
      require_dim(row.size(), n, "cayley row");
      for (auto v : row)
        if (v >= n) schema("cayley entry out of range");
    }
    require_dim(g.action.size(), n, "action table");
    for (const auto& row : g.action) {
      require_dim(row.size(), g.theta.size(), "action row");
      for (auto v : row)
        if (v >= g.theta.size()) schema("action entry out of range");
    }
    return g;
  });
}

CotangentInput cotangent_from_json(const Json& j) {
  return guarded([&] {
    CotangentInput c{bialgebra_from_json(field(j, "carrier")), prelie_product_from_json(field(j, "xi")),
                     prelie_product_from_json(field(j, "circ")), prelie_product_from_json(field(j, "star"))};
    require_dim(c.xi.dim, c.carrier.dim(), "xi");
    require_dim(c.circ.dim, c.carrier.dim(), "circ");
    require_dim(c.star.dim, c.carrier.dim(), "star");
    return c;
  });
}

Json cotangent_to_json(const CotangentInput& c) {
  return {{"carrier", bialgebra_to_json(c.carrier)},
          {"xi", prelie_product_to_json(c.xi)},
          {"circ", prelie_product_to_json(c.circ)},
          {"star", prelie_product_to_json(c.star)}};
}

TangentInput tangent_from_json(const Json& j) {
  return guarded([&] {
    TangentInput t{bialgebra_from_json(field(j, "carrier")), prelie_product_from_json(field(j, "circ")),
                   prelie_product_from_json(field(j, "star"))};
    require_dim(t.circ.dim, t.carrier.dim(), "circ");
    require_dim(t.star.dim, t.carrier.dim(), "star");
    return t;
  });
}

Json tangent_to_json(const TangentInput& t) {
  return {{"carrier", bialgebra_to_json(t.carrier)},
          {"circ", prelie_product_to_json(t.circ)},
          {"star", prelie_product_to_json(t.star)}};
}

void validate_instance(const Instance& inst) {
  const Json& p = inst.payload;
  switch (inst.kind) {
    case InstanceKind::lie: lie_from_json(p); break;
    case InstanceKind::bialgebra: bialgebra_from_json(p); break;
    case InstanceKind::prelie: prelie_from_json(p); break;
    case InstanceKind::matched_pair: matched_pair_from_json(p); break;
    case InstanceKind::rmatrix: rmatrix_from_json(p); break;
    case InstanceKind::metric: metric_from_json(p); break;
    case InstanceKind::group_dga: group_from_json(p); break;
    case InstanceKind::cotangent_input: cotangent_from_json(p); break;
    case InstanceKind::tangent_input: tangent_from_json(p); break;
  }
}

Instance instance_from_json(const Json& j) {
  return guarded([&] {
    const Json& id = field(j, "id");
    const Json& kind = field(j, "kind");
    if (!id.is_string() || id.get<std::string>().empty()) schema("id must be a nonempty string");
    if (!kind.is_string()) schema("kind must be a string");
    Instance inst{id.get<std::string>(), parse_kind(kind.get<std::string>()), field(j, "payload")};
    try {
      validate_instance(inst);
    } catch (const SchemaError& e) {
      throw SchemaError("instance '" + inst.id + "': " + e.what());
    }
    return inst;
  });
}

Json instance_to_json(const Instance& inst) {
  return {{"id", inst.id}, {"kind", kind_name(inst.kind)}, {"payload", inst.payload}};
}

std::vector<Instance> load_catalog() {
  std::vector<Instance> out;
  auto add = [&](std::string id, InstanceKind k, Json payload) { out.push_back({std::move(id), k, std::move(payload)}); };
  namespace cat = catalog;

  add("lie_b", InstanceKind::lie, lie_to_json(cat::lie_b()));
  add("lie_m", InstanceKind::lie, lie_to_json(cat::lie_m()));
  add("su2", InstanceKind::bialgebra, bialgebra_to_json(cat::su2_chevalley()));
  add("su2_standard", InstanceKind::bialgebra, bialgebra_to_json(cat::su2_standard()));
  add("tsu2", InstanceKind::bialgebra, bialgebra_to_json(tangent_bialgebra(cat::su2_standard())));

  for (const auto& p : cat::prelie_instances()) {
    const std::string& id = p.id;
    Json payload;
    if (id.rfind("b1_", 0) == 0 || id.rfind("b2_", 0) == 0) {
      std::string q = id.substr(3);
      for (auto& ch : q)
        if (ch == '_') ch = '/';
      payload = {{"family", id.substr(0, 2)}, {"param", rational_to_json(Rational(q))}};
    } else if (id == "b3" || id == "b4" || id == "b5") {
      payload = {{"family", id}};
    } else {
      payload = prelie_to_json({p.product, p.carrier});
    }
    add(id, InstanceKind::prelie, payload);
  }

  add("su2_tangent_pair", InstanceKind::matched_pair, matched_pair_to_json(tangent_matched_pair(cat::su2_standard()).lie()));
  add("su2_tangent_input", InstanceKind::tangent_input,
      tangent_to_json({cat::su2_standard(), cat::su2_star_b1_circ(), zero_prelie({"f1", "f2", "f3"})}));

  add("r_b", InstanceKind::rmatrix, rmatrix_to_json(cat::rmatrix_b()));
  add("r_bz", InstanceKind::rmatrix, rmatrix_to_json(cat::rmatrix_b_plus_z()));
  add("r_sl2", InstanceKind::rmatrix, rmatrix_to_json(cat::rmatrix_sl2_jordan()));

  add("cotangent1", InstanceKind::cotangent_input, cotangent_to_json(cat::cotangent_family1()));
  add("cotangent2", InstanceKind::cotangent_input, cotangent_to_json(cat::cotangent_family2()));

  auto metric = [&](std::string id, int case_no, Rational param) {
    Json one = scalar_to_json(1), zero = scalar_to_json(0);
    Json p = {{"case", case_no}, {"c", Json::array({one, zero, one})}};
    if (case_no == 1 || case_no == 2) p["param"] = rational_to_json(param);
    add(std::move(id), InstanceKind::metric, p);
  };
  metric("metric1_-2", 1, -2);
  metric("metric1_1", 1, 1);
  metric("metric2_1", 2, 1);
  metric("metric2_2", 2, 2);
  metric("metric4", 4, 0);
  metric("metric5", 5, 0);

  for (const auto& g : cat::group_instances()) add(g.id, InstanceKind::group_dga, group_to_json(g));

  for (const auto& inst : out) validate_instance(inst);
  return out;
}

std::vector<Instance> load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read instance file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw SchemaError("instance file '" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<Instance> out;
  if (j.is_object() && j.contains("instances")) {
    if (!j.at("instances").is_array()) schema("'instances' must be an array");
    for (const auto& e : j.at("instances")) out.push_back(instance_from_json(e));
  } else {
    out.push_back(instance_from_json(j));
  }
  return out;
}

std::vector<Instance> overlay(std::vector<Instance> base, const std::vector<Instance>& extra) {
  for (const auto& e : extra) {
    auto it = std::find_if(base.begin(), base.end(), [&](const Instance& b) { return b.id == e.id; });
    if (it != base.end()) *it = e;
    else base.push_back(e);
  }
  return base;
}

const Instance& find_instance(const std::vector<Instance>& all, const std::string& id) {
  for (const auto& i : all)
    if (i.id == id) return i;
  throw UnknownInstance("unknown instance '" + id + "'");
}

Json check_to_json(const Check& c) {
  Json j = {{"name", c.name}, {"ok", c.ok}, {"failures", c.failures}, {"witnesses", c.witnesses}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return {{"name", r.name}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace plk
