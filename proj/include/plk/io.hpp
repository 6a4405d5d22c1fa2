#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "plk/constructions.hpp"
#include "plk/group_dga.hpp"
#include "plk/metric.hpp"

namespace plk {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { lie, bialgebra, prelie, matched_pair, rmatrix, metric, group_dga, cotangent_input, tangent_input };

std::string kind_name(InstanceKind k);
// Throws SchemaError.
InstanceKind parse_kind(const std::string& s);

struct Instance {
  std::string id;
  InstanceKind kind = InstanceKind::lie;
  Json payload;
};

// Scalars are [re_num], [re_num, re_den] or [re_num, re_den, im_num, im_den].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
// Sparse entries: rank indices followed by the scalar parts.
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j, const std::vector<std::size_t>& shape);

Json lie_to_json(const LieAlgebra& l);
LieAlgebra lie_from_json(const Json& j);
Json bialgebra_to_json(const LieBialgebra& b);
LieBialgebra bialgebra_from_json(const Json& j);
Json action_to_json(const ActionTensor& a);
ActionTensor action_from_json(const Json& j);

// A pre-Lie product on g* together with the bialgebra g.
struct PreLieData {
  PreLieProduct xi;
  LieBialgebra carrier;
};
// Either {"basis", "xi", "carrier"} or {"family": "b1".."b5", "param": q};
// families live on b with carrier_of(b).
Json prelie_to_json(const PreLieData& p);
PreLieData prelie_from_json(const Json& j);

Json matched_pair_to_json(const MatchedPair& p);
MatchedPair matched_pair_from_json(const Json& j);
// {"algebra": lie, "r": rank-2 entries}; the carrier is the coboundary bialgebra.
Json prelie_product_to_json(const PreLieProduct& p);
PreLieProduct prelie_product_from_json(const Json& j);

Json rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const Json& j);

// {"case": n, "param": q, "c": [c1, c2, c3]} or
// {"calculus": id, "coefficients": [[f00, f01], [f10, f11]]} with function strings.
MetricCandidate metric_from_json(const Json& j);
// Always the coefficients form, in the expression syntax of normal_order_localized.
Json metric_to_json(const MetricCandidate& m);
std::string function_to_expr(const GenPoly& f);

Json group_to_json(const GroupDGAData& g);
GroupDGAData group_from_json(const Json& j);

CotangentInput cotangent_from_json(const Json& j);
Json cotangent_to_json(const CotangentInput& c);

struct TangentInput {
  LieBialgebra carrier;
  PreLieProduct circ, star;
};
TangentInput tangent_from_json(const Json& j);
Json tangent_to_json(const TangentInput& t);

// Decodes the payload for its kind; throws SchemaError on any violation.
void validate_instance(const Instance& inst);
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

// Built-in instances, validated.
std::vector<Instance> load_catalog();
// A file holding one instance object or {"instances": [...]}.  A missing file
// is a UsageError, malformed content a SchemaError.
std::vector<Instance> load_instance_file(const std::string& path);
// Instances in extra replace same-id entries of base and are appended otherwise.
std::vector<Instance> overlay(std::vector<Instance> base, const std::vector<Instance>& extra);
// Throws UnknownInstance.
const Instance& find_instance(const std::vector<Instance>& all, const std::string& id);

Json check_to_json(const Check& c);
Json report_to_json(const Report& r);

}  // namespace plk
