#pragma once

#include <json.hpp>

#include "liesalg/decider.hpp"

namespace liesalg {

using Json = nlohmann::json;

// Schema violation carrying the path to the offending field.
struct JsonError : std::runtime_error {
  std::string path;
  JsonError(std::string p, const std::string& msg)
      : std::runtime_error(msg + " (at " + p + ")"), path(std::move(p)) {}
};

// Rationals serialize as "p/q" (q > 0, gcd = 1; "/1" omitted); Q(i) scalars
// as {"re": "p/q", "im": "r/s"}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const std::string& path);

Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j, const std::string& path);

Json rep_to_json(const Representation& r);
Representation rep_from_json(const Json& j, const std::string& path,
                             const std::string& base_dir = "");

Json salgebra_to_json(const SAlgebra& a);
SAlgebra salgebra_from_json(const Json& j, const std::string& path,
                            const std::string& base_dir = "");

Json tagged_to_json(const TaggedAlgebra& t);

Json presentation_to_json(const HModulePresentation& p);
HModulePresentation presentation_from_json(const Json& j, const std::string& path,
                                           const std::string& base_dir = "");

Json witness_to_json(const WitnessEmbedding& w);
Json verdict_to_json(const Verdict& v);
Json minimality_report_to_json(const MinimalityReport& r);
Json decomposition_to_json(const DecomposedAlgebra& d);

Json load_json_file(const std::string& file);

}  // namespace liesalg
