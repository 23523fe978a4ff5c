#pragma once

// JSON encoding.  Scalars are ["a_num/a_den", "b_num/b_den"] meaning
// a + b sqrt(p), with "0" for a zero component; matrices are nested arrays.

#include <cstddef>
#include <optional>

#include <json.hpp>

#include "phin/components.hpp"

namespace phin::io {

using json = nlohmann::json;

json to_json(const Scalar& x);
json to_json(const Mat& m);
json to_json(const FrobTuple& t);
json to_json(const Poly& f);
json to_json(const Partition& part);
json to_json(const Cochar& c);
/// Subspace of gl_n (ambient n^2) as a list of n x n matrices.
json subspace_as_matrices(const Subspace& s, std::size_t n);
json to_json(const ParabolicData& par);
json to_json(const ComplexReport& rep);
json to_json(const Gl2Report& rep);
json to_json(const SubFiber& fiber);
json to_json(const SingularityCertificate& cert);

/// Accepts a ["a", "b"] pair, a rational string, or an integer.
Scalar scalar_from_json(const json& j, Prime p);
/// Square matrix; n is enforced when given.
Mat mat_from_json(const json& j, Prime p, std::optional<std::size_t> n = std::nullopt);
/// Array of f matrices, or a single matrix when f is 1 or unspecified.
FrobTuple tuple_from_json(const json& j, Prime p, TupleKind kind, std::optional<std::size_t> n = std::nullopt,
                          std::optional<std::size_t> f = std::nullopt);

/// Compact dump with sorted keys and a trailing newline.
std::string canonical(const json& j);

}  // namespace phin::io
