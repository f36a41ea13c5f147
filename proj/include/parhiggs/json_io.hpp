#pragma once

#include <nlohmann/json.hpp>

#include "parhiggs/feathered.hpp"
#include "parhiggs/higgsbridge.hpp"
#include "parhiggs/kronecker.hpp"
#include "parhiggs/multiweight.hpp"
#include "parhiggs/realforms.hpp"
#include "parhiggs/weightgen.hpp"

// Lossless JSON encoding of the library's domain types. Rationals cross the
// boundary as "num/den" strings only; finite-field matrices carry their
// modulus in a "field" tag at the container level.
namespace parhiggs::jsonio {

using nlohmann::json;

json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

json matrix_to_json(const Matrix<Rat>& m);
Matrix<Rat> matrix_from_json(const json& j);

json multiweight_to_json(const MultiWeight& mw);
MultiWeight multiweight_from_json(const json& j);

json certificate_to_json(const CompactnessCertificate& c);

json line_to_json(const ParabolicLine& line);

json construction_to_json(const ConstructionResult& r);

// field tag: "rational" or "fp" (with "modulus"); entries are rationals or
// integer residues accordingly.
json tuple_to_json(const MatrixTuple<Rat>& A);
json tuple_to_json(const MatrixTuple<Fp>& A, std::uint64_t l);
bool tuple_json_is_fp(const json& j);
MatrixTuple<Rat> tuple_rat_from_json(const json& j);
std::pair<MatrixTuple<Fp>, std::uint64_t> tuple_fp_from_json(const json& j);

inline json scalar_to_json(const Rat& x) { return json(x.get_num().get_str() + "/" + x.get_den().get_str()); }
inline json scalar_to_json(const Fp& x) { return json(x.value()); }

// A subspace travels as its canonical basis: one array of coordinates per
// basis vector, plus the ambient dimension.
template <typename T>
json subspace_to_json(const Subspace<T>& s) {
  json vectors = json::array();
  const auto& b = s.basis();
  for (std::size_t j = 0; j < b.cols(); ++j) {
    json v = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) v.push_back(scalar_to_json(b(i, j)));
    vectors.push_back(v);
  }
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", vectors}};
}

Subspace<Fp> subspace_fp_from_json(const json& j, std::uint64_t l);

json verdict_to_json(const StabilityVerdict<Fp>& v);
json verdict_to_json(const StabilityVerdict<Rat>& v);

json subgroup_to_json(const OneParamSubgroup<Fp>& lam);
OneParamSubgroup<Fp> subgroup_fp_from_json(const json& j, std::uint64_t l);

json flags_to_json(const FlagConfiguration<Fp>& cfg, std::uint64_t l);
FlagConfiguration<Fp> flags_fp_from_json(const json& j, std::uint64_t l);

json feathers_to_json(const FeatherWeights& fw);
FeatherWeights feathers_from_json(const json& j);

json su11_to_json(const Su11Component& c);

json equivalence_to_json(const EquivalenceReport& rep);

json generated_to_json(const GeneratedTuple& g);

json pencil_to_json(const PencilResult& r);

json mu_to_json(const MuValue& m);

// Envelope for every CLI invocation: the subcommand, an echo of its inputs,
// the result payload, the seed when one was used, and component versions.
struct RunReport {
  std::string command;
  json input;
  json result;
  std::optional<std::uint64_t> seed;
  std::optional<double> wall_time_seconds;  // emitted only when timing is on
};

json report_to_json(const RunReport& rep);

}  // namespace parhiggs::jsonio
