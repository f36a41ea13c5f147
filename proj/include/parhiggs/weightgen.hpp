#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parhiggs/multiweight.hpp"

namespace parhiggs {

// Input for the constant-weight constructor: p, q, s, the integer degree
// parameter a, and one positive spread value per puncture.
struct ConstructionInput {
  std::size_t p = 0, q = 0, s = 0;
  long a = 0;
  std::vector<Rat> epsilon_profile;  // s positive rationals
};

// Independent per-entry perturbation of a constant multiweight, strictly
// increasing within each puncture and summing to zero per puncture so the
// integrality of the weight sums is preserved.
struct FeatherPerturbation {
  std::vector<std::vector<Rat>> eta;   // s rows of length p
  std::vector<std::vector<Rat>> zeta;  // s rows of length q
};

struct ClosedInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

struct ARange {
  ClosedInterval interval;
  std::vector<long> integers;  // integer points inside, ascending
};

// Admissible closed range for the integer parameter a, and the integers in it.
ARange a_range(std::size_t p, std::size_t q, std::size_t s);

struct ConstructionResult {
  bool feasible = false;
  std::string reason;  // names the violated constraint when infeasible
  MultiWeight mw;
  long d = 0;
  std::vector<long> k;  // per-puncture integer levels k^j
};

// Constant multiweight with per-puncture level k^j determined by
// (p+q)a - p = k*s + r. Feasibility requires each spread below the level
// bound and the total spread inside its open admissible interval.
// Throws on a outside a_range or malformed input; constraint violations are
// reported as an infeasible result.
ConstructionResult construct_constant(const ConstructionInput& inp);

// Deterministic spread profile: half of each per-puncture bound, rescaled so
// the total sits at the midpoint of the admissible open interval.
std::vector<Rat> default_epsilon_profile(std::size_t p, std::size_t q, std::size_t s, long a);

// Symmetric (p = q) constant multiweight with beta = 1 - alpha at every
// puncture and d = p, for odd s >= 5.
ConstructionResult construct_sp(std::size_t p, std::size_t s,
                                const std::vector<Rat>& epsilon_profile);

// Violations of the perturbation shape constraints (empty = valid).
std::vector<std::string> validate_perturbation(const FeatherPerturbation& f, std::size_t p,
                                               std::size_t q, std::size_t s);

// mw + scale * f, entrywise. Throws if mw is not constant, f is invalid, or
// the result leaves the weight space or loses alpha/beta separation.
MultiWeight perturb(const MultiWeight& mw, const FeatherPerturbation& f, const Rat& scale);

}  // namespace parhiggs
