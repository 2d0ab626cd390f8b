#pragma once

#include <optional>
#include <vector>

#include "hzb/germ.hpp"
#include "hzb/normalization.hpp"
#include "hzb/rational.hpp"

namespace hzb {

// Normalized Seifert invariant of a leaf: alpha >= 2 with 0 < beta < alpha
// and gcd(alpha, beta) = 1, or the non-exceptional (1, 0).
struct SeifertLeaf {
  Int alpha = 1;
  Int beta = 0;
  friend bool operator==(const SeifertLeaf&, const SeifertLeaf&) = default;
};

struct SeifertPresentation {
  Int genus = 0;
  Int euler_integral = 0;
  std::vector<SeifertLeaf> leaves;  // exceptional leaves only (alpha >= 2)
  Int trivial_leaf_count = 0;       // leaves that normalize to (1, 0)
  friend bool operator==(const SeifertPresentation&, const SeifertPresentation&) = default;
};

// Seifert invariants of the boundary of the Milnor fiber.
SeifertPresentation seifert_presentation(const Germ& g);

// e - sum(beta_i / alpha_i), exactly.
Rational rational_euler_number(const SeifertPresentation& p);

// The boundary of the Milnor fiber as a lens space, when it is one:
// L(m, m-1) for k = l = 1 and L(2*max(k,l), 1) for m = 2, min(k,l) = 1.
std::optional<LensSpace> lens_space_classification(const Germ& g);

// Dictionary from a finite-order rotation (angle omega/lambda of a full
// turn at a fixed point, gcd(omega, lambda) = 1) to the Seifert invariant
// (lambda, sigma) of the leaf through that point in the mapping torus:
// omega * sigma = 1 (mod lambda), 0 < sigma < lambda; (1, 0) for lambda = 1.
SeifertLeaf nielsen_to_seifert(Int omega, Int lambda);

enum class Side { x, y };

// Invariant of the leaf created by capping the fiber boundary off when the
// mapping torus of one side is closed up: the reduced fraction of
// -m * beta / alpha for that side's leaf family. alpha stays positive;
// beta may be negative.
struct CappingLeaf {
  Int alpha = 1;
  Int beta = 0;
  friend bool operator==(const CappingLeaf&, const CappingLeaf&) = default;
};

CappingLeaf capping_leaf(const Germ& g, Side side);

// Independent recomputation of the integral Euler number by gluing the two
// capped mapping-torus pieces along the separating torus. Only supported
// when m, k, l are pairwise coprime; throws UnsupportedCaseError otherwise.
Int euler_from_gluing(const Germ& g);

// The two negated modular inverses of a coprime pair, together with
// lhs = 1 + l*beta_second + k*beta_prime (which always equals k*l).
struct BetaPair {
  Int beta_prime = 0;   // (-k) * beta_prime  = 1 (mod l)
  Int beta_second = 0;  // (-l) * beta_second = 1 (mod k)
  Int lhs = 0;
  friend bool operator==(const BetaPair&, const BetaPair&) = default;
};

BetaPair beta_pair_identity(Int k, Int l);

}  // namespace hzb
