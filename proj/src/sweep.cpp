#include "hzb/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"
#include "hzb/germ.hpp"
#include "hzb/monodromy.hpp"
#include "hzb/normalization.hpp"
#include "hzb/plumbing.hpp"
#include "hzb/seifert.hpp"

namespace hzb {

std::optional<SweepCheck> sweep_check_from_string(const std::string& s) {
  if (s == "identities") return SweepCheck::identities;
  if (s == "definiteness") return SweepCheck::definiteness;
  if (s == "all") return SweepCheck::all;
  return std::nullopt;
}

namespace {

std::string germ_tag(const Germ& g) {
  std::ostringstream os;
  os << "(m=" << g.m << ", k=" << g.k << ", l=" << g.l << ")";
  return os.str();
}

// Branches of a star graph read off the structure itself (not the builder),
// as multisets of weight lists; requires a unique junction vertex.
std::vector<std::vector<Int>> structural_branches(const PlumbingGraph& p) {
  const int n = static_cast<int>(p.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : p.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int center = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) center = i;
  if (center < 0) throw UnsupportedShapeError("no junction vertex");
  std::vector<std::vector<Int>> branches;
  for (int start : adj[center]) {
    std::vector<Int> weights;
    int prev = center, cur = start;
    while (true) {
      weights.push_back(p.vertices[cur].euler);
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    branches.push_back(weights);
  }
  std::sort(branches.begin(), branches.end());
  return branches;
}

bool identities_for(const Germ& g, std::string& why) {
  const auto fail = [&](const std::string& w) {
    why = germ_tag(g) + ": " + w;
    return false;
  };
  const DerivedGcds dg = derive(g);

  if (checked_mul(dg.d, dg.k_bar) != g.k || checked_mul(dg.d, dg.l_bar) != g.l)
    return fail("derived gcds do not factor k and l");
  if (std::gcd(dg.k_bar, dg.l_bar) != 1) return fail("k_bar and l_bar are not coprime");
  if (std::gcd(dg.k_bar, dg.d_l) != 1 || std::gcd(dg.l_bar, dg.d_k) != 1)
    return fail("reduced exponent shares a factor with the opposite gcd(m, .)");

  // normalization: the bamboo must evaluate back to n/q, the pairwise-coprime
  // case must match a direct congruence scan, and shifting k or l by m must
  // not change the answer
  const LensSpace ls = normalization_boundary(g);
  const PlumbingGraph bam = normalization_plumbing(g);
  ContinuedFraction cf;
  for (const PlumbingVertex& v : bam.vertices) cf.push_back(checked_neg(v.euler));
  if (cf_eval(cf) != Rational(ls.n, ls.q))
    return fail("normalization bamboo does not evaluate back to n/q");
  if (dg.d_k == 1 && dg.d_l == 1) {
    if (ls.n != g.m) return fail("normalization order is not m in the coprime case");
    Int target = checked_neg(g.k) % g.m;
    if (target < 0) target += g.m;
    Int lambda0 = 0;
    for (Int lam = 1; lam <= g.m && lambda0 == 0; ++lam)
      if (checked_mul(lam, g.l) % g.m == target) lambda0 = lam;
    if (ls.q != lambda0) return fail("normalization quotient differs from direct scan");
  }
  if (normalization_boundary(make_germ(g.m, g.k + g.m, g.l, true)) != ls)
    return fail("normalization changed under k -> k + m");
  if (normalization_boundary(make_germ(g.m, g.k, g.l + g.m, true)) != ls)
    return fail("normalization changed under l -> l + m");
  if (!lens_equivalent(normalization_boundary(make_germ(g.m, g.l, g.k, true)), ls, true))
    return fail("normalization not invariant under swapping k and l");

  // fibers and vertical monodromies
  const FiberData fx = fiber_data_xside(g);
  const FiberData fy = fiber_data_yside(g);
  if (fx.euler_characteristic !=
      checked_sub(2, checked_add(checked_mul(2, fx.genus), fx.boundary_components)))
    return fail("x-side fiber chi/genus/boundary mismatch");
  if (fy.euler_characteristic !=
      checked_sub(2, checked_add(checked_mul(2, fy.genus), fy.boundary_components)))
    return fail("y-side fiber chi/genus/boundary mismatch");
  const Int chi_quot =
      checked_add(checked_sub(dg.d, checked_mul(g.m, dg.d)), g.m);  // -m*d + d + m
  if (fx.euler_characteristic != checked_sub(checked_mul(dg.l_bar, chi_quot),
                                             checked_mul(g.m, dg.l_bar - 1)))
    return fail("x-side covering Euler characteristic identity");
  if (fy.euler_characteristic != checked_sub(checked_mul(dg.k_bar, chi_quot),
                                             checked_mul(g.m, dg.k_bar - 1)))
    return fail("y-side covering Euler characteristic identity");

  const MonodromyDescriptor mx = vertical_monodromy_xside(g);
  const MonodromyDescriptor my = vertical_monodromy_yside(g);
  if (mx.order != dg.l_bar || my.order != dg.k_bar)
    return fail("vertical monodromy order");
  if (mx.order >= 2 && (mx.fixed_points != g.m || mx.rotation.den != mx.order))
    return fail("x-side monodromy fixed points / rotation denominator");
  if (my.order >= 2 && (my.fixed_points != g.m || my.rotation.den != my.order))
    return fail("y-side monodromy fixed points / rotation denominator");
  if (mx.order == 1 && mx.fixed_points != 0) return fail("identity monodromy with fixed points");
  if (torus_intersection_number(g) != checked_neg(g.m))
    return fail("torus intersection number is not -m");

  // seifert invariants
  const SeifertPresentation pres = seifert_presentation(g);
  if (pres.euler_integral != g.m) return fail("integral euler number is not m");
  if (pres.genus != checked_mul(g.m - 1, dg.d - 1)) return fail("base genus formula");
  if (checked_mul(2, chi_quot) != checked_sub(2, checked_mul(2, pres.genus)))
    return fail("doubled quotient Euler characteristic is not 2 - 2*genus");
  if (static_cast<Int>(pres.leaves.size()) + pres.trivial_leaf_count !=
      checked_mul(2, g.m))
    return fail("leaf count is not 2m");
  for (const SeifertLeaf& leaf : pres.leaves) {
    if (leaf.alpha < 2 || leaf.beta <= 0 || leaf.beta >= leaf.alpha ||
        std::gcd(leaf.alpha, leaf.beta) != 1)
      return fail("leaf not in normalized form");
  }
  const Rational e0 = rational_euler_number(pres);
  if (e0 != Rational(g.m, checked_mul(dg.k_bar, dg.l_bar)))
    return fail("rational euler number closed form");
  if (!e0.positive()) return fail("rational euler number not positive");

  // dictionary against the leaf families
  const SeifertLeaf dict_x = nielsen_to_seifert(checked_neg(dg.k_bar), dg.l_bar);
  const SeifertLeaf want_x =
      dg.l_bar == 1 ? SeifertLeaf{1, 0}
                    : SeifertLeaf{dg.l_bar, mod_inverse_of_negative(dg.k_bar, dg.l_bar)};
  if (dict_x != want_x) return fail("rotation dictionary mismatch on the x side");
  const SeifertLeaf dict_y = nielsen_to_seifert(checked_neg(dg.l_bar), dg.k_bar);
  const SeifertLeaf want_y =
      dg.k_bar == 1 ? SeifertLeaf{1, 0}
                    : SeifertLeaf{dg.k_bar, mod_inverse_of_negative(dg.l_bar, dg.k_bar)};
  if (dict_y != want_y) return fail("rotation dictionary mismatch on the y side");

  // capping leaves reduce -m*beta/alpha
  const CappingLeaf cap_x = capping_leaf(g, Side::x);
  if (Rational(cap_x.beta, cap_x.alpha) !=
      Rational(checked_mul(checked_neg(g.m), want_x.alpha == 1 ? 0 : want_x.beta),
               want_x.alpha == 1 ? 1 : want_x.alpha))
    return fail("x-side capping leaf fraction");
  const CappingLeaf cap_y = capping_leaf(g, Side::y);
  if (Rational(cap_y.beta, cap_y.alpha) !=
      Rational(checked_mul(checked_neg(g.m), want_y.alpha == 1 ? 0 : want_y.beta),
               want_y.alpha == 1 ? 1 : want_y.alpha))
    return fail("y-side capping leaf fraction");

  // negated-inverse identity, and the gluing route in the coprime case
  const BetaPair bp = beta_pair_identity(dg.k_bar, dg.l_bar);
  if (bp.lhs != checked_mul(dg.k_bar, dg.l_bar))
    return fail("1 + l*beta_second + k*beta_prime != k*l");
  if (dg.d == 1 && dg.d_k == 1 && dg.d_l == 1) {
    if (euler_from_gluing(g) != g.m) return fail("gluing euler number is not m");
  }

  // lens criterion
  const bool expect_lens =
      (g.k == 1 && g.l == 1) || (g.m == 2 && std::min(g.k, g.l) == 1);
  const auto cls = lens_space_classification(g);
  if (cls.has_value() != expect_lens) return fail("lens criterion iff violated");

  // plumbing structure
  const PlumbingGraph lg = milnor_boundary_plumbing(g);
  if (!lg.vertices.empty() && lg.edges.size() + 1 != lg.vertices.size())
    return fail("milnor graph is not a tree");
  if (milnor_graph_case(g) == GraphCase::star_general) {
    std::vector<std::vector<Int>> got = structural_branches(lg);
    std::vector<std::vector<Int>> want = milnor_star_branches(g);
    std::sort(want.begin(), want.end());
    if (got != want) return fail("star branches differ from the declared weight lists");
    for (const std::vector<Int>& b : want) {
      ContinuedFraction terms;
      for (Int w : b) terms.push_back(checked_neg(w));
      const Rational v = cf_eval(terms);
      const Rational vx(dg.l_bar, checked_sub(dg.l_bar, want_x.beta));
      const Rational vy(dg.k_bar, checked_sub(dg.k_bar, want_y.beta));
      if (v != vx && v != vy)
        return fail("branch does not evaluate to alpha/(alpha-beta)");
    }
  }
  if (g.l >= 2 || g.k >= 2) {
    if (graphs_isomorphic(lg, bam))
      return fail("milnor graph isomorphic to normalization graph");
    if (cls && ls.n == cls->n) return fail("lens pi1 orders coincide");
  }
  return true;
}

bool definiteness_for(const Germ& g, std::string& why) {
  const auto fail = [&](const std::string& w) {
    why = germ_tag(g) + ": " + w;
    return false;
  };
  const PlumbingGraph lg = milnor_boundary_plumbing(g);
  const bool nd = is_negative_definite(intersection_form(lg));
  const GraphCase c = milnor_graph_case(g);
  if (c == GraphCase::bamboo || c == GraphCase::vertex_lens) {
    if (!nd) return fail("lens-case graph should be negative definite");
  } else {
    if (nd) return fail("case-3 intersection form reported negative definite");
  }
  return true;
}

}  // namespace

SweepResult run_sweep(Int limit, SweepCheck check) {
  SweepResult res;
  res.limit = limit;
  for (Int m = 2; m <= limit; ++m)
    for (Int k = 1; k <= limit; ++k)
      for (Int l = k; l <= limit; ++l) {
        if (std::gcd(m, std::gcd(k, l)) != 1) continue;
        const Germ g = make_germ(m, k, l);
        ++res.germs;
        if (check != SweepCheck::definiteness) {
          if (!identities_for(g, res.failure)) {
            res.ok = false;
            return res;
          }
          ++res.checks;
        }
        if (check != SweepCheck::identities) {
          if (!definiteness_for(g, res.failure)) {
            res.ok = false;
            return res;
          }
          ++res.checks;
        }
      }
  return res;
}

}  // namespace hzb
