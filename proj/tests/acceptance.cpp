// Acceptance gate: one line per criterion, exit 1 if any fails.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hzb/arith.hpp"
#include "hzb/monodromy.hpp"
#include "hzb/normalization.hpp"
#include "hzb/plumbing.hpp"
#include "hzb/seifert.hpp"

using namespace hzb;

namespace {

std::string g_detail;

bool expect(bool ok, const std::string& detail) {
  if (!ok && g_detail.empty()) g_detail = detail;
  return ok;
}

std::vector<Germ> valid_germs(Int limit) {
  std::vector<Germ> out;
  for (Int m = 2; m <= limit; ++m)
    for (Int k = 1; k <= limit; ++k)
      for (Int l = k; l <= limit; ++l)
        if (std::gcd(m, std::gcd(k, l)) == 1) out.push_back(make_germ(m, k, l));
  return out;
}

bool criterion_reference_germ() {
  const Germ g = make_germ(12, 5, 11);
  bool ok = true;
  ok &= expect(normalization_boundary(g) == LensSpace{12, 5}, "normalization lens space");
  ok &= expect(normalization_plumbing(g) == build_bamboo({-3, -2, -3}),
               "normalization bamboo");
  const SeifertPresentation sp = seifert_presentation(g);
  ok &= expect(sp.genus == 0 && sp.euler_integral == 12, "seifert genus / euler");
  ok &= expect(sp.leaves.size() == 24, "seifert leaf count");
  for (int i = 0; i < 12 && ok; ++i)
    ok &= expect(sp.leaves[i] == SeifertLeaf{11, 2}, "first leaf family");
  for (int i = 12; i < 24 && ok; ++i)
    ok &= expect(sp.leaves[i] == SeifertLeaf{5, 4}, "second leaf family");
  std::vector<std::vector<Int>> branches(12, std::vector<Int>{-2, -2, -2, -2, -3});
  branches.insert(branches.end(), 12, std::vector<Int>{-5});
  ok &= expect(milnor_boundary_plumbing(g) == build_star({0, -12}, branches),
               "star plumbing graph");
  return ok;
}

bool criterion_unordered_germ() {
  const Germ g = make_germ(12, 17, 11, true);
  bool ok = true;
  ok &= expect(normalization_plumbing(g) == build_bamboo({-3, -2, -3}),
               "normalization bamboo");
  const SeifertPresentation sp = seifert_presentation(g);
  ok &= expect(sp.genus == 0 && sp.euler_integral == 12, "seifert genus / euler");
  ok &= expect(sp.leaves.size() == 24, "seifert leaf count");
  for (int i = 0; i < 12 && ok; ++i)
    ok &= expect(sp.leaves[i] == SeifertLeaf{11, 9}, "first leaf family");
  for (int i = 12; i < 24 && ok; ++i)
    ok &= expect(sp.leaves[i] == SeifertLeaf{17, 3}, "second leaf family");
  std::vector<std::vector<Int>> branches(12, std::vector<Int>{-6, -2});
  branches.insert(branches.end(), 12,
                  std::vector<Int>{-2, -2, -2, -2, -3, -2});
  ok &= expect(milnor_boundary_plumbing(g) == build_star({0, -12}, branches),
               "star plumbing graph");
  return ok;
}

bool criterion_lens_recognition() {
  bool ok = true;
  for (const Germ& g : valid_germs(20)) {
    const auto lens = lens_space_classification(g);
    const std::string tag = "germ (" + std::to_string(g.m) + "," + std::to_string(g.k) +
                            "," + std::to_string(g.l) + ")";
    if (g.k == 1 && g.l == 1) {
      ok &= expect(lens == LensSpace{g.m, g.m - 1}, tag + ": L(m,m-1)");
      ok &= expect(milnor_boundary_plumbing(g) ==
                       build_bamboo(std::vector<Int>(g.m - 1, -2)),
                   tag + ": bamboo of -2");
    } else if (g.m == 2 && g.k == 1) {
      ok &= expect(lens == LensSpace{2 * g.l, 1}, tag + ": L(2l,1)");
      ok &= expect(milnor_boundary_plumbing(g) == build_bamboo({-2 * g.l}),
                   tag + ": single vertex -2l");
    } else {
      ok &= expect(!lens.has_value(), tag + ": not a lens space");
    }
    if (!ok) break;
  }
  return ok;
}

bool criterion_euler_sign_and_definiteness() {
  bool ok = true;
  for (const Germ& g : valid_germs(20)) {
    const DerivedGcds dg = derive(g);
    const Rational e0 = rational_euler_number(seifert_presentation(g));
    const std::string tag = "germ (" + std::to_string(g.m) + "," + std::to_string(g.k) +
                            "," + std::to_string(g.l) + ")";
    ok &= expect(e0 == Rational(g.m, dg.k_bar * dg.l_bar), tag + ": e0 = m/(k_bar l_bar)");
    ok &= expect(e0.positive(), tag + ": e0 > 0");
    const bool nd = is_negative_definite(intersection_form(milnor_boundary_plumbing(g)));
    if (lens_space_classification(g).has_value())
      ok &= expect(nd, tag + ": lens graph negative definite");
    else
      ok &= expect(!nd, tag + ": graph not negative definite");
    if (!ok) break;
  }
  return ok;
}

bool criterion_beta_pair() {
  bool ok = true;
  for (Int k = 1; k <= 100 && ok; ++k)
    for (Int l = 1; l <= 100 && ok; ++l) {
      if (std::gcd(k, l) != 1) continue;
      Int bp = -1, bs = -1;
      int bp_hits = 0, bs_hits = 0;
      for (Int b = 0; b < l; ++b)
        if (((-k * b) % l + l) % l == 1 % l) {
          bp = b;
          ++bp_hits;
        }
      for (Int b = 0; b < k; ++b)
        if (((-l * b) % k + k) % k == 1 % k) {
          bs = b;
          ++bs_hits;
        }
      const std::string tag = "(k,l) = (" + std::to_string(k) + "," + std::to_string(l) + ")";
      ok &= expect(bp_hits == 1 && bs_hits == 1, tag + ": unique beta in range");
      const BetaPair pair = beta_pair_identity(k, l);
      ok &= expect(pair.beta_prime == bp && pair.beta_second == bs,
                   tag + ": betas match brute force");
      ok &= expect(1 + l * bs + k * bp == k * l, tag + ": 1 + l b'' + k b' = kl");
      ok &= expect(pair.lhs == k * l, tag + ": reported product");
    }
  return ok;
}

bool criterion_gluing() {
  bool ok = true;
  for (const Germ& g : valid_germs(30)) {
    const DerivedGcds dg = derive(g);
    if (dg.d != 1 || dg.d_k != 1 || dg.d_l != 1) continue;
    const std::string tag = "germ (" + std::to_string(g.m) + "," + std::to_string(g.k) +
                            "," + std::to_string(g.l) + ")";
    const Int glued = euler_from_gluing(g);
    ok &= expect(glued == g.m, tag + ": gluing gives m");
    ok &= expect(glued == seifert_presentation(g).euler_integral,
                 tag + ": gluing matches integral euler number");
    if (!ok) break;
  }
  return ok;
}

bool criterion_continued_fractions() {
  bool ok = true;
  for (Int n = 1; n <= 500 && ok; ++n)
    for (Int q = 1; q <= n && ok; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const ContinuedFraction cf = cf_expand(n, q);
      for (Int b : cf)
        ok &= expect(b >= 2, "term >= 2 for " + std::to_string(n) + "/" + std::to_string(q));
      ok &= expect(cf_eval(cf) == Rational(n, q),
                   "round trip for " + std::to_string(n) + "/" + std::to_string(q));
    }
  return ok;
}

bool criterion_never_diffeomorphic() {
  bool ok = true;
  for (const Germ& g : valid_germs(20)) {
    if (g.l < 2) continue;  // k <= l, so this keeps every germ beyond (m,1,1)
    const std::string tag = "germ (" + std::to_string(g.m) + "," + std::to_string(g.k) +
                            "," + std::to_string(g.l) + ")";
    ok &= expect(!graphs_isomorphic(milnor_boundary_plumbing(g), normalization_plumbing(g)),
                 tag + ": graphs must differ");
    const auto lens = lens_space_classification(g);
    if (lens)
      ok &= expect(lens->n != normalization_boundary(g).n,
                   tag + ": fundamental group orders must differ");
    if (!ok) break;
  }
  return ok;
}

bool criterion_dictionary_and_covering() {
  bool ok = true;
  for (const Germ& g : valid_germs(20)) {
    const DerivedGcds dg = derive(g);
    const std::string tag = "germ (" + std::to_string(g.m) + "," + std::to_string(g.k) +
                            "," + std::to_string(g.l) + ")";

    const SeifertLeaf from_x = nielsen_to_seifert(-dg.k_bar, dg.l_bar);
    const SeifertLeaf from_y = nielsen_to_seifert(-dg.l_bar, dg.k_bar);
    ok &= expect(from_x.alpha == dg.l_bar && from_y.alpha == dg.k_bar,
                 tag + ": dictionary multiplicities");
    const SeifertPresentation sp = seifert_presentation(g);
    for (const SeifertLeaf& leaf : sp.leaves) {
      if (leaf.alpha == dg.l_bar && dg.l_bar != dg.k_bar)
        ok &= expect(leaf == from_x, tag + ": x-side family matches dictionary");
      if (leaf.alpha == dg.k_bar && dg.l_bar != dg.k_bar)
        ok &= expect(leaf == from_y, tag + ": y-side family matches dictionary");
    }
    if (dg.l_bar >= 2)
      ok &= expect(std::count(sp.leaves.begin(), sp.leaves.end(), from_x) >= g.m,
                   tag + ": x-side family present m times");

    const Int chi_quotient = -g.m * dg.d + dg.d + g.m;
    ok &= expect(fiber_data_xside(g).euler_characteristic ==
                     dg.l_bar * chi_quotient - g.m * (dg.l_bar - 1),
                 tag + ": x-side covering identity");
    ok &= expect(fiber_data_yside(g).euler_characteristic ==
                     dg.k_bar * chi_quotient - g.m * (dg.k_bar - 1),
                 tag + ": y-side covering identity");
    if (!ok) break;
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"criterion 1: reference germ (12,5,11) end to end", criterion_reference_germ},
      {"criterion 2: unordered germ (12,17,11) end to end", criterion_unordered_germ},
      {"criterion 3: lens space recognition across the sweep", criterion_lens_recognition},
      {"criterion 4: euler number sign and definiteness across the sweep",
       criterion_euler_sign_and_definiteness},
      {"criterion 5: beta pair identity against brute force", criterion_beta_pair},
      {"criterion 6: torus gluing reproduces the integral euler number", criterion_gluing},
      {"criterion 7: continued fraction round trip up to 500", criterion_continued_fractions},
      {"criterion 8: boundary never matches the normalization once l >= 2",
       criterion_never_diffeomorphic},
      {"criterion 9: rotation dictionary and covering identity", criterion_dictionary_and_covering},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    bool ok = false;
    g_detail.clear();
    try {
      ok = fn();
    } catch (const std::exception& e) {
      g_detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("[PASS] %s\n", name);
    } else {
      ++failed;
      if (g_detail.empty())
        std::printf("[FAIL] %s\n", name);
      else
        std::printf("[FAIL] %s (%s)\n", name, g_detail.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
