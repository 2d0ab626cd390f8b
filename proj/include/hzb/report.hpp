#pragma once

#include <optional>
#include <string>

#include "hzb/germ.hpp"
#include "hzb/monodromy.hpp"
#include "hzb/normalization.hpp"
#include "hzb/plumbing.hpp"
#include "hzb/seifert.hpp"

namespace hzb {

enum class Section { normalization, seifert, plumbing, monodromy, compare, all };

std::optional<Section> section_from_string(const std::string& s);

// How the Milnor fiber boundary L relates to the normalization boundary.
struct ComparisonVerdict {
  std::optional<LensSpace> milnor_lens;
  LensSpace normalization_lens;
  bool identical = false;
  std::string witness;
  Rational e0;
};

struct Report {
  Germ germ{};
  DerivedGcds derived{};
  LensSpace norm_lens{};
  PlumbingGraph norm_graph;
  SeifertPresentation seifert;
  Rational e0;
  std::optional<LensSpace> milnor_lens;
  GraphCase graph_case{};
  PlumbingGraph milnor_graph;
  FiberData fiber_x{};
  FiberData fiber_y{};
  MonodromyDescriptor mono_x{};
  MonodromyDescriptor mono_y{};
  Int torus_intersection = 0;
  std::optional<Int> gluing_euler;  // present when m, k, l are pairwise coprime
  ComparisonVerdict compare;
};

// Runs every computation for the germ; each field comes straight from the
// corresponding library call.
Report build_report(const Germ& g);

ComparisonVerdict compare_report(const Germ& g);

std::string render_text(const Report& r, Section section);
std::string render_json(const Report& r, Section section);
// Only Section::normalization and Section::plumbing have a DOT form.
std::string render_dot(const Report& r, Section section);

}  // namespace hzb
