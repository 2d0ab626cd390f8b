#include "hzb/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"

namespace hzb {

std::optional<Section> section_from_string(const std::string& s) {
  if (s == "normalization") return Section::normalization;
  if (s == "seifert") return Section::seifert;
  if (s == "plumbing") return Section::plumbing;
  if (s == "monodromy") return Section::monodromy;
  if (s == "compare") return Section::compare;
  if (s == "all") return Section::all;
  return std::nullopt;
}

ComparisonVerdict compare_report(const Germ& g) {
  ComparisonVerdict v;
  v.milnor_lens = lens_space_classification(g);
  v.normalization_lens = normalization_boundary(g);
  v.e0 = rational_euler_number(seifert_presentation(g));
  v.identical = graphs_isomorphic(milnor_boundary_plumbing(g), normalization_plumbing(g));
  if (v.identical) {
    v.witness = "plumbing graphs coincide";
  } else if (v.milnor_lens) {
    v.witness = "pi1 orders " + std::to_string(v.milnor_lens->n) + " vs " +
                std::to_string(v.normalization_lens.n);
  } else {
    v.witness = "plumbing graphs are not isomorphic";
  }
  return v;
}

Report build_report(const Germ& g) {
  Report r;
  r.germ = g;
  r.derived = derive(g);
  r.norm_lens = normalization_boundary(g);
  r.norm_graph = normalization_plumbing(g);
  r.seifert = seifert_presentation(g);
  r.e0 = rational_euler_number(r.seifert);
  r.milnor_lens = lens_space_classification(g);
  r.graph_case = milnor_graph_case(g);
  r.milnor_graph = milnor_boundary_plumbing(g);
  r.fiber_x = fiber_data_xside(g);
  r.fiber_y = fiber_data_yside(g);
  r.mono_x = vertical_monodromy_xside(g);
  r.mono_y = vertical_monodromy_yside(g);
  r.torus_intersection = torus_intersection_number(g);
  if (r.derived.d == 1 && r.derived.d_k == 1 && r.derived.d_l == 1)
    r.gluing_euler = euler_from_gluing(g);
  r.compare = compare_report(g);
  return r;
}

namespace {

bool wants(Section selected, Section s) {
  return selected == Section::all || selected == s;
}

std::string case_name(GraphCase c) {
  switch (c) {
    case GraphCase::bamboo: return "bamboo";
    case GraphCase::vertex_lens: return "vertex_lens";
    case GraphCase::vertex_genus: return "vertex_genus";
    case GraphCase::star_dividing: return "star_dividing";
    case GraphCase::star_general: return "star_general";
  }
  return "";
}

const char* dividing_note =
    "min(k,l) divides max(k,l): branches are single vertices and the center weight is 0";

std::string germ_equation(const Germ& g) {
  std::ostringstream os;
  os << "z^" << g.m << " - x^" << g.k << " y^" << g.l;
  return os.str();
}

std::string weight_list(const std::vector<PlumbingVertex>& vs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ", ";
    os << vs[i].euler;
  }
  os << ")";
  return os.str();
}

std::string weight_list(const std::vector<Int>& ws) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) os << ", ";
    os << ws[i];
  }
  os << ")";
  return os.str();
}

struct LeafGroup {
  SeifertLeaf leaf;
  Int count = 0;
};

std::vector<LeafGroup> group_leaves(const std::vector<SeifertLeaf>& leaves) {
  std::vector<LeafGroup> out;
  for (const SeifertLeaf& l : leaves) {
    if (!out.empty() && out.back().leaf == l)
      ++out.back().count;
    else
      out.push_back({l, 1});
  }
  return out;
}

std::vector<std::pair<std::vector<Int>, Int>> group_branches(
    const std::vector<std::vector<Int>>& branches) {
  std::vector<std::pair<std::vector<Int>, Int>> out;
  for (const std::vector<Int>& b : branches) {
    if (!out.empty() && out.back().first == b)
      ++out.back().second;
    else
      out.emplace_back(b, 1);
  }
  return out;
}

void render_normalization_text(const Report& r, std::ostringstream& os) {
  os << "normalization boundary\n";
  os << "  lens space: " << r.norm_lens.str() << "\n";
  if (r.norm_graph.vertices.empty())
    os << "  plumbing bamboo: empty (3-sphere)\n";
  else
    os << "  plumbing bamboo: " << weight_list(r.norm_graph.vertices) << "\n";
}

void render_seifert_text(const Report& r, std::ostringstream& os) {
  os << "seifert presentation of the Milnor fiber boundary\n";
  os << "  base genus: " << r.seifert.genus << "\n";
  os << "  integral euler number: " << r.seifert.euler_integral << "\n";
  os << "  exceptional leaves: ";
  const auto groups = group_leaves(r.seifert.leaves);
  if (groups.empty()) {
    os << "none";
  } else {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i) os << ", ";
      os << groups[i].count << " x (alpha=" << groups[i].leaf.alpha
         << ", beta=" << groups[i].leaf.beta << ")";
    }
  }
  os << "\n";
  os << "  trivial leaves (alpha=1): " << r.seifert.trivial_leaf_count << "\n";
  os << "  rational euler number e0: " << r.e0.str()
     << (r.e0.positive() ? " (positive)" : "") << "\n";
  if (r.milnor_lens)
    os << "  lens space: " << r.milnor_lens->str() << "\n";
  else
    os << "  lens space: no\n";
  if (r.gluing_euler) {
    os << "  gluing cross-check: euler number from torus gluing = " << *r.gluing_euler;
    if (*r.gluing_euler == r.seifert.euler_integral)
      os << " (matches)\n";
    else
      os << " (MISMATCH: integral euler number is " << r.seifert.euler_integral << ")\n";
  } else {
    os << "  gluing cross-check: not applicable (m, k, l not pairwise coprime)\n";
  }
}

void render_monodromy_text(const Report& r, std::ostringstream& os) {
  os << "monodromy\n";
  os << "  x-side fiber z^" << r.germ.m << " - y^" << r.germ.l << ": chi="
     << r.fiber_x.euler_characteristic
     << ", boundary components=" << r.fiber_x.boundary_components
     << ", genus=" << r.fiber_x.genus << "\n";
  os << "  x-side vertical monodromy: order=" << r.mono_x.order
     << ", fixed points=" << r.mono_x.fixed_points
     << ", rotation=" << r.mono_x.rotation.str() << " of a full turn\n";
  os << "  y-side fiber z^" << r.germ.m << " - x^" << r.germ.k << ": chi="
     << r.fiber_y.euler_characteristic
     << ", boundary components=" << r.fiber_y.boundary_components
     << ", genus=" << r.fiber_y.genus << "\n";
  os << "  y-side vertical monodromy: order=" << r.mono_y.order
     << ", fixed points=" << r.mono_y.fixed_points
     << ", rotation=" << r.mono_y.rotation.str() << " of a full turn\n";
  os << "  torus intersection number: " << r.torus_intersection << "\n";
}

void render_plumbing_text(const Report& r, std::ostringstream& os) {
  os << "milnor fiber boundary plumbing\n";
  os << "  case: " << case_name(r.graph_case) << "\n";
  if (r.graph_case == GraphCase::star_dividing)
    os << "  note: " << dividing_note << "\n";
  switch (r.graph_case) {
    case GraphCase::bamboo:
      os << "  weights: " << weight_list(r.milnor_graph.vertices) << "\n";
      break;
    case GraphCase::vertex_lens:
    case GraphCase::vertex_genus:
      os << "  vertex: (g=" << r.milnor_graph.vertices[0].genus
         << ", e=" << r.milnor_graph.vertices[0].euler << ")\n";
      break;
    case GraphCase::star_dividing:
    case GraphCase::star_general: {
      os << "  center: (g=" << r.milnor_graph.vertices[0].genus
         << ", e=" << r.milnor_graph.vertices[0].euler << ")\n";
      os << "  branches: ";
      const auto groups = group_branches(milnor_star_branches(r.germ));
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) os << ", ";
        os << groups[i].second << " x " << weight_list(groups[i].first);
      }
      os << "\n";
      break;
    }
  }
  os << "  vertices: " << r.milnor_graph.vertices.size()
     << ", edges: " << r.milnor_graph.edges.size() << "\n";
}

void render_compare_text(const Report& r, std::ostringstream& os) {
  os << "comparison\n";
  if (r.compare.milnor_lens)
    os << "  milnor fiber boundary: lens space " << r.compare.milnor_lens->str() << "\n";
  else
    os << "  milnor fiber boundary: not a lens space\n";
  os << "  normalization boundary: " << r.compare.normalization_lens.str() << "\n";
  if (r.compare.identical)
    os << "  verdict: identical (" << r.compare.witness << ")\n";
  else
    os << "  verdict: distinct (" << r.compare.witness << ")\n";
  os << "  rational euler number e0 = " << r.compare.e0.str();
  if (r.compare.e0.positive())
    os << " > 0: not orientation-preservingly diffeomorphic to the boundary of a "
          "normal surface singularity";
  os << "\n";
}

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}};
}

nlohmann::ordered_json lens_json(const LensSpace& ls) {
  return {{"n", ls.n}, {"q", ls.q}};
}

nlohmann::ordered_json graph_json(const PlumbingGraph& p) {
  return nlohmann::ordered_json::parse(to_json(p));
}

nlohmann::ordered_json monodromy_json(const FiberData& f, const MonodromyDescriptor& m) {
  return {{"fiber",
           {{"euler_characteristic", f.euler_characteristic},
            {"boundary_components", f.boundary_components},
            {"genus", f.genus}}},
          {"order", m.order},
          {"fixed_points", m.fixed_points},
          {"rotation", rational_json(m.rotation)}};
}

}  // namespace

std::string render_text(const Report& r, Section section) {
  std::ostringstream os;
  os << "germ: " << germ_equation(r.germ) << "  (m=" << r.germ.m << ", k=" << r.germ.k
     << ", l=" << r.germ.l << ")\n";
  os << "derived gcds: d=" << r.derived.d << "  k_bar=" << r.derived.k_bar
     << "  l_bar=" << r.derived.l_bar << "  d_k=" << r.derived.d_k
     << "  d_l=" << r.derived.d_l << "\n";
  if (wants(section, Section::normalization)) {
    os << "\n";
    render_normalization_text(r, os);
  }
  if (wants(section, Section::seifert)) {
    os << "\n";
    render_seifert_text(r, os);
  }
  if (wants(section, Section::monodromy)) {
    os << "\n";
    render_monodromy_text(r, os);
  }
  if (wants(section, Section::plumbing)) {
    os << "\n";
    render_plumbing_text(r, os);
  }
  if (wants(section, Section::compare)) {
    os << "\n";
    render_compare_text(r, os);
  }
  return os.str();
}

std::string render_json(const Report& r, Section section) {
  using J = nlohmann::ordered_json;
  J j;
  j["germ"] = {{"m", r.germ.m}, {"k", r.germ.k}, {"l", r.germ.l}};
  j["derived"] = {{"d", r.derived.d},
                  {"k_bar", r.derived.k_bar},
                  {"l_bar", r.derived.l_bar},
                  {"d_k", r.derived.d_k},
                  {"d_l", r.derived.d_l}};
  if (wants(section, Section::normalization))
    j["normalization"] = {{"lens", lens_json(r.norm_lens)},
                          {"graph", graph_json(r.norm_graph)}};
  if (wants(section, Section::seifert)) {
    J leaves = J::array();
    for (const LeafGroup& g : group_leaves(r.seifert.leaves))
      leaves.push_back({{"alpha", g.leaf.alpha}, {"beta", g.leaf.beta}, {"count", g.count}});
    J gluing;
    if (r.gluing_euler)
      gluing = {{"euler", *r.gluing_euler},
                {"matches_euler_integral", *r.gluing_euler == r.seifert.euler_integral}};
    j["seifert"] = {{"genus", r.seifert.genus},
                    {"euler_integral", r.seifert.euler_integral},
                    {"leaves", leaves},
                    {"trivial_leaf_count", r.seifert.trivial_leaf_count},
                    {"e0", rational_json(r.e0)},
                    {"lens_space", r.milnor_lens ? lens_json(*r.milnor_lens) : J(nullptr)},
                    {"gluing_check", gluing}};
  }
  if (wants(section, Section::monodromy))
    j["monodromy"] = {{"x", monodromy_json(r.fiber_x, r.mono_x)},
                      {"y", monodromy_json(r.fiber_y, r.mono_y)},
                      {"torus_intersection", r.torus_intersection}};
  if (wants(section, Section::plumbing))
    j["plumbing"] = {{"case", case_name(r.graph_case)},
                     {"note", r.graph_case == GraphCase::star_dividing
                                  ? nlohmann::ordered_json(dividing_note)
                                  : nlohmann::ordered_json(nullptr)},
                     {"graph", graph_json(r.milnor_graph)}};
  if (wants(section, Section::compare))
    j["compare"] = {
        {"milnor_lens", r.compare.milnor_lens ? lens_json(*r.compare.milnor_lens) : J(nullptr)},
        {"normalization_lens", lens_json(r.compare.normalization_lens)},
        {"identical", r.compare.identical},
        {"witness", r.compare.witness},
        {"e0", rational_json(r.compare.e0)},
        {"e0_positive", r.compare.e0.positive()}};
  return j.dump(2);
}

std::string render_dot(const Report& r, Section section) {
  if (section == Section::normalization) return to_dot(r.norm_graph);
  if (section == Section::plumbing) return to_dot(r.milnor_graph);
  throw std::domain_error("dot output exists only for the graph sections");
}

}  // namespace hzb
