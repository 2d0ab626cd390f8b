#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hzb/germ.hpp"
#include "hzb/rational.hpp"

namespace hzb {

// A vertex carries the genus of its base curve and the Euler number of the
// disc bundle plumbed over it.
struct PlumbingVertex {
  Int genus = 0;
  Int euler = 0;
  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
  friend bool operator<(const PlumbingVertex& a, const PlumbingVertex& b) {
    return a.genus != b.genus ? a.genus < b.genus : a.euler < b.euler;
  }
};

// Connected tree (or the empty graph). Edges are unordered index pairs,
// stored with the smaller index first.
struct PlumbingGraph {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

// Path of genus-0 vertices with the given Euler weights, left to right.
PlumbingGraph build_bamboo(const std::vector<Int>& weights);

// Center plus one path per branch. Each branch is listed center-outward,
// its first vertex is joined to the center, and branch vertices have genus 0.
PlumbingGraph build_star(PlumbingVertex center,
                         const std::vector<std::vector<Int>>& branches);

// Shape family of the canonical graph of the Milnor fiber boundary.
enum class GraphCase {
  bamboo,         // k = l = 1: chain of (m-1) vertices of weight -2
  vertex_lens,    // m = 2, min(k,l) = 1, max(k,l) >= 2: one vertex, weight -2*max
  vertex_genus,   // k = l >= 2: one vertex of positive genus, weight m
  star_dividing,  // min | max, min != max: single-vertex branches, center weight 0
  star_general,   // otherwise: continued-fraction branches, center weight -m
};

GraphCase milnor_graph_case(const Germ& g);

// Branch weight lists of the star cases in construction order; empty for the
// bamboo and single-vertex cases.
std::vector<std::vector<Int>> milnor_star_branches(const Germ& g);

// Canonical plumbing graph of the boundary of the Milnor fiber.
PlumbingGraph milnor_boundary_plumbing(const Germ& g);

struct IntersectionForm {
  std::vector<std::vector<Int>> matrix;
};

// Symmetric matrix with the Euler weights on the diagonal and a 1 for every
// edge of the graph.
IntersectionForm intersection_form(const PlumbingGraph& p);

// Exact test (no floating point): eliminates diagonally in rational
// arithmetic and reports whether every pivot is negative.
bool is_negative_definite(const IntersectionForm& f);

// Equality of bamboo/star graphs up to reversing a bamboo and permuting the
// branches of a star. Throws UnsupportedShapeError for anything else.
bool graphs_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

std::string to_dot(const PlumbingGraph& p);
std::string to_json(const PlumbingGraph& p);

}  // namespace hzb
