#include "hzb/plumbing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"

namespace hzb {

PlumbingGraph build_bamboo(const std::vector<Int>& weights) {
  PlumbingGraph p;
  p.vertices.reserve(weights.size());
  for (Int w : weights) p.vertices.push_back({0, w});
  for (int i = 0; i + 1 < static_cast<int>(p.vertices.size()); ++i)
    p.edges.push_back({i, i + 1});
  return p;
}

PlumbingGraph build_star(PlumbingVertex center,
                         const std::vector<std::vector<Int>>& branches) {
  PlumbingGraph p;
  p.vertices.push_back(center);
  for (const std::vector<Int>& branch : branches) {
    int prev = 0;
    for (Int w : branch) {
      p.vertices.push_back({0, w});
      const int cur = static_cast<int>(p.vertices.size()) - 1;
      p.edges.push_back({prev, cur});
      prev = cur;
    }
  }
  return p;
}

GraphCase milnor_graph_case(const Germ& g) {
  const Int lo = std::min(g.k, g.l);
  const Int hi = std::max(g.k, g.l);
  if (lo == 1 && hi == 1) return GraphCase::bamboo;
  if (g.m == 2 && lo == 1) return GraphCase::vertex_lens;
  if (lo == hi) return GraphCase::vertex_genus;
  if (hi % lo == 0) return GraphCase::star_dividing;
  return GraphCase::star_general;
}

namespace {

// expansion of alpha / (alpha - beta), negated
std::vector<Int> branch_weights(Int alpha, Int beta) {
  const ContinuedFraction cf = cf_expand(alpha, checked_sub(alpha, beta));
  std::vector<Int> w;
  w.reserve(cf.size());
  for (Int b : cf) w.push_back(checked_neg(b));
  return w;
}

}  // namespace

std::vector<std::vector<Int>> milnor_star_branches(const Germ& g) {
  const DerivedGcds dg = derive(g);
  std::vector<std::vector<Int>> branches;
  switch (milnor_graph_case(g)) {
    case GraphCase::bamboo:
    case GraphCase::vertex_lens:
    case GraphCase::vertex_genus:
      break;
    case GraphCase::star_dividing: {
      const Int ratio = std::max(g.k, g.l) / std::min(g.k, g.l);
      branches.assign(static_cast<std::size_t>(g.m), {checked_neg(ratio)});
      break;
    }
    case GraphCase::star_general: {
      const auto add_family = [&](Int alpha, Int other) {
        if (alpha == 1) return;
        const Int beta = mod_inverse_of_negative(other, alpha);
        const std::vector<Int> w = branch_weights(alpha, beta);
        for (Int i = 0; i < g.m; ++i) branches.push_back(w);
      };
      add_family(dg.l_bar, dg.k_bar);
      add_family(dg.k_bar, dg.l_bar);
      break;
    }
  }
  return branches;
}

PlumbingGraph milnor_boundary_plumbing(const Germ& g) {
  const DerivedGcds dg = derive(g);
  const Int genus = checked_mul(g.m - 1, dg.d - 1);
  switch (milnor_graph_case(g)) {
    case GraphCase::bamboo:
      return build_bamboo(std::vector<Int>(static_cast<std::size_t>(g.m - 1), -2));
    case GraphCase::vertex_lens:
      return build_bamboo({checked_mul(-2, std::max(g.k, g.l))});
    case GraphCase::vertex_genus: {
      PlumbingGraph p;
      p.vertices.push_back({genus, g.m});
      return p;
    }
    case GraphCase::star_dividing:
      return build_star({genus, 0}, milnor_star_branches(g));
    case GraphCase::star_general:
      return build_star({genus, checked_neg(g.m)}, milnor_star_branches(g));
  }
  throw InvariantViolation("unhandled graph case");
}

IntersectionForm intersection_form(const PlumbingGraph& p) {
  const std::size_t n = p.vertices.size();
  IntersectionForm f;
  f.matrix.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) f.matrix[i][i] = p.vertices[i].euler;
  for (const auto& [a, b] : p.edges) {
    f.matrix[a][b] = 1;
    f.matrix[b][a] = 1;
  }
  return f;
}

bool is_negative_definite(const IntersectionForm& f) {
  const auto& m = f.matrix;
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::domain_error("intersection form must be square");
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        throw std::domain_error("intersection form must be symmetric");
  }
  if (n == 0) return true;

  std::vector<Rational> diag(n);
  std::vector<std::map<int, Rational>> off(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = Rational(m[i][i]);
    for (int j = 0; j < n; ++j)
      if (j != i && m[i][j] != 0) off[i].emplace(j, Rational(m[i][j]));
  }

  const auto subtract_coupling = [](std::map<int, Rational>& row, int j,
                                    const Rational& delta) {
    auto [it, inserted] = row.try_emplace(j, Rational(0));
    it->second -= delta;
    if (it->second == Rational(0)) row.erase(it);
  };

  // Diagonal elimination, picking the least-coupled pivot first; on the tree
  // matrices produced here that is always a leaf, so nothing fills in and the
  // rationals stay small. Any all-negative pivot sequence certifies negative
  // definiteness, and the first pivot >= 0 refutes it.
  std::vector<char> alive(n, 1);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    std::size_t best = 0;
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      if (p < 0 || off[i].size() < best) {
        p = i;
        best = off[i].size();
      }
    }
    if (!(diag[p] < Rational(0))) return false;
    alive[p] = 0;
    std::vector<std::pair<int, Rational>> nb(off[p].begin(), off[p].end());
    off[p].clear();
    for (const auto& [i, w] : nb) off[i].erase(p);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      const auto& [i, wi] = nb[s];
      diag[i] -= wi * wi / diag[p];
      for (std::size_t t = s + 1; t < nb.size(); ++t) {
        const auto& [j, wj] = nb[t];
        const Rational delta = wi * wj / diag[p];
        subtract_coupling(off[i], j, delta);
        subtract_coupling(off[j], i, delta);
      }
    }
  }
  return true;
}

namespace {

struct Canon {
  int shape = 0;  // 0 empty, 1 vertex, 2 bamboo, 3 star
  std::vector<PlumbingVertex> path;
  PlumbingVertex center{};
  std::vector<std::vector<PlumbingVertex>> branches;
  friend bool operator==(const Canon&, const Canon&) = default;
};

std::vector<std::vector<int>> adjacency_checked(const PlumbingGraph& p) {
  const int n = static_cast<int>(p.vertices.size());
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : p.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw UnsupportedShapeError("edge endpoint out of range");
    if (a == b) throw UnsupportedShapeError("self-loop");
    if (!seen.insert(std::minmax(a, b)).second)
      throw UnsupportedShapeError("multi-edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

Canon canonical_form(const PlumbingGraph& p) {
  Canon c;
  const int n = static_cast<int>(p.vertices.size());
  if (n == 0) {
    if (!p.edges.empty()) throw UnsupportedShapeError("edges without vertices");
    return c;
  }
  const auto adj = adjacency_checked(p);
  if (static_cast<int>(p.edges.size()) != n - 1)
    throw UnsupportedShapeError("graph is not a tree");
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (visited != n) throw UnsupportedShapeError("graph is not connected");

  if (n == 1) {
    c.shape = 1;
    c.path = {p.vertices[0]};
    return c;
  }

  const auto walk = [&](int from, int start) {
    std::vector<PlumbingVertex> out;
    int prev = from, cur = start;
    while (true) {
      if (adj[cur].size() > 2)
        throw UnsupportedShapeError("more than one junction vertex");
      out.push_back(p.vertices[cur]);
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    return out;
  };

  std::vector<int> junctions;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) junctions.push_back(i);

  if (junctions.empty()) {
    int end = -1;
    for (int i = 0; i < n && end < 0; ++i)
      if (adj[i].size() == 1) end = i;
    std::vector<PlumbingVertex> seq = walk(-1, end);
    std::vector<PlumbingVertex> rev(seq.rbegin(), seq.rend());
    c.shape = 2;
    c.path = std::min(seq, rev);
    return c;
  }
  if (junctions.size() == 1) {
    const int center = junctions[0];
    c.shape = 3;
    c.center = p.vertices[center];
    for (int nb : adj[center]) c.branches.push_back(walk(center, nb));
    std::sort(c.branches.begin(), c.branches.end());
    return c;
  }
  throw UnsupportedShapeError("more than one junction vertex");
}

std::string shape_string(const PlumbingGraph& p) {
  if (p.vertices.empty()) return "empty";
  if (p.vertices.size() == 1) return "vertex";
  std::vector<int> degree(p.vertices.size(), 0);
  for (const auto& [a, b] : p.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree)
    if (d >= 3) return "star";
  return "bamboo";
}

}  // namespace

bool graphs_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

std::string to_dot(const PlumbingGraph& p) {
  std::ostringstream os;
  os << "graph {\n";
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    os << "  v" << i << " [label=\"g=" << p.vertices[i].genus
       << " e=" << p.vertices[i].euler << "\"];\n";
  for (const auto& [a, b] : p.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const PlumbingGraph& p) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    j["vertices"].push_back({{"id", static_cast<Int>(i)},
                             {"genus", p.vertices[i].genus},
                             {"euler", p.vertices[i].euler}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.edges) j["edges"].push_back({a, b});
  j["shape"] = shape_string(p);
  return j.dump(2);
}

}  // namespace hzb
