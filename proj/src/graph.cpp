// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamtrain/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace beamtrain {

AssociationMatrix association_matrix(const std::vector<DominantSupport>& supports,
                                     int m) {
  AssociationMatrix assoc;
  assoc.a = Eigen::MatrixXi::Zero(m, m);
  for (const DominantSupport& s : supports) {
    for (std::size_t u = 0; u < s.beams.size(); ++u) {
      if (s.beams[u] < 0 || s.beams[u] >= m)
        throw std::invalid_argument("association_matrix: beam index out of range");
      for (std::size_t v = u + 1; v < s.beams.size(); ++v) {
        assoc.a(s.beams[u], s.beams[v]) = 1;
        assoc.a(s.beams[v], s.beams[u]) = 1;
      }
    }
  }
  return assoc;
}

ConflictGraph conflict_graph(const AssociationMatrix& a,
                             const std::vector<DominantSupport>& supports) {
  const int m = static_cast<int>(a.a.rows());
  ConflictGraph g;
  g.m = m;
  g.adjacency = a.a;
  g.degree.assign(m, 0);

  std::vector<char> is_vertex(m, 0);
  for (const DominantSupport& s : supports)
    for (int b : s.beams) is_vertex[static_cast<std::size_t>(b)] = 1;

  for (int i = 0; i < m; ++i) {
    if (!is_vertex[static_cast<std::size_t>(i)]) continue;
    g.vertices.push_back(i);
    int deg = 0;
    for (int j = 0; j < m; ++j) deg += a.a(i, j);
    g.degree[static_cast<std::size_t>(i)] = deg;
  }
  return g;
}

Coloring greedy_color(const ConflictGraph& g) {
  Coloring c;
  c.color.assign(static_cast<std::size_t>(g.m), 0);

  std::vector<int> order = g.vertices;
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return g.degree[static_cast<std::size_t>(lhs)] >
           g.degree[static_cast<std::size_t>(rhs)];
  });  // vertices list is ascending, so ties stay by beam index

  for (int v : order) {
    std::vector<char> in_conflict(static_cast<std::size_t>(c.m_tr) + 1, 0);
    for (int u : g.vertices) {
      if (g.adjacency(v, u) != 0 && c.color[static_cast<std::size_t>(u)] != 0)
        in_conflict[static_cast<std::size_t>(c.color[static_cast<std::size_t>(u)])] = 1;
    }
    int pick = 0;
    for (int col = 1; col <= c.m_tr; ++col) {
      if (in_conflict[static_cast<std::size_t>(col)]) continue;
      if (pick == 0 || c.usage[static_cast<std::size_t>(col - 1)] <
                           c.usage[static_cast<std::size_t>(pick - 1)])
        pick = col;  // least-used reusable color, ties by smallest id
    }
    if (pick == 0) {
      pick = ++c.m_tr;
      c.usage.push_back(0);
    }
    c.color[static_cast<std::size_t>(v)] = pick;
    ++c.usage[static_cast<std::size_t>(pick - 1)];
  }
  return c;
}

double overhead_reduction(const Coloring& coloring, int m) {
  if (m < 1) throw std::invalid_argument("overhead_reduction: m must be >= 1");
  return static_cast<double>(coloring.m_tr) / static_cast<double>(m);
}

ColoringCheck validate_coloring(const ConflictGraph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.m)
    throw std::invalid_argument("validate_coloring: beam count mismatch");

  std::vector<char> is_vertex(static_cast<std::size_t>(g.m), 0);
  for (int v : g.vertices) is_vertex[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < g.m; ++i) {
    const bool colored = c.color[static_cast<std::size_t>(i)] != 0;
    if (colored != static_cast<bool>(is_vertex[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("validate_coloring: vertex set mismatch");
  }

  ColoringCheck check;
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      const int i = g.vertices[a];
      const int j = g.vertices[b];
      if (g.adjacency(i, j) != 0 &&
          c.color[static_cast<std::size_t>(i)] == c.color[static_cast<std::size_t>(j)]) {
        check.ok = false;
        check.violations.emplace_back(i, j);
      }
    }
  }
  return check;
}

void write_coloring_csv(std::ostream& os, const Coloring& c) {
  os << "beam_index,color_id\n";
  for (std::size_t i = 0; i < c.color.size(); ++i)
    if (c.color[i] != 0) os << i << ',' << c.color[i] << '\n';
}

void write_association_grid(std::ostream& os, const AssociationMatrix& a) {
  for (Eigen::Index i = 0; i < a.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.a.cols(); ++j) {
      if (j != 0) os << ' ';
      os << a.a(i, j);
    }
    os << '\n';
  }
}

}  // namespace beamtrain
