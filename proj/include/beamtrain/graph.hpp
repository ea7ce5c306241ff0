// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMTRAIN_GRAPH_HPP
#define BEAMTRAIN_GRAPH_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>
#include <vector>

#include "beamtrain/spectrum.hpp"

namespace beamtrain {

/// Beam-beam association matrix: a(i,j) = 1 iff some user's dominant set
/// contains both beams i and j (i != j). Symmetric, zero diagonal.
struct AssociationMatrix {
  Eigen::MatrixXi a;
};

AssociationMatrix association_matrix(const std::vector<DominantSupport>& supports,
                                     int m);

/// Conflict graph over the beams that appear in at least one dominant set.
/// Beams detected by nobody are not vertices: they consume no training
/// resource. Isolated vertices (a single user's lone beam) are kept.
struct ConflictGraph {
  int m = 0;                  // beam count of the underlying codebook
  std::vector<int> vertices;  // beam indices, ascending
  Eigen::MatrixXi adjacency;  // M x M copy of the association matrix
  std::vector<int> degree;    // s_i per beam index (0 for non-vertices)
};

ConflictGraph conflict_graph(const AssociationMatrix& a,
                             const std::vector<DominantSupport>& supports);

/// Color ids are 1-based; 0 marks a beam that is not a vertex.
struct Coloring {
  std::vector<int> color;  // per beam index
  int m_tr = 0;            // number of distinct colors used
  std::vector<int> usage;  // usage[c-1] = how many vertices carry color c
};

/// Greedy coloring: vertices visited in non-increasing degree order (ties by
/// ascending beam index); a vertex opens a new color only when every already
/// used color conflicts, otherwise it takes the least-used non-conflicting
/// color (ties by smallest color id). Deterministic and always proper.
Coloring greedy_color(const ConflictGraph& g);

/// Training resources of the colored scheme relative to orthogonal training.
double overhead_reduction(const Coloring& coloring, int m);

struct ColoringCheck {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // same-colored edges
};

/// Verifies that no edge joins same-colored vertices. Throws
/// std::invalid_argument when the coloring does not cover exactly the
/// graph's vertex set.
ColoringCheck validate_coloring(const ConflictGraph& g, const Coloring& c);

/// CSV rows beam_index,color_id for every colored beam.
void write_coloring_csv(std::ostream& os, const Coloring& c);

/// 0/1 grid, one matrix row per line, space separated.
void write_association_grid(std::ostream& os, const AssociationMatrix& a);

}  // namespace beamtrain

#endif  // BEAMTRAIN_GRAPH_HPP
