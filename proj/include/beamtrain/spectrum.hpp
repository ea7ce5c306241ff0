// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMTRAIN_SPECTRUM_HPP
#define BEAMTRAIN_SPECTRUM_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "beamtrain/env.hpp"

namespace beamtrain {

using DftCodebook = Eigen::MatrixXcd;  // M x M unitary, columns b_1..b_M

/// Unitary M-point DFT matrix; entry (n, k) = exp(-j 2 pi n k / M) / sqrt(M).
DftCodebook dft_codebook(int m);

/// Per-beam average gains lambda(i) = |b_i^H R b_i|^2.
Eigen::VectorXd beam_gains(const Covariance& r, const DftCodebook& f);

/// Support of the dominant beam angular spectrum of one user: binary mask
/// plus the ascending beam-index set. m_k() == 0 marks a user that detected
/// no beam at the current threshold (untrainable at this drop).
struct DominantSupport {
  Eigen::VectorXi mask;    // g(i) in {0, 1}, length M
  std::vector<int> beams;  // indices with g(i) = 1, ascending

  int m_k() const { return static_cast<int>(beams.size()); }
};

/// Thresholds the gain vector: g(i) = 1 iff lambda(i) >= reference * 10^(delta_db/10).
/// With the default reference = 1 the threshold is absolute on the lambda
/// scale; pass the per-drop maximum lambda to obtain a relative threshold.
DominantSupport dominant_support(const Eigen::VectorXd& gains, double delta_db,
                                 double reference = 1.0);

/// Debug dump, one row per (user, beam): user,beam,lambda,g.
void write_spectra_csv(std::ostream& os,
                       const std::vector<Eigen::VectorXd>& gains,
                       const std::vector<DominantSupport>& supports);

}  // namespace beamtrain

#endif  // BEAMTRAIN_SPECTRUM_HPP
