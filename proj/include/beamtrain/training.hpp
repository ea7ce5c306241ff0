// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMTRAIN_TRAINING_HPP
#define BEAMTRAIN_TRAINING_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "beamtrain/graph.hpp"
#include "beamtrain/spectrum.hpp"

namespace beamtrain {

enum class TrainingScheme { Orthogonal, Graph };

/// Per-user training structure. beam_selection stacks the user's dominant
/// DFT beams as columns (M x M_k). contamination row i marks the other
/// colored beams sharing beam i's training resource (all zero under
/// orthogonal training). x_composite = beam_selection + F * contamination^T,
/// so x_composite^H h yields the full pilot observation (minus noise).
struct UserPlan {
  std::vector<int> beams;                            // B_k, ascending
  Eigen::MatrixXcd beam_selection;                   // M x M_k
  Eigen::MatrixXd contamination;                     // M_k x M, 0/1
  std::vector<std::vector<int>> contamination_sets;  // S_i per own beam
  Eigen::MatrixXcd x_composite;                      // M x M_k
};

struct TrainingPlan {
  TrainingScheme scheme = TrainingScheme::Orthogonal;
  int b_prime = 0;  // training slots consumed: M_tr for Graph, M for Orthogonal
  std::vector<UserPlan> users;
};

/// Builds the per-user training structure from a proper coloring. Throws
/// std::invalid_argument when the coloring is improper on the supports
/// (a user's beams must carry pairwise distinct colors) or leaves a
/// supported beam uncolored.
TrainingPlan build_training_plan(const Coloring& coloring,
                                 const std::vector<DominantSupport>& supports,
                                 const DftCodebook& f, TrainingScheme scheme);

/// Noisy pilot observation sqrt(p_tr) * X_k^H h + n, n ~ CN(0, sigma2 I).
/// sigma2 <= 0 yields a noiseless observation without consuming rng draws.
Eigen::VectorXcd simulate_pilots(const ChannelRealization& h_true,
                                 const TrainingPlan& plan, int k, double p_tr,
                                 double sigma2, Rng& rng);

struct MmseFilter {
  Eigen::MatrixXcd w;  // M_k x M_k
  Eigen::MatrixXcd x;  // composite X_k used to build it
};

/// LMMSE filter for the contaminated observation:
/// W = (sqrt(p_tr) B^H R X) (p_tr X^H R X + sigma2 I)^(-1).
/// With sigma2 = 0 a rank-deficient inner matrix falls back to the
/// pseudo-inverse (warning on stderr).
MmseFilter mmse_filter(const Covariance& r, const TrainingPlan& plan, int k,
                       double p_tr, double sigma2);

Eigen::VectorXcd estimate(const Eigen::VectorXcd& obs, const MmseFilter& filter);

struct MseReport {
  double j = 0.0;              // tr{R' - Rhat'}, clamped at 0 against roundoff
  double tr_r_prime = 0.0;     // tr{B^H R B}
  double tr_r_hat_prime = 0.0; // tr{W (p_tr X^H R X + sigma2 I) W^H}
};

/// Closed-form estimation MSE of the effective measured channel.
MseReport analytic_mse(const Covariance& r, const TrainingPlan& plan, int k,
                       double p_tr, double sigma2);

/// Zero-embedding back to full beam dimension: entries of h_meas placed at
/// the support positions, exact zeros elsewhere.
Eigen::VectorXcd embed_estimate(const Eigen::VectorXcd& h_meas,
                                const DominantSupport& support, int m);

/// One per-user estimation-error record, as emitted for offline analysis.
struct UserMseRecord {
  int drop_id = 0;
  int user = 0;
  TrainingScheme scheme = TrainingScheme::Orthogonal;
  double delta_db = 0.0;
  double j_analytic = 0.0;
  double j_empirical = 0.0;
  double tr_r_prime = 0.0;
};

void write_user_mse_csv(std::ostream& os, const std::vector<UserMseRecord>& records);

}  // namespace beamtrain

#endif  // BEAMTRAIN_TRAINING_HPP
