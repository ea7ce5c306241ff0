// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMTRAIN_TXSIM_HPP
#define BEAMTRAIN_TXSIM_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "beamtrain/spectrum.hpp"
#include "beamtrain/training.hpp"

namespace beamtrain {

/// Regularized zero-forcing precoder built from the embedded channel
/// estimates: K = (Hhat Hhat^H + sigma2 I)^(-1), columns p_k = eta K hhat_k,
/// eta chosen so that eta^2 tr{Hhat^H K^H F^H F K Hhat} = N.
struct PrecoderSet {
  Eigen::MatrixXcd h_hat;    // M x N stacked estimates
  Eigen::MatrixXcd k;        // M x M
  double eta = 0.0;
  Eigen::MatrixXcd columns;  // M x N, p_k = eta K hhat_k
};

/// no_inverse keeps the matched-filter reading K = Hhat Hhat^H + sigma2 I
/// (sensitivity switch); the default applies the regularized inverse.
/// Throws std::invalid_argument when every estimate is zero, and
/// std::runtime_error when sigma2 = 0 leaves the Gram matrix singular.
PrecoderSet rzf_precoder(const std::vector<Eigen::VectorXcd>& h_hats,
                         double sigma2, const DftCodebook& f,
                         bool no_inverse = false);

/// Per-user downlink SINR for one fading block:
///   signal        (P/N) |hhat_k^H p_k|^2
///   est. error    (P/N) |(h_eff_k - hhat_k)^H p_k|^2
///   interference  (P/N) sum_{k' != k} |h_eff_k^H p_k'|^2
/// with h_eff_k = F^H h_k the effective channel of the block (the physical
/// channel enters only through that product).
Eigen::VectorXd sinr(const std::vector<Eigen::VectorXcd>& h_effective,
                     const std::vector<Eigen::VectorXcd>& h_hats,
                     const PrecoderSet& precoder, double p_data, double sigma2);

enum class LogBase { Two, Natural };

/// Net rate (1 - b'/T) log(1 + sinr); bits per channel use under LogBase::Two.
double rate(double sinr_value, int b_prime, int t_slots,
            LogBase base = LogBase::Two);

/// Downlink power rescaling (T - M) / (T - b') * p_tx that keeps the energy
/// of a coherence block constant as training slots are freed.
double scale_power(double p_tx, int t_slots, int m, int b_prime);

/// One per-user rate record for offline analysis.
struct UserRateRecord {
  int drop_id = 0;
  int user = 0;
  TrainingScheme scheme = TrainingScheme::Orthogonal;
  double delta_db = 0.0;
  double sinr_db = 0.0;
  double rate = 0.0;
  int b_prime = 0;
};

void write_user_rate_csv(std::ostream& os, const std::vector<UserRateRecord>& records);

}  // namespace beamtrain

#endif  // BEAMTRAIN_TXSIM_HPP
