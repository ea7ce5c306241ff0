// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamtrain/txsim.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace beamtrain {

PrecoderSet rzf_precoder(const std::vector<Eigen::VectorXcd>& h_hats,
                         double sigma2, const DftCodebook& f, bool no_inverse) {
  if (h_hats.empty())
    throw std::invalid_argument("rzf_precoder: no estimates");
  const Eigen::Index m = h_hats.front().size();
  const Eigen::Index n = static_cast<Eigen::Index>(h_hats.size());

  PrecoderSet set;
  set.h_hat.resize(m, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (h_hats[static_cast<std::size_t>(k)].size() != m)
      throw std::invalid_argument("rzf_precoder: inconsistent estimate sizes");
    set.h_hat.col(k) = h_hats[static_cast<std::size_t>(k)];
  }
  if (set.h_hat.isZero(0.0))
    throw std::invalid_argument("rzf_precoder: all estimates are zero");

  Eigen::MatrixXcd gram = set.h_hat * set.h_hat.adjoint();
  gram += sigma2 * Eigen::MatrixXcd::Identity(m, m);

  if (no_inverse) {
    set.k = gram;
  } else if (sigma2 > 0.0) {
    set.k = gram.ldlt().solve(Eigen::MatrixXcd::Identity(m, m));
  } else {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
    if (!lu.isInvertible())
      throw std::runtime_error("rzf_precoder: singular Gram matrix with sigma2 = 0");
    set.k = lu.inverse();
  }

  const Eigen::MatrixXcd kh = set.k * set.h_hat;       // K Hhat, M x N
  const double denom = (f * kh).squaredNorm();         // tr{Hhat^H K^H F^H F K Hhat}
  if (!(denom > 0.0))
    throw std::runtime_error("rzf_precoder: degenerate power normalization");
  set.eta = std::sqrt(static_cast<double>(n) / denom);
  set.columns = set.eta * kh;
  return set;
}

Eigen::VectorXd sinr(const std::vector<Eigen::VectorXcd>& h_effective,
                     const std::vector<Eigen::VectorXcd>& h_hats,
                     const PrecoderSet& precoder, double p_data, double sigma2) {
  const Eigen::Index n = static_cast<Eigen::Index>(h_hats.size());
  if (h_effective.size() != h_hats.size())
    throw std::invalid_argument("sinr: channel list size mismatch");
  if (precoder.columns.cols() != n)
    throw std::invalid_argument("sinr: precoder built from a different user set");

  const double share = p_data / static_cast<double>(n);
  Eigen::VectorXd out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& h_eff = h_effective[static_cast<std::size_t>(k)];
    const auto& h_hat = h_hats[static_cast<std::size_t>(k)];
    const Eigen::VectorXcd p_k = precoder.columns.col(k);

    const double signal = share * std::norm(h_hat.dot(p_k));
    const double est_err = share * std::norm((h_eff - h_hat).dot(p_k));
    double interference = 0.0;
    const Eigen::RowVectorXcd coupling = h_eff.adjoint() * precoder.columns;
    for (Eigen::Index kp = 0; kp < n; ++kp)
      if (kp != k) interference += std::norm(coupling(kp));
    interference *= share;

    out(k) = signal / (sigma2 + est_err + interference);
  }
  return out;
}

double rate(double sinr_value, int b_prime, int t_slots, LogBase base) {
  if (t_slots < 1) throw std::invalid_argument("rate: t_slots must be >= 1");
  if (b_prime < 0 || b_prime > t_slots)
    throw std::invalid_argument("rate: b_prime must be in [0, t_slots]");
  const double prelog =
      1.0 - static_cast<double>(b_prime) / static_cast<double>(t_slots);
  const double log_term = base == LogBase::Two ? std::log2(1.0 + sinr_value)
                                               : std::log1p(sinr_value);
  return prelog * log_term;
}

double scale_power(double p_tx, int t_slots, int m, int b_prime) {
  if (b_prime >= t_slots)
    throw std::invalid_argument("scale_power: b_prime must be < t_slots");
  return static_cast<double>(t_slots - m) /
         static_cast<double>(t_slots - b_prime) * p_tx;
}

void write_user_rate_csv(std::ostream& os, const std::vector<UserRateRecord>& records) {
  os << "drop_id,user,scheme,delta_db,sinr_db,rate,b_prime\n";
  os.precision(9);
  for (const UserRateRecord& rec : records) {
    os << rec.drop_id << ',' << rec.user << ','
       << (rec.scheme == TrainingScheme::Graph ? "graph" : "orthogonal") << ','
       << rec.delta_db << ',' << rec.sinr_db << ',' << rec.rate << ','
       << rec.b_prime << '\n';
  }
}

}  // namespace beamtrain
