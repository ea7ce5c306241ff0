// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamtrain/training.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace beamtrain {

TrainingPlan build_training_plan(const Coloring& coloring,
                                 const std::vector<DominantSupport>& supports,
                                 const DftCodebook& f, TrainingScheme scheme) {
  const int m = static_cast<int>(f.rows());
  if (static_cast<int>(coloring.color.size()) != m)
    throw std::invalid_argument("build_training_plan: coloring size mismatch");

  // Properness on these supports: every supported beam colored, and beams of
  // one user pairwise distinct (each user's support is a clique).
  for (const DominantSupport& s : supports) {
    std::vector<char> seen(static_cast<std::size_t>(coloring.m_tr) + 1, 0);
    for (int b : s.beams) {
      const int col = coloring.color[static_cast<std::size_t>(b)];
      if (col <= 0 || col > coloring.m_tr)
        throw std::invalid_argument("build_training_plan: supported beam has no color");
      if (seen[static_cast<std::size_t>(col)])
        throw std::invalid_argument("build_training_plan: improper coloring");
      seen[static_cast<std::size_t>(col)] = 1;
    }
  }

  // Color classes over all colored beams.
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(coloring.m_tr));
  for (int b = 0; b < m; ++b) {
    const int col = coloring.color[static_cast<std::size_t>(b)];
    if (col != 0) classes[static_cast<std::size_t>(col - 1)].push_back(b);
  }

  TrainingPlan plan;
  plan.scheme = scheme;
  plan.b_prime = scheme == TrainingScheme::Graph ? coloring.m_tr : m;
  plan.users.reserve(supports.size());

  for (const DominantSupport& s : supports) {
    const int mk = s.m_k();
    UserPlan user;
    user.beams = s.beams;
    user.beam_selection.resize(m, mk);
    user.contamination = Eigen::MatrixXd::Zero(mk, m);
    user.contamination_sets.resize(static_cast<std::size_t>(mk));

    for (int i = 0; i < mk; ++i) {
      const int own = s.beams[static_cast<std::size_t>(i)];
      user.beam_selection.col(i) = f.col(own);
      if (scheme == TrainingScheme::Graph) {
        const int col = coloring.color[static_cast<std::size_t>(own)];
        for (int other : classes[static_cast<std::size_t>(col - 1)]) {
          if (other == own) continue;
          user.contamination(i, other) = 1.0;
          user.contamination_sets[static_cast<std::size_t>(i)].push_back(other);
        }
      }
    }
    user.x_composite = user.beam_selection + f * user.contamination.transpose();
    plan.users.push_back(std::move(user));
  }
  return plan;
}

Eigen::VectorXcd simulate_pilots(const ChannelRealization& h_true,
                                 const TrainingPlan& plan, int k, double p_tr,
                                 double sigma2, Rng& rng) {
  const UserPlan& user = plan.users.at(static_cast<std::size_t>(k));
  if (h_true.size() != user.x_composite.rows())
    throw std::invalid_argument("simulate_pilots: channel dimension mismatch");

  Eigen::VectorXcd obs = std::sqrt(p_tr) * (user.x_composite.adjoint() * h_true);
  if (sigma2 > 0.0) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));
    for (Eigen::Index i = 0; i < obs.size(); ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      obs(i) += std::complex<double>(re, im);
    }
  }
  return obs;
}

MmseFilter mmse_filter(const Covariance& r, const TrainingPlan& plan, int k,
                       double p_tr, double sigma2) {
  const UserPlan& user = plan.users.at(static_cast<std::size_t>(k));
  const Eigen::Index mk = user.x_composite.cols();

  MmseFilter filter;
  filter.x = user.x_composite;
  if (mk == 0) {
    filter.w.resize(0, 0);
    return filter;
  }

  const Eigen::MatrixXcd rx = r * user.x_composite;  // M x M_k
  Eigen::MatrixXcd inner = p_tr * (user.x_composite.adjoint() * rx);
  inner += sigma2 * Eigen::MatrixXcd::Identity(mk, mk);
  const Eigen::MatrixXcd cross =
      std::sqrt(p_tr) * (user.beam_selection.adjoint() * rx);  // B^H R X

  if (sigma2 > 0.0) {
    // inner is Hermitian positive definite.
    filter.w = inner.ldlt().solve(cross.adjoint()).adjoint();
  } else {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(inner);
    if (cod.rank() < mk)
      std::fprintf(stderr,
                   "beamtrain: mmse_filter: singular noiseless observation "
                   "covariance (rank %ld of %ld), using pseudo-inverse\n",
                   static_cast<long>(cod.rank()), static_cast<long>(mk));
    filter.w = cod.solve(cross.adjoint()).adjoint();
  }
  return filter;
}

Eigen::VectorXcd estimate(const Eigen::VectorXcd& obs, const MmseFilter& filter) {
  if (obs.size() != filter.w.cols())
    throw std::invalid_argument("estimate: observation dimension mismatch");
  return filter.w * obs;
}

MseReport analytic_mse(const Covariance& r, const TrainingPlan& plan, int k,
                       double p_tr, double sigma2) {
  const UserPlan& user = plan.users.at(static_cast<std::size_t>(k));
  const Eigen::Index mk = user.x_composite.cols();

  MseReport report;
  if (mk == 0) return report;

  const Eigen::MatrixXcd r_prime =
      user.beam_selection.adjoint() * r * user.beam_selection;
  report.tr_r_prime = r_prime.trace().real();

  const MmseFilter filter = mmse_filter(r, plan, k, p_tr, sigma2);
  Eigen::MatrixXcd inner =
      p_tr * (user.x_composite.adjoint() * (r * user.x_composite));
  inner += sigma2 * Eigen::MatrixXcd::Identity(mk, mk);
  report.tr_r_hat_prime = (filter.w * inner * filter.w.adjoint()).trace().real();

  report.j = std::max(0.0, report.tr_r_prime - report.tr_r_hat_prime);
  return report;
}

Eigen::VectorXcd embed_estimate(const Eigen::VectorXcd& h_meas,
                                const DominantSupport& support, int m) {
  if (h_meas.size() != support.m_k())
    throw std::invalid_argument("embed_estimate: size mismatch with support");
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(m);
  for (int i = 0; i < support.m_k(); ++i) {
    const int b = support.beams[static_cast<std::size_t>(i)];
    if (b < 0 || b >= m)
      throw std::invalid_argument("embed_estimate: beam index out of range");
    h(b) = h_meas(i);
  }
  return h;
}

void write_user_mse_csv(std::ostream& os, const std::vector<UserMseRecord>& records) {
  os << "drop_id,user,scheme,delta_db,j_analytic,j_empirical,tr_r_prime\n";
  os.precision(9);
  for (const UserMseRecord& rec : records) {
    os << rec.drop_id << ',' << rec.user << ','
       << (rec.scheme == TrainingScheme::Graph ? "graph" : "orthogonal") << ','
       << rec.delta_db << ',' << rec.j_analytic << ',' << rec.j_empirical << ','
       << rec.tr_r_prime << '\n';
  }
}

}  // namespace beamtrain
