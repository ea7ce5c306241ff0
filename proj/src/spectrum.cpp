// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamtrain/spectrum.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace beamtrain {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DftCodebook dft_codebook(int m) {
  if (m < 1) throw std::invalid_argument("dft_codebook: m must be >= 1");
  DftCodebook f(m, m);
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (int k = 0; k < m; ++k) {
    for (int n = 0; n < m; ++n) {
      // n*k reduced mod m keeps the phase argument small for large arrays.
      const long long prod = static_cast<long long>(n) * k % m;
      f(n, k) = std::polar(norm, -2.0 * kPi * static_cast<double>(prod) /
                                     static_cast<double>(m));
    }
  }
  return f;
}

Eigen::VectorXd beam_gains(const Covariance& r, const DftCodebook& f) {
  if (r.rows() != r.cols() || r.rows() != f.rows() || f.rows() != f.cols())
    throw std::invalid_argument("beam_gains: dimension mismatch");
  const int m = static_cast<int>(f.cols());
  Eigen::VectorXd gains(m);
  for (int i = 0; i < m; ++i) {
    const std::complex<double> q = f.col(i).dot(r * f.col(i));  // b_i^H R b_i
    gains(i) = std::norm(q);
  }
  return gains;
}

DominantSupport dominant_support(const Eigen::VectorXd& gains, double delta_db,
                                 double reference) {
  const double threshold = reference * std::pow(10.0, delta_db / 10.0);
  DominantSupport s;
  s.mask = Eigen::VectorXi::Zero(gains.size());
  for (int i = 0; i < gains.size(); ++i) {
    if (gains(i) >= threshold) {
      s.mask(i) = 1;
      s.beams.push_back(i);
    }
  }
  return s;
}

void write_spectra_csv(std::ostream& os,
                       const std::vector<Eigen::VectorXd>& gains,
                       const std::vector<DominantSupport>& supports) {
  os << "user,beam,lambda,g\n";
  os.precision(9);
  for (std::size_t k = 0; k < gains.size(); ++k) {
    for (int i = 0; i < gains[k].size(); ++i) {
      const int g = k < supports.size() ? supports[k].mask(i) : 0;
      os << k << ',' << i << ',' << gains[k](i) << ',' << g << '\n';
    }
  }
}

}  // namespace beamtrain
