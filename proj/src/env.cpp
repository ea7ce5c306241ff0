// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamtrain/env.hpp"

#include <cmath>
#include <complex>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace beamtrain {

namespace {

constexpr double kPi = 3.14159265358979323846;

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Angle of the BS->target ray relative to array broadside (+y), folded into
// the front half-plane. +pi/2 endfire maps onto -pi/2; a ULA cannot tell the
// two apart, so the fold keeps angles in [-pi/2, pi/2) without changing the
// steering vector.
double aod_from(const Point& bs, const Point& target) {
  const double theta = std::atan2(target.x - bs.x, std::abs(target.y - bs.y));
  return theta >= kPi / 2 ? theta - kPi : theta;
}

}  // namespace

EnvConfig::EnvConfig(double area_side_, int n_ms_, int n_s_, double epsilon_,
                     double gamma_, double beta_, int m_antennas_,
                     double p_ref_, std::uint64_t seed_,
                     BsPlacement bs_placement_)
    : area_side(area_side_),
      n_ms(n_ms_),
      n_s(n_s_),
      epsilon(epsilon_),
      gamma(gamma_),
      beta(beta_),
      m_antennas(m_antennas_),
      p_ref(p_ref_),
      seed(seed_),
      bs_placement(bs_placement_) {
  if (!(area_side > 0.0)) throw std::invalid_argument("EnvConfig: area_side must be > 0");
  if (n_ms < 1) throw std::invalid_argument("EnvConfig: n_ms must be >= 1");
  if (n_s < 0) throw std::invalid_argument("EnvConfig: n_s must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("EnvConfig: epsilon must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("EnvConfig: gamma must be > 0");
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("EnvConfig: beta must be in (0, 1]");
  if (m_antennas < 2) throw std::invalid_argument("EnvConfig: m_antennas must be >= 2");
  if (!(p_ref > 0.0)) throw std::invalid_argument("EnvConfig: p_ref must be > 0");
}

Environment generate_environment(const EnvConfig& cfg, Rng& rng) {
  Environment env;
  switch (cfg.bs_placement) {
    case BsPlacement::EdgeMidpoint:
      env.bs = {cfg.area_side / 2.0, 0.0};
      break;
    case BsPlacement::Corner:
      env.bs = {0.0, 0.0};
      break;
    case BsPlacement::Center:
      env.bs = {cfg.area_side / 2.0, cfg.area_side / 2.0};
      break;
  }
  std::uniform_real_distribution<double> u(0.0, cfg.area_side);
  env.ms.resize(cfg.n_ms);
  for (auto& p : env.ms) {
    p.x = u(rng);
    p.y = u(rng);
  }
  env.scatterers.resize(cfg.n_s);
  for (auto& p : env.scatterers) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return env;
}

double path_loss(double d, double epsilon, double gamma) {
  if (d < 0.0) throw std::invalid_argument("path_loss: negative distance");
  return std::pow(1.0 + d / epsilon, gamma);
}

PathSet derive_paths(const Environment& env, int k, const EnvConfig& cfg) {
  if (k < 0 || k >= static_cast<int>(env.ms.size()))
    throw std::invalid_argument("derive_paths: user index out of range");

  const Point& ms = env.ms[static_cast<std::size_t>(k)];
  PathSet set;
  set.user_index = k;
  set.paths.reserve(env.scatterers.size() + 1);

  for (const Point& s : env.scatterers) {
    const double d_p = distance(env.bs, s);
    const double d_pk = distance(s, ms);
    Path path;
    path.gain_mag = std::sqrt(
        cfg.p_ref / (cfg.beta * path_loss(d_p, cfg.epsilon, cfg.gamma) *
                     path_loss(d_pk, cfg.epsilon, cfg.gamma)));
    path.aod = aod_from(env.bs, s);
    path.delay = (d_p + d_pk) / kSpeedOfLight;
    set.paths.push_back(path);
  }

  const double d_k = distance(env.bs, ms);
  Path direct;
  direct.gain_mag = std::sqrt(cfg.p_ref / path_loss(d_k, cfg.epsilon, cfg.gamma));
  direct.aod = aod_from(env.bs, ms);
  direct.delay = d_k / kSpeedOfLight;
  set.paths.push_back(direct);
  return set;
}

Eigen::VectorXcd steering_vector(double theta, int m) {
  if (m < 1) throw std::invalid_argument("steering_vector: m must be >= 1");
  Eigen::VectorXcd a(m);
  const double s = std::sin(theta);
  for (int i = 0; i < m; ++i)
    a(i) = std::polar(1.0, kPi * static_cast<double>(i) * s);
  return a;
}

Covariance covariance(const PathSet& paths, int m) {
  Covariance r = Covariance::Zero(m, m);
  for (const Path& p : paths.paths) {
    const Eigen::VectorXcd a = steering_vector(p.aod, m);
    r.noalias() += (p.gain_mag * p.gain_mag) * (a * a.adjoint());
  }
  return r;
}

ChannelRealization realize_channel(const PathSet& paths, int m, Rng& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  ChannelRealization h = ChannelRealization::Zero(m);
  for (const Path& p : paths.paths) {
    const std::complex<double> coeff = std::polar(p.gain_mag, phase(rng));
    h.noalias() += coeff * steering_vector(p.aod, m);
  }
  return h;
}

namespace {

void write_points(std::ostream& os, const std::vector<Point>& pts) {
  os.precision(std::numeric_limits<double>::max_digits10);
  for (const Point& p : pts) os << p.x << ' ' << p.y << '\n';
}

}  // namespace

void write_drop_file(const Environment& env, std::ostream& os) {
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "BS\n" << env.bs.x << ' ' << env.bs.y << '\n';
  os << "MS\n";
  write_points(os, env.ms);
  os << "SCATTERER\n";
  write_points(os, env.scatterers);
}

Environment read_drop_file(std::istream& is) {
  Environment env;
  std::string token;
  std::vector<Point>* section = nullptr;
  bool bs_pending = false;
  while (is >> token) {
    if (token == "BS") {
      bs_pending = true;
      section = nullptr;
    } else if (token == "MS") {
      bs_pending = false;
      section = &env.ms;
    } else if (token == "SCATTERER") {
      bs_pending = false;
      section = &env.scatterers;
    } else {
      Point p;
      p.x = std::stod(token);
      if (!(is >> p.y)) throw std::runtime_error("drop file: dangling coordinate");
      if (bs_pending) {
        env.bs = p;
        bs_pending = false;
      } else if (section != nullptr) {
        section->push_back(p);
      } else {
        throw std::runtime_error("drop file: coordinates before section header");
      }
    }
  }
  return env;
}

}  // namespace beamtrain
