// Copyright (c) 2026 The beamtrain Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMTRAIN_ENV_HPP
#define BEAMTRAIN_ENV_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace beamtrain {

using Rng = std::mt19937_64;
using Covariance = Eigen::MatrixXcd;          // M x M Hermitian PSD
using ChannelRealization = Eigen::VectorXcd;  // M x 1, one fading block

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Where the base station sits on the square deployment region. The ULA is
/// parallel to the bottom edge with broadside pointing up (+y), so for the
/// default edge-midpoint placement every point of the area lies in the
/// array's front half-plane.
enum class BsPlacement { EdgeMidpoint, Corner, Center };

/// Scenario parameters. Validated on construction; invalid values throw
/// std::invalid_argument.
struct EnvConfig {
  double area_side;    // side of the square region, meters
  int n_ms;            // number of users
  int n_s;             // number of scatterers
  double epsilon;      // path-loss break point distance, meters
  double gamma;        // path-loss exponent
  double beta;         // reflector attenuation, in (0, 1]
  int m_antennas;      // BS array size M
  double p_ref;        // linear power reference inside the path gains
  std::uint64_t seed;  // default stream seed for standalone use
  BsPlacement bs_placement;

  EnvConfig(double area_side, int n_ms, int n_s, double epsilon, double gamma,
            double beta, int m_antennas, double p_ref = 1.0,
            std::uint64_t seed = 0,
            BsPlacement bs_placement = BsPlacement::EdgeMidpoint);
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Environment {
  Point bs;
  std::vector<Point> ms;
  std::vector<Point> scatterers;
};

/// One propagation path as seen from the BS array.
struct Path {
  double gain_mag;  // |alpha|, linear amplitude
  double aod;       // angle of departure from broadside, radians in [-pi/2, pi/2)
  double delay;     // seconds
};

/// All paths of one user: n_s single-bounce paths (scatterer order) followed
/// by the direct path.
struct PathSet {
  int user_index = 0;
  std::vector<Path> paths;
};

/// Draws MS and scatterer positions i.i.d. uniform over the square.
/// Draw order is pinned (all MS points first, then scatterers; x before y)
/// so a fixed seed reproduces the environment exactly.
Environment generate_environment(const EnvConfig& cfg, Rng& rng);

/// Distance-dependent propagation loss (1 + d/epsilon)^gamma. Monotone in d,
/// equals 1 at d = 0. Negative d throws std::invalid_argument.
double path_loss(double d, double epsilon, double gamma);

/// Per-path gain magnitudes, departure angles and delays for user k.
/// Scattered path p: gain = sqrt(p_ref / (beta * L(bs->scatterer) * L(scatterer->ms))).
/// Direct path: gain = sqrt(p_ref / L(bs->ms)), no reflector attenuation.
PathSet derive_paths(const Environment& env, int k, const EnvConfig& cfg);

/// Half-wavelength ULA steering vector, entry i = exp(j*pi*i*sin(theta)).
Eigen::VectorXcd steering_vector(double theta, int m);

/// Channel covariance R = sum_p |alpha_p|^2 a(theta_p) a(theta_p)^H.
Covariance covariance(const PathSet& paths, int m);

/// One fading-block realization h = sum_p |alpha_p| e^{j phi_p} a(theta_p)
/// with phi_p i.i.d. uniform on [0, 2pi). E{h h^H} equals covariance(paths).
ChannelRealization realize_channel(const PathSet& paths, int m, Rng& rng);

/// Plain-text drop file: section headers BS / MS / SCATTERER, one
/// "x y" pair per line. Round-trips exactly (17 significant digits).
void write_drop_file(const Environment& env, std::ostream& os);
Environment read_drop_file(std::istream& is);

}  // namespace beamtrain

#endif  // BEAMTRAIN_ENV_HPP
