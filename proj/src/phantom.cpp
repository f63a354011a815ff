#include "mri/phantom.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mri/fft.hpp"

namespace mri {

namespace {

struct Ellipse {
  double x0, y0, a, b, theta_deg, intensity;
};

// Canonical Shepp-Logan table: centers, semi-axes, rotation, additive
// intensity, on the [-1,1]^2 square with y pointing up.
constexpr Ellipse kSheppLogan[10] = {
    {0.0, 0.0, 0.69, 0.92, 0.0, 2.0},
    {0.0, -0.0184, 0.6624, 0.874, 0.0, -0.98},
    {0.22, 0.0, 0.11, 0.31, -18.0, -0.02},
    {-0.22, 0.0, 0.16, 0.41, 18.0, -0.02},
    {0.0, 0.35, 0.21, 0.25, 0.0, 0.01},
    {0.0, 0.1, 0.046, 0.046, 0.0, 0.01},
    {0.0, -0.1, 0.046, 0.046, 0.0, 0.01},
    {-0.08, -0.605, 0.046, 0.023, 0.0, 0.01},
    {0.0, -0.606, 0.023, 0.023, 0.0, 0.01},
    {0.06, -0.605, 0.023, 0.046, 0.0, 0.01},
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent per-coil streams: decomposing work across coils cannot change
// the draws.
std::uint64_t coil_seed(std::uint64_t seed, std::uint64_t stream, int coil) {
  return splitmix64(seed ^ (stream * 0xD1B54A32D192ED03ULL) ^
                    static_cast<std::uint64_t>(coil));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Image shepp_logan(int nrows, int ncols) {
  if (nrows < 16 || ncols < 16)
    throw Error("shepp_logan: grid must be at least 16x16");
  Image img(nrows, ncols);
  constexpr double deg = std::numbers::pi / 180.0;
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < nrows; ++r) {
    const double y = 1.0 - 2.0 * (static_cast<double>(r) + 0.5) / nrows;
    for (int c = 0; c < ncols; ++c) {
      const double x = -1.0 + 2.0 * (static_cast<double>(c) + 0.5) / ncols;
      double val = 0.0;
      for (const Ellipse& e : kSheppLogan) {
        const double ct = std::cos(e.theta_deg * deg);
        const double st = std::sin(e.theta_deg * deg);
        const double dx = x - e.x0, dy = y - e.y0;
        const double u = dx * ct + dy * st;
        const double w = -dx * st + dy * ct;
        if ((u / e.a) * (u / e.a) + (w / e.b) * (w / e.b) <= 1.0)
          val += e.intensity;
      }
      img.at(static_cast<int>(r), c) = val < 0.0 ? 0.0 : val;
    }
  }
  double m = 0.0;
  for (double v : img.v) m = std::max(m, v);
  if (m > 0.0)
    for (double& v : img.v) v /= m;
  return img;
}

CoilSimulation simulate_coils(const Image& img, int ncoils, std::uint64_t seed) {
  if (ncoils < 1) throw Error("simulate_coils: ncoils must be >= 1");
  const int nr = img.nrows, nc = img.ncols;
  const double mindim = static_cast<double>(std::min(nr, nc));
  const double radius = 0.45 * mindim;
  const double width = 0.5 * mindim;
  const double cr = (nr - 1) / 2.0, cc = (nc - 1) / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  // phase-ramp parameters, one independent stream per coil
  std::vector<double> ramp_r(ncoils), ramp_c(ncoils), phase0(ncoils);
  for (int k = 0; k < ncoils; ++k) {
    std::mt19937_64 rng(coil_seed(seed, 1, k));
    ramp_r[k] = -1.5 + 3.0 * uniform01(rng);
    ramp_c[k] = -1.5 + 3.0 * uniform01(rng);
    phase0[k] = two_pi * uniform01(rng);
  }

  CoilImages raw(ncoils, nr, nc);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < ncoils; ++k) {
    const double ang = two_pi * static_cast<double>(k) / ncoils;
    const double kr = cr + radius * std::sin(ang);
    const double kc = cc + radius * std::cos(ang);
    for (int r = 0; r < nr; ++r) {
      for (int c = 0; c < nc; ++c) {
        const double dr = r - kr, dc = c - kc;
        const double mag = std::exp(-(dr * dr + dc * dc) / (2.0 * width * width));
        const double ph = two_pi * (ramp_r[k] * r / nr + ramp_c[k] * c / nc) +
                          phase0[k];
        raw.at(static_cast<int>(k), r, c) = std::polar(mag, ph);
      }
    }
  }

  // RSS-normalize; the Gaussian lobes are strictly positive so the RSS never
  // vanishes
  CoilImages maps(ncoils, nr, nc);
  const size_t plane = static_cast<size_t>(nr) * nc;
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(plane); ++p) {
    double ss = 0.0;
    for (int k = 0; k < ncoils; ++k) {
      const cplx z = raw.data[static_cast<size_t>(k) * plane + p];
      ss += z.real() * z.real() + z.imag() * z.imag();
    }
    const double rss = std::sqrt(ss);
    for (int k = 0; k < ncoils; ++k)
      maps.data[static_cast<size_t>(k) * plane + p] =
          raw.data[static_cast<size_t>(k) * plane + p] / rss;
  }

  CoilImages weighted(ncoils, nr, nc);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < ncoils; ++k)
    for (size_t p = 0; p < plane; ++p)
      weighted.data[static_cast<size_t>(k) * plane + p] =
          maps.data[static_cast<size_t>(k) * plane + p] * img.v[p];

  CoilSimulation sim;
  sim.kspace = fft2c(weighted);
  sim.maps = SensitivityMaps{std::move(maps), 0.0};
  return sim;
}

KSpaceTensor add_noise(const KSpaceTensor& kspace, double sigma,
                       std::uint64_t seed) {
  if (sigma < 0.0) throw Error("add_noise: sigma must be >= 0");
  if (sigma == 0.0) return kspace;
  KSpaceTensor out = kspace;
  const size_t plane = static_cast<size_t>(kspace.nrows) * kspace.ncols;
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < kspace.ncoils; ++k) {
    std::mt19937_64 rng(coil_seed(seed, 2, static_cast<int>(k)));
    cplx* p = out.data.data() + static_cast<size_t>(k) * plane;
    for (size_t i = 0; i < plane; ++i) {
      // Box-Muller; u1 in (0,1] so the log stays finite
      const double u1 = 1.0 - uniform01(rng);
      const double u2 = uniform01(rng);
      const double rad = sigma * std::sqrt(-2.0 * std::log(u1));
      const double ang = 2.0 * std::numbers::pi * u2;
      p[i] += cplx(rad * std::cos(ang), rad * std::sin(ang));
    }
  }
  return out;
}

}  // namespace mri
