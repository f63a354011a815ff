#include "mri/pdhg.hpp"

#include <cmath>
#include <numbers>

#include "mri/fft.hpp"
#include "mri/mask.hpp"
#include "mri/wavelet.hpp"

namespace mri {

namespace {

void check_mask(const SamplingMask& mask, int ncols, const char* who) {
  if (mask.ncols != ncols)
    throw Error(std::string(who) + ": mask/k-space column mismatch");
}

double norm2(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += z.real() * z.real() + z.imag() * z.imag();
  return std::sqrt(acc);
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

struct PadSpec {
  int rows = 0, cols = 0;    // padded size
  int row0 = 0, col0 = 0;    // placement of the original image
};

PadSpec pad_for_levels(int nrows, int ncols, int levels) {
  const int block = 1 << levels;
  PadSpec p;
  p.rows = (nrows + block - 1) / block * block;
  p.cols = (ncols + block - 1) / block * block;
  p.row0 = (p.rows - nrows) / 2;
  p.col0 = (p.cols - ncols) / 2;
  return p;
}

ComplexImage pad_image(const ComplexImage& x, const PadSpec& p) {
  if (p.rows == x.nrows && p.cols == x.ncols) return x;
  ComplexImage out(p.rows, p.cols);
  for (int r = 0; r < x.nrows; ++r)
    for (int c = 0; c < x.ncols; ++c)
      out.at(p.row0 + r, p.col0 + c) = x.at(r, c);
  return out;
}

ComplexImage unpad_image(const ComplexImage& x, int nrows, int ncols,
                         const PadSpec& p) {
  if (p.rows == nrows && p.cols == ncols) return x;
  ComplexImage out(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c)
      out.at(r, c) = x.at(p.row0 + r, p.col0 + c);
  return out;
}

double l1_norm(const ComplexImage& x) {
  double acc = 0.0;
  for (const cplx& z : x.v) acc += std::abs(z);
  return acc;
}

}  // namespace

SensitivityMaps estimate_sensitivities(const KSpaceTensor& under,
                                       const SamplingMask& mask) {
  check_mask(mask, under.ncols, "estimate_sensitivities");
  if (mask.acs_count < 4)
    throw Error("estimate_sensitivities: need an ACS block of at least 4 "
                "columns, got " + std::to_string(mask.acs_count));

  // Hann window across the ACS extent, zero elsewhere
  KSpaceTensor windowed(under.ncoils, under.nrows, under.ncols);
  const int K = mask.acs_count;
  std::vector<double> win(static_cast<size_t>(K), 1.0);
  for (int j = 0; j < K; ++j)
    win[static_cast<size_t>(j)] =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * j / (K - 1));
#pragma omp parallel for schedule(static)
  for (long long coil = 0; coil < under.ncoils; ++coil)
    for (int r = 0; r < under.nrows; ++r)
      for (int j = 0; j < K; ++j) {
        const int c = mask.acs_start + j;
        windowed.at(static_cast<int>(coil), r, c) =
            under.at(static_cast<int>(coil), r, c) * win[static_cast<size_t>(j)];
      }

  CoilImages low = ifft2c(windowed);
  Image rss = rss_combine(low);
  double rss_max = 0.0;
  for (double v : rss.v) rss_max = std::max(rss_max, v);

  SensitivityMaps out;
  out.maps = CoilImages(under.ncoils, under.nrows, under.ncols);
  if (rss_max == 0.0) return out;  // degenerate all-zero ACS: zero maps

  out.eps = 1e-12 * rss_max;
  const size_t plane = static_cast<size_t>(under.nrows) * under.ncols;
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(plane); ++p) {
    const double denom = rss.v[static_cast<size_t>(p)] + out.eps;
    for (int coil = 0; coil < under.ncoils; ++coil)
      out.maps.data[static_cast<size_t>(coil) * plane + p] =
          low.data[static_cast<size_t>(coil) * plane + p] / denom;
  }
  return out;
}

KSpaceTensor forward_op(const ComplexImage& x, const SensitivityMaps& maps,
                        const SamplingMask& mask) {
  if (x.nrows != maps.maps.nrows || x.ncols != maps.maps.ncols)
    throw Error("forward_op: image/map shape mismatch");
  check_mask(mask, x.ncols, "forward_op");
  CoilImages weighted(maps.maps.ncoils, x.nrows, x.ncols);
  const size_t plane = static_cast<size_t>(x.nrows) * x.ncols;
#pragma omp parallel for schedule(static)
  for (long long coil = 0; coil < maps.maps.ncoils; ++coil)
    for (size_t p = 0; p < plane; ++p)
      weighted.data[static_cast<size_t>(coil) * plane + p] =
          maps.maps.data[static_cast<size_t>(coil) * plane + p] * x.v[p];
  return apply_mask(fft2c(weighted), mask);
}

ComplexImage adjoint_op(const KSpaceTensor& y, const SensitivityMaps& maps,
                        const SamplingMask& mask) {
  if (y.nrows != maps.maps.nrows || y.ncols != maps.maps.ncols ||
      y.ncoils != maps.maps.ncoils)
    throw Error("adjoint_op: k-space/map shape mismatch");
  check_mask(mask, y.ncols, "adjoint_op");
  CoilImages imgs = ifft2c(apply_mask(y, mask));
  ComplexImage out(y.nrows, y.ncols);
  const size_t plane = static_cast<size_t>(y.nrows) * y.ncols;
  // coil sum runs in fixed coil order per pixel
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(plane); ++p) {
    cplx acc(0.0, 0.0);
    for (int coil = 0; coil < y.ncoils; ++coil)
      acc += std::conj(maps.maps.data[static_cast<size_t>(coil) * plane + p]) *
             imgs.data[static_cast<size_t>(coil) * plane + p];
    out.v[static_cast<size_t>(p)] = acc;
  }
  return out;
}

PdhgRun pdhg_run(const KSpaceTensor& under, const SamplingMask& mask,
                 const PdhgConfig& config) {
  if (config.n_iters < 0) throw Error("pdhg: n_iters must be >= 0");
  if (config.tau <= 0.0 || config.sigma <= 0.0)
    throw Error("pdhg: step sizes must be positive");
  if (config.tau * config.sigma > 1.0 + 1e-12)
    throw Error("pdhg: step sizes violate tau*sigma <= 1 (operator norm bound)");
  if (config.alpha && *config.alpha < 0.0)
    throw Error("pdhg: alpha must be >= 0");

  const SensitivityMaps maps = estimate_sensitivities(under, mask);
  const KSpaceTensor y = apply_mask(under, mask);
  const PadSpec pad = pad_for_levels(under.nrows, under.ncols, config.levels);

  ComplexImage x = adjoint_op(y, maps, mask);
  const double alpha = config.alpha ? *config.alpha : 1e-3 * max_abs(x.v);

  auto prox_sparsity = [&](const ComplexImage& v, double t) {
    if (t == 0.0) return v;
    ComplexImage coeffs = haar_dwt(pad_image(v, pad), config.levels);
    coeffs = soft_threshold(coeffs, t);
    return unpad_image(haar_idwt(coeffs, config.levels), v.nrows, v.ncols, pad);
  };
  auto objective = [&](const ComplexImage& v, double* resid_out) {
    KSpaceTensor av = forward_op(v, maps, mask);
    for (size_t i = 0; i < av.data.size(); ++i) av.data[i] -= y.data[i];
    const double resid = norm2(av.data);
    if (resid_out) *resid_out = resid;
    double l1 = 0.0;
    if (alpha > 0.0)
      l1 = l1_norm(haar_dwt(pad_image(v, pad), config.levels));
    return 0.5 * resid * resid + alpha * l1;
  };

  PdhgRun run;
  run.alpha = alpha;
  run.padded_rows = pad.rows;
  run.padded_cols = pad.cols;
  run.objective_init = objective(x, &run.residual_init);

  ComplexImage xbar = x;
  KSpaceTensor z(under.ncoils, under.nrows, under.ncols);  // zeros
  const double tau = config.tau, sigma = config.sigma, theta = config.theta;

  for (int it = 0; it < config.n_iters; ++it) {
    // dual: z <- (z + sigma*(A xbar - y)) / (1 + sigma)
    KSpaceTensor ax = forward_op(xbar, maps, mask);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(z.data.size()); ++i) {
      const size_t k = static_cast<size_t>(i);
      z.data[k] = (z.data[k] + sigma * (ax.data[k] - y.data[k])) / (1.0 + sigma);
    }
    // primal: x <- prox(x - tau * A^H z)
    ComplexImage grad = adjoint_op(z, maps, mask);
    ComplexImage v(x.nrows, x.ncols);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(v.v.size()); ++i)
      v.v[static_cast<size_t>(i)] =
          x.v[static_cast<size_t>(i)] - tau * grad.v[static_cast<size_t>(i)];
    ComplexImage x_next = prox_sparsity(v, tau * alpha);
    // extrapolate
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(x.v.size()); ++i) {
      const size_t k = static_cast<size_t>(i);
      xbar.v[k] = x_next.v[k] + theta * (x_next.v[k] - x.v[k]);
    }
    x = std::move(x_next);
  }

  run.objective_final = objective(x, &run.residual_final);
  run.x = x;
  run.image = Image(x.nrows, x.ncols);
  for (size_t i = 0; i < x.v.size(); ++i) run.image.v[i] = std::abs(x.v[i]);
  return run;
}

Image pdhg_reconstruct(const KSpaceTensor& under, const SamplingMask& mask,
                       const PdhgConfig& config) {
  return pdhg_run(under, mask, config).image;
}

}  // namespace mri
