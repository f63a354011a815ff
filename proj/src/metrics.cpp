#include "mri/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mri {

namespace {

constexpr int kWindow = 7;

double max_value(const Image& img) {
  double m = 0.0;
  for (double x : img.v) m = std::max(m, x);
  return m;
}

}  // namespace

double psnr(const Image& recon, const Image& ref) {
  if (!recon.same_shape(ref))
    throw Error("psnr: image dimensions differ");
  const double L = max_value(ref);
  if (L == 0.0) throw Error("psnr: reference image is all-zero");

  // per-row partial sums, combined in row order: result is independent of
  // the thread count
  std::vector<double> row_sq(static_cast<size_t>(recon.nrows), 0.0);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < recon.nrows; ++r) {
    double acc = 0.0;
    const size_t base = static_cast<size_t>(r) * recon.ncols;
    for (int c = 0; c < recon.ncols; ++c) {
      const double d = recon.v[base + c] - ref.v[base + c];
      acc += d * d;
    }
    row_sq[static_cast<size_t>(r)] = acc;
  }
  double sq = 0.0;
  for (double s : row_sq) sq += s;
  const double mse = sq / (static_cast<double>(recon.nrows) * recon.ncols);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(L * L / mse);
}

double ssim(const Image& recon, const Image& ref,
            std::optional<double> data_range) {
  if (!recon.same_shape(ref))
    throw Error("ssim: image dimensions differ");
  if (recon.nrows < kWindow || recon.ncols < kWindow)
    throw Error("ssim: image smaller than the 7x7 window");

  const double L = data_range ? *data_range : max_value(ref);
  const double c1 = (0.01 * L) * (0.01 * L);
  const double c2 = (0.03 * L) * (0.03 * L);
  const int wrows = recon.nrows - kWindow + 1;
  const int wcols = recon.ncols - kWindow + 1;
  const double inv_n = 1.0 / (kWindow * kWindow);

  std::vector<double> row_sums(static_cast<size_t>(wrows), 0.0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < wrows; ++i) {
    double acc = 0.0;
    for (int j = 0; j < wcols; ++j) {
      double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
      for (int r = 0; r < kWindow; ++r) {
        const size_t base = (static_cast<size_t>(i) + r) * recon.ncols + j;
        for (int c = 0; c < kWindow; ++c) {
          const double x = recon.v[base + c];
          const double y = ref.v[base + c];
          sx += x;
          sy += y;
          sxx += x * x;
          syy += y * y;
          sxy += x * y;
        }
      }
      const double mx = sx * inv_n, my = sy * inv_n;
      const double vx = sxx * inv_n - mx * mx;
      const double vy = syy * inv_n - my * my;
      const double cxy = sxy * inv_n - mx * my;
      const double num = (2.0 * mx * my + c1) * (2.0 * cxy + c2);
      const double den = (mx * mx + my * my + c1) * (vx + vy + c2);
      // den vanishes only for L == 0 with zero-moment windows
      acc += den == 0.0 ? (num == 0.0 ? 1.0 : 0.0) : num / den;
    }
    row_sums[static_cast<size_t>(i)] = acc;
  }
  double total = 0.0;
  for (double s : row_sums) total += s;
  return total / (static_cast<double>(wrows) * wcols);
}

}  // namespace mri
