#include "mri/grappa.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "mri/fft.hpp"

namespace mri {

namespace {

using EMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<const EMatrix>;

void check_geometry(const KernelGeometry& geom) {
  if (geom.nx <= 0 || geom.nx % 2 == 0)
    throw Error("grappa: nx must be odd and positive");
  if (geom.ny != 2)
    throw Error("grappa: ny must be 2 (bracketing acquired lines)");
  if (geom.accel < 2)
    throw Error("grappa: acceleration must be >= 2");
}

void check_mask_geometry(const KSpaceTensor& kspace, const SamplingMask& mask,
                         const KernelGeometry& geom) {
  if (mask.ncols != kspace.ncols)
    throw Error("grappa: mask/k-space column mismatch");
  if (geom.accel != mask.accel)
    throw Error("grappa: kernel geometry acceleration (" +
                std::to_string(geom.accel) + ") does not match the mask (" +
                std::to_string(mask.accel) + ")");
}

// Target columns for offset delta: inside the ACS with both source columns,
// and congruent to the missing lattice pattern.
std::vector<int> calibration_target_columns(const SamplingMask& mask,
                                            int delta) {
  const int R = mask.accel;
  std::vector<int> cols;
  const int lo = mask.acs_start + delta;
  const int hi = mask.acs_start + mask.acs_count - 1 - (R - delta);
  for (int c = lo; c <= hi; ++c) {
    int rem = (c - mask.lattice_offset) % R;
    if (rem < 0) rem += R;
    if (rem == delta) cols.push_back(c);
  }
  return cols;
}

}  // namespace

CalibSystem build_calibration_system(const KSpaceTensor& kspace,
                                     const SamplingMask& mask,
                                     const KernelGeometry& geom, int delta) {
  check_geometry(geom);
  check_mask_geometry(kspace, mask, geom);
  const int R = geom.accel;
  if (delta < 1 || delta >= R)
    throw Error("grappa: missing offset must lie in [1, R)");
  if (mask.acs_count <= 0)
    throw Error("grappa: calibration requires an ACS block (acs_count >= " +
                std::to_string(2 * R) + " guarantees every missing offset)");
  const int rh = (geom.nx - 1) / 2;
  if (kspace.nrows < geom.nx)
    throw Error("grappa: ACS height " + std::to_string(kspace.nrows) +
                " is smaller than the " + std::to_string(geom.nx) +
                " readout taps");

  const std::vector<int> cols = calibration_target_columns(mask, delta);
  if (cols.empty())
    throw Error(
        "grappa: ACS block too small for calibration at offset " +
        std::to_string(delta) + " (start " + std::to_string(mask.acs_start) +
        ", count " + std::to_string(mask.acs_count) + "): need acs_count >= " +
        std::to_string(2 * R) + " to cover every missing offset");

  const int nrows_valid = kspace.nrows - 2 * rh;
  const int ncoils = kspace.ncoils;
  const int nsrc = ncoils * geom.nx * geom.ny;
  CalibSystem sys;
  sys.sources = CMatrix(nrows_valid * static_cast<int>(cols.size()), nsrc);
  sys.targets = CMatrix(sys.sources.rows, ncoils);

#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nrows_valid; ++i) {
    const int r = static_cast<int>(i) + rh;
    for (size_t j = 0; j < cols.size(); ++j) {
      const int c = cols[j];
      const int row = static_cast<int>(i) * static_cast<int>(cols.size()) +
                      static_cast<int>(j);
      const int src_col[2] = {c - delta, c + R - delta};
      int s = 0;
      for (int coil = 0; coil < ncoils; ++coil) {
        for (int p = 0; p < 2; ++p)
          for (int x = 0; x < geom.nx; ++x)
            sys.sources.at(row, s++) = kspace.at(coil, r - rh + x, src_col[p]);
        sys.targets.at(row, coil) = kspace.at(coil, r, c);
      }
    }
  }
  return sys;
}

CMatrix solve_weights(const CMatrix& S, const CMatrix& T, double lambda) {
  if (S.rows <= 0 || S.cols <= 0)
    throw Error("grappa: empty calibration system");
  if (T.rows != S.rows)
    throw Error("grappa: source/target row mismatch");
  if (lambda < 0.0) throw Error("grappa: lambda must be >= 0");
  for (const cplx& z : S.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error("grappa: non-finite calibration source");
  for (const cplx& z : T.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error("grappa: non-finite calibration target");

  EMap s(S.a.data(), S.rows, S.cols);
  EMap t(T.a.data(), T.rows, T.cols);
  EMatrix w;
  if (lambda == 0.0) {
    w = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>(s)
            .completeOrthogonalDecomposition()
            .solve(Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>(t));
  } else {
    const double lambda_eff = lambda * s.squaredNorm() / S.cols;
    EMatrix gram = s.adjoint() * s;
    gram.diagonal().array() += lambda_eff;
    w = gram.ldlt().solve(EMatrix(s.adjoint() * t));
  }

  CMatrix out(S.cols, T.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) = w(i, j);
  return out;
}

GrappaWeights calibrate_weights(const KSpaceTensor& under,
                                const SamplingMask& mask,
                                const KernelGeometry& geom, double lambda) {
  check_geometry(geom);
  check_mask_geometry(under, mask, geom);
  GrappaWeights weights;
  weights.geom = geom;
  weights.ncoils = under.ncoils;
  weights.lambda = lambda;
  weights.per_delta.resize(static_cast<size_t>(geom.accel) - 1);
  for (int delta = 1; delta < geom.accel; ++delta) {
    CalibSystem sys = build_calibration_system(under, mask, geom, delta);
    weights.per_delta[static_cast<size_t>(delta) - 1] =
        solve_weights(sys.sources, sys.targets, lambda);
  }
  return weights;
}

KSpaceTensor grappa_reconstruct_kspace(const KSpaceTensor& under,
                                       const SamplingMask& mask,
                                       const KernelGeometry& geom,
                                       double lambda) {
  const GrappaWeights weights = calibrate_weights(under, mask, geom, lambda);
  const int R = geom.accel;
  const int rh = (geom.nx - 1) / 2;
  const int ncoils = under.ncoils;

  std::vector<int> missing_cols;
  for (int c = 0; c < mask.ncols; ++c)
    if (!mask.is_sampled(c)) missing_cols.push_back(c);

  KSpaceTensor out = under;  // acquired samples pass through bit-identical
#pragma omp parallel for schedule(static) collapse(2)
  for (long long r = 0; r < under.nrows; ++r) {
    for (long long j = 0; j < static_cast<long long>(missing_cols.size()); ++j) {
      const int c = missing_cols[static_cast<size_t>(j)];
      int delta = (c - mask.lattice_offset) % R;
      if (delta < 0) delta += R;
      const CMatrix& w = weights.per_delta[static_cast<size_t>(delta) - 1];
      const int src_col[2] = {c - delta, c + R - delta};
      for (int t = 0; t < ncoils; ++t) {
        cplx acc(0.0, 0.0);
        int s = 0;
        for (int coil = 0; coil < ncoils; ++coil) {
          for (int p = 0; p < 2; ++p) {
            const int sc = src_col[p];
            for (int x = 0; x < geom.nx; ++x, ++s) {
              const int sr = static_cast<int>(r) - rh + x;
              if (sc < 0 || sc >= under.ncols || sr < 0 || sr >= under.nrows)
                continue;  // zero extension beyond the grid
              acc += w.at(s, t) * under.at(coil, sr, sc);
            }
          }
        }
        out.at(t, static_cast<int>(r), c) = acc;
      }
    }
  }
  return out;
}

Image grappa_reconstruct_image(const KSpaceTensor& under,
                               const SamplingMask& mask,
                               const KernelGeometry& geom, double lambda) {
  return rss_combine(ifft2c(grappa_reconstruct_kspace(under, mask, geom, lambda)));
}

}  // namespace mri
