#ifndef MRI_GRAPPA_HPP
#define MRI_GRAPPA_HPP

#include "mri/types.hpp"

namespace mri {

/// Dense row-major complex matrix used for calibration systems and weights.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  cplx& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// GRAPPA kernel geometry: nx readout taps (odd), ny = 2 phase taps — the
/// two acquired lattice columns bracketing the missing column.
struct KernelGeometry {
  int nx = 5;
  int ny = 2;
  int accel = 2;
};

/// Fitted interpolation kernels: one weight vector of length ncoils*nx*ny
/// per missing offset delta in {1..R-1} per target coil.
struct GrappaWeights {
  KernelGeometry geom;
  int ncoils = 0;
  double lambda = 0.0;
  std::vector<CMatrix> per_delta;  // [delta-1]: (ncoils*nx*ny) x ncoils
};

struct CalibSystem {
  CMatrix sources;  // S: one row per sliding position
  CMatrix targets;  // T: matching ncoils target samples
};

/// Collects training pairs from the ACS block for missing offset delta.
/// Sliding positions are target columns congruent to the missing pattern
/// (c - lattice_offset == delta mod R) whose source columns -delta and
/// R-delta relative to the target and all nx readout taps stay inside the
/// ACS/grid. Row order: raster over (target row, target column); column
/// order within a row: coil-major, then phase tap, then readout tap.
CalibSystem build_calibration_system(const KSpaceTensor& kspace,
                                     const SamplingMask& mask,
                                     const KernelGeometry& geom, int delta);

/// Solves min ||S w - T|| with Tikhonov weight lambda, made dimensionless as
/// lambda_eff = lambda * trace(S^H S) / ncols(S). lambda == 0 uses a
/// rank-revealing least-squares solve (minimum-norm on singular systems).
/// Returns one weight column per target coil.
CMatrix solve_weights(const CMatrix& S, const CMatrix& T, double lambda);

/// Calibrates every missing offset from the ACS.
GrappaWeights calibrate_weights(const KSpaceTensor& under,
                                const SamplingMask& mask,
                                const KernelGeometry& geom, double lambda);

/// Fills every missing sample as the weighted combination of the bracketing
/// acquired lattice columns across all coils; acquired samples pass through
/// bit-identical; out-of-grid sources contribute zero.
KSpaceTensor grappa_reconstruct_kspace(const KSpaceTensor& under,
                                       const SamplingMask& mask,
                                       const KernelGeometry& geom,
                                       double lambda);

/// grappa_reconstruct_kspace -> ifft2c -> rss_combine.
Image grappa_reconstruct_image(const KSpaceTensor& under,
                               const SamplingMask& mask,
                               const KernelGeometry& geom, double lambda);

}  // namespace mri

#endif  // MRI_GRAPPA_HPP
