#ifndef MRI_PDHG_HPP
#define MRI_PDHG_HPP

#include <optional>

#include "mri/types.hpp"

namespace mri {

/// Per-coil complex sensitivity estimates on the image grid.
/// RSS-normalization keeps sum_c |s_c|^2 <= 1 at every pixel, so the forward
/// operator M*F*S has spectral norm <= 1.
struct SensitivityMaps {
  CoilImages maps;
  double eps = 0.0;  // regularizer used in the normalization denominator
};

struct PdhgConfig {
  int n_iters = 25;
  std::optional<double> alpha;  // sparsity weight; empty -> 1e-3 * max|A^H y|
  double tau = 1.0;
  double sigma = 1.0;
  double theta = 1.0;
  int levels = 3;
  double support_threshold = 0.01;  // RSS fraction defining the map support
};

/// Classical low-resolution estimation: Hann window across the ACS block,
/// inverse FFT, divide by the RSS magnitude. Requires acs_count >= 4.
SensitivityMaps estimate_sensitivities(const KSpaceTensor& under,
                                       const SamplingMask& mask);

/// Measurement model A = M * F * S and its adjoint.
KSpaceTensor forward_op(const ComplexImage& x, const SensitivityMaps& maps,
                        const SamplingMask& mask);
ComplexImage adjoint_op(const KSpaceTensor& y, const SensitivityMaps& maps,
                        const SamplingMask& mask);

struct PdhgRun {
  Image image;       // |x| after the final iteration
  ComplexImage x;    // final complex iterate
  double alpha = 0.0;
  double objective_init = 0.0;
  double objective_final = 0.0;
  double residual_init = 0.0;
  double residual_final = 0.0;
  int padded_rows = 0;  // wavelet working size (equal to the image size when
  int padded_cols = 0;  // no padding was needed)
};

/// Primal-dual hybrid gradient for 0.5*||A x - y||^2 + alpha*||W x||_1 with
/// W an orthonormal Haar transform (zero-padded to a 2^levels multiple).
/// x0 = A^H y, z0 = 0; n_iters iterations; deterministic.
PdhgRun pdhg_run(const KSpaceTensor& under, const SamplingMask& mask,
                 const PdhgConfig& config);

Image pdhg_reconstruct(const KSpaceTensor& under, const SamplingMask& mask,
                       const PdhgConfig& config);

}  // namespace mri

#endif  // MRI_PDHG_HPP
