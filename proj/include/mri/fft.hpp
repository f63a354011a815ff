#ifndef MRI_FFT_HPP
#define MRI_FFT_HPP

#include "mri/types.hpp"

namespace mri {

// Centered orthonormal 2D transforms. DC sits at (floor(nrows/2),
// floor(ncols/2)) in both domains; scaling is 1/sqrt(nrows*ncols), so the
// operators are unitary and exact inverses of each other.

/// k-space -> per-coil complex images.
CoilImages ifft2c(const KSpaceTensor& kspace);

/// Per-coil complex images -> k-space.
KSpaceTensor fft2c(const CoilImages& images);

/// Single-plane variants.
ComplexImage ifft2c(const ComplexImage& kspace_plane);
ComplexImage fft2c(const ComplexImage& image_plane);

}  // namespace mri

#endif  // MRI_FFT_HPP
