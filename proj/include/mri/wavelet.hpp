#ifndef MRI_WAVELET_HPP
#define MRI_WAVELET_HPP

#include "mri/types.hpp"

namespace mri {

// Orthonormal 2D Haar transform, non-redundant, recursing on the LL band.
// Coefficients are stored in the usual quadrant layout inside a plane of the
// input size. Both dimensions must be divisible by 2^levels.

ComplexImage haar_dwt(const ComplexImage& x, int levels);
ComplexImage haar_idwt(const ComplexImage& coeffs, int levels);

/// Complex-safe magnitude shrinkage: v * max(|v| - t, 0) / |v|.
/// t == 0 returns the input unchanged.
ComplexImage soft_threshold(const ComplexImage& x, double t);

}  // namespace mri

#endif  // MRI_WAVELET_HPP
