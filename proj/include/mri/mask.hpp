#ifndef MRI_MASK_HPP
#define MRI_MASK_HPP

#include "mri/types.hpp"

namespace mri {

/// Equidistant Cartesian mask: columns with (c - lattice_offset) mod R == 0
/// plus a centered ACS block of acs_count columns starting at
/// floor((ncols - acs_count) / 2). Overlapping columns are counted once.
SamplingMask make_equidistant_mask(int ncols, int accel, int acs_count,
                                   int lattice_offset = 0);

/// Retrospective undersampling: acquired columns are copied bit-identically,
/// everything else is exactly zero.
KSpaceTensor apply_mask(const KSpaceTensor& full, const SamplingMask& mask);

/// |sampled| / ncols.
double sampled_fraction(const SamplingMask& mask);

}  // namespace mri

#endif  // MRI_MASK_HPP
