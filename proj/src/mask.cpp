#include "mri/mask.hpp"

namespace mri {

SamplingMask make_equidistant_mask(int ncols, int accel, int acs_count,
                                   int lattice_offset) {
  if (ncols <= 0) throw Error("make_equidistant_mask: ncols must be positive");
  if (accel < 1) throw Error("make_equidistant_mask: acceleration must be >= 1");
  if (lattice_offset < 0 || lattice_offset >= accel)
    throw Error("make_equidistant_mask: lattice_offset must lie in [0, R)");
  if (acs_count < 0 || acs_count > ncols)
    throw Error("make_equidistant_mask: acs_count must lie in [0, ncols]");

  SamplingMask mask;
  mask.ncols = ncols;
  mask.accel = accel;
  mask.acs_count = acs_count;
  mask.lattice_offset = lattice_offset;
  mask.acs_start = acs_count > 0 ? (ncols - acs_count) / 2 : 0;
  mask.sampled.assign(static_cast<size_t>(ncols), 0);

  for (int c = lattice_offset; c < ncols; c += accel)
    mask.sampled[static_cast<size_t>(c)] = 1;
  for (int c = mask.acs_start; c < mask.acs_start + acs_count; ++c)
    mask.sampled[static_cast<size_t>(c)] = 1;
  return mask;
}

KSpaceTensor apply_mask(const KSpaceTensor& full, const SamplingMask& mask) {
  if (mask.ncols != full.ncols)
    throw Error("apply_mask: mask has " + std::to_string(mask.ncols) +
                " columns, k-space has " + std::to_string(full.ncols));
  KSpaceTensor out(full.ncoils, full.nrows, full.ncols);
#pragma omp parallel for schedule(static)
  for (long long coil = 0; coil < full.ncoils; ++coil) {
    for (int r = 0; r < full.nrows; ++r) {
      const size_t row = full.index(static_cast<int>(coil), r, 0);
      for (int c = 0; c < full.ncols; ++c)
        out.data[row + c] = mask.sampled[static_cast<size_t>(c)]
                                ? full.data[row + c]
                                : cplx(0.0, 0.0);
    }
  }
  return out;
}

double sampled_fraction(const SamplingMask& mask) {
  if (mask.ncols <= 0) throw Error("sampled_fraction: empty mask");
  return static_cast<double>(mask.num_sampled()) / mask.ncols;
}

}  // namespace mri
