#ifndef MRI_PHANTOM_HPP
#define MRI_PHANTOM_HPP

#include <cstdint>

#include "mri/pdhg.hpp"
#include "mri/types.hpp"

namespace mri {

/// Canonical 10-ellipse Shepp-Logan head phantom rasterized on the pixel
/// grid, clipped to >= 0 and normalized to max 1.
Image shepp_logan(int nrows, int ncols);

struct CoilSimulation {
  KSpaceTensor kspace;
  SensitivityMaps maps;  // RSS-normalized ground truth
};

/// Simulates a circular receive array: Gaussian-lobe magnitudes with
/// seed-determined linear phase ramps, RSS-normalized so the ground-truth
/// magnitude image is exactly recoverable; k-space is fft2c of each
/// coil-weighted image.
CoilSimulation simulate_coils(const Image& img, int ncoils, std::uint64_t seed);

/// Adds i.i.d. complex Gaussian noise, std sigma per real component, from a
/// seeded deterministic generator. sigma == 0 returns the input bit-identical.
KSpaceTensor add_noise(const KSpaceTensor& kspace, double sigma,
                       std::uint64_t seed);

}  // namespace mri

#endif  // MRI_PHANTOM_HPP
