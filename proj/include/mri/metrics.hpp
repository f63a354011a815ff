#ifndef MRI_METRICS_HPP
#define MRI_METRICS_HPP

#include <optional>

#include "mri/types.hpp"

namespace mri {

/// Peak signal-to-noise ratio in dB with data range L = max(ref).
/// Returns +infinity when recon equals ref exactly.
double psnr(const Image& recon, const Image& ref);

/// Mean structural similarity over all valid 7x7 uniform windows (stride 1,
/// population moments). Data range L = max(ref) unless supplied explicitly.
double ssim(const Image& recon, const Image& ref,
            std::optional<double> data_range = std::nullopt);

}  // namespace mri

#endif  // MRI_METRICS_HPP
