#ifndef MRI_IO_HPP
#define MRI_IO_HPP

#include <string>
#include <vector>

#include "mri/types.hpp"

namespace mri {

// KspContainer: "KSPC" magic, version byte 1, ndims byte 3, two reserved
// zero bytes, then little-endian u64 dims (ncoils, nrows, ncols), then
// interleaved little-endian float32 (re, im) samples in C-order.
// File size is exactly 8 + 8*ndims + 8*prod(dims).
void write_ksp(const KSpaceTensor& kspace, const std::string& path);
KSpaceTensor read_ksp(const std::string& path);

// Magnitude images reuse the same container as a single-coil tensor with
// zero imaginary parts.
void write_image_ksp(const Image& img, const std::string& path);

// Binary PGM ("P5"), maxval 65535, big-endian samples, linear scaling
// 0..max(img) -> 0..65535 with round-half-up.
void write_image_pgm(const Image& img, const std::string& path);
Image read_image_pgm(const std::string& path);  // samples scaled to [0, 1]

/// Writes by extension: ".pgm" -> PGM, anything else -> single-coil container.
void write_image(const Image& img, const std::string& path);
/// Reads either format (sniffs the magic bytes).
Image read_image(const std::string& path);

// Mask document: canonical key-sorted text plus the explicit sampled-column
// list; the list is verified against the fields on load.
void write_mask(const SamplingMask& mask, const std::string& path);
SamplingMask read_mask(const std::string& path);
std::string render_mask(const SamplingMask& mask);

// Metrics report: human-readable text document plus a CSV variant with the
// fixed column order method,accel,acs,psnr_db,ssim,runtime_s. The CSV lands
// next to the text file with its extension replaced by ".csv".
std::string render_report(const std::vector<MetricsEntry>& entries);
std::string render_report_csv(const std::vector<MetricsEntry>& entries);
void write_report(const std::vector<MetricsEntry>& entries,
                  const std::string& path);

/// "%.6g" with a literal "inf" for the infinity sentinel.
std::string format_metric(double value);

}  // namespace mri

#endif  // MRI_IO_HPP
