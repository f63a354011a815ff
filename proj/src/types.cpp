#include "mri/types.hpp"

#include <cmath>

namespace mri {

void KSpaceTensor::require_finite(const char* who) const {
  for (const cplx& z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(std::string(who) + ": non-finite k-space sample");
  }
}

int SamplingMask::num_sampled() const {
  int n = 0;
  for (std::uint8_t s : sampled) n += s != 0;
  return n;
}

Image rss_combine(const CoilImages& coil_images) {
  const int nc = coil_images.ncoils, nr = coil_images.nrows, ncol = coil_images.ncols;
  if (nc <= 0 || nr <= 0 || ncol <= 0)
    throw Error("rss_combine: empty coil image stack");
  Image out(nr, ncol);
  const size_t plane = static_cast<size_t>(nr) * ncol;
  // parallel over pixels; per-pixel coil sum stays in coil order so the
  // result does not depend on the thread count
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(plane); ++p) {
    double acc = 0.0;
    for (int coil = 0; coil < nc; ++coil) {
      const cplx z = coil_images.data[static_cast<size_t>(coil) * plane + p];
      acc += z.real() * z.real() + z.imag() * z.imag();
    }
    out.v[static_cast<size_t>(p)] = std::sqrt(acc);
  }
  return out;
}

namespace {

template <typename Img>
Img crop_center_impl(const Img& img, int out_rows, int out_cols) {
  if (out_rows <= 0 || out_cols <= 0)
    throw Error("crop_center: requested size must be positive");
  if (out_rows > img.nrows || out_cols > img.ncols)
    throw Error("crop_center: requested size exceeds input");
  const int r0 = (img.nrows - out_rows) / 2;
  const int c0 = (img.ncols - out_cols) / 2;
  Img out(out_rows, out_cols);
  for (int r = 0; r < out_rows; ++r)
    for (int c = 0; c < out_cols; ++c)
      out.at(r, c) = img.at(r0 + r, c0 + c);
  return out;
}

}  // namespace

Image crop_center(const Image& img, int out_rows, int out_cols) {
  return crop_center_impl(img, out_rows, out_cols);
}

ComplexImage crop_center(const ComplexImage& img, int out_rows, int out_cols) {
  return crop_center_impl(img, out_rows, out_cols);
}

}  // namespace mri
