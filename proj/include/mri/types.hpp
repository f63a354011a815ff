#ifndef MRI_TYPES_HPP
#define MRI_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mri {

using cplx = std::complex<double>;

/// Data/format error raised by preconditions, file parsers, and dimension
/// checks. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Multi-coil Cartesian k-space grid. Dense C-order storage: coil slowest,
/// column fastest. Rows are the readout (fully sampled) axis, columns the
/// phase-encode (undersampled) axis.
struct KSpaceTensor {
  int ncoils = 0;
  int nrows = 0;
  int ncols = 0;
  std::vector<cplx> data;

  KSpaceTensor() = default;
  KSpaceTensor(int coils, int rows, int cols)
      : ncoils(coils), nrows(rows), ncols(cols),
        data(static_cast<size_t>(coils) * rows * cols) {
    if (coils <= 0 || rows <= 0 || cols <= 0)
      throw Error("KSpaceTensor: dimensions must be positive");
  }

  size_t size() const { return data.size(); }
  size_t index(int coil, int r, int c) const {
    return (static_cast<size_t>(coil) * nrows + r) * ncols + c;
  }
  cplx& at(int coil, int r, int c) { return data[index(coil, r, c)]; }
  const cplx& at(int coil, int r, int c) const { return data[index(coil, r, c)]; }

  bool same_shape(const KSpaceTensor& o) const {
    return ncoils == o.ncoils && nrows == o.nrows && ncols == o.ncols;
  }
  /// Throws if any sample is NaN/Inf.
  void require_finite(const char* who) const;
};

/// Real non-negative magnitude image.
struct Image {
  int nrows = 0;
  int ncols = 0;
  std::vector<double> v;

  Image() = default;
  Image(int rows, int cols)
      : nrows(rows), ncols(cols), v(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw Error("Image: dimensions must be positive");
  }

  size_t index(int r, int c) const { return static_cast<size_t>(r) * ncols + c; }
  double& at(int r, int c) { return v[index(r, c)]; }
  double at(int r, int c) const { return v[index(r, c)]; }
  bool same_shape(const Image& o) const { return nrows == o.nrows && ncols == o.ncols; }
};

/// Single complex-valued image plane (intermediate pipeline state; keeps
/// phase explicit instead of dropping it silently).
struct ComplexImage {
  int nrows = 0;
  int ncols = 0;
  std::vector<cplx> v;

  ComplexImage() = default;
  ComplexImage(int rows, int cols)
      : nrows(rows), ncols(cols), v(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw Error("ComplexImage: dimensions must be positive");
  }

  size_t index(int r, int c) const { return static_cast<size_t>(r) * ncols + c; }
  cplx& at(int r, int c) { return v[index(r, c)]; }
  const cplx& at(int r, int c) const { return v[index(r, c)]; }
  bool same_shape(const ComplexImage& o) const {
    return nrows == o.nrows && ncols == o.ncols;
  }
};

/// Per-coil complex image stack, same layout as KSpaceTensor (coil slowest).
struct CoilImages {
  int ncoils = 0;
  int nrows = 0;
  int ncols = 0;
  std::vector<cplx> data;

  CoilImages() = default;
  CoilImages(int coils, int rows, int cols)
      : ncoils(coils), nrows(rows), ncols(cols),
        data(static_cast<size_t>(coils) * rows * cols) {
    if (coils <= 0 || rows <= 0 || cols <= 0)
      throw Error("CoilImages: dimensions must be positive");
  }

  size_t index(int coil, int r, int c) const {
    return (static_cast<size_t>(coil) * nrows + r) * ncols + c;
  }
  cplx& at(int coil, int r, int c) { return data[index(coil, r, c)]; }
  const cplx& at(int coil, int r, int c) const { return data[index(coil, r, c)]; }
};

/// Per-column acquisition pattern: a periodic lattice of acquired
/// phase-encode columns plus a contiguous centered ACS block.
struct SamplingMask {
  int ncols = 0;
  int accel = 1;
  int acs_start = 0;
  int acs_count = 0;
  int lattice_offset = 0;
  std::vector<std::uint8_t> sampled;  // one flag per column

  bool is_sampled(int c) const { return sampled[static_cast<size_t>(c)] != 0; }
  int num_sampled() const;
};

/// One row of a metrics report: the quality numbers plus enough provenance
/// to reproduce them.
struct MetricsEntry {
  std::string method;
  int accel = 1;
  int acs_count = 0;
  int acs_start = 0;
  int lattice_offset = 0;
  int ncols = 0;
  double psnr_db = 0.0;  // +infinity when reconstruction equals reference
  double ssim = 0.0;
  bool has_lambda = false;
  double lambda = 0.0;
  bool has_alpha = false;
  double alpha = 0.0;
  double runtime_s = 0.0;
  std::string notes;  // free-form, e.g. wavelet padding
};

// -- core operations --------------------------------------------------------

/// Root-sum-of-squares coil combination: out[r,c] = sqrt(sum_c |x_c[r,c]|^2).
Image rss_combine(const CoilImages& coil_images);

/// Centered crop; start index floor((n - out) / 2) in each dimension.
Image crop_center(const Image& img, int out_rows, int out_cols);
ComplexImage crop_center(const ComplexImage& img, int out_rows, int out_cols);

}  // namespace mri

#endif  // MRI_TYPES_HPP
