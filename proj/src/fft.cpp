#include "mri/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace mri {

namespace {

// FFTW planning is not thread-safe; executing a plan on fresh buffers via
// fftw_execute_dft is. Plans are cached per (rows, cols, sign) and created
// with FFTW_ESTIMATE so results do not depend on runtime measurements.
class PlanCache {
 public:
  fftw_plan get(int nrows, int ncols, int sign) {
    std::scoped_lock lock(mu_);
    auto key = std::make_tuple(nrows, ncols, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> dummy(static_cast<size_t>(nrows) * ncols);
    fftw_plan p = fftw_plan_dft_2d(
        nrows, ncols, reinterpret_cast<fftw_complex*>(dummy.data()),
        reinterpret_cast<fftw_complex*>(dummy.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw Error("fft: FFTW plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void require_finite_plane(const cplx* p, size_t n, const char* who) {
  for (size_t i = 0; i < n; ++i)
    if (!std::isfinite(p[i].real()) || !std::isfinite(p[i].imag()))
      throw Error(std::string(who) + ": non-finite input sample");
}

// out = shift_from_dc(FFT_sign(shift_to_dc(in))) / sqrt(N), one plane.
void transform_plane(const cplx* in, cplx* out, int nrows, int ncols, int sign,
                     fftw_plan plan) {
  const int sr = nrows / 2, sc = ncols / 2;
  const size_t n = static_cast<size_t>(nrows) * ncols;
  std::vector<cplx> a(n), b(n);
  for (int r = 0; r < nrows; ++r) {
    const int r_src = (r + sr) % nrows;
    for (int c = 0; c < ncols; ++c)
      a[static_cast<size_t>(r) * ncols + c] =
          in[static_cast<size_t>(r_src) * ncols + (c + sc) % ncols];
  }
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(a.data()),
                   reinterpret_cast<fftw_complex*>(b.data()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int r = 0; r < nrows; ++r) {
    const int r_dst = (r + sr) % nrows;
    for (int c = 0; c < ncols; ++c)
      out[static_cast<size_t>(r_dst) * ncols + (c + sc) % ncols] =
          b[static_cast<size_t>(r) * ncols + c] * scale;
  }
}

template <typename In, typename Out>
Out transform_stack(const In& in, int sign, const char* who) {
  require_finite_plane(in.data.data(), in.data.size(), who);
  Out out(in.ncoils, in.nrows, in.ncols);
  fftw_plan plan = plan_cache().get(in.nrows, in.ncols, sign);
  const size_t plane = static_cast<size_t>(in.nrows) * in.ncols;
#pragma omp parallel for schedule(static)
  for (long long coil = 0; coil < in.ncoils; ++coil) {
    transform_plane(in.data.data() + static_cast<size_t>(coil) * plane,
                    out.data.data() + static_cast<size_t>(coil) * plane,
                    in.nrows, in.ncols, sign, plan);
  }
  return out;
}

ComplexImage transform_single(const ComplexImage& in, int sign, const char* who) {
  require_finite_plane(in.v.data(), in.v.size(), who);
  ComplexImage out(in.nrows, in.ncols);
  fftw_plan plan = plan_cache().get(in.nrows, in.ncols, sign);
  transform_plane(in.v.data(), out.v.data(), in.nrows, in.ncols, sign, plan);
  return out;
}

}  // namespace

CoilImages ifft2c(const KSpaceTensor& kspace) {
  return transform_stack<KSpaceTensor, CoilImages>(kspace, FFTW_BACKWARD, "ifft2c");
}

KSpaceTensor fft2c(const CoilImages& images) {
  return transform_stack<CoilImages, KSpaceTensor>(images, FFTW_FORWARD, "fft2c");
}

ComplexImage ifft2c(const ComplexImage& kspace_plane) {
  return transform_single(kspace_plane, FFTW_BACKWARD, "ifft2c");
}

ComplexImage fft2c(const ComplexImage& image_plane) {
  return transform_single(image_plane, FFTW_FORWARD, "fft2c");
}

}  // namespace mri
