#include "mri/wavelet.hpp"

#include <cmath>

namespace mri {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_divisible(int nrows, int ncols, int levels, const char* who) {
  if (levels < 0) throw Error(std::string(who) + ": levels must be >= 0");
  const int block = 1 << levels;
  if (nrows % block != 0 || ncols % block != 0) {
    const int pr = (nrows + block - 1) / block * block;
    const int pc = (ncols + block - 1) / block * block;
    throw Error(std::string(who) + ": " + std::to_string(nrows) + "x" +
                std::to_string(ncols) + " not divisible by 2^" +
                std::to_string(levels) + "; pad to " + std::to_string(pr) +
                "x" + std::to_string(pc));
  }
}

}  // namespace

ComplexImage haar_dwt(const ComplexImage& x, int levels) {
  check_divisible(x.nrows, x.ncols, levels, "haar_dwt");
  ComplexImage out = x;
  for (int level = 0; level < levels; ++level) {
    const int h = x.nrows >> level;
    const int w = x.ncols >> level;
    // rows: [approx | detail]
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < h; ++r) {
      std::vector<cplx> line(static_cast<size_t>(w));
      for (int j = 0; j < w / 2; ++j) {
        const cplx a = out.at(static_cast<int>(r), 2 * j);
        const cplx b = out.at(static_cast<int>(r), 2 * j + 1);
        line[static_cast<size_t>(j)] = (a + b) * kInvSqrt2;
        line[static_cast<size_t>(w / 2 + j)] = (a - b) * kInvSqrt2;
      }
      for (int j = 0; j < w; ++j)
        out.at(static_cast<int>(r), j) = line[static_cast<size_t>(j)];
    }
    // columns
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < w; ++c) {
      std::vector<cplx> line(static_cast<size_t>(h));
      for (int i = 0; i < h / 2; ++i) {
        const cplx a = out.at(2 * i, static_cast<int>(c));
        const cplx b = out.at(2 * i + 1, static_cast<int>(c));
        line[static_cast<size_t>(i)] = (a + b) * kInvSqrt2;
        line[static_cast<size_t>(h / 2 + i)] = (a - b) * kInvSqrt2;
      }
      for (int i = 0; i < h; ++i)
        out.at(i, static_cast<int>(c)) = line[static_cast<size_t>(i)];
    }
  }
  return out;
}

ComplexImage haar_idwt(const ComplexImage& coeffs, int levels) {
  check_divisible(coeffs.nrows, coeffs.ncols, levels, "haar_idwt");
  ComplexImage out = coeffs;
  for (int level = levels - 1; level >= 0; --level) {
    const int h = coeffs.nrows >> level;
    const int w = coeffs.ncols >> level;
    // columns first, undoing the analysis order
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < w; ++c) {
      std::vector<cplx> line(static_cast<size_t>(h));
      for (int i = 0; i < h / 2; ++i) {
        const cplx a = out.at(i, static_cast<int>(c));
        const cplx d = out.at(h / 2 + i, static_cast<int>(c));
        line[static_cast<size_t>(2 * i)] = (a + d) * kInvSqrt2;
        line[static_cast<size_t>(2 * i + 1)] = (a - d) * kInvSqrt2;
      }
      for (int i = 0; i < h; ++i)
        out.at(i, static_cast<int>(c)) = line[static_cast<size_t>(i)];
    }
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < h; ++r) {
      std::vector<cplx> line(static_cast<size_t>(w));
      for (int j = 0; j < w / 2; ++j) {
        const cplx a = out.at(static_cast<int>(r), j);
        const cplx d = out.at(static_cast<int>(r), w / 2 + j);
        line[static_cast<size_t>(2 * j)] = (a + d) * kInvSqrt2;
        line[static_cast<size_t>(2 * j + 1)] = (a - d) * kInvSqrt2;
      }
      for (int j = 0; j < w; ++j)
        out.at(static_cast<int>(r), j) = line[static_cast<size_t>(j)];
    }
  }
  return out;
}

ComplexImage soft_threshold(const ComplexImage& x, double t) {
  if (t < 0.0) throw Error("soft_threshold: threshold must be >= 0");
  if (t == 0.0) return x;
  ComplexImage out(x.nrows, x.ncols);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(x.v.size()); ++i) {
    const cplx z = x.v[static_cast<size_t>(i)];
    const double m = std::abs(z);
    out.v[static_cast<size_t>(i)] =
        m <= t ? cplx(0.0, 0.0) : z * ((m - t) / m);
  }
  return out;
}

}  // namespace mri
