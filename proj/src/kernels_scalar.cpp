#include "seesaw/kernels.hpp"

namespace seesaw::kernels::scalar {

namespace {
double horner(const double* c, std::size_t d, double t) {
  double r = 0.0;
  for (std::size_t j = d; j-- > 0;) r = r * t + c[j];
  return r;
}
}  // namespace

double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += g[i] * horner(c1, d1, t[i]) * horner(c2, d2, t[i]);
  return s;
}

void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts) {
  for (std::size_t i = 0; i < npts; ++i) {
    double xr = q_re[i], xi = q_im[i], r = 0.0, s = 0.0;
    for (std::size_t m = ncoef; m-- > 0;) {
      double nr = r * xr - s * xi + a_re[m];
      s = r * xi + s * xr + a_im[m];
      r = nr;
    }
    out_re[i] = r;
    out_im[i] = s;
  }
}

}  // namespace seesaw::kernels::scalar
