#pragma once

#include <cstddef>

// Numeric inner loops with a scalar reference and an AVX2 variant chosen at
// runtime. SEESAW_KERNEL=scalar|avx2|auto overrides the default (auto).
namespace seesaw::kernels {

enum class Backend { Scalar, Avx2 };

bool avx2_available();
Backend active_backend();
// Forces a backend; throws Unsupported if the CPU or build lacks it.
void set_backend(Backend b);
const char* backend_name(Backend b);

// sum_i g[i] * P1(t[i]) * P2(t[i]) with P(t) = sum_j c[j] t^j.
double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n);

// out[i] = sum_{m < ncoef} a[m] * q[i]^m for complex a and q, split into
// real and imaginary arrays.
void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts);

namespace scalar {
double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n);
void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts);
}  // namespace scalar

namespace avx2 {
double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n);
void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts);
}  // namespace avx2

}  // namespace seesaw::kernels
