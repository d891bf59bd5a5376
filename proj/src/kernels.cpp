#include "seesaw/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "seesaw/errors.hpp"

namespace seesaw::kernels {

bool avx2_available() {
#if defined(SEESAW_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {
Backend initial_backend() {
  const char* env = std::getenv("SEESAW_KERNEL");
  if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  if (env && std::strcmp(env, "avx2") == 0 && !avx2_available())
    fail(ErrorKind::Unsupported, "SEESAW_KERNEL=avx2 but AVX2/FMA is not available");
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}
}  // namespace

Backend active_backend() { return current().load(); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) fail(ErrorKind::Unsupported, "AVX2 backend not available");
  current().store(b);
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n) {
#ifdef SEESAW_HAVE_AVX2_TU
  if (active_backend() == Backend::Avx2) return avx2::poly_pair_weighted_sum(c1, d1, c2, d2, t, g, n);
#endif
  return scalar::poly_pair_weighted_sum(c1, d1, c2, d2, t, g, n);
}

void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts) {
#ifdef SEESAW_HAVE_AVX2_TU
  if (active_backend() == Backend::Avx2) {
    avx2::qseries_horner(a_re, a_im, ncoef, q_re, q_im, out_re, out_im, npts);
    return;
  }
#endif
  scalar::qseries_horner(a_re, a_im, ncoef, q_re, q_im, out_re, out_im, npts);
}

}  // namespace seesaw::kernels
