#pragma once

// Independent reference computations used only by tests.

#include <vector>

#include "seesaw/numeric.hpp"

namespace seesaw::oracle {

// Independent oracle: z^2 = a x^2 + b y^2 has a primitive solution modulo p^k.
// Valuations of a, b are first reduced to {0,1} by removing p^2 factors.
inline int hilbert_brute(Integer a, Integer b, long p) {
  auto reduce = [p](Integer& x) {
    Integer p2 = p * p;
    while (x % p2 == 0) x /= p2;
  };
  reduce(a);
  reduce(b);
  long k = p == 2 ? 8 : 3;
  long m = 1;
  for (long i = 0; i < k; ++i) m *= p;
  std::vector<char> sq(m, 0), unit_sq(m, 0);
  for (long z = 0; z < m; ++z) {
    long r = (z * z) % m;
    sq[r] = 1;
    if (z % p) unit_sq[r] = 1;
  }
  long am = Integer(((a % m) + m) % m).get_si();
  long bm = Integer(((b % m) + m) % m).get_si();
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      long r = (am * ((x * x) % m) + bm * ((y * y) % m)) % m;
      bool prim_xy = (x % p) || (y % p);
      if (prim_xy ? sq[r] : unit_sq[r]) return 1;
    }
  return -1;
}

// Coefficients of eta(z)^3 eta(7z)^3 = q prod (1-q^n)^3 (1-q^{7n})^3, index 1..N.
inline std::vector<long long> eta3_eta7_3(int N) {
  std::vector<long long> c(N + 1, 0);
  c[0] = 1;
  auto mul_one_minus = [&](int k) {
    for (int n = N; n >= k; --n) c[n] -= c[n - k];
  };
  for (int n = 1; n <= N; ++n) {
    for (int r = 0; r < 3; ++r) mul_one_minus(n);
    if (7 * n <= N)
      for (int r = 0; r < 3; ++r) mul_one_minus(7 * n);
  }
  std::vector<long long> a(N + 1, 0);
  for (int n = 1; n <= N; ++n) a[n] = c[n - 1];
  return a;
}

}  // namespace seesaw::oracle
