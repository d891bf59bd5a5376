#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "seesaw/numeric.hpp"
#include "seesaw/qfield.hpp"
#include "seesaw/thetalift.hpp"

namespace seesaw {

using Mat2Q = std::array<Rational, 4>;  // row-major a, b, c, d

// a + b sqrt(u) -> [[a, -2b], [-b u / 2, a]] for u = -7.
Mat2Q torus_embedding(const QuadElem& x);

// Fixed point of the embedded torus in the upper half-plane: tau^2 = -4/7.
template <class T>
Complex<T> cm_point() {
  using std::sqrt;
  return {T(0), T(2) / sqrt(T(7))};
}

// Whether the images of 1 and omega = (1 + sqrt(-7))/2 lie in M_2(Z_p), and
// for p = 7 whether the lower-left entries lie in 7 Z_7.
struct OrderCheck {
  long p = 0;
  bool integral = false;
  bool lower_left_divisible = true;
  std::string detail;
};
OrderCheck embedding_order_check(long p);

// [omega(r(theta)) phi'_{k,l}](x) computed through the Bruhat factorization
// r(theta) = n(a/c) w m(c) n(d/c), for r(theta) = [[cos, sin], [-sin, cos]]
// with sin(theta) != 0. omega(w) uses the Weil index -i and the kernel
// psi(-(x, y)) with (x, y) = 2 Re(x ybar) and the self-dual measure.
template <class T>
Complex<T> weil_rotation_eval(long k, long l, const T& theta, const Complex<T>& x);

struct PeriodConfig {
  long radius = 0;          // lattice norm bound; 0 selects it from the tail bound
  int theta1_nodes = 4;     // trapezoid nodes on the E^1 circle
  int theta2_nodes = 16;    // trapezoid nodes on the SO(2) circle
  long second_weight = 0;   // weight of the second character on SO(2); 0 means 3 + 2l
  long qexp_terms = 200;
  double tolerance = 1e-30; // truncation budget relative to the result
};

struct PeriodReport {
  long l = 0;
  Complex<double> lhs, rhs, ratio;
  double lhs_error_bound = 0, rhs_error_bound = 0;
  long radius = 0;
  int theta1_nodes = 0, theta2_nodes = 0;
  long qexp_terms = 0;
  std::map<std::string, double> constants;
};

// Measure and character constants shared by both routes: vol(C^1) for each
// circle and the finite part 1/2 = vol(O_E^1-hat) / #{+-1}.
std::map<std::string, double> period_constants();

// Torus period of the weight 3 + 2l lift of chi_can^2 from the q-expansion of
// delta^l f at the CM point, in the working MPFR precision.
Complex<Mp> period_lhs(long l, const PeriodConfig& cfg = {}, double* error_bound = nullptr);

// The same period from the unfolded seesaw double integral: a double circle
// trapezoid around the exact lattice sum of omega(g, g') phi'.
Complex<Mp> period_rhs(long l, const PeriodConfig& cfg = {}, double* error_bound = nullptr,
                       long* radius_used = nullptr);

PeriodReport period_report(long l, const PeriodConfig& cfg = {});

struct PeriodIdentity {
  std::vector<PeriodReport> reports;
  double max_ratio_spread = 0;  // max |ratio_l - ratio_0|
  double max_ratio_defect = 0;  // max |ratio_l - 1|
  bool all_nonzero = false;
  bool passed = false;
  std::string diagnostic;
};
PeriodIdentity period_identity_report(long l_max, const PeriodConfig& cfg = {}, double tolerance = 1e-6);

}  // namespace seesaw
