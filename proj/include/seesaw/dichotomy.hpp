#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seesaw/qfield.hpp"

namespace seesaw {

// Pairs (chi_can^n, chi_can^m) over Q(sqrt(-7)).
bool check_central_condition(long n, long m);

// +1 iff n + 1 <= m.
int infinite_sign(long n, long m);

// -1 only at p = 7 for odd n.
int finite_sign(long n, long p);

struct SignTable {
  long n = 0, m = 0;
  int eps_inf = 1;
  int eps_7 = 1;
  int global_sign = 1;
  std::vector<Place> sigma;  // places with local sign -1
};

SignTable sign_table(long n, long m, bool flip_infinite = false);

// (u, J) -> (u, -J).
std::pair<Rational, Rational> partner_algebra(const Rational& u, const Rational& J);

struct ChartCell {
  SignTable signs;
  bool split = false;
  bool definite = false;
  bool vanishing_l = false;  // global sign -1
  std::string label;
};

ChartCell dichotomy_cell(long n, long m, bool flip_infinite = false);

// The four cells with representatives (3,2), (2,3), (2,1), (3,4).
std::vector<ChartCell> dichotomy_chart();

// A quaternion algebra (u, J) over Q containing Q(sqrt(u)) ramified exactly at
// sigma, for sigma empty or {7, inf}.
std::pair<Rational, Rational> algebra_for(const std::vector<Place>& sigma);

}  // namespace seesaw
