#include "seesaw/dichotomy.hpp"

namespace seesaw {

bool check_central_condition(long n, long m) { return ((n - m) % 2) != 0; }

int infinite_sign(long n, long m) {
  if (!check_central_condition(n, m))
    fail(ErrorKind::InvalidArgument, "infinite_sign: n and m must have opposite parity");
  return n + 1 <= m ? 1 : -1;
}

int finite_sign(long n, long p) { return (p == 7 && (n % 2 != 0)) ? -1 : 1; }

SignTable sign_table(long n, long m, bool flip_infinite) {
  SignTable t;
  t.n = n;
  t.m = m;
  t.eps_inf = infinite_sign(n, m) * (flip_infinite ? -1 : 1);
  t.eps_7 = finite_sign(n, 7);
  if (t.eps_7 == -1) t.sigma.push_back(Place::finite(7));
  if (t.eps_inf == -1) t.sigma.push_back(Place::infinite());
  t.global_sign = t.eps_inf * t.eps_7;
  return t;
}

std::pair<Rational, Rational> partner_algebra(const Rational& u, const Rational& J) { return {u, -J}; }

ChartCell dichotomy_cell(long n, long m, bool flip_infinite) {
  ChartCell c;
  c.signs = sign_table(n, m, flip_infinite);
  c.vanishing_l = c.signs.global_sign == -1;
  c.split = !c.vanishing_l && c.signs.sigma.empty();
  c.definite = !c.vanishing_l && c.signs.eps_inf == -1;
  if (c.vanishing_l)
    c.label = "global sign -1";
  else if (c.split)
    c.label = "indefinite, split";
  else
    c.label = "definite, ramified at " + to_string(c.signs.sigma);
  return c;
}

std::vector<ChartCell> dichotomy_chart() {
  return {dichotomy_cell(3, 2), dichotomy_cell(2, 3), dichotomy_cell(2, 1), dichotomy_cell(3, 4)};
}

std::pair<Rational, Rational> algebra_for(const std::vector<Place>& sigma) {
  if (sigma.empty()) return {-7, Rational(1, 7)};
  if (sigma == std::vector<Place>{Place::finite(7), Place::infinite()}) return {-7, Rational(-1, 7)};
  fail(ErrorKind::Unsupported, "algebra_for: only the empty set and {7,inf} are supported");
}

}  // namespace seesaw
