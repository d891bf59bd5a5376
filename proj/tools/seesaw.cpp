// Command-line entry point: seesaw <subcommand> [options].

#include <fstream>
#include <iostream>
#include <limits>
#include <regex>

#include "CLI11.hpp"
#include "report.hpp"
#include "seesaw/config.hpp"
#include "seesaw/dichotomy.hpp"
#include "seesaw/hecke.hpp"
#include "seesaw/periods.hpp"
#include "seesaw/rallis.hpp"
#include "seesaw/thetalift.hpp"
#include "seesaw/weilrep.hpp"

using namespace seesaw;
using report::Json;

namespace {

constexpr int kOk = 0, kVerificationFailed = 1, kUsage = 2;

struct Run {
  unsigned prec = 128;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
};

long parse_char(const std::string& s) {
  std::smatch m;
  static const std::regex re(R"(can\^?(\d+)|can)");
  require(std::regex_match(s, m, re), "--char must look like can^n, got '" + s + "'");
  return m[1].matched ? std::stol(m[1].str()) : 1;
}

// Accepts p/q or a terminating decimal such as -0.25.
Rational parse_rational(const std::string& s) {
  static const std::regex dec(R"(([+-]?)(\d*)\.(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, dec)) {
    Integer num(m[2].str().empty() ? "0" : m[2].str()), den = 1;
    for (char ch : m[3].str()) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    if (m[1].str() == "-") num = -num;
    return make_rational(num, den);
  }
  Rational r;
  require(r.set_str(s, 10) == 0, "not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

std::pair<std::string, std::string> split_pair(const std::string& s, const std::string& what) {
  auto c = s.find(',');
  require(c != std::string::npos, what + " must be given as 'a,b'");
  return {s.substr(0, c), s.substr(c + 1)};
}

Json places_json(const std::vector<Place>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

void emit(const Json& j, const Run& run, const std::string& csv_override = "") {
  std::string text = run.format == "csv" && !csv_override.empty() ? csv_override : report::render(j, run.format);
  if (run.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(run.output);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot open output file " + run.output);
  f << text;
  if (!f) fail(ErrorKind::InvalidArgument, "write failed for " + run.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta lifts, Rallis inner products and torus periods for Q(sqrt(-7))"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value configuration file; flags override it");
  Run run;
  app.add_option("--prec", run.prec, "Working precision in bits (>= 53)")->check(CLI::Range(53u, 100000u));
  app.add_option("--format", run.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", run.output, "Write the report to this path");
  app.add_option("--seed", run.seed, "Random seed");

  // dichotomy
  long d_n = 2, d_m = 3;
  bool d_flip = false;
  auto* dich = app.add_subcommand("dichotomy", "Sign table and quaternion algebra for (chi_can^n, chi_can^m)");
  dich->add_option("--n", d_n)->required();
  dich->add_option("--m", d_m)->required();
  dich->add_flag("--flip-infinite", d_flip, "Use the opposite archimedean sign convention");

  // char
  long c_n = 1;
  std::string c_alpha;
  auto* chr = app.add_subcommand("char", "Exact value of chi_can^n on a + b sqrt(-7)");
  chr->add_option("--n", c_n)->required();
  chr->add_option("--alpha", c_alpha, "a,b with rationals a, b")->required();

  // qexp
  std::string q_char = "can^2";
  long q_limit = 10;
  auto* qexp = app.add_subcommand("qexp", "q-expansion of the theta lift");
  qexp->add_option("--char", q_char, "can^n");
  qexp->add_option("--limit", q_limit)->check(CLI::Range(1L, 1000000L));

  // theta-eval
  std::string t_char = "can^2", t_tau = "0,1";
  long t_l = 0, t_radius = 0;
  auto* theta = app.add_subcommand("theta-eval", "Lattice sum and q-expansion of delta^l f at tau");
  theta->add_option("--char", t_char);
  theta->add_option("--l", t_l)->check(CLI::Range(0L, 20L));
  theta->add_option("--tau", t_tau, "x,y with y > 0");
  theta->add_option("--radius", t_radius, "Lattice norm bound (0 = automatic)");

  // rallis
  long r_l = 0, r_pmax = 400000;
  int r_depth = 2;
  auto* ral = app.add_subcommand("rallis", "Explicit Rallis inner product check for chi_can^2");
  ral->add_option("--l", r_l)->check(CLI::Range(0L, 3L));
  ral->add_option("--pmax", r_pmax, "Coefficient cutoff for L(1, chitilde)")->check(CLI::Range(1000L, 100000000L));
  ral->add_option("--quad-depth", r_depth)->check(CLI::Range(1, 5));

  // period
  long p_lmax = 3, p_radius = 0;
  int p_depth = 1;
  auto* per = app.add_subcommand("period", "Torus period identity for chi_can^2");
  per->add_option("--lmax", p_lmax)->check(CLI::Range(0L, 3L));
  per->add_option("--radius", p_radius);
  per->add_option("--quad-depth", p_depth)->check(CLI::Range(1, 6));

  // verify pwp
  long v_samples = 100;
  auto* ver = app.add_subcommand("verify", "Property suites");
  ver->require_subcommand(1);
  ver->fallthrough();
  auto* pwp = ver->add_subcommand("pwp", "Bruhat decompositions, splitting table and compatibility ratio");
  pwp->add_option("--samples", v_samples)->check(CLI::Range(1L, 1000000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    set_precision_bits(run.prec);
    Json out;
    int rc = kOk;
    std::string csv;

    if (dich->parsed()) {
      ChartCell c = dichotomy_cell(d_n, d_m, d_flip);
      out = {{"n", d_n},
             {"m", d_m},
             {"sigma", places_json(c.signs.sigma)},
             {"split", c.split},
             {"definite", c.definite},
             {"global_sign", c.signs.global_sign},
             {"eps_inf", c.signs.eps_inf},
             {"eps_7", c.signs.eps_7},
             {"label", c.label}};
    } else if (chr->parsed()) {
      auto [sa, sb] = split_pair(c_alpha, "--alpha");
      QuadElem alpha(parse_rational(sa), parse_rational(sb), -7);
      HeckeCharSpec chi = canonical_char(c_n);
      QuadElem v = eval_exact(chi, alpha);
      out = {{"n", c_n},
             {"alpha", {{"a", alpha.a().get_str()}, {"b", alpha.b().get_str()}}},
             {"value", {{"a", v.a().get_str()}, {"b", v.b().get_str()}, {"exact", true}}},
             {"conductor", conductor(chi).to_string()},
             {"level", newform_level(chi)}};
    } else if (qexp->parsed()) {
      HeckeCharSpec chi = canonical_char(parse_char(q_char));
      QExpansion f = qexp_from_ideals(chi, q_limit);
      Json coeffs = Json::array();
      for (long n = 1; n <= q_limit; ++n) coeffs.push_back(f.a[n].fits_slong_p() ? Json(f.a[n].get_si()) : Json(f.a[n].get_str()));
      out = {{"char", q_char}, {"weight", f.weight}, {"level", f.level}, {"coefficients", coeffs}, {"exact", true}};
      csv = report::coefficients_csv(f.a);
    } else if (theta->parsed()) {
      HeckeCharSpec chi = canonical_char(parse_char(t_char));
      auto [sx, sy] = split_pair(t_tau, "--tau");
      Complex<Mp> tau(from_rational<Mp>(parse_rational(sx)), from_rational<Mp>(parse_rational(sy)));
      require(tau.im > 0, "--tau must have positive imaginary part");
      LatticeSumConfig lc;
      lc.radius = t_radius;
      auto lat = theta_lattice_eval(tau, chi, t_l, lc);
      long kappa = chi.n + 1;
      QExpansion f = qexp_from_ideals(chi, 400);
      auto F = maass_shimura_apply(f, kappa, t_l);
      Complex<Mp> q = evaluate(F, tau) / maass_shimura_scalar<Mp>(kappa, t_l);
      double qtail = qseries_tail_bound(kappa, t_l, F.truncation(), to_double(tau.im)) /
                     std::abs(to_double(maass_shimura_scalar<Mp>(kappa, t_l)));
      auto cd = [](const Complex<Mp>& z) { return Complex<double>(to_double(z.re), to_double(z.im)); };
      out = {{"l", t_l},
             {"radius", lat.radius},
             {"lattice", report::complex_number(cd(lat.value), lat.tail_bound)},
             {"qexp", report::complex_number(cd(q), qtail)},
             {"difference", report::number(to_double((lat.value - q).abs()), lat.tail_bound + qtail)}};
    } else if (ral->parsed()) {
      RallisReport r = rallis_check(canonical_char(2), r_l, r_pmax, r_depth);
      Json pf;
      for (const auto& [k, v] : r.per_factor) {
        // constants computed in double carry a few ulps
        double eb = k.rfind("index", 0) == 0 ? 0.0 : 4 * std::numeric_limits<double>::epsilon() * std::abs(v);
        if (k == "L_chi_tilde") eb = r.rhs_error_bound / r.rhs * v;
        if (k == "petersson_classical" || k == "petersson_adelic") eb = r.lhs_error_bound / r.lhs * v;
        pf[k] = report::number(v, eb);
      }
      double dev_eb = (r.lhs_error_bound / r.lhs + r.rhs_error_bound / r.rhs) * (1 + r.deviation);
      out = {{"l", r_l},
             {"rhs", report::number(r.rhs, r.rhs_error_bound)},
             {"lhs", report::number(r.lhs, r.lhs_error_bound)},
             {"deviation", report::number(r.deviation, dev_eb)},
             {"per_factor", pf},
             {"passed", r.passed}};
      if (!r.passed) rc = kVerificationFailed;
    } else if (per->parsed()) {
      PeriodConfig pc;
      pc.radius = p_radius;
      pc.theta1_nodes = 2 << p_depth;
      pc.theta2_nodes = 8 << p_depth;
      PeriodIdentity id = period_identity_report(p_lmax, pc);
      Json reps = Json::array();
      for (const auto& r : id.reports) {
        Json c;
        for (const auto& [k, v] : r.constants) c[k] = report::number(v, 0);
        double reb = r.rhs_error_bound / r.rhs.abs() + r.lhs_error_bound / r.lhs.abs();
        reps.push_back({{"l", r.l},
                        {"lhs", report::complex_number(r.lhs, r.lhs_error_bound)},
                        {"rhs", report::complex_number(r.rhs, r.rhs_error_bound)},
                        {"ratio", report::complex_number(r.ratio, reb)},
                        {"radius", r.radius},
                        {"theta1_nodes", r.theta1_nodes},
                        {"theta2_nodes", r.theta2_nodes},
                        {"qexp_terms", r.qexp_terms},
                        {"constants", c}});
      }
      out = {{"reports", reps},
             {"max_ratio_spread", report::number(id.max_ratio_spread, 0)},
             {"max_ratio_defect", report::number(id.max_ratio_defect, 0)},
             {"all_nonzero", id.all_nonzero},
             {"passed", id.passed}};
      if (!id.diagnostic.empty()) out["diagnostic"] = id.diagnostic;
      if (!id.passed) rc = kVerificationFailed;
    } else if (pwp->parsed()) {
      PwpReport r = verify_pwp(v_samples, run.seed);
      Json cases;
      for (const auto& [c, n] : r.case_counts) cases[std::string(1, c)] = n;
      out = {{"samples", r.samples},
             {"passed", r.passed},
             {"compat_passed", r.compat_passed},
             {"cases", cases},
             {"failures", r.failures}};
      if (r.passed != r.samples || r.compat_passed != r.samples) rc = kVerificationFailed;
    }
    emit(out, run, csv);
    return rc;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kUsage : kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}
