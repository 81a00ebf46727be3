#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "charbound/bounds.hpp"
#include "charbound/scan.hpp"

using namespace charbound;

namespace {

const SequenceTables& tables() {
  static const SequenceTables t = gen_sequences(8);
  return t;
}

// Term-by-term evaluations written out independently in double.
double dw_ref(double q) { return std::sqrt(q) * std::log(q) / (2 * std::log(2.0)) + 3 * std::sqrt(q); }
double br_ref(double q) { return std::sqrt(q) * std::log(q) / (3 * std::log(3.0)) + 6.5 * std::sqrt(q); }
double thm1_n0_ref(double q) {
  const double d0 = 1 / (3 * std::log(3.0));
  const double tail = (std::sqrt(2.0) - 1) * 2 * 1 / (3 - 1);
  const double stretch = 3 + 1.0 / 9;
  const double psi = stretch * (d0 * std::log(q) + tail);
  return d0 * std::sqrt(q) * std::log(q) + (std::sqrt(stretch) + tail + 0.5) * std::sqrt(q) + psi;
}

const BoundEntry* find(const BoundReport& r, const std::string& name) {
  for (const auto& e : r.entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("Dobrowolski-Williams") {
  CHECK(bound_dw(4, 0, 0) == 0);
  CHECK(std::fabs(bound_dw(1e6L, 1, 1) - 12965.8L) < 0.1L);
  CHECK(std::fabs(bound_dw(1e6L, 1, 1) - dw_ref(1e6)) < 1e-6L);
}

TEST_CASE("Bachman-Rachakonda") {
  CHECK(bound_br(100, 0, 0) == 0);
  CHECK(std::fabs(bound_br(1e6L, 1, 1) - 10691.9L) < 0.5L);
  for (double q : {10.0, 729.0, 1e6, 1e12}) CHECK(std::fabs(bound_br(q, 1, 1) - br_ref(q)) < 1e-9L * br_ref(q));
}

TEST_CASE("psi_n and the main bound at n = 0") {
  const Real psi = psi_n(729, 1, 0, tables());
  CHECK(std::fabs(psi - 7.51L) < 0.05L);
  CHECK(psi_n(729, 0, 0, tables()) == 0);
  CHECK(psi_n(1e6L, 1, 0, tables()) > psi);

  const ApplicableValue v = bound_thm1(729, 1, 1, 0, tables());
  CHECK(v.applicable);
  CHECK(std::fabs(v.value - 133.8L) < 0.5L);
  CHECK(std::fabs(v.value - thm1_n0_ref(729)) < 1e-9L);
  // Frozen from thm1_n0_ref.
  CHECK(std::fabs(v.value - 133.8181764L) < 1e-6L);

  CHECK_FALSE(bound_thm1(728, 1, 1, 0, tables()).applicable);
  const ApplicableValue zero = bound_thm1(1000, 0, 0, 0, tables());
  CHECK(zero.value == 0);
  CHECK(zero.applicable);
  CHECK(thm1_threshold(0, tables()) == 729);
}

TEST_CASE("A = B = 1 form") {
  for (int n = 0; n <= 3; ++n) {
    for (Real q : {100.0L, 729.0L, 117648.0L, 117649.0L, 1e9L}) {
      const ApplicableValue a = bound_cor1(q, n, tables());
      const ApplicableValue b = bound_thm1(q, 1, 1, n, tables());
      CHECK(a.value == b.value);
      CHECK(a.applicable == b.applicable);
    }
  }
  CHECK_FALSE(bound_cor1(117648, 1, tables()).applicable);
  CHECK(bound_cor1(117649, 1, tables()).applicable);
  CHECK(std::fabs(bound_cor1(729, 0, tables()).value - 133.8L) < 0.5L);
}

TEST_CASE("Pomerance") {
  CHECK(std::fabs(bound_pomerance(1e6L, 1) - 5363.9L) < 1);
  CHECK(std::fabs(bound_pomerance(1e6L, -1) - 4034.3L) < 1);
  for (Real q = 100; q < 1e9L; q *= 1.7L) CHECK(bound_pomerance(q, 1) > bound_pomerance(q, -1));
  CHECK_THROWS_AS(bound_pomerance(2, 1), UsageError);
  CHECK_THROWS_AS(bound_pomerance(100, 0), UsageError);
}

TEST_CASE("Granville-Soundararajan") {
  CHECK(gs_constant_c(true) == 0.25L);
  CHECK(std::fabs(gs_constant_c(false) - 1.0L / 3) < 1e-18L);
  const GsBound odd = bound_gs(1e6L, -1, true);
  CHECK_FALSE(odd.rigorous);
  CHECK(std::fabs(odd.value - 1099.4L) < 0.5L);
  const GsBound even = bound_gs(1e6L, 1, true);
  CHECK(std::fabs(even.value / odd.value - 69.0L / 70 / std::sqrt(3.0L)) < 1e-15L);
  CHECK_FALSE(even.rigorous);
}

TEST_CASE("best n") {
  const auto at729 = best_n_for_q(729, 1, 1, tables());
  REQUIRE(at729);
  CHECK(at729->first == 0);
  CHECK_FALSE(best_n_for_q(500, 1, 1, tables()));
  for (Real q : {1e6L, 1e12L, 1e30L, 1e50L, 1e100L}) {
    CAPTURE(q);
    int arg = -1;
    Real lo = 0;
    for (int n = 0; n <= 8; ++n) {
      const ApplicableValue v = bound_thm1(q, 1, 1, n, tables());
      if (v.applicable && (arg < 0 || v.value < lo)) {
        arg = n;
        lo = v.value;
      }
    }
    const auto best = best_n_for_q(q, 1, 1, tables());
    REQUIRE(best);
    CHECK(best->first == arg);
    CHECK(best->second == lo);
  }
  CHECK(best_n_for_q(1e12L, 1, 1, tables())->first == 0);
  const auto big = best_n_for_q(1e50L, 1, 1, tables());
  CHECK(big->first >= 1);
  CHECK(big->second < bound_thm1(1e50L, 1, 1, 0, tables()).value);
}

TEST_CASE("main bound against Bachman-Rachakonda") {
  for (Real q = 1e8L; q < 1e30L; q *= 3.3L) CHECK(bound_thm1(q, 1, 1, 0, tables()) .value < bound_br(q, 1, 1));
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto cross = thm1_br_crossover(n, tables());
    REQUIRE(cross);
    CHECK(*cross >= thm1_threshold(n, tables()));
    for (Real q = *cross; q < 1e40L; q *= 2.9L) CHECK(bound_thm1(q, 1, 1, n, tables()).value < bound_br(q, 1, 1));
  }
}

TEST_CASE("monotone in q, A, B") {
  for (Real q = 3; q < 1e12L; q *= 1.31L) {
    const Real next = q * 1.31L;
    CHECK(bound_dw(next, 1, 1) > bound_dw(q, 1, 1));
    CHECK(bound_br(next, 1, 1) > bound_br(q, 1, 1));
    CHECK(bound_pomerance(next, 1) > bound_pomerance(q, 1));
    CHECK(bound_pomerance(next, -1) > bound_pomerance(q, -1));
    CHECK(bound_thm1(next, 1, 1, 0, tables()).value > bound_thm1(q, 1, 1, 0, tables()).value);
    CHECK(bound_gs(next, 1, true).value > bound_gs(q, 1, true).value);
  }
  for (Real x = 0; x < 5; x += 0.5L) {
    CHECK(bound_dw(1000, x + 0.5L, 1) > bound_dw(1000, x, 1));
    CHECK(bound_dw(1000, 1, x + 0.5L) > bound_dw(1000, 1, x));
    CHECK(bound_br(1000, x + 0.5L, 1) > bound_br(1000, x, 1));
    CHECK(bound_br(1000, 1, x + 0.5L) > bound_br(1000, 1, x));
    CHECK(bound_thm1(1000, x + 0.5L, 1, 0, tables()).value > bound_thm1(1000, x, 1, 0, tables()).value);
    CHECK(bound_thm1(1000, 1, x + 0.5L, 0, tables()).value > bound_thm1(1000, 1, x, 0, tables()).value);
  }
}

TEST_CASE("report without scan") {
  const BoundReport r = compare(1000000);
  for (const auto& e : r.entries) {
    CHECK_FALSE(e.empirical_max);
    CHECK_FALSE(e.margin);
    CHECK_FALSE(e.violation);
  }
  const Real gs = std::max(find(r, "granville_sound_even")->value, find(r, "granville_sound_odd")->value);
  const Real pom_lo = std::min(find(r, "pomerance_even")->value, find(r, "pomerance_odd")->value);
  const Real pom_hi = std::max(find(r, "pomerance_even")->value, find(r, "pomerance_odd")->value);
  CHECK(gs < pom_lo);
  CHECK(pom_hi < find(r, "cor1_n0")->value);
  CHECK(find(r, "cor1_n0")->value < find(r, "bachman_rachakonda")->value);
  CHECK(std::fabs(find(r, "cor1_n0")->value - 6884.18L) < 0.01L);
  CHECK(r.best_rigorous == "pomerance_odd");
  CHECK(r.best_rigorous_even == "pomerance_even");
  CHECK(r.best_rigorous_odd == "pomerance_odd");
  CHECK_FALSE(find(r, "granville_sound_odd")->rigorous);
  CHECK(find(r, "granville_sound_odd")->target == SumTarget::PrefixMax);
}

TEST_CASE("report at q = 729 with scanned maxima") {
  ScanConfig config;
  config.q_min = config.q_max = 729;
  std::vector<EmpiricalMax> empirical;
  for (const ScanRow& row : scan_characters(config)) {
    empirical.push_back({row.char_index, row.S_chi, row.T_chi, row.parity});
  }
  REQUIRE(empirical.size() == 485);
  const BoundReport r = compare(729, empirical);
  for (const auto& e : r.entries) {
    CAPTURE(e.name);
    REQUIRE(e.margin);
    if (e.rigorous && e.applicable) {
      CHECK(*e.margin >= 0);
      CHECK_FALSE(e.violation);
    }
  }
  CHECK(find(r, "cor1_n0")->applicable);
  CHECK_FALSE(find(r, "cor1_n1"));

  std::ostringstream csv;
  write_report_csv(csv, r);
  CHECK(csv.str().rfind("q,bound,value,applicable,rigorous,target,parity,empirical_max,margin,violation\n", 0) == 0);
}

TEST_CASE("violation guard") {
  CHECK_FALSE(exceeds(100, 100));
  CHECK_FALSE(exceeds(100 + 1e-8L, 100));
  CHECK(exceeds(100 + 1e-6L, 100));
  const BoundReport r = compare(100, {{1, 1e9L, 0, 1}});
  CHECK(find(r, "dobrowolski_williams")->violation);
  CHECK_FALSE(find(r, "cor1_n0")->violation);  // not applicable below 729
  CHECK_FALSE(find(r, "granville_sound_even")->violation);
  CHECK_FALSE(find(r, "pomerance_odd")->empirical_max);
}
