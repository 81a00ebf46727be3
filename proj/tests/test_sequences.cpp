#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "charbound/sequences.hpp"

using namespace charbound;

namespace {

std::string fixed6(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  return buf;
}

}  // namespace

TEST_CASE("table rows n = 0..4") {
  const SequenceTables t = gen_sequences(4);
  const long q[] = {3, 7, 17, 41, 99};
  const long p[] = {1, 4, 14, 44, 131};
  const char* delta[] = {"0.303413", "0.293656", "0.290670", "0.288986", "0.287965"};
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(t.q(n) == q[n]);
    CHECK(t.p(n) == p[n]);
    CHECK(fixed6(t.delta(n)) == delta[n]);
  }
}

TEST_CASE("c_n and the negative indices") {
  const SequenceTables t = gen_sequences(2);
  CHECK(t.c(0) == 1);
  CHECK(t.c(1) == 3);
  CHECK(t.c(2) == 8);
  CHECK(t.q(-2) == 1);
  CHECK(t.q(-1) == 1);
  CHECK(t.p(-2) == 0);
  CHECK(t.p(-1) == 0);
  CHECK(t.c(-1) == 0);
  CHECK(t.c(-2) == 0);
}

TEST_CASE("recurrence invariants for n <= 30") {
  const SequenceTables t = gen_sequences(30);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(t.q(n) == 2 * t.q(n - 1) + t.q(n - 2));
    CHECK(2 * t.p(n) == 4 * t.p(n - 1) + 2 * t.p(n - 2) + t.q(n - 1) + t.q(n - 2));
    CHECK(mpz_odd_p(t.q(n).get_mpz_t()));
    CHECK(mpz_even_p(BigInt(t.q(n - 1) + t.q(n - 2)).get_mpz_t()));
    CHECK(t.c(n) >= 0);
    CHECK(t.c(n) - t.c(n - 1) == (t.q(n - 1) + t.q(n - 2)) / 2);
    CHECK(t.c(n) == 2 * t.c(n - 1) + t.c(n - 2) + 1);
  }
}

TEST_CASE("closed forms track the recurrence to 1e-6 relative") {
  const SequenceTables t = gen_sequences(30);
  const auto n0 = closed_form_check(0);
  CHECK(std::fabs(n0.first - 3) < 1e-9L);
  CHECK(std::fabs(n0.second - 1) < 1e-9L);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    const auto [qc, pc] = closed_form_check(n);
    CHECK(std::fabs(qc / to_real(t.q(n)) - 1) < 1e-6L);
    CHECK(std::fabs(pc / to_real(t.p(n)) - 1) < 1e-6L);
  }
}

TEST_CASE("delta_n decreases towards the limit") {
  const SequenceTables t = gen_sequences(40);
  for (int n = 0; n <= 40; ++n) CHECK(t.delta(n) > 0);
  for (int n = 1; n <= 40; ++n) CHECK(t.delta(n) < t.delta(n - 1));
  const Real gap = t.delta(40) - delta_limit();
  CHECK(gap > 0);
  CHECK(gap < 1e-2L);
}

TEST_CASE("delta_limit against independent evaluations") {
  // 1/(4 asinh 1): ln(1 + sqrt 2) = asinh(1).
  CHECK(std::fabs(delta_limit() - 1 / (4 * std::asinh(Real{1}))) < 1e-15L);
  // Frozen from the oracle above.
  CHECK(fixed6(delta_limit()) == "0.283648");
  const Real drop = 1 / (3 * std::log(Real{3})) - 1 / (4 * std::asinh(Real{1}));
  CHECK(std::fabs(gen_sequences(0).delta(0) - delta_limit() - drop) < 1e-15L);
  CHECK(std::fabs(drop - 0.019765L) < 1e-5L);
}

TEST_CASE("coefficient rows") {
  const CoeffTable c0 = gen_coeffs(0);
  CHECK(c0.a == std::vector<BigInt>{1});
  CHECK(c0.b.empty());
  CHECK(c0.alpha == 2);
  CHECK(c0.beta == 1);

  const CoeffTable c1 = gen_coeffs(1);
  CHECK(c1.a == std::vector<BigInt>{2, 1});
  CHECK(c1.b.empty());
  CHECK(c1.alpha == 4);
  CHECK(c1.beta == 3);

  const CoeffTable c2 = gen_coeffs(2);
  CHECK(c2.a == std::vector<BigInt>{4, 2, 1});
  CHECK(c2.b == std::vector<BigInt>{1});
  CHECK(c2.alpha == 9);
  CHECK(c2.beta == 8);
}

TEST_CASE("hand-unrolled n = 3") {
  // a_{j,3} = 2 a_{j,2} + b_{j,1}, b_{j,3} = a_{j,1} + 2 b_{j,2}.
  const CoeffTable c3 = gen_coeffs(3);
  CHECK(c3.a == std::vector<BigInt>{8, 4, 2, 1});
  CHECK(c3.b == std::vector<BigInt>{4, 1});
  CHECK(c3.alpha == 21);
  CHECK(c3.beta == 20);
}

TEST_CASE("coefficient invariants for n <= 20") {
  const SequenceTables t = gen_sequences(20);
  const std::vector<CoeffTable> rows = gen_coeff_rows(20);
  REQUIRE(rows.size() == 21);
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    const CoeffTable& c = rows[static_cast<std::size_t>(n)];
    const CoeffTable direct = gen_coeffs(n);
    CHECK(c.a == direct.a);
    CHECK(c.b == direct.b);
    CHECK(c.a.size() == static_cast<std::size_t>(n + 1));
    CHECK(c.b.size() == static_cast<std::size_t>(n >= 2 ? n - 1 : 0));
    CHECK(c.a.back() == 1);
    for (const BigInt& v : c.a) CHECK(v >= 1);
    for (const BigInt& v : c.b) CHECK(v >= 1);
    CHECK(2 * c.alpha == t.q(n) + 1);
    CHECK(2 * c.beta == t.q(n) - 1);
    CHECK(c.alpha - c.beta == 1);
    if (n >= 2) CHECK(c.b.back() == 1);

    // Lemma identity summed here without the library helper.
    BigInt rhs = 0;
    for (int j = 0; j <= n; ++j) rhs += c.a[static_cast<std::size_t>(j)] * (t.q(j - 1) + t.q(j - 2));
    for (int j = 0; j + 2 <= n; ++j) rhs += c.b[static_cast<std::size_t>(j)] * (t.q(j - 1) + t.q(j - 2));
    CHECK(rhs == 2 * t.p(n));
    CHECK(verify_pn_identity(n));
  }
}

TEST_CASE("Pn identity worked examples") {
  CHECK(verify_pn_identity(0));  // 2 = 1*(1+1)
  CHECK(verify_pn_identity(1));  // 8 = 1*(3+1) + 2*(1+1)
  CHECK(verify_pn_identity(2));  // 28 = 4*2 + 2*4 + 1*10 + 1*2
}

TEST_CASE("step weights") {
  StepWeights w = step_weights(0, 1);
  CHECK(w.A == 2);
  CHECK(w.B == 1);
  w = step_weights(0, 2);
  CHECK(w.A == 5);
  CHECK(w.B == 4);
  w = step_weights(1, 3);
  CHECK(w.A == 172);
  CHECK(w.B == 171);
  for (int n = 0; n <= 10; ++n) {
    const CoeffTable c = gen_coeffs(n);
    const StepWeights s = step_weights(n, 1);
    CHECK(s.A == c.alpha);
    CHECK(s.B == c.beta);
    for (int i = 1; i <= 5; ++i) CHECK(step_weights(n, i).A - step_weights(n, i).B == 1);
  }
  CHECK_THROWS_AS(step_weights(0, 0), UsageError);
}

TEST_CASE("index range") {
  CHECK_THROWS_AS(gen_sequences(-1), UsageError);
  CHECK_THROWS_AS(gen_sequences(kMaxSequenceIndex + 1), UsageError);
  CHECK_THROWS_AS(gen_coeffs(-1), UsageError);
  CHECK(gen_sequences(kMaxSequenceIndex).delta(kMaxSequenceIndex) > delta_limit());
}
