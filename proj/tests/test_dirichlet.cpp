#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "charbound/dirichlet.hpp"
#include "charbound/scan.hpp"
#include "oracles.hpp"

using namespace charbound;

namespace {

using G = GaussianRational;

// Exact sum_n chi(n) conj psi(n) == target, via exponent counts over the
// common order.
bool inner_product_is(const DirichletCharacter& chi, const DirichletCharacter& psi, long long target) {
  const std::uint32_t m = std::lcm(chi.order(), psi.order());
  std::vector<long long> counts(m, 0);
  for (std::uint32_t n = 0; n < chi.q(); ++n) {
    const std::int32_t e1 = chi.exponent(n), e2 = psi.exponent(n);
    if (e1 < 0) continue;
    const std::int64_t e = (static_cast<std::int64_t>(e1) * (m / chi.order()) -
                            static_cast<std::int64_t>(e2) * (m / psi.order())) %
                           m;
    ++counts[static_cast<std::size_t>((e + m) % m)];
  }
  counts[0] -= target;
  return oracle::root_sum_is_zero(counts);
}

}  // namespace

TEST_CASE("cyclotomic oracle") {
  CHECK(oracle::cyclotomic(1) == std::vector<long long>{-1, 1});
  CHECK(oracle::cyclotomic(4) == std::vector<long long>{1, 0, 1});
  CHECK(oracle::cyclotomic(6) == std::vector<long long>{1, -1, 1});
  CHECK(oracle::root_sum_is_zero({1, 1, 1}));        // 1 + w + w^2
  CHECK_FALSE(oracle::root_sum_is_zero({1, 1, 0}));
  CHECK(oracle::root_sum_is_zero({1, 0, 1, 0}));     // 1 + i^2
}

TEST_CASE("factorization and phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(60) == 16);
  CHECK(euler_phi(97) == 96);
  for (std::uint32_t q = 1; q <= 300; ++q) {
    CAPTURE(q);
    CHECK(euler_phi(q) == oracle::phi_by_count(q));
    std::uint64_t prod = 1;
    for (const PrimePower& pp : factorize(q)) prod *= pp.modulus;
    CHECK(prod == q);
    bool prime = q > 1;
    for (std::uint32_t d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
    CHECK(is_prime(q) == prime);
  }
  CHECK(is_cubefree(1000000 / 64 * 63) == false);
  CHECK(is_cubefree(2 * 3 * 3 * 5 * 5 * 7));
  CHECK_FALSE(is_cubefree(729));
  CHECK_FALSE(is_cubefree(1000000));
}

TEST_CASE("group structure") {
  const CharacterGroup g8(8);
  REQUIRE(g8.factors().size() == 2);
  CHECK(g8.factors()[0].order == 2);
  CHECK(g8.factors()[1].order == 2);
  const CharacterGroup g32(32);
  REQUIRE(g32.factors().size() == 2);
  CHECK(g32.factors()[0].order == 2);
  CHECK(g32.factors()[1].order == 8);
  const CharacterGroup g60(60);
  CHECK(g60.size() == 16);
  CHECK_THROWS_AS(CharacterGroup(0), UsageError);
  CHECK_THROWS_AS(CharacterGroup(5001), UsageError);
  CHECK_NOTHROW(CharacterGroup(5001, 6000));
}

TEST_CASE("characters mod 5") {
  const auto chars = enumerate_characters(5);
  REQUIRE(chars.size() == 4);
  CHECK(chars[0].is_principal());
  int real_nonprincipal = 0, order4 = 0;
  for (const auto& chi : chars) {
    if (!chi.is_principal() && chi.is_real()) ++real_nonprincipal;
    if (chi.order() == 4) ++order4;
  }
  CHECK(real_nonprincipal == 1);
  CHECK(order4 == 2);

  const DirichletCharacter& legendre = chars[2];
  REQUIRE(legendre.order() == 2);
  CHECK(legendre.gaussian(2).value() == G(-1));
  CHECK(legendre.parity() == 1);

  const DirichletCharacter& chi = chars[1];
  REQUIRE(chi.gaussian(2).value() == G(0, 1));
  CHECK(chi.gaussian(4).value() == G(-1));
  CHECK(chi.parity() == -1);
  for (const auto& c : chars) CHECK(c.gaussian(5).value().is_zero());

  const CharValue v = char_value(chi, 3);
  CHECK_FALSE(v.zero);
  CHECK(v.order == 4);
  CHECK(v.exponent == 3);
  CHECK(char_value(chi, 10).zero);
}

TEST_CASE("trivial moduli") {
  const auto one = enumerate_characters(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_principal());
  for (long n : {-3L, 0L, 1L, 8L}) CHECK(one[0].gaussian(n).value() == G(1));

  const auto eight = enumerate_characters(8);
  REQUIRE(eight.size() == 4);
  for (const auto& chi : eight) CHECK(chi.is_real());
  CHECK_THROWS_AS(enumerate_characters(5001), UsageError);
}

TEST_CASE("orthogonality and multiplicativity for q <= 60") {
  for (std::uint32_t q = 1; q <= 60; ++q) {
    CAPTURE(q);
    const auto chars = enumerate_characters(q);
    REQUIRE(chars.size() == euler_phi(q));
    std::set<std::vector<std::int32_t>> tables;
    for (std::size_t a = 0; a < chars.size(); ++a) {
      const DirichletCharacter& chi = chars[a];
      CHECK(chi.index() == a);
      CHECK(chi.is_principal() == (a == 0));
      CHECK(chi.exponent(1) == 0);
      CHECK(chi.exponent(-1) >= 0);
      const CharValue minus_one = char_value(chi, -1);
      CHECK((2 * minus_one.exponent) % minus_one.order == 0);
      for (std::uint32_t n = 0; n < q; ++n) {
        CHECK((chi.exponent(n) < 0) == (std::gcd(n, q) > 1));
        for (std::uint32_t m = 0; m < q; ++m) {
          const std::int32_t en = chi.exponent(n), em = chi.exponent(m), enm = chi.exponent(std::int64_t{n} * m);
          if (en < 0 || em < 0) {
            CHECK(enm < 0);
          } else {
            CHECK(enm == static_cast<std::int32_t>((en + em) % static_cast<std::int32_t>(chi.order())));
          }
        }
      }
      // Tables compared as values over a common order.
      std::vector<std::int32_t> normalized;
      for (std::uint32_t n = 0; n < q; ++n) {
        const std::int32_t e = chi.exponent(n);
        normalized.push_back(e < 0 ? -1 : static_cast<std::int32_t>(e * (euler_phi(q) / chi.order())));
      }
      tables.insert(normalized);
      for (std::size_t b = a; b < chars.size(); ++b) {
        CHECK(inner_product_is(chi, chars[b], a == b ? static_cast<long long>(euler_phi(q)) : 0));
      }
    }
    CHECK(tables.size() == chars.size());
  }
}

TEST_CASE("approximate values agree with exact ones") {
  for (std::uint32_t q : {5u, 16u, 60u}) {
    for (const auto& chi : enumerate_characters(q)) {
      for (std::int64_t n = 0; n < q; ++n) {
        if (auto g = chi.gaussian(n)) {
          CHECK(std::abs(chi.approx(n) - g->to_complex()) < 1e-18L);
        }
        const CharValue v = chi.value(n);
        if (v.zero) {
          CHECK(std::abs(chi.approx(n)) == 0);
        } else {
          CHECK(std::fabs(std::abs(chi.approx(n)) - 1) < 1e-15L);
        }
      }
    }
  }
  CHECK_THROWS_AS(enumerate_characters(7)[1].exact_function(), UsageError);
}

TEST_CASE("S_chi and T_chi worked values") {
  const auto five = enumerate_characters(5);
  const SChiResult s = s_chi(five[2]);
  CHECK(s.value == 2);
  CHECK(s.M == 2);
  CHECK(s.N == 3);
  CHECK(t_chi(five[2]) == 1);

  const auto three = enumerate_characters(3);
  CHECK(s_chi(three[1]).value == 1);
  CHECK(t_chi(three[1]) == 1);

  for (std::uint32_t p : {5u, 13u, 101u}) {
    const SChiResult principal = s_chi(enumerate_characters(p)[0]);
    CHECK(principal.principal);
    CHECK(principal.value == p - 1);
    // [0, p-1] ties with [1, p-1] since chi(0) = 0; the smaller pair wins.
    CHECK(principal.M == 0);
    CHECK(principal.N == p - 1);
  }
}

TEST_CASE("S_chi fast path against the pair scan, q <= 60") {
  for (std::uint32_t q = 3; q <= 60; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      if (chi.is_principal()) continue;
      CAPTURE(q);
      CAPTURE(chi.index());
      const SChiResult fast = s_chi(chi);
      const oracle::PairScan slow = oracle::pair_scan(chi);
      CHECK(std::fabs(fast.value - slow.value) <= 1e-12L * (1 + slow.value));
      CHECK(fast.M < fast.N);
      CHECK(fast.N <= static_cast<std::int64_t>(q));
      // The witness attains the maximum.
      std::complex<Real> sum = 0;
      for (std::int64_t n = fast.M; n <= fast.N; ++n) sum += chi.approx(n);
      CHECK(std::fabs(std::abs(sum) - fast.value) <= 1e-12L * (1 + fast.value));
      if (chi.is_gaussian()) {
        const Real norm = static_cast<Real>(oracle::pair_scan_norm_exact(chi));
        CHECK(std::fabs(fast.value * fast.value - norm) <= 1e-15L * norm);
        CHECK(fast.M == slow.M);
        CHECK(fast.N == slow.N);
      }
      const Real t = t_chi(chi);
      CHECK(std::fabs(t - oracle::prefix_max(chi)) <= 1e-12L * (1 + t));
      CHECK(t <= fast.value * (1 + 1e-12L));
    }
  }
}

TEST_CASE("prefix points") {
  const auto five = enumerate_characters(5);
  const auto pts = prefix_points(five[2]);
  REQUIRE(pts.size() == 7);
  CHECK(pts[0] == std::complex<Real>(0, 0));
  const Real expect[] = {0, 0, 1, 0, -1, 0, 0};
  for (int k = 0; k < 7; ++k) CHECK(pts[static_cast<std::size_t>(k)].real() == expect[k]);
}

TEST_CASE("membership probe for small moduli") {
  const auto five = membership_probe(5);
  REQUIRE(five.size() == 3);
  for (const auto& row : five) {
    CHECK(row.min_B.B_exact == Rational(4, 5));
    CHECK(row.within_unit);
    CHECK(row.bound_A == 1);
  }
  const auto three = membership_probe(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].min_B.B_exact == Rational(2, 3));
  CHECK(membership_probe(4).size() == 1);
  for (std::uint32_t q = 2; q <= 40; ++q) {
    for (const auto& row : membership_probe(q)) CHECK(row.within_unit);
  }
  CHECK_THROWS_AS(membership_probe(151), UsageError);
}
