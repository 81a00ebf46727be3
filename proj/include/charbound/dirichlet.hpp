#pragma once

// Exact Dirichlet characters mod q, stored as root-of-unity exponent tables,
// and the true maxima of their window and prefix sums.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charbound/common.hpp"
#include "charbound/gaussian.hpp"
#include "charbound/periodic.hpp"

namespace charbound {

inline constexpr std::uint32_t kDefaultCharacterModulusCap = 5000;

struct PrimePower {
  std::uint32_t prime = 0;
  int exponent = 0;
  std::uint32_t modulus = 0;  // prime^exponent
};

/// One cyclic factor of (Z/qZ)^*, living on a prime-power component.
/// Odd p^k and 4 contribute one factor; 2^k with k >= 3 contributes the
/// order-2 factor generated by -1 followed by the order-2^{k-2} factor
/// generated by 5.
struct CyclicFactor {
  std::uint32_t modulus = 0;    // prime power the factor lives on
  std::uint32_t generator = 0;
  std::uint32_t order = 0;
  std::vector<std::int32_t> log;  // residue mod `modulus` -> discrete log, -1 if not a unit
};

struct CharValue {
  bool zero = true;
  std::uint32_t exponent = 0;  // value is exp(2 pi i exponent / order)
  std::uint32_t order = 1;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::uint32_t q, std::uint64_t index, std::uint32_t order, std::vector<std::int32_t> exponents);

  std::uint32_t q() const { return q_; }
  std::uint64_t index() const { return index_; }
  /// Multiplicative order of the character; 1 for the principal character.
  std::uint32_t order() const { return order_; }
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }
  /// Values lie in {0, +-1, +-i}.
  bool is_gaussian() const { return 4 % order_ == 0; }
  /// chi(-1), +1 (even) or -1 (odd).
  int parity() const;

  /// Exponent of chi(n) over order(), or -1 when gcd(n, q) > 1.
  std::int32_t exponent(std::int64_t n) const { return exponents_[static_cast<std::size_t>(floor_mod(n, q_))]; }
  CharValue value(std::int64_t n) const;
  ApproxComplex approx(std::int64_t n) const;
  /// Exact value when is_gaussian().
  std::optional<GaussianRational> gaussian(std::int64_t n) const;

  /// Throws UsageError unless is_gaussian().
  PeriodicFunction exact_function() const;
  ApproxPeriodicFunction approx_function() const;

 private:
  std::uint32_t q_;
  std::uint64_t index_;
  std::uint32_t order_;
  std::vector<std::int32_t> exponents_;
  std::vector<ApproxComplex> roots_;
};

class CharacterGroup {
 public:
  explicit CharacterGroup(std::uint32_t q, std::uint32_t cap = kDefaultCharacterModulusCap);

  std::uint32_t q() const { return q_; }
  const std::vector<PrimePower>& factorization() const { return factorization_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  /// phi(q).
  std::uint64_t size() const { return size_; }

  /// Characters are indexed lexicographically by their exponent tuple over
  /// factors(), first factor most significant; index 0 is principal.
  DirichletCharacter character(std::uint64_t index) const;
  std::vector<std::uint32_t> exponent_tuple(std::uint64_t index) const;

 private:
  std::uint32_t q_;
  std::uint64_t size_ = 1;
  std::vector<PrimePower> factorization_;
  std::vector<CyclicFactor> factors_;
};

std::vector<DirichletCharacter> enumerate_characters(std::uint32_t q,
                                                     std::uint32_t cap = kDefaultCharacterModulusCap);

CharValue char_value(const DirichletCharacter& chi, std::int64_t n);

std::vector<PrimePower> factorize(std::uint32_t n);
std::uint64_t euler_phi(std::uint32_t n);
bool is_prime(std::uint32_t n);
bool is_cubefree(std::uint64_t n);

/// P(-1), P(0), ..., P(q) with P(m) = sum_{n=0}^{m} chi(n); entry k holds
/// P(k-1). Summed left to right in long double.
std::vector<ApproxComplex> prefix_points(const DirichletCharacter& chi);

// Squared magnitudes closer than this are treated as ties.
inline constexpr Real kMagnitudeGuard = 1e-12L;

struct SChiResult {
  Real value = 0;
  std::int64_t M = 0;
  std::int64_t N = 0;
  bool principal = false;
};

/// max_{0 <= M < N <= q} |sum_{n=M}^{N} chi(n)| with the lexicographically
/// smallest witness (M, N) among guard-level ties. Uses the diameter of the
/// prefix point set via its convex hull.
SChiResult s_chi(const DirichletCharacter& chi);

/// max_{0 <= N < q} |sum_{a=0}^{N} chi(a)|. One period suffices for
/// nonprincipal chi; principal chi is evaluated under the same one-period
/// convention (its true supremum is unbounded).
Real t_chi(const DirichletCharacter& chi);

}  // namespace charbound
