#pragma once

// Period-q functions f: Z -> C and membership in the class of functions
// bounded by A whose length-K window sums have second moment at most B*q*K.

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charbound/common.hpp"
#include "charbound/gaussian.hpp"

namespace charbound {

template <class V>
class Periodic {
 public:
  using Value = V;
  using Traits = ValueTraits<V>;

  Periodic(std::int64_t period, std::vector<V> values) : period_(period), values_(std::move(values)) {
    if (period_ < 1) throw std::invalid_argument("period must be >= 1");
    if (static_cast<std::int64_t>(values_.size()) != period_) {
      throw std::invalid_argument("expected " + std::to_string(period_) + " values, got " +
                                  std::to_string(values_.size()));
    }
    prefix0_.assign(values_.size() + 1, Traits::zero());
    prefix1_.assign(values_.size() + 1, Traits::zero());
    for (std::int64_t r = 1; r <= period_; ++r) {
      const V& fr = (*this)(r);
      prefix0_[r] = prefix0_[r - 1] + fr;
      prefix1_[r] = prefix1_[r - 1] + Traits::scale(fr, r);
    }
  }

  std::int64_t period() const { return period_; }
  std::span<const V> values() const { return values_; }

  const V& operator()(std::int64_t n) const { return values_[static_cast<std::size_t>(floor_mod(n, period_))]; }

  const V& period_sum() const { return prefix0_.back(); }

  /// sum_{k=1}^{y} f(x+k), O(1).
  V window_sum(std::int64_t x, std::int64_t y) const {
    const std::int64_t x0 = floor_mod(x, period_);
    return antiderivative0(x0 + y) - prefix0_[x0];
  }

  /// sum_{k=1}^{y} k f(x+k), O(1).
  V weighted_window_sum(std::int64_t x, std::int64_t y) const {
    const std::int64_t x0 = floor_mod(x, period_);
    V total = antiderivative1(x0 + y) - prefix1_[x0];
    total -= Traits::scale(antiderivative0(x0 + y) - prefix0_[x0], x0);
    return total;
  }

 private:
  // P0(m) with P0(m) - P0(m-1) = f(m) and P0(0) = 0, for m >= 0.
  V antiderivative0(std::int64_t m) const {
    const std::int64_t t = m / period_;
    const std::int64_t r = m % period_;
    return Traits::scale(period_sum(), t) + prefix0_[r];
  }

  // P1(m) with P1(m) - P1(m-1) = m f(m) and P1(0) = 0, for m >= 0.
  V antiderivative1(std::int64_t m) const {
    const std::int64_t t = m / period_;
    const std::int64_t r = m % period_;
    V total = Traits::scale(prefix1_.back(), t);
    BigInt triangle = BigInt(static_cast<long>(t)) * (t - 1) / 2 * static_cast<long>(period_);
    total += Traits::scale(period_sum(), triangle);
    total += Traits::scale(prefix0_[r], t * period_);
    total += prefix1_[r];
    return total;
  }

  std::int64_t period_;
  std::vector<V> values_;
  std::vector<V> prefix0_;
  std::vector<V> prefix1_;
};

using PeriodicFunction = Periodic<GaussianRational>;
using ApproxPeriodicFunction = Periodic<ApproxComplex>;

PeriodicFunction make_periodic(std::int64_t q, std::vector<GaussianRational> values);

/// Reads rows "residue,re_num/re_den,im_num/im_den". Blank lines and lines
/// starting with '#' are skipped, as is a leading header row. Residues must
/// cover 0..q-1 exactly once; q is the row count.
PeriodicFunction read_periodic_csv(std::istream& in);
PeriodicFunction read_periodic_csv_file(const std::string& path);
void write_periodic_csv(std::ostream& out, const PeriodicFunction& f);

/// max_n |f(n)|, from exact squared magnitudes when V is exact.
template <class V>
Real bound_A(const Periodic<V>& f) {
  using Traits = ValueTraits<V>;
  typename Traits::Norm best = 0;
  for (const V& v : f.values()) {
    auto n = Traits::norm(v);
    if (n > best) best = n;
  }
  if constexpr (Traits::exact) {
    return std::sqrt(to_real(best));
  } else {
    return std::sqrt(best);
  }
}

inline constexpr std::int64_t kUnboundedWindow = 0;

struct MinBResult {
  Real B = 0;                // +inf when the mean of f is nonzero
  std::int64_t K = 1;        // smallest maximizing K; kUnboundedWindow with B = +inf
  Rational B_exact = 0;      // set for exact value types only
  bool unbounded() const { return K == kUnboundedWindow; }
};

template <class V>
bool has_zero_mean(const Periodic<V>& f) {
  using Traits = ValueTraits<V>;
  if constexpr (Traits::exact) {
    return Traits::is_zero(f.period_sum());
  } else {
    // Sums of roots of unity cancel only up to accumulated rounding.
    return std::abs(f.period_sum()) <= Real{1e-12} * static_cast<Real>(f.period());
  }
}

/// Smallest admissible moment constant over window lengths 1..K_max:
/// max_K (1/(qK)) sum_{n=1}^{q} |sum_{k=1}^{K} f(n+k)|^2.
template <class V>
MinBResult min_B(const Periodic<V>& f, std::int64_t K_max) {
  using Traits = ValueTraits<V>;
  using Norm = typename Traits::Norm;
  if (K_max < 1) throw UsageError("min_B: K_max must be >= 1");
  if (!has_zero_mean(f)) return {std::numeric_limits<Real>::infinity(), kUnboundedWindow};

  const std::int64_t q = f.period();
  std::vector<V> windows(static_cast<std::size_t>(q), Traits::zero());
  Norm best = -1;
  std::int64_t best_k = 1;
  for (std::int64_t K = 1; K <= K_max; ++K) {
    Norm moment = 0;
    for (std::int64_t n = 1; n <= q; ++n) {
      V& w = windows[static_cast<std::size_t>(n - 1)];
      w += f(n + K);
      moment += Traits::norm(w);
    }
    if constexpr (Traits::exact) {
      moment /= Rational(BigInt(static_cast<long>(q)) * static_cast<long>(K));
    } else {
      moment /= static_cast<Real>(q) * static_cast<Real>(K);
    }
    if (moment > best) {
      best = moment;
      best_k = K;
    }
  }
  if constexpr (Traits::exact) {
    return {to_real(best), best_k, best};
  } else {
    return {best, best_k};
  }
}

struct ClassFParams {
  Real A = 0;
  Real B = 0;
  std::int64_t q = 1;
};

/// Membership certified for windows K <= K_max. For mean-zero f, window
/// sums of length mq + r equal those of length r, so K_max = q covers all K.
template <class V>
bool is_member(const Periodic<V>& f, const ClassFParams& params, std::int64_t K_max) {
  using Traits = ValueTraits<V>;
  if (params.q != f.period()) return false;
  if (!has_zero_mean(f)) return false;
  if constexpr (Traits::exact) {
    const Rational a = to_rational(params.A);
    for (const V& v : f.values()) {
      if (v.norm() > a * a) return false;
    }
  } else {
    if (bound_A(f) > params.A * (1 + Real{1e-12})) return false;
  }
  const MinBResult b = min_B(f, K_max);
  if constexpr (Traits::exact) {
    return b.B_exact <= to_rational(params.B);
  } else {
    return b.B <= params.B * (1 + Real{1e-12});
  }
}

}  // namespace charbound
