#pragma once

// Triangular and square sums of a periodic function, and exact checks of the
// decomposition identities built from them.
//
//   T-(x,y) = sum_{k=1}^{y} (y+1-k) f(x+k)
//   T+(x,y) = sum_{k=1}^{y} k f(x+k)
//   S(x,y)  = sum_{i=x+1}^{x+y} sum_{j=0}^{y-1} f(i+j)
//
// For exact value types every identity check is bit-exact equality.

#include <cmath>
#include <cstdint>
#include <vector>

#include "charbound/periodic.hpp"
#include "charbound/sequences.hpp"

namespace charbound {

struct Window {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

inline void require_length(std::int64_t y, const char* what) {
  if (y < 0) throw UsageError(std::string(what) + ": window length must be >= 0");
}

template <class V>
V t_plus(const Periodic<V>& f, std::int64_t x, std::int64_t y) {
  require_length(y, "t_plus");
  return f.weighted_window_sum(x, y);
}

template <class V>
V t_minus(const Periodic<V>& f, std::int64_t x, std::int64_t y) {
  require_length(y, "t_minus");
  // Weights (y+1-k) and k sum to y+1.
  return ValueTraits<V>::scale(f.window_sum(x, y), y + 1) - f.weighted_window_sum(x, y);
}

template <class V>
V s_sum(const Periodic<V>& f, std::int64_t x, std::int64_t y) {
  require_length(y, "s_sum");
  if (y == 0) return ValueTraits<V>::zero();
  // Anti-diagonal weights rise 1..y over f(x+1..x+y), then fall y-1..1.
  return t_plus(f, x, y) + t_minus(f, x + y, y - 1);
}

// Exact types: equality. Approximate types (non-Gaussian character values):
// agreement within a relative 1e-9.
template <class V>
bool same_value(const V& lhs, const V& rhs) {
  if constexpr (ValueTraits<V>::exact) {
    return lhs == rhs;
  } else {
    return std::abs(lhs - rhs) <= Real{1e-9} * (1 + std::abs(lhs) + std::abs(rhs));
  }
}

/// sum_{i=x}^{x+y} sum_{j=u}^{u+v} f(i+j), evaluated term by term.
template <class V>
V rectangle_sum(const Periodic<V>& f, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
  V total = ValueTraits<V>::zero();
  for (std::int64_t i = x; i <= x + y; ++i) {
    for (std::int64_t j = u; j <= u + v; ++j) total += f(i + j);
  }
  return total;
}

/// Moving k from the row index to the column index leaves a rectangle sum
/// unchanged.
template <class V>
bool shift_check(const Periodic<V>& f, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v,
                 std::int64_t k) {
  if (y < 0 || v < 0) throw UsageError("shift_check: y and v must be >= 0");
  return same_value(rectangle_sum(f, x, y, u, v), rectangle_sum(f, x - k, y, u + k, v));
}

inline constexpr std::int64_t kDefaultSizeCap = 1'000'000;

/// K_i = (q_n^{tau-i} - 1)/2 for i = 0..tau, and the shift
/// s = (q_n - q_{n-1}) K_i + (c_n - c_{n-1} - 1).
struct DecompositionParams {
  int n = 0;
  int tau = 3;
  int i = 1;
  std::vector<std::int64_t> K;
  std::int64_t s = 0;
  SequenceTables tables{0};

  std::int64_t q_at(int j) const { return tables.q(j).get_si(); }
  std::int64_t c_at(int j) const { return tables.c(j).get_si(); }
};

/// Throws UsageError for n < 0, tau < 3, i outside [1, tau], or when
/// q_n^tau exceeds size_cap.
DecompositionParams make_decomposition_params(int n, int tau, int i, std::int64_t size_cap = kDefaultSizeCap);

// Level-j pieces at window parameter K, j >= -2. Level -1 and -2 reduce to
// T-(a,K) and T+(a-K,K) because q_{-1} = q_{-2} = 1 and c_{-1} = c_{-2} = 0.
template <class V>
V t_minus_level(const Periodic<V>& f, const SequenceTables& t, std::int64_t a, std::int64_t K, int j) {
  const std::int64_t len = t.q(j).get_si() * K + t.c(j).get_si();
  return t_minus(f, a, len);
}

template <class V>
V t_plus_level(const Periodic<V>& f, const SequenceTables& t, std::int64_t a, std::int64_t K, int j) {
  const std::int64_t len = t.q(j).get_si() * K + t.c(j).get_si();
  return t_plus(f, a - len, len);
}

template <class V>
V s_minus_level(const Periodic<V>& f, const SequenceTables& t, std::int64_t a, std::int64_t K, int j) {
  const std::int64_t shift = t.q(j - 2).get_si() * K + t.c(j - 2).get_si();
  const std::int64_t len =
      (t.q(j - 2).get_si() + t.q(j - 1).get_si()) * K + t.c(j).get_si() - t.c(j - 1).get_si();
  return s_sum(f, a - shift, len);
}

template <class V>
V s_plus_level(const Periodic<V>& f, const SequenceTables& t, std::int64_t a, std::int64_t K, int j) {
  const std::int64_t shift = t.q(j).get_si() * K + t.c(j).get_si();
  const std::int64_t len =
      (t.q(j - 2).get_si() + t.q(j - 1).get_si()) * K + t.c(j).get_si() - t.c(j - 1).get_si();
  return s_sum(f, a - shift, len);
}

/// T-(a,K_{i-1}) = 2T-(a, q_{n-1}K_i + c_{n-1})
///                 - T+(a - q_{n-2}K_i - c_{n-2}, q_{n-2}K_i + c_{n-2})
///                 + S(a - q_{n-2}K_i - c_{n-2}, (q_{n-2}+q_{n-1})K_i + c_n - c_{n-1})
template <class V>
bool verify_lemma_minus(const Periodic<V>& f, std::int64_t a, const DecompositionParams& p) {
  if (p.i < 1 || p.i > p.tau) throw UsageError("verify_lemma_minus: i out of range");
  const int n = p.n;
  const std::int64_t outer = p.K[static_cast<std::size_t>(p.i - 1)];
  const std::int64_t K = p.K[static_cast<std::size_t>(p.i)];
  const std::int64_t lower = p.q_at(n - 2) * K + p.c_at(n - 2);
  const std::int64_t square = (p.q_at(n - 2) + p.q_at(n - 1)) * K + p.c_at(n) - p.c_at(n - 1);
  const V lhs = t_minus(f, a, outer);
  V rhs = ValueTraits<V>::scale(t_minus(f, a, p.q_at(n - 1) * K + p.c_at(n - 1)), 2);
  rhs -= t_plus(f, a - lower, lower);
  rhs += s_sum(f, a - lower, square);
  return same_value(lhs, rhs);
}

/// T+(a-K_{i-1},K_{i-1}) = 2T+(a - q_{n-1}K_i - c_{n-1}, q_{n-1}K_i + c_{n-1})
///                         - T-(a, q_{n-2}K_i + c_{n-2})
///                         + S(a - q_nK_i - c_n, (q_{n-2}+q_{n-1})K_i + c_n - c_{n-1})
template <class V>
bool verify_lemma_plus(const Periodic<V>& f, std::int64_t a, const DecompositionParams& p) {
  if (p.i < 1 || p.i > p.tau) throw UsageError("verify_lemma_plus: i out of range");
  const int n = p.n;
  const std::int64_t outer = p.K[static_cast<std::size_t>(p.i - 1)];
  const std::int64_t K = p.K[static_cast<std::size_t>(p.i)];
  const std::int64_t middle = p.q_at(n - 1) * K + p.c_at(n - 1);
  const std::int64_t square = (p.q_at(n - 2) + p.q_at(n - 1)) * K + p.c_at(n) - p.c_at(n - 1);
  const V lhs = t_plus(f, a - outer, outer);
  V rhs = ValueTraits<V>::scale(t_plus(f, a - middle, middle), 2);
  rhs -= t_minus(f, a, p.q_at(n - 2) * K + p.c_at(n - 2));
  rhs += s_sum(f, a - p.q_at(n) * K - p.c_at(n), square);
  return same_value(lhs, rhs);
}

/// Checks, at K = K_i:
///   T-^(n) = alpha_n T-(a,K) - beta_n T+(a-K,K) + sum_j a_{j,n} S-^(j) - sum_j b_{j,n} S+^(j)
///   T+^(n) = alpha_n T+(a-K,K) - beta_n T-(a,K) + sum_j a_{j,n} S+^(j) - sum_j b_{j,n} S-^(j)
/// and the induction step that produces them from levels n-1 and n-2:
///   T-^(n) = 2T-^(n-1) - T+^(n-2) + S-^(n),  T+^(n) = 2T+^(n-1) - T-^(n-2) + S+^(n).
template <class V>
bool verify_lemma_combined(const Periodic<V>& f, std::int64_t a, const DecompositionParams& p,
                           const CoeffTable& coeffs) {
  using Traits = ValueTraits<V>;
  if (p.i < 1 || p.i > p.tau - 1) throw UsageError("verify_lemma_combined: i must lie in [1, tau-1]");
  if (coeffs.n != p.n) throw UsageError("verify_lemma_combined: coefficient row does not match n");
  const int n = p.n;
  const SequenceTables& t = p.tables;
  const std::int64_t K = p.K[static_cast<std::size_t>(p.i)];

  const V lhs_minus = t_minus_level(f, t, a, K, n);
  const V lhs_plus = t_plus_level(f, t, a, K, n);
  const V base_minus = t_minus(f, a, K);
  const V base_plus = t_plus(f, a - K, K);

  V rhs_minus = Traits::scale(base_minus, coeffs.alpha) - Traits::scale(base_plus, coeffs.beta);
  V rhs_plus = Traits::scale(base_plus, coeffs.alpha) - Traits::scale(base_minus, coeffs.beta);
  for (int j = 0; j <= n; ++j) {
    const BigInt& weight = coeffs.a[static_cast<std::size_t>(j)];
    rhs_minus += Traits::scale(s_minus_level(f, t, a, K, j), weight);
    rhs_plus += Traits::scale(s_plus_level(f, t, a, K, j), weight);
  }
  for (int j = 0; j <= n - 2; ++j) {
    const BigInt& weight = coeffs.b[static_cast<std::size_t>(j)];
    rhs_minus -= Traits::scale(s_plus_level(f, t, a, K, j), weight);
    rhs_plus -= Traits::scale(s_minus_level(f, t, a, K, j), weight);
  }
  if (!same_value(lhs_minus, rhs_minus) || !same_value(lhs_plus, rhs_plus)) return false;

  V step_minus = Traits::scale(t_minus_level(f, t, a, K, n - 1), 2);
  step_minus -= t_plus_level(f, t, a, K, n - 2);
  step_minus += s_minus_level(f, t, a, K, n);
  V step_plus = Traits::scale(t_plus_level(f, t, a, K, n - 1), 2);
  step_plus -= t_minus_level(f, t, a, K, n - 2);
  step_plus += s_plus_level(f, t, a, K, n);
  return same_value(lhs_minus, step_minus) && same_value(lhs_plus, step_plus);
}

struct SignedWindow {
  std::int64_t x = 0;
  int sign = 1;
};

// Relative slack applied when an inexact evaluation is compared against a
// bound that holds exactly.
inline constexpr Real kInequalityGuard = 1e-9L;

/// |sum_i sign_i S(x_i, y)| <= y sqrt(B q m) for pairwise separated windows
/// inside one period. Hypotheses are enforced: violations throw UsageError.
template <class V>
bool verify_sum_s_lemma(const Periodic<V>& f, const std::vector<SignedWindow>& windows, std::int64_t y, Real B) {
  using Traits = ValueTraits<V>;
  const std::int64_t q = f.period();
  if (windows.empty()) throw UsageError("verify_sum_s_lemma: need at least one window");
  if (y <= 0 || y >= q) throw UsageError("verify_sum_s_lemma: need 0 < y < q");
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (windows[k].sign != 1 && windows[k].sign != -1) throw UsageError("verify_sum_s_lemma: signs must be +-1");
    if (k + 1 < windows.size() && !(windows[k].x + y < windows[k + 1].x)) {
      throw UsageError("verify_sum_s_lemma: windows must satisfy x_i + y < x_{i+1}");
    }
  }
  if (windows.back().x + y - windows.front().x > q) {
    throw UsageError("verify_sum_s_lemma: windows must fit in one period");
  }
  if (!has_zero_mean(f)) throw UsageError("verify_sum_s_lemma: f must have zero mean");
  const MinBResult admissible = min_B(f, q);
  if constexpr (Traits::exact) {
    if (to_rational(B) < admissible.B_exact) throw UsageError("verify_sum_s_lemma: B below min_B(f, q)");
  } else {
    if (B < admissible.B * (1 - kInequalityGuard)) throw UsageError("verify_sum_s_lemma: B below min_B(f, q)");
  }

  V total = Traits::zero();
  for (const SignedWindow& w : windows) {
    const V s = s_sum(f, w.x, y);
    if (w.sign > 0) {
      total += s;
    } else {
      total -= s;
    }
  }
  const auto m = static_cast<long>(windows.size());
  if constexpr (Traits::exact) {
    // Both sides squared, compared exactly.
    const Rational rhs = Rational(BigInt(static_cast<long>(y)) * static_cast<long>(y) * static_cast<long>(q) * m) *
                         to_rational(B);
    return total.norm() <= rhs;
  } else {
    const Real rhs = static_cast<Real>(y) * std::sqrt(B * static_cast<Real>(q) * static_cast<Real>(m));
    return std::abs(total) <= rhs * (1 + kInequalityGuard);
  }
}

/// |sum_{n=a+1}^{a+N} f(n)| <= sqrt(Bq) sqrt(N/K) + |-T-(a,K) + T+(a+N,K)| / K.
/// f must be certified in the (A, B) class; uncertified input throws.
template <class V>
bool verify_master_inequality(const Periodic<V>& f, std::int64_t a, std::int64_t N, std::int64_t K, Real A,
                              Real B) {
  using Traits = ValueTraits<V>;
  if (K < 1 || K > N) throw UsageError("verify_master_inequality: need 1 <= K <= N");
  if (!is_member(f, ClassFParams{A, B, f.period()}, f.period())) {
    throw UsageError("verify_master_inequality: f is not certified in the class for (A, B)");
  }
  const Real lhs = std::sqrt(Traits::norm_real(f.window_sum(a, N)));
  const V edge = t_plus(f, a + N, K) - t_minus(f, a, K);
  const Real q = static_cast<Real>(f.period());
  const Real rhs = std::sqrt(B * q) * std::sqrt(static_cast<Real>(N) / static_cast<Real>(K)) +
                   std::sqrt(Traits::norm_real(edge)) / static_cast<Real>(K);
  return lhs <= rhs * (1 + kInequalityGuard);
}

}  // namespace charbound
