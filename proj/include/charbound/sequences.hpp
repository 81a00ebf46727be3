#pragma once

// Pell-type sequences q_n, p_n, c_n, the derived constants delta_n, and the
// integer coefficient tables that drive the triangular-sum recursion.

#include <utility>
#include <vector>

#include "charbound/common.hpp"

namespace charbound {

// Largest n accepted by gen_sequences / gen_coeffs. q_n grows like
// (1+sqrt 2)^n, so 2000 keeps every entry well inside long double range.
inline constexpr int kMaxSequenceIndex = 2000;

/// Exact integer sequences indexed from -2.
///
/// q: q_{-2}=q_{-1}=1, q_n = 2q_{n-1} + q_{n-2}
/// p: p_{-2}=p_{-1}=0, p_n = 2p_{n-1} + p_{n-2} + (q_{n-1}+q_{n-2})/2
/// c: c_n = (q_n - 1)/2
/// delta_n = p_n / (q_n ln q_n), defined for n >= 0.
class SequenceTables {
 public:
  explicit SequenceTables(int n_max);

  int n_max() const { return n_max_; }

  const BigInt& q(int n) const { return q_.at(slot(n)); }
  const BigInt& p(int n) const { return p_.at(slot(n)); }
  const BigInt& c(int n) const { return c_.at(slot(n)); }
  Real delta(int n) const;

 private:
  static std::size_t slot(int n);

  int n_max_;
  std::vector<BigInt> q_;
  std::vector<BigInt> p_;
  std::vector<BigInt> c_;
  std::vector<Real> delta_;
};

SequenceTables gen_sequences(int n_max);

/// Closed-form (q_n, p_n) from the characteristic roots 1 +- sqrt 2,
/// evaluated in long double. Numeric cross-check only.
std::pair<Real, Real> closed_form_check(int n);

/// 1 / (4 ln(1 + sqrt 2)), the limit of delta_n.
Real delta_limit();

/// Row n of the coefficient system. a has n+1 entries (j = 0..n), b has
/// max(n-1, 0) entries (j = 0..n-2).
struct CoeffTable {
  int n = 0;
  std::vector<BigInt> a;
  std::vector<BigInt> b;
  BigInt alpha;
  BigInt beta;
};

CoeffTable gen_coeffs(int n);

/// Rows 0..n_max in one pass; row k equals gen_coeffs(k).
std::vector<CoeffTable> gen_coeff_rows(int n_max);

/// 2p_n == sum_j a_{j,n}(q_{j-1}+q_{j-2}) + sum_j b_{j,n}(q_{j-1}+q_{j-2}).
bool verify_pn_identity(int n);

struct StepWeights {
  int n = 0;
  int i = 1;
  BigInt A;
  BigInt B;
};

/// A_i = (q_n^i + 1)/2, B_i = (q_n^i - 1)/2.
StepWeights step_weights(int n, int i);

}  // namespace charbound
