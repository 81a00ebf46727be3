#include "charbound/sequences.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace charbound {

namespace {

void check_index(int n, const char* what) {
  if (n < 0 || n > kMaxSequenceIndex) {
    throw UsageError(std::string(what) + ": n must lie in [0, " +
                     std::to_string(kMaxSequenceIndex) + "], got " + std::to_string(n));
  }
}

const BigInt& entry_or_zero(const std::vector<BigInt>& row, int j) {
  static const BigInt kZero = 0;
  if (j < 0 || static_cast<std::size_t>(j) >= row.size()) return kZero;
  return row[static_cast<std::size_t>(j)];
}

}  // namespace

SequenceTables::SequenceTables(int n_max) : n_max_(n_max) {
  check_index(n_max, "gen_sequences");
  const std::size_t size = static_cast<std::size_t>(n_max) + 3;
  q_.resize(size);
  p_.resize(size);
  c_.resize(size);
  delta_.resize(static_cast<std::size_t>(n_max) + 1);

  q_[0] = 1;
  q_[1] = 1;
  p_[0] = 0;
  p_[1] = 0;
  for (std::size_t k = 2; k < size; ++k) {
    q_[k] = 2 * q_[k - 1] + q_[k - 2];
    const BigInt pair = q_[k - 1] + q_[k - 2];
    // The recurrence for p halves this sum; integrality is not automatic.
    if (!mpz_even_p(pair.get_mpz_t())) {
      throw std::logic_error("q_{n-1} + q_{n-2} is odd at n = " + std::to_string(int(k) - 2));
    }
    p_[k] = 2 * p_[k - 1] + p_[k - 2] + pair / 2;
  }
  for (std::size_t k = 0; k < size; ++k) {
    if (!mpz_odd_p(q_[k].get_mpz_t())) {
      throw std::logic_error("q_n is even at n = " + std::to_string(int(k) - 2));
    }
    c_[k] = (q_[k] - 1) / 2;
  }
  for (int n = 0; n <= n_max; ++n) {
    const Real qn = to_real(q(n));
    delta_[static_cast<std::size_t>(n)] = to_real(p(n)) / (qn * std::log(qn));
  }
}

std::size_t SequenceTables::slot(int n) {
  if (n < -2) throw std::out_of_range("sequence index below -2");
  return static_cast<std::size_t>(n + 2);
}

Real SequenceTables::delta(int n) const {
  if (n < 0) throw std::out_of_range("delta_n is defined for n >= 0");
  return delta_.at(static_cast<std::size_t>(n));
}

SequenceTables gen_sequences(int n_max) { return SequenceTables(n_max); }

std::pair<Real, Real> closed_form_check(int n) {
  check_index(n, "closed_form_check");
  const Real root2 = std::sqrt(Real{2});
  const Real l1 = 1 + root2;
  const Real l2 = 1 - root2;
  const Real nn = static_cast<Real>(n);
  const Real l1n = std::pow(l1, nn);
  const Real l2n = std::pow(l2, nn);
  const Real q = (Real{1.5} + root2) * l1n + (Real{1.5} - root2) * l2n;
  const Real c = 5 * root2 / 16;
  const Real p = (Real{0.5} + c) * l1n + (Real{0.5} - c) * l2n +
                 nn / 8 * (l1n * l1 * l1) + nn / 8 * (l2n * l2 * l2);
  return {q, p};
}

Real delta_limit() { return 1 / (4 * std::log(1 + std::sqrt(Real{2}))); }

std::vector<CoeffTable> gen_coeff_rows(int n_max) {
  check_index(n_max, "gen_coeffs");
  std::vector<CoeffTable> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    CoeffTable row;
    row.n = n;
    if (n == 0) {
      row.a = {1};
      row.alpha = 2;
      row.beta = 1;
    } else if (n == 1) {
      row.a = {2, 1};
      row.alpha = 4;
      row.beta = 3;
    } else {
      const CoeffTable& prev = rows[static_cast<std::size_t>(n - 1)];
      const CoeffTable& prev2 = rows[static_cast<std::size_t>(n - 2)];
      row.a.resize(static_cast<std::size_t>(n) + 1);
      row.b.resize(static_cast<std::size_t>(n) - 1);
      // b_{j,n-2} is absent for j > n-4 and counts as zero, which folds the
      // two a-branches into one formula.
      for (int j = 0; j < n; ++j) {
        row.a[static_cast<std::size_t>(j)] = 2 * entry_or_zero(prev.a, j) + entry_or_zero(prev2.b, j);
      }
      row.a[static_cast<std::size_t>(n)] = 1;
      for (int j = 0; j <= n - 2; ++j) {
        row.b[static_cast<std::size_t>(j)] = entry_or_zero(prev2.a, j) + 2 * entry_or_zero(prev.b, j);
      }
      row.alpha = 2 * prev.alpha + prev2.beta;
      row.beta = prev2.alpha + 2 * prev.beta;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CoeffTable gen_coeffs(int n) {
  auto rows = gen_coeff_rows(n);
  return std::move(rows.back());
}

bool verify_pn_identity(int n) {
  const SequenceTables tables(n);
  const CoeffTable coeffs = gen_coeffs(n);
  BigInt rhs = 0;
  for (int j = 0; j <= n; ++j) {
    rhs += coeffs.a[static_cast<std::size_t>(j)] * (tables.q(j - 1) + tables.q(j - 2));
  }
  for (int j = 0; j <= n - 2; ++j) {
    rhs += coeffs.b[static_cast<std::size_t>(j)] * (tables.q(j - 1) + tables.q(j - 2));
  }
  return 2 * tables.p(n) == rhs;
}

StepWeights step_weights(int n, int i) {
  if (i < 1) throw UsageError("step_weights: i must be >= 1");
  const SequenceTables tables(n);
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), tables.q(n).get_mpz_t(), static_cast<unsigned long>(i));
  return StepWeights{n, i, (power + 1) / 2, (power - 1) / 2};
}

}  // namespace charbound
