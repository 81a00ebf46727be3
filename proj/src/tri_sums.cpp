#include "charbound/tri_sums.hpp"

#include <string>

namespace charbound {

DecompositionParams make_decomposition_params(int n, int tau, int i, std::int64_t size_cap) {
  if (n < 0) throw UsageError("decomposition: n must be >= 0");
  if (tau < 3) throw UsageError("decomposition: tau must be >= 3, got " + std::to_string(tau));
  if (i < 1 || i > tau) throw UsageError("decomposition: i must lie in [1, tau], got " + std::to_string(i));

  DecompositionParams p;
  p.n = n;
  p.tau = tau;
  p.i = i;
  p.tables = gen_sequences(n);

  const BigInt& qn = p.tables.q(n);
  BigInt top;
  mpz_pow_ui(top.get_mpz_t(), qn.get_mpz_t(), static_cast<unsigned long>(tau));
  if (top > BigInt(static_cast<long>(size_cap))) {
    throw UsageError("decomposition: q_n^tau = " + top.get_str() + " exceeds the size cap " +
                     std::to_string(size_cap));
  }
  // Window arithmetic runs in int64; keep a wide margin below 2^63.
  if (mpz_sizeinbase(top.get_mpz_t(), 2) > 60) throw UsageError("decomposition: q_n^tau too large");

  p.K.resize(static_cast<std::size_t>(tau) + 1);
  BigInt power = 1;
  for (int k = tau; k >= 0; --k) {
    p.K[static_cast<std::size_t>(k)] = BigInt((power - 1) / 2).get_si();
    power *= qn;
  }

  const std::int64_t qn_small = qn.get_si();
  const std::int64_t cn = p.c_at(n);
  for (int k = 0; k < tau; ++k) {
    if (p.K[static_cast<std::size_t>(k)] != qn_small * p.K[static_cast<std::size_t>(k) + 1] + cn) {
      throw std::logic_error("decomposition: K_i = q_n K_{i+1} + c_n failed");
    }
  }

  const std::int64_t Ki = p.K[static_cast<std::size_t>(i)];
  p.s = (qn_small - p.q_at(n - 1)) * Ki + (cn - p.c_at(n - 1) - 1);
  const std::int64_t s_alt = (p.q_at(n - 1) + p.q_at(n - 2)) * Ki + p.c_at(n - 1) + p.c_at(n - 2);
  if (p.s != s_alt) throw std::logic_error("decomposition: the two shift formulas disagree");
  return p;
}

}  // namespace charbound
