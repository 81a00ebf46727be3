#pragma once

// Explicit upper bounds for |sum_{n=a+1}^{a+N} f(n)| and for character sum
// maxima, and a comparator against scanned maxima.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charbound/common.hpp"
#include "charbound/sequences.hpp"

namespace charbound {

/// Dobrowolski-Williams: (sqrt B / (2 ln 2)) sqrt q ln q + 3 A sqrt q.
Real bound_dw(Real q, Real A, Real B);

/// Bachman-Rachakonda: (sqrt B / (3 ln 3)) sqrt q ln q + (5 sqrt B + 1.5 A) sqrt q.
Real bound_br(Real q, Real A, Real B);

/// Lower-order term of the n-th refined bound:
/// sqrt B (q_n + q_n^-2)(delta_n ln q + (sqrt 2 - 1) 2 p_n / (q_n - 1)).
Real psi_n(Real q, Real B, int n, const SequenceTables& tables);

struct ApplicableValue {
  Real value = 0;
  bool applicable = false;
};

/// Refined bound with free parameter n; applicable when q >= q_n^6.
ApplicableValue bound_thm1(Real q, Real A, Real B, int n, const SequenceTables& tables);

/// bound_thm1 with A = B = 1, the class every nonprincipal character mod q
/// belongs to.
ApplicableValue bound_cor1(Real q, int n, const SequenceTables& tables);

/// q_n^6 as a real; the smallest q where bound_thm1(., n) applies.
Real thm1_threshold(int n, const SequenceTables& tables);

/// Pomerance's explicit bounds for S_chi. parity +1: even characters, -1:
/// odd. Requires q >= 3 so that ln ln q is defined.
Real bound_pomerance(Real q, int parity);

/// Granville-Soundararajan leading term for T_chi with the o(1) dropped:
/// never rigorous.
struct GsBound {
  Real value = 0;
  bool rigorous = false;
};
GsBound bound_gs(Real q, int parity, bool cubefree);
Real gs_constant_c(bool cubefree);

/// argmin over applicable n of bound_thm1; nullopt when q < q_0^6 = 729.
/// Only rows present in `tables` are searched.
std::optional<std::pair<int, Real>> best_n_for_q(Real q, Real A, Real B, const SequenceTables& tables);

/// Smallest q on the grid {q_n^6 * 2^(k/8)} at which bound_thm1(q,1,1,n)
/// drops below bound_br(q,1,1) and stays below up to q_max; nullopt if none.
std::optional<Real> thm1_br_crossover(int n, const SequenceTables& tables, Real q_max = 1e300L);

enum class SumTarget { WindowMax, PrefixMax };

struct EmpiricalMax {
  std::uint64_t char_index = 0;
  Real s_chi = 0;
  Real t_chi = 0;
  int parity = 1;
};

struct BoundEntry {
  std::string name;
  Real value = 0;
  bool applicable = true;
  bool rigorous = true;
  SumTarget target = SumTarget::WindowMax;
  int parity_scope = 0;  // 0: all characters, +-1: only that parity
  std::optional<Real> empirical_max;
  std::optional<Real> margin;
  bool violation = false;
};

struct BoundReport {
  std::uint64_t q = 0;
  Real A = 1;
  Real B = 1;
  std::vector<BoundEntry> entries;
  // Smallest applicable rigorous value, parity-scoped entries included.
  std::string best_rigorous;
  // Smallest applicable rigorous bound covering even / odd characters.
  std::string best_rigorous_even;
  std::string best_rigorous_odd;
};

/// Evaluates every bound at (q, A = B = 1). With empirical maxima, each
/// rigorous entry records margin = bound - max(S_chi) over the characters it
/// covers (T_chi for prefix bounds) and flags a violation when the maximum
/// exceeds the bound by more than the relative float guard.
BoundReport compare(std::uint64_t q, const std::vector<EmpiricalMax>& empirical = {});

/// bound < observed beyond the relative guard kViolationGuard.
bool exceeds(Real observed, Real bound);
inline constexpr Real kViolationGuard = 1e-9L;

void write_report_csv(std::ostream& out, const BoundReport& report);
void print_report_table(std::ostream& out, const BoundReport& report);

}  // namespace charbound
