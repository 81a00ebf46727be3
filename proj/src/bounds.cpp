#include "charbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "charbound/dirichlet.hpp"

namespace charbound {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

Real sqrt2_minus_1() { return std::sqrt(Real{2}) - 1; }

// (sqrt 2 - 1) 2 p_n / (q_n - 1)
Real tail_ratio(int n, const SequenceTables& t) {
  return sqrt2_minus_1() * 2 * to_real(t.p(n)) / (to_real(t.q(n)) - 1);
}

// q_n + q_n^-2
Real stretch(int n, const SequenceTables& t) {
  const Real qn = to_real(t.q(n));
  return qn + 1 / (qn * qn);
}

void require_row(int n, const SequenceTables& t) {
  if (n < 0 || n > t.n_max()) throw UsageError("bound: sequence row " + std::to_string(n) + " not tabulated");
}

}  // namespace

Real bound_dw(Real q, Real A, Real B) {
  if (q < 2) throw UsageError("bound_dw: q must be >= 2");
  const Real rq = std::sqrt(q);
  return std::sqrt(B) / (2 * std::log(Real{2})) * rq * std::log(q) + 3 * A * rq;
}

Real bound_br(Real q, Real A, Real B) {
  if (q < 2) throw UsageError("bound_br: q must be >= 2");
  const Real rq = std::sqrt(q);
  return std::sqrt(B) / (3 * std::log(Real{3})) * rq * std::log(q) + (5 * std::sqrt(B) + Real{1.5} * A) * rq;
}

Real psi_n(Real q, Real B, int n, const SequenceTables& tables) {
  require_row(n, tables);
  if (q < 2) throw UsageError("psi_n: q must be >= 2");
  return std::sqrt(B) * stretch(n, tables) * (tables.delta(n) * std::log(q) + tail_ratio(n, tables));
}

Real thm1_threshold(int n, const SequenceTables& tables) {
  require_row(n, tables);
  return std::pow(to_real(tables.q(n)), Real{6});
}

ApplicableValue bound_thm1(Real q, Real A, Real B, int n, const SequenceTables& tables) {
  require_row(n, tables);
  if (q < 2) throw UsageError("bound_thm1: q must be >= 2");
  const Real rq = std::sqrt(q);
  const Real rb = std::sqrt(B);
  const Real value = rb * tables.delta(n) * rq * std::log(q) +
                     (rb * std::sqrt(stretch(n, tables)) + rb * tail_ratio(n, tables) + A / 2) * rq +
                     psi_n(q, B, n, tables);
  // q_n^6 <= q compared exactly on integers when q is integral.
  bool applicable;
  if (q == std::floor(q) && q < Real{1e18}) {
    BigInt threshold;
    mpz_pow_ui(threshold.get_mpz_t(), tables.q(n).get_mpz_t(), 6);
    applicable = BigInt(std::to_string(static_cast<unsigned long long>(q))) >= threshold;
  } else {
    applicable = q >= thm1_threshold(n, tables);
  }
  return {value, applicable};
}

ApplicableValue bound_cor1(Real q, int n, const SequenceTables& tables) { return bound_thm1(q, 1, 1, n, tables); }

Real bound_pomerance(Real q, int parity) {
  if (q < 3) throw UsageError("bound_pomerance: q must be >= 3");
  if (parity != 1 && parity != -1) throw UsageError("bound_pomerance: parity must be +1 or -1");
  const Real rq = std::sqrt(q);
  const Real lq = std::log(q);
  const Real llq = std::log(lq);
  if (parity == 1) {
    return 2 / (kPi * kPi) * rq * lq + 4 / (kPi * kPi) * rq * llq + Real{1.5} * rq;
  }
  return 1 / (2 * kPi) * rq * lq + 1 / kPi * rq * llq + rq;
}

Real gs_constant_c(bool cubefree) { return cubefree ? Real{1} / 4 : Real{1} / 3; }

GsBound bound_gs(Real q, int parity, bool cubefree) {
  if (q < 2) throw UsageError("bound_gs: q must be >= 2");
  if (parity != 1 && parity != -1) throw UsageError("bound_gs: parity must be +1 or -1");
  const Real c = gs_constant_c(cubefree);
  const Real lead = parity == 1 ? Real{69} / 70 * c / (kPi * std::sqrt(Real{3})) : c / kPi;
  return {lead * std::sqrt(q) * std::log(q), false};
}

std::optional<std::pair<int, Real>> best_n_for_q(Real q, Real A, Real B, const SequenceTables& tables) {
  std::optional<std::pair<int, Real>> best;
  for (int n = 0; n <= tables.n_max(); ++n) {
    const ApplicableValue v = bound_thm1(q, A, B, n, tables);
    if (!v.applicable) break;  // q_n^6 increases with n
    if (!best || v.value < best->second) best = std::pair{n, v.value};
  }
  return best;
}

std::optional<Real> thm1_br_crossover(int n, const SequenceTables& tables, Real q_max) {
  const Real start = thm1_threshold(n, tables);
  std::optional<Real> crossover;
  const Real step = std::pow(Real{2}, Real{0.125});
  for (Real q = start; q <= q_max; q *= step) {
    const bool below = bound_thm1(q, 1, 1, n, tables).value < bound_br(q, 1, 1);
    if (below && !crossover) crossover = q;
    if (!below) crossover.reset();
  }
  return crossover;
}

bool exceeds(Real observed, Real bound) { return observed > bound * (1 + kViolationGuard); }

BoundReport compare(std::uint64_t q, const std::vector<EmpiricalMax>& empirical) {
  if (q < 2) throw UsageError("compare: q must be >= 2");
  const Real qr = static_cast<Real>(q);
  // Enough rows for every n with q_n^6 <= 2^64.
  const SequenceTables tables = gen_sequences(8);

  BoundReport report;
  report.q = q;

  auto add = [&](std::string name, Real value, bool applicable, bool rigorous, SumTarget target, int parity) {
    BoundEntry e;
    e.name = std::move(name);
    e.value = value;
    e.applicable = applicable;
    e.rigorous = rigorous;
    e.target = target;
    e.parity_scope = parity;
    report.entries.push_back(std::move(e));
  };

  add("dobrowolski_williams", bound_dw(qr, 1, 1), true, true, SumTarget::WindowMax, 0);
  add("bachman_rachakonda", bound_br(qr, 1, 1), true, true, SumTarget::WindowMax, 0);
  for (int n = 0; n <= tables.n_max(); ++n) {
    const ApplicableValue v = bound_cor1(qr, n, tables);
    // Report n = 0 always and higher n only while applicable.
    if (n > 0 && !v.applicable) break;
    add("cor1_n" + std::to_string(n), v.value, v.applicable, true, SumTarget::WindowMax, 0);
  }
  if (q >= 3) {
    add("pomerance_even", bound_pomerance(qr, 1), true, true, SumTarget::WindowMax, 1);
    add("pomerance_odd", bound_pomerance(qr, -1), true, true, SumTarget::WindowMax, -1);
  }
  const bool cubefree = is_cubefree(q);
  add("granville_sound_even", bound_gs(qr, 1, cubefree).value, true, false, SumTarget::PrefixMax, 1);
  add("granville_sound_odd", bound_gs(qr, -1, cubefree).value, true, false, SumTarget::PrefixMax, -1);

  for (BoundEntry& e : report.entries) {
    std::optional<Real> observed;
    for (const EmpiricalMax& m : empirical) {
      if (e.parity_scope != 0 && m.parity != e.parity_scope) continue;
      const Real v = e.target == SumTarget::WindowMax ? m.s_chi : m.t_chi;
      observed = observed ? std::max(*observed, v) : v;
    }
    if (!observed) continue;
    e.empirical_max = observed;
    e.margin = e.value - *observed;
    e.violation = e.rigorous && e.applicable && exceeds(*observed, e.value);
  }

  auto best_for = [&](int parity) {
    const BoundEntry* best = nullptr;
    for (const BoundEntry& e : report.entries) {
      if (!e.rigorous || !e.applicable) continue;
      if (parity != 0 && e.parity_scope != 0 && e.parity_scope != parity) continue;
      if (!best || e.value < best->value) best = &e;
    }
    return best ? best->name : std::string();
  };
  report.best_rigorous = best_for(0);
  report.best_rigorous_even = best_for(1);
  report.best_rigorous_odd = best_for(-1);
  return report;
}

void write_report_csv(std::ostream& out, const BoundReport& report) {
  out << "q,bound,value,applicable,rigorous,target,parity,empirical_max,margin,violation\n";
  for (const BoundEntry& e : report.entries) {
    out << report.q << ',' << e.name << ',' << format_real(e.value) << ',' << (e.applicable ? "true" : "false")
        << ',' << (e.rigorous ? "true" : "false") << ','
        << (e.target == SumTarget::WindowMax ? "S_chi" : "T_chi") << ',' << e.parity_scope << ','
        << (e.empirical_max ? format_real(*e.empirical_max) : "") << ','
        << (e.margin ? format_real(*e.margin) : "") << ',' << (e.violation ? "true" : "false") << '\n';
  }
}

void print_report_table(std::ostream& out, const BoundReport& report) {
  out << "q = " << report.q << "  (A = B = 1)\n";
  out << std::left << std::setw(24) << "bound" << std::right << std::setw(18) << "value" << std::setw(8)
      << "applies" << std::setw(10) << "rigorous" << std::setw(8) << "target" << std::setw(18) << "empirical"
      << std::setw(18) << "margin" << "  status\n";
  for (const BoundEntry& e : report.entries) {
    out << std::left << std::setw(24) << e.name << std::right << std::setw(18) << format_real(e.value)
        << std::setw(8) << (e.applicable ? "yes" : "no") << std::setw(10) << (e.rigorous ? "yes" : "no")
        << std::setw(8) << (e.target == SumTarget::WindowMax ? "S_chi" : "T_chi") << std::setw(18)
        << (e.empirical_max ? format_real(*e.empirical_max) : "-") << std::setw(18)
        << (e.margin ? format_real(*e.margin) : "-") << "  " << (e.violation ? "VIOLATION" : "ok") << '\n';
  }
  auto name = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  out << "best rigorous: even " << name(report.best_rigorous_even) << ", odd " << name(report.best_rigorous_odd)
      << '\n';
}

}  // namespace charbound
