#include "charbound/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <string>
#include <thread>

namespace charbound {

namespace {

const SequenceTables& row_zero_tables() {
  static const SequenceTables tables = gen_sequences(0);
  return tables;
}

struct WorkItem {
  std::uint32_t q;
  std::uint64_t index;
};

}  // namespace

ScanRow evaluate_character(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw UsageError("evaluate_character: principal character");
  const Real q = chi.q();
  ScanRow row;
  row.q = chi.q();
  row.char_index = chi.index();
  row.parity = chi.parity();
  const SChiResult s = s_chi(chi);
  row.S_chi = s.value;
  row.M = s.M;
  row.N = s.N;
  row.T_chi = t_chi(chi);

  row.cor1_n0 = bound_cor1(q, 0, row_zero_tables());
  row.br = bound_br(q, 1, 1);
  row.dw = bound_dw(q, 1, 1);
  row.pomerance = bound_pomerance(q, row.parity);

  row.margin_min = std::min({row.br, row.dw, row.pomerance}) - row.S_chi;
  if (row.cor1_n0.applicable) row.margin_min = std::min(row.margin_min, row.cor1_n0.value - row.S_chi);
  row.violation = exceeds(row.S_chi, row.br) || exceeds(row.S_chi, row.dw) || exceeds(row.S_chi, row.pomerance) ||
                  (row.cor1_n0.applicable && exceeds(row.S_chi, row.cor1_n0.value));
  return row;
}

std::vector<ScanRow> scan_characters(const ScanConfig& config) {
  if (config.q_min < 1 || config.q_min > config.q_max) throw UsageError("scan: need 1 <= q-min <= q-max");
  if (config.q_max > config.q_cap) {
    throw UsageError("scan: q-max " + std::to_string(config.q_max) + " exceeds the cap " +
                     std::to_string(config.q_cap));
  }

  std::vector<std::uint32_t> moduli;
  for (std::uint32_t q = std::max(config.q_min, 3u); q <= config.q_max; ++q) {
    if (config.moduli == ModuliFilter::Primes && !is_prime(q)) continue;
    moduli.push_back(q);
  }

  // Work items are single characters so large moduli spread across workers.
  std::vector<WorkItem> items;
  std::vector<CharacterGroup> groups;
  groups.reserve(moduli.size());
  for (std::uint32_t q : moduli) {
    groups.emplace_back(q, config.q_cap);
    for (std::uint64_t k = 1; k < groups.back().size(); ++k) items.push_back({q, k});
  }
  std::vector<std::size_t> group_of(items.size());
  for (std::size_t i = 0, g = 0; i < items.size(); ++i) {
    while (groups[g].q() != items[i].q) ++g;
    group_of[i] = g;
  }

  std::vector<std::optional<ScanRow>> slots(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const DirichletCharacter chi = groups[group_of[i]].character(items[i].index);
      if (config.chars == CharFilter::Real && !chi.is_real()) continue;
      slots[i] = evaluate_character(chi);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<ScanRow> rows;
  for (auto& slot : slots) {
    if (slot) rows.push_back(*slot);
  }
  return rows;  // items were generated in (q, index) order
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "q,char_index,parity,S_chi,T_chi,bound_cor1_n0,bound_br,bound_dw,bound_pomerance,margin_min,violation\n";
  for (const ScanRow& r : rows) {
    out << r.q << ',' << r.char_index << ',' << r.parity << ',' << format_real(r.S_chi) << ','
        << format_real(r.T_chi) << ',' << (r.cor1_n0.applicable ? format_real(r.cor1_n0.value) : "NA") << ','
        << format_real(r.br) << ',' << format_real(r.dw) << ',' << format_real(r.pomerance) << ','
        << format_real(r.margin_min) << ',' << (r.violation ? "true" : "false") << '\n';
  }
}

unsigned threads_from_env() {
  const char* env = std::getenv("CHARBOUND_THREADS");
  unsigned n = 0;
  if (env && *env) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("CHARBOUND_THREADS: not a number: ") + env);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::vector<MembershipRow> membership_probe(std::uint32_t q, std::uint32_t cap) {
  if (q < 1 || q > cap) {
    throw UsageError("membership: q must be in [1, " + std::to_string(cap) + "]");
  }
  const CharacterGroup group(q, std::max(cap, q));
  std::vector<MembershipRow> rows;
  for (std::uint64_t k = 1; k < group.size(); ++k) {
    const DirichletCharacter chi = group.character(k);
    MembershipRow row;
    row.char_index = k;
    row.order = chi.order();
    row.parity = chi.parity();
    if (chi.is_gaussian()) {
      const PeriodicFunction f = chi.exact_function();
      row.bound_A = bound_A(f);
      row.min_B = min_B(f, q);
      row.within_unit = !row.min_B.unbounded() && row.min_B.B_exact <= 1;
    } else {
      const ApproxPeriodicFunction f = chi.approx_function();
      row.bound_A = bound_A(f);
      row.min_B = min_B(f, q);
      row.within_unit = !row.min_B.unbounded() && row.min_B.B <= 1 + Real{1e-12};
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace charbound
