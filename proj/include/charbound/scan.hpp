#pragma once

// Character scans: true S_chi / T_chi maxima next to the rigorous bounds,
// and the class-membership probe for characters.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "charbound/bounds.hpp"
#include "charbound/dirichlet.hpp"

namespace charbound {

enum class ModuliFilter { All, Primes };
enum class CharFilter { All, Real };

inline constexpr std::uint32_t kScanModulusCap = 5000;
inline constexpr std::uint32_t kMembershipModulusCap = 150;

struct ScanConfig {
  std::uint32_t q_min = 3;
  std::uint32_t q_max = 50;
  ModuliFilter moduli = ModuliFilter::All;
  CharFilter chars = CharFilter::All;
  std::uint32_t q_cap = kScanModulusCap;
  unsigned threads = 1;
};

struct ScanRow {
  std::uint32_t q = 0;
  std::uint64_t char_index = 0;
  int parity = 1;
  Real S_chi = 0;
  Real T_chi = 0;
  std::int64_t M = 0;  // witness window of S_chi
  std::int64_t N = 0;
  ApplicableValue cor1_n0;
  Real br = 0;
  Real dw = 0;
  Real pomerance = 0;
  Real margin_min = 0;  // over applicable rigorous bounds
  bool violation = false;
};

/// One nonprincipal character against cor1(n=0), BR, DW and Pomerance.
ScanRow evaluate_character(const DirichletCharacter& chi);

/// Rows sorted by (q, char_index) whatever the worker count.
/// Throws UsageError for an empty or over-cap range.
std::vector<ScanRow> scan_characters(const ScanConfig& config);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// CHARBOUND_THREADS; unset or 0 means hardware concurrency.
unsigned threads_from_env();

struct MembershipRow {
  std::uint64_t char_index = 0;
  std::uint32_t order = 1;
  int parity = 1;
  Real bound_A = 0;
  MinBResult min_B;
  bool within_unit = false;  // min_B <= 1, exactly for Gaussian characters
};

/// bound_A and min_B (K up to q) for every nonprincipal character mod q.
std::vector<MembershipRow> membership_probe(std::uint32_t q, std::uint32_t cap = kMembershipModulusCap);

}  // namespace charbound
