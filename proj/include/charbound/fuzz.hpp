#pragma once

// Seeded fuzz campaigns over the triangular-sum identities, with replay
// files that pin down a single failing trial.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "charbound/periodic.hpp"
#include "charbound/tri_sums.hpp"

namespace charbound {

enum class CheckKind { Shift, WeightIdentity, LemmaMinus, LemmaPlus, LemmaCombined, SumS };

std::string to_string(CheckKind kind);
CheckKind parse_check_kind(const std::string& name);
const std::vector<CheckKind>& all_check_kinds();

struct FuzzConfig {
  std::uint64_t seed = 1;
  int trials = 500;
  std::int64_t q = 101;     // period of the random Gaussian-integer functions
  int n = 2;                // lemma trials cycle n over 0..n
  int tau = 3;
  std::int64_t size_cap = kDefaultSizeCap;
  std::uint32_t character_q_max = 50;  // sum-of-squares trials on characters
  // Replaces the random functions when set; q is then its period. Sum-of-squares
  // trials use it only if it has mean zero.
  std::optional<PeriodicFunction> function;
};

/// Everything needed to re-run one trial.
struct TrialCase {
  CheckKind check = CheckKind::Shift;
  std::uint64_t seed = 0;
  int trial = 0;
  // Either explicit values or a character (character_q > 0).
  std::optional<PeriodicFunction> f;
  std::uint32_t character_q = 0;
  std::uint64_t character_index = 0;

  std::int64_t a = 0, x = 0, y = 0, u = 0, v = 0, k = 0;
  int n = 0, tau = 3, i = 1;
  std::int64_t size_cap = kDefaultSizeCap;
  std::vector<SignedWindow> windows;
  Real B = 0;
};

/// Random values uniform on {-5..5} x {-5..5}.
PeriodicFunction random_gaussian_function(std::uint64_t seed, std::uint64_t stream, std::int64_t q,
                                          bool zero_mean = false);

/// Deterministic case for (config, check, trial).
TrialCase make_trial(const FuzzConfig& config, CheckKind check, int trial);

/// Runs one case. Precondition failures propagate as UsageError.
bool run_trial(const TrialCase& c);

struct CheckTally {
  CheckKind check = CheckKind::Shift;
  int passed = 0;
  int total = 0;
};

struct FuzzSummary {
  std::vector<CheckTally> tallies;
  std::optional<TrialCase> first_failure;
  bool all_passed() const { return !first_failure; }
};

/// Validates the configuration (tau >= 3, q_n^tau under the cap) up front,
/// then runs `trials` cases of every check. Results do not depend on the
/// worker count.
FuzzSummary run_identity_fuzz(const FuzzConfig& config, unsigned threads = 1);

void write_replay(std::ostream& out, const TrialCase& c);
TrialCase read_replay(std::istream& in);

}  // namespace charbound
