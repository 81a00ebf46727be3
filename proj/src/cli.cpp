#include "charbound/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "charbound/bounds.hpp"
#include "charbound/dirichlet.hpp"
#include "charbound/fuzz.hpp"
#include "charbound/scan.hpp"
#include "charbound/sequences.hpp"

namespace charbound::cli {

namespace {

struct Table1Row {
  long q;
  long p;
  const char* delta;
};

// Reference rows n = 0..4.
constexpr std::array<Table1Row, 5> kTable1 = {{
    {3, 1, "0.303413"},
    {7, 4, "0.293656"},
    {17, 14, "0.290670"},
    {41, 44, "0.288986"},
    {99, 131, "0.287965"},
}};

std::string fixed6(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  return buf;
}

int cmd_table1(int n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 0 || n_max > kMaxSequenceIndex) {
    throw UsageError("table1: --n-max must be in [0, " + std::to_string(kMaxSequenceIndex) + "]");
  }
  const SequenceTables t = gen_sequences(n_max);
  bool match = true;
  out << "n,q_n,p_n,delta_n\n";
  for (int n = 0; n <= n_max; ++n) {
    const std::string delta = fixed6(t.delta(n));
    out << n << ',' << t.q(n).get_str() << ',' << t.p(n).get_str() << ',' << delta << '\n';
    if (n < static_cast<int>(kTable1.size())) {
      const Table1Row& row = kTable1[static_cast<std::size_t>(n)];
      if (t.q(n) != row.q || t.p(n) != row.p || delta != row.delta) {
        err << "table1: row " << n << " differs from the reference value\n";
        match = false;
      }
    }
  }
  out << "limit,,," << fixed6(delta_limit()) << '\n';
  return match ? kExitOk : kExitViolation;
}

void warn_cap(std::ostream& err, const char* what, long long value, long long def) {
  if (value != def) err << "warning: " << what << " overridden: " << value << " (default " << def << ")\n";
}

struct VerifyOptions {
  FuzzConfig config;
  std::string replay_out = "charbound_replay.txt";
  std::string replay_in;
  std::string function_csv;
};

void print_summary(std::ostream& out, const FuzzSummary& summary) {
  for (const CheckTally& t : summary.tallies) {
    out << to_string(t.check) << ": " << t.passed << '/' << t.total << (t.passed == t.total ? " ok" : " FAIL")
        << '\n';
  }
}

int cmd_verify(VerifyOptions opts, std::ostream& out, std::ostream& err) {
  if (!opts.replay_in.empty()) {
    std::ifstream in(opts.replay_in);
    if (!in) throw UsageError("verify: cannot open replay file " + opts.replay_in);
    const TrialCase c = read_replay(in);
    const bool ok = run_trial(c);
    out << "replay " << to_string(c.check) << " trial " << c.trial << ": " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? kExitOk : kExitViolation;
  }
  if (opts.config.tau < 3) throw UsageError("verify: --tau must be >= 3");
  if (opts.config.trials < 1) throw UsageError("verify: --trials must be >= 1");
  if (opts.config.size_cap < 1) throw UsageError("verify: --size-cap must be >= 1");
  warn_cap(err, "size cap", opts.config.size_cap, kDefaultSizeCap);
  if (!opts.function_csv.empty()) opts.config.function = read_periodic_csv_file(opts.function_csv);

  const FuzzSummary summary = run_identity_fuzz(opts.config, threads_from_env());
  print_summary(out, summary);
  if (summary.all_passed()) return kExitOk;

  std::ofstream replay(opts.replay_out);
  if (replay) {
    write_replay(replay, *summary.first_failure);
    err << "verify: first failure written to " << opts.replay_out << '\n';
  } else {
    err << "verify: cannot write replay file " << opts.replay_out << '\n';
  }
  return kExitViolation;
}

struct ScanOptions {
  ScanConfig config;
  std::string moduli = "all";
  std::string chars = "all";
  std::string out_path;
};

int cmd_scan(ScanOptions opts, std::ostream& out, std::ostream& err) {
  if (opts.moduli == "all") {
    opts.config.moduli = ModuliFilter::All;
  } else if (opts.moduli == "primes") {
    opts.config.moduli = ModuliFilter::Primes;
  } else {
    throw UsageError("scan: --moduli must be all or primes");
  }
  if (opts.chars == "all") {
    opts.config.chars = CharFilter::All;
  } else if (opts.chars == "real") {
    opts.config.chars = CharFilter::Real;
  } else {
    throw UsageError("scan: --chars must be all or real");
  }
  warn_cap(err, "scan modulus cap", opts.config.q_cap, kScanModulusCap);
  if (opts.config.threads == 0) opts.config.threads = threads_from_env();

  const std::vector<ScanRow> rows = scan_characters(opts.config);
  std::size_t violations = 0;
  for (const ScanRow& r : rows) violations += r.violation ? 1 : 0;

  if (opts.out_path.empty() || opts.out_path == "-") {
    write_scan_csv(out, rows);
  } else {
    std::ofstream file(opts.out_path);
    if (!file) throw UsageError("scan: cannot write " + opts.out_path);
    write_scan_csv(file, rows);
  }
  err << "scan: " << rows.size() << " characters, " << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_membership(std::uint32_t q, std::uint32_t cap, const std::string& function_csv, std::ostream& out,
                   std::ostream& err) {
  warn_cap(err, "membership modulus cap", cap, kMembershipModulusCap);
  if (!function_csv.empty()) {
    const PeriodicFunction f = read_periodic_csv_file(function_csv);
    const MinBResult b = min_B(f, f.period());
    out << "q,bound_A,min_B,K\n";
    out << f.period() << ',' << format_real(bound_A(f)) << ',' << format_real(b.B) << ',' << b.K << '\n';
    return b.B <= 1 ? kExitOk : kExitViolation;
  }
  const std::vector<MembershipRow> rows = membership_probe(q, cap);
  bool all_ok = true;
  out << "q,char_index,order,parity,bound_A,min_B,K\n";
  for (const MembershipRow& r : rows) {
    all_ok = all_ok && r.within_unit;
    out << q << ',' << r.char_index << ',' << r.order << ',' << r.parity << ',' << format_real(r.bound_A) << ','
        << format_real(r.min_B.B) << ',' << r.min_B.K << '\n';
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_compare(std::uint32_t q, bool scan, std::uint32_t cap, const std::string& csv_path, std::ostream& out,
                std::ostream& err) {
  if (q < 2) throw UsageError("compare: --q must be >= 2");
  std::vector<EmpiricalMax> empirical;
  if (scan) {
    warn_cap(err, "scan modulus cap", cap, kScanModulusCap);
    ScanConfig config;
    config.q_min = q;
    config.q_max = q;
    config.q_cap = cap;
    config.threads = threads_from_env();
    for (const ScanRow& r : scan_characters(config)) {
      empirical.push_back({r.char_index, r.S_chi, r.T_chi, r.parity});
    }
  }
  const BoundReport report = compare(q, empirical);
  print_report_table(out, report);
  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) throw UsageError("compare: cannot write " + csv_path);
    write_report_csv(file, report);
  }
  for (const BoundEntry& e : report.entries) {
    if (e.violation) return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit character sum bounds: tables, identity checks and scans", "charbound"};
  app.require_subcommand(1);

  int n_max = 4;
  auto* table1 = app.add_subcommand("table1", "Print q_n, p_n, delta_n and check the reference rows");
  table1->add_option("--n-max", n_max, "Last row")->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Seeded trials of every decomposition identity");
  verify->add_option("--seed", verify_opts.config.seed)->capture_default_str();
  verify->add_option("--trials", verify_opts.config.trials)->capture_default_str();
  verify->add_option("--q", verify_opts.config.q, "Period of the random functions")->capture_default_str();
  verify->add_option("--n", verify_opts.config.n, "Lemma trials use n = 0..N")->capture_default_str();
  verify->add_option("--tau", verify_opts.config.tau)->capture_default_str();
  verify->add_option("--size-cap", verify_opts.config.size_cap, "Upper limit for q_n^tau")->capture_default_str();
  verify->add_option("--replay-out", verify_opts.replay_out, "Where the first failure is written")
      ->capture_default_str();
  verify->add_option("--replay", verify_opts.replay_in, "Re-run a single trial from a replay file");
  verify->add_option("--function", verify_opts.function_csv, "CSV of residue,re,im rows replacing random f");

  ScanOptions scan_opts;
  scan_opts.config.threads = 0;
  auto* scan = app.add_subcommand("scan", "S_chi and T_chi against the bounds for every nonprincipal character");
  scan->add_option("--q-min", scan_opts.config.q_min)->required();
  scan->add_option("--q-max", scan_opts.config.q_max)->required();
  scan->add_option("--moduli", scan_opts.moduli, "all | primes")->capture_default_str();
  scan->add_option("--chars", scan_opts.chars, "all | real")->capture_default_str();
  scan->add_option("--out", scan_opts.out_path, "CSV path, - for stdout");
  scan->add_option("--threads", scan_opts.config.threads, "Workers, 0 = CHARBOUND_THREADS or auto");
  scan->add_option("--q-cap", scan_opts.config.q_cap)->capture_default_str();

  std::uint32_t member_q = 0;
  std::uint32_t member_cap = kMembershipModulusCap;
  std::string member_csv;
  auto* membership = app.add_subcommand("membership", "min_B and bound_A for every nonprincipal character mod q");
  auto* member_q_opt = membership->add_option("--q", member_q);
  auto* member_csv_opt = membership->add_option("--function", member_csv, "Probe a CSV function instead");
  member_q_opt->excludes(member_csv_opt);
  membership->add_option("--q-cap", member_cap)->capture_default_str();

  std::uint32_t compare_q = 0;
  bool compare_scan = false;
  std::uint32_t compare_cap = kScanModulusCap;
  std::string compare_csv;
  auto* cmp = app.add_subcommand("compare", "Every bound at q, optionally against scanned maxima");
  cmp->add_option("--q", compare_q)->required();
  cmp->add_flag("--scan", compare_scan, "Scan all characters mod q");
  cmp->add_option("--csv", compare_csv, "Also write the report as CSV");
  cmp->add_option("--q-cap", compare_cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table1) return cmd_table1(n_max, out, err);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*scan) return cmd_scan(scan_opts, out, err);
    if (*membership) {
      if (member_csv.empty() && member_q_opt->count() == 0) throw UsageError("membership: --q or --function required");
      return cmd_membership(member_q, member_cap, member_csv, out, err);
    }
    if (*cmp) return cmd_compare(compare_q, compare_scan, compare_cap, compare_csv, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace charbound::cli
