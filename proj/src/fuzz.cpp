#include "charbound/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "charbound/dirichlet.hpp"

namespace charbound {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::uint64_t stream_id(int trial, CheckKind check) {
  return static_cast<std::uint64_t>(trial) * 16 + static_cast<std::uint64_t>(check);
}

std::vector<SignedWindow> random_windows(std::mt19937_64& rng, std::int64_t q, std::int64_t y) {
  std::vector<SignedWindow> windows;
  const std::int64_t first = uniform(rng, 0, q - 1);
  std::int64_t x = first;
  do {
    windows.push_back({x, uniform(rng, 0, 1) == 0 ? -1 : 1});
    x += y + 1 + uniform(rng, 0, 3);
  } while (x + y - first <= q && uniform(rng, 0, 3) != 0);
  return windows;
}

template <class V>
bool run_sum_s(const Periodic<V>& f, const TrialCase& c) {
  return verify_sum_s_lemma(f, c.windows, c.y, c.B);
}

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Shift: return "shift_check";
    case CheckKind::WeightIdentity: return "weight_identity";
    case CheckKind::LemmaMinus: return "lemma_minus";
    case CheckKind::LemmaPlus: return "lemma_plus";
    case CheckKind::LemmaCombined: return "lemma_combined";
    case CheckKind::SumS: return "sum_s_lemma";
  }
  return "unknown";
}

CheckKind parse_check_kind(const std::string& name) {
  for (CheckKind k : all_check_kinds()) {
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown check '" + name + "'");
}

const std::vector<CheckKind>& all_check_kinds() {
  static const std::vector<CheckKind> kinds = {CheckKind::Shift,     CheckKind::WeightIdentity,
                                               CheckKind::LemmaMinus, CheckKind::LemmaPlus,
                                               CheckKind::LemmaCombined, CheckKind::SumS};
  return kinds;
}

PeriodicFunction random_gaussian_function(std::uint64_t seed, std::uint64_t stream, std::int64_t q, bool zero_mean) {
  std::mt19937_64 rng = make_rng(seed ^ 0x9e3779b97f4a7c15ULL, stream);
  std::vector<GaussianRational> values;
  values.reserve(static_cast<std::size_t>(q));
  long re_sum = 0;
  long im_sum = 0;
  for (std::int64_t r = 0; r < q; ++r) {
    const long re = uniform(rng, -5, 5);
    const long im = uniform(rng, -5, 5);
    re_sum += re;
    im_sum += im;
    values.emplace_back(re, im);
  }
  if (zero_mean) values.back() -= GaussianRational(re_sum, im_sum);
  return PeriodicFunction(q, std::move(values));
}

TrialCase make_trial(const FuzzConfig& config, CheckKind check, int trial) {
  TrialCase c;
  c.check = check;
  c.seed = config.seed;
  c.trial = trial;
  c.size_cap = config.size_cap;
  c.tau = config.tau;
  std::mt19937_64 rng = make_rng(config.seed, stream_id(trial, check));
  const std::int64_t q = config.function ? config.function->period() : config.q;
  auto pick = [&](bool zero_mean) {
    if (config.function && (!zero_mean || has_zero_mean(*config.function))) return *config.function;
    return random_gaussian_function(config.seed, stream_id(trial, check), q, zero_mean);
  };

  switch (check) {
    case CheckKind::Shift:
      c.f = pick(false);
      c.x = uniform(rng, -3 * q, 3 * q);
      c.u = uniform(rng, -3 * q, 3 * q);
      c.y = uniform(rng, 0, 20);
      c.v = uniform(rng, 0, 20);
      c.k = uniform(rng, -3 * q, 3 * q);
      break;
    case CheckKind::WeightIdentity:
      c.f = pick(false);
      c.x = uniform(rng, -10 * q, 10 * q);
      c.y = uniform(rng, 0, 3 * q);
      break;
    case CheckKind::LemmaMinus:
    case CheckKind::LemmaPlus:
    case CheckKind::LemmaCombined:
      c.f = pick(false);
      c.n = trial % (config.n + 1);
      c.i = static_cast<int>(uniform(rng, 1, check == CheckKind::LemmaCombined ? config.tau - 1 : config.tau));
      c.a = uniform(rng, -10 * q, 10 * q);
      break;
    case CheckKind::SumS:
      if (trial % 2 == 0) {
        c.f = pick(true);
        c.y = uniform(rng, 1, q - 1);
        c.windows = random_windows(rng, q, c.y);
        // Smallest admissible B, nudged up past the long double rounding.
        c.B = min_B(*c.f, q).B * (1 + Real{1e-15});
      } else {
        c.character_q = static_cast<std::uint32_t>(uniform(rng, 3, config.character_q_max));
        const std::uint64_t count = euler_phi(c.character_q);
        c.character_index = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<std::int64_t>(count) - 1));
        c.y = uniform(rng, 1, c.character_q - 1);
        c.windows = random_windows(rng, c.character_q, c.y);
        c.B = 1;
      }
      break;
  }
  return c;
}

bool run_trial(const TrialCase& c) {
  auto require_f = [&]() -> const PeriodicFunction& {
    if (!c.f) throw UsageError("trial " + to_string(c.check) + " needs explicit function values");
    return *c.f;
  };
  switch (c.check) {
    case CheckKind::Shift:
      return shift_check(require_f(), c.x, c.y, c.u, c.v, c.k);
    case CheckKind::WeightIdentity: {
      const PeriodicFunction& f = require_f();
      const GaussianRational lhs = t_plus(f, c.x, c.y) + t_minus(f, c.x, c.y);
      return lhs == f.window_sum(c.x, c.y) * BigInt(static_cast<long>(c.y + 1));
    }
    case CheckKind::LemmaMinus:
      return verify_lemma_minus(require_f(), c.a, make_decomposition_params(c.n, c.tau, c.i, c.size_cap));
    case CheckKind::LemmaPlus:
      return verify_lemma_plus(require_f(), c.a, make_decomposition_params(c.n, c.tau, c.i, c.size_cap));
    case CheckKind::LemmaCombined:
      return verify_lemma_combined(require_f(), c.a, make_decomposition_params(c.n, c.tau, c.i, c.size_cap),
                                   gen_coeffs(c.n));
    case CheckKind::SumS:
      if (c.character_q > 0) {
        const DirichletCharacter chi = CharacterGroup(c.character_q).character(c.character_index);
        if (chi.is_gaussian()) return run_sum_s(chi.exact_function(), c);
        return run_sum_s(chi.approx_function(), c);
      }
      return run_sum_s(require_f(), c);
  }
  return false;
}

FuzzSummary run_identity_fuzz(const FuzzConfig& config, unsigned threads) {
  if (config.trials < 0) throw UsageError("trials must be >= 0");
  if ((config.function ? config.function->period() : config.q) < 2) throw UsageError("q must be >= 2");
  if (config.n < 0) throw UsageError("n must be >= 0");
  if (config.character_q_max < 3) throw UsageError("character modulus range must reach 3");
  // Rejects tau < 3 and q_n^tau over the cap before any trial runs.
  make_decomposition_params(config.n, config.tau, 1, config.size_cap);

  const auto& kinds = all_check_kinds();
  const std::size_t jobs = static_cast<std::size_t>(config.trials) * kinds.size();
  std::vector<char> outcome(jobs, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const int trial = static_cast<int>(job / kinds.size());
      const CheckKind kind = kinds[job % kinds.size()];
      outcome[job] = run_trial(make_trial(config, kind, trial)) ? 1 : 0;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  FuzzSummary summary;
  for (CheckKind kind : kinds) summary.tallies.push_back({kind, 0, 0});
  for (std::size_t job = 0; job < jobs; ++job) {
    CheckTally& tally = summary.tallies[job % kinds.size()];
    ++tally.total;
    if (outcome[job]) {
      ++tally.passed;
    } else if (!summary.first_failure) {
      summary.first_failure = make_trial(config, kinds[job % kinds.size()], static_cast<int>(job / kinds.size()));
    }
  }
  return summary;
}

void write_replay(std::ostream& out, const TrialCase& c) {
  out << "check=" << to_string(c.check) << '\n';
  out << "seed=" << c.seed << '\n';
  out << "trial=" << c.trial << '\n';
  if (c.f) {
    out << "q=" << c.f->period() << '\n';
    out << "values=";
    const auto values = c.f->values();
    for (std::size_t r = 0; r < values.size(); ++r) out << (r ? ";" : "") << values[r].to_string();
    out << '\n';
  }
  if (c.character_q > 0) {
    out << "character_q=" << c.character_q << '\n';
    out << "character_index=" << c.character_index << '\n';
  }
  out << "a=" << c.a << "\nx=" << c.x << "\ny=" << c.y << "\nu=" << c.u << "\nv=" << c.v << "\nk=" << c.k << '\n';
  out << "n=" << c.n << "\ntau=" << c.tau << "\ni=" << c.i << "\nsize_cap=" << c.size_cap << '\n';
  out << "windows=";
  for (std::size_t w = 0; w < c.windows.size(); ++w) {
    out << (w ? ";" : "") << c.windows[w].x << ':' << c.windows[w].sign;
  }
  out << '\n';
  out << "B=" << format_real(c.B, 21) << '\n';
}

TrialCase read_replay(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("replay: malformed line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("replay: missing key '" + key + "'");
    return it->second;
  };
  auto get_int = [&](const std::string& key) { return std::stoll(get(key)); };

  TrialCase c;
  try {
    c.check = parse_check_kind(get("check"));
    c.seed = std::stoull(get("seed"));
    c.trial = static_cast<int>(get_int("trial"));
    if (kv.count("values")) {
      const std::int64_t q = get_int("q");
      std::vector<GaussianRational> values;
      std::stringstream ss(get("values"));
      std::string pair;
      while (std::getline(ss, pair, ';')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos) throw UsageError("replay: malformed value '" + pair + "'");
        values.push_back(GaussianRational::parse(pair.substr(0, comma), pair.substr(comma + 1)));
      }
      c.f = PeriodicFunction(q, std::move(values));
    }
    if (kv.count("character_q")) {
      c.character_q = static_cast<std::uint32_t>(get_int("character_q"));
      c.character_index = std::stoull(get("character_index"));
    }
    c.a = get_int("a");
    c.x = get_int("x");
    c.y = get_int("y");
    c.u = get_int("u");
    c.v = get_int("v");
    c.k = get_int("k");
    c.n = static_cast<int>(get_int("n"));
    c.tau = static_cast<int>(get_int("tau"));
    c.i = static_cast<int>(get_int("i"));
    c.size_cap = get_int("size_cap");
    std::stringstream ws(get("windows"));
    std::string item;
    while (std::getline(ws, item, ';')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw UsageError("replay: malformed window '" + item + "'");
      c.windows.push_back({std::stoll(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    }
    c.B = std::stold(get("B"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("replay: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("replay: ") + e.what());
  }
  return c;
}

}  // namespace charbound
