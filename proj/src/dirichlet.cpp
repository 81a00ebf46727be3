#include "charbound/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace charbound {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Smallest generator of (Z/p^k)^* for odd p.
std::uint32_t smallest_primitive_root(std::uint32_t p, std::uint32_t modulus, std::uint32_t order) {
  std::vector<std::uint32_t> order_primes;
  for (const PrimePower& pp : factorize(order)) order_primes.push_back(pp.prime);
  for (std::uint32_t g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool generates = true;
    for (std::uint32_t r : order_primes) {
      if (pow_mod(g, order / r, modulus) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  // (Z/p^k)^* is cyclic for odd p, so the loop always returns.
  throw std::logic_error("no primitive root mod " + std::to_string(modulus));
}

CyclicFactor cyclic_factor(std::uint32_t modulus, std::uint32_t generator, std::uint32_t order) {
  CyclicFactor f{modulus, generator, order, std::vector<std::int32_t>(modulus, -1)};
  std::uint64_t value = 1 % modulus;
  for (std::uint32_t e = 0; e < order; ++e) {
    f.log[value] = static_cast<std::int32_t>(e);
    value = value * generator % modulus;
  }
  return f;
}

}  // namespace

std::vector<PrimePower> factorize(std::uint32_t n) {
  std::vector<PrimePower> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.modulus *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

std::uint64_t euler_phi(std::uint32_t n) {
  std::uint64_t phi = n;
  for (const PrimePower& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_cubefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p * p <= n; ++p) {
    if (n % (p * p * p) == 0) return false;
  }
  return true;
}

DirichletCharacter::DirichletCharacter(std::uint32_t q, std::uint64_t index, std::uint32_t order,
                                       std::vector<std::int32_t> exponents)
    : q_(q), index_(index), order_(order), exponents_(std::move(exponents)), roots_(order) {
  for (std::uint32_t e = 0; e < order_; ++e) {
    if ((4 * e) % order_ == 0) {
      // Quarter turns are stored exactly.
      static constexpr ApproxComplex kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots_[e] = kQuarter[(4 * e) / order_];
    } else {
      const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(e) / static_cast<Real>(order_);
      roots_[e] = {std::cos(angle), std::sin(angle)};
    }
  }
}

int DirichletCharacter::parity() const {
  const std::int32_t e = exponent(-1);
  return e == 0 ? 1 : -1;
}

CharValue DirichletCharacter::value(std::int64_t n) const {
  const std::int32_t e = exponent(n);
  if (e < 0) return CharValue{true, 0, order_};
  return CharValue{false, static_cast<std::uint32_t>(e), order_};
}

ApproxComplex DirichletCharacter::approx(std::int64_t n) const {
  const std::int32_t e = exponent(n);
  return e < 0 ? ApproxComplex{} : roots_[static_cast<std::size_t>(e)];
}

std::optional<GaussianRational> DirichletCharacter::gaussian(std::int64_t n) const {
  if (!is_gaussian()) return std::nullopt;
  const std::int32_t e = exponent(n);
  if (e < 0) return GaussianRational{};
  switch ((4 * static_cast<std::uint32_t>(e)) / order_) {
    case 0: return GaussianRational(1, 0);
    case 1: return GaussianRational(0, 1);
    case 2: return GaussianRational(-1, 0);
    default: return GaussianRational(0, -1);
  }
}

PeriodicFunction DirichletCharacter::exact_function() const {
  if (!is_gaussian()) {
    throw UsageError("character of order " + std::to_string(order_) + " has values outside Q(i)");
  }
  std::vector<GaussianRational> values;
  values.reserve(q_);
  for (std::uint32_t n = 0; n < q_; ++n) values.push_back(*gaussian(n));
  return PeriodicFunction(q_, std::move(values));
}

ApproxPeriodicFunction DirichletCharacter::approx_function() const {
  std::vector<ApproxComplex> values;
  values.reserve(q_);
  for (std::uint32_t n = 0; n < q_; ++n) values.push_back(approx(n));
  return ApproxPeriodicFunction(q_, std::move(values));
}

CharacterGroup::CharacterGroup(std::uint32_t q, std::uint32_t cap) : q_(q) {
  if (q < 1) throw UsageError("character group: q must be >= 1");
  if (q > cap) {
    throw UsageError("character group: q = " + std::to_string(q) + " exceeds the cap " + std::to_string(cap));
  }
  factorization_ = factorize(q);
  for (const PrimePower& pp : factorization_) {
    if (pp.prime == 2) {
      if (pp.exponent == 2) {
        factors_.push_back(cyclic_factor(4, 3, 2));
      } else if (pp.exponent >= 3) {
        // n = (-1)^a 5^b mod 2^k.
        const std::uint32_t m = pp.modulus;
        CyclicFactor sign{m, m - 1, 2, std::vector<std::int32_t>(m, -1)};
        CyclicFactor five{m, 5, m / 4, std::vector<std::int32_t>(m, -1)};
        std::uint64_t value = 1;
        for (std::uint32_t e = 0; e < m / 4; ++e) {
          five.log[value] = static_cast<std::int32_t>(e);
          five.log[m - value] = static_cast<std::int32_t>(e);
          sign.log[value] = 0;
          sign.log[m - value] = 1;
          value = value * 5 % m;
        }
        factors_.push_back(std::move(sign));
        factors_.push_back(std::move(five));
      }
    } else {
      const std::uint32_t order = pp.modulus / pp.prime * (pp.prime - 1);
      factors_.push_back(cyclic_factor(pp.modulus, smallest_primitive_root(pp.prime, pp.modulus, order), order));
    }
  }
  for (const CyclicFactor& f : factors_) size_ *= f.order;
}

std::vector<std::uint32_t> CharacterGroup::exponent_tuple(std::uint64_t index) const {
  if (index >= size_) throw UsageError("character index out of range");
  std::vector<std::uint32_t> digits(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    digits[k] = static_cast<std::uint32_t>(index % factors_[k].order);
    index /= factors_[k].order;
  }
  return digits;
}

DirichletCharacter CharacterGroup::character(std::uint64_t index) const {
  const std::vector<std::uint32_t> digits = exponent_tuple(index);
  std::uint64_t lcm = 1;
  for (const CyclicFactor& f : factors_) lcm = std::lcm(lcm, static_cast<std::uint64_t>(f.order));

  // Per-factor weights over the common exponent modulus, then reduce to the
  // character's own order.
  std::vector<std::uint64_t> weights(factors_.size());
  std::uint64_t common = lcm;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    weights[k] = digits[k] * (lcm / factors_[k].order) % lcm;
    common = std::gcd(common, weights[k]);
  }
  const std::uint64_t order = lcm / common;
  const std::uint64_t shrink = lcm / order;

  std::vector<std::int32_t> exponents(q_, -1);
  for (std::uint32_t n = 0; n < q_; ++n) {
    std::uint64_t e = 0;
    bool unit = true;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      const std::int32_t l = factors_[k].log[n % factors_[k].modulus];
      if (l < 0) {
        unit = false;
        break;
      }
      e = (e + weights[k] * static_cast<std::uint64_t>(l)) % lcm;
    }
    // Factors cover only odd primes and 2^k with k >= 2; for q even with
    // 2 || q the 2-part is trivial, so check coprimality directly.
    if (unit && std::gcd(n, q_) != 1) unit = false;
    if (unit) exponents[n] = static_cast<std::int32_t>(e / shrink);
  }
  return DirichletCharacter(q_, index, static_cast<std::uint32_t>(order), std::move(exponents));
}

std::vector<DirichletCharacter> enumerate_characters(std::uint32_t q, std::uint32_t cap) {
  const CharacterGroup group(q, cap);
  std::vector<DirichletCharacter> out;
  out.reserve(group.size());
  for (std::uint64_t k = 0; k < group.size(); ++k) out.push_back(group.character(k));
  return out;
}

CharValue char_value(const DirichletCharacter& chi, std::int64_t n) { return chi.value(n); }

std::vector<ApproxComplex> prefix_points(const DirichletCharacter& chi) {
  std::vector<ApproxComplex> points(static_cast<std::size_t>(chi.q()) + 2);
  ApproxComplex running{};
  for (std::uint32_t n = 0; n <= chi.q(); ++n) {
    running += chi.approx(n);
    points[n + 1] = running;
  }
  return points;
}

namespace {

Real cross(const ApproxComplex& o, const ApproxComplex& a, const ApproxComplex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

// Andrew's monotone chain; returns indices into `points`, collinear points
// dropped.
std::vector<std::size_t> convex_hull(const std::vector<ApproxComplex>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].real() != points[b].real()) return points[a].real() < points[b].real();
    if (points[a].imag() != points[b].imag()) return points[a].imag() < points[b].imag();
    return a < b;
  });
  // Exact duplicates share a hull slot.
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() <= 2) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t t = order.size() - 1; t-- > 0;) {
    const std::size_t idx = order[t];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

struct PairChoice {
  Real best = -1;
  std::size_t first = 0;
  std::size_t second = 0;
};

// Max over pairs a < b from `candidates` (sorted) with b - a >= 2, then the
// lexicographically smallest pair within the guard of that max.
PairChoice best_window_pair(const std::vector<ApproxComplex>& points, const std::vector<std::size_t>& candidates) {
  PairChoice choice;
  for (std::size_t s = 0; s < candidates.size(); ++s) {
    for (std::size_t t = s + 1; t < candidates.size(); ++t) {
      const std::size_t a = candidates[s];
      const std::size_t b = candidates[t];
      if (b - a < 2) continue;
      const Real d = std::norm(points[b] - points[a]);
      if (d > choice.best) choice.best = d;
    }
  }
  for (std::size_t s = 0; s < candidates.size(); ++s) {
    for (std::size_t t = s + 1; t < candidates.size(); ++t) {
      const std::size_t a = candidates[s];
      const std::size_t b = candidates[t];
      if (b - a < 2) continue;
      if (std::norm(points[b] - points[a]) >= choice.best - kMagnitudeGuard) {
        choice.first = a;
        choice.second = b;
        return choice;
      }
    }
  }
  return choice;
}

}  // namespace

SChiResult s_chi(const DirichletCharacter& chi) {
  const std::vector<ApproxComplex> points = prefix_points(chi);
  const std::vector<std::size_t> hull = convex_hull(points);

  Real diameter = 0;
  for (std::size_t s = 0; s < hull.size(); ++s) {
    for (std::size_t t = s + 1; t < hull.size(); ++t) {
      diameter = std::max(diameter, std::norm(points[hull[s]] - points[hull[t]]));
    }
  }
  // Hull vertices that take part in a near-diametral pair.
  std::vector<std::size_t> anchors;
  for (std::size_t s = 0; s < hull.size(); ++s) {
    for (std::size_t t = 0; t < hull.size(); ++t) {
      if (std::norm(points[hull[s]] - points[hull[t]]) >= diameter - kMagnitudeGuard) {
        anchors.push_back(hull[s]);
        break;
      }
    }
  }
  // Any point in a near-maximal pair is near-maximally far from an anchor.
  std::vector<std::size_t> candidates;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    for (std::size_t anchor : anchors) {
      if (std::norm(points[idx] - points[anchor]) >= diameter - kMagnitudeGuard) {
        candidates.push_back(idx);
        break;
      }
    }
  }
  PairChoice choice = best_window_pair(points, candidates);
  if (choice.best < 0) {
    std::vector<std::size_t> all(points.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    choice = best_window_pair(points, all);
  }
  // Point index k holds P(k-1): the window is [M, N] = [first, second - 1].
  return SChiResult{std::sqrt(choice.best), static_cast<std::int64_t>(choice.first),
                    static_cast<std::int64_t>(choice.second) - 1, chi.is_principal()};
}

Real t_chi(const DirichletCharacter& chi) {
  Real best = 0;
  ApproxComplex running{};
  for (std::uint32_t n = 0; n < chi.q(); ++n) {
    running += chi.approx(n);
    best = std::max(best, std::norm(running));
  }
  return std::sqrt(best);
}

}  // namespace charbound
