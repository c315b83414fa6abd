#include "idealgraph/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace idealgraph {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow while reconstructing a divisor value");
  }
  return out;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    out = checked_mul(out, pow_u64(primes[i], exponents[i]));
  }
  return out;
}

Factorization factorize(std::uint64_t m, std::uint64_t max_m) {
  if (m < 2) throw std::domain_error("factorize: m must be at least 2");
  if (m > max_m) {
    throw std::domain_error("factorize: m exceeds the configured cap of " +
                            std::to_string(max_m));
  }
  Factorization fact;
  std::uint64_t rest = m;
  auto take = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      fact.primes.push_back(p);
      fact.exponents.push_back(e);
    }
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p * p <= rest; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) {
    fact.primes.push_back(rest);
    fact.exponents.push_back(1);
  }
  return fact;
}

std::vector<std::size_t> ModulePair::module_support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0) out.push_back(i);
  }
  return out;
}

std::size_t ModulePair::module_support_size() const {
  return static_cast<std::size_t>(
      std::count_if(beta.begin(), beta.end(), [](std::uint32_t b) { return b != 0; }));
}

bool ModulePair::module_is_radical() const {
  return std::all_of(beta.begin(), beta.end(), [](std::uint32_t b) { return b == 1; });
}

ModulePair make_module_pair(std::uint64_t m, std::uint64_t n, std::uint64_t max_m) {
  if (m <= 1 || n <= 1) {
    throw std::domain_error("make_module_pair: both m and n must exceed 1");
  }
  if (m % n != 0) {
    throw std::domain_error("make_module_pair: not a module (" + std::to_string(n) +
                            " does not divide " + std::to_string(m) + ")");
  }
  ModulePair pair;
  pair.m_fact = factorize(m, max_m);
  pair.m_value = m;
  pair.n_value = n;
  pair.beta.assign(pair.prime_count(), 0);
  std::uint64_t rest = n;
  for (std::size_t i = 0; i < pair.prime_count(); ++i) {
    while (rest % pair.m_fact.primes[i] == 0) {
      rest /= pair.m_fact.primes[i];
      ++pair.beta[i];
    }
  }
  // rest == 1 is guaranteed by n | m; keep the check as a cheap invariant.
  if (rest != 1) throw std::logic_error("make_module_pair: beta extraction failed");
  return pair;
}

std::uint64_t divisor_value(const ModulePair& pair, const DivisorVector& d) {
  if (d.r.size() != pair.prime_count()) {
    throw std::domain_error("divisor_value: exponent vector has wrong length");
  }
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    out = checked_mul(out, pow_u64(pair.m_fact.primes[i], d.r[i]));
  }
  return out;
}

std::vector<DivisorVector> enumerate_divisors(const ModulePair& pair) {
  const auto& alpha = pair.alpha();
  const std::size_t s = alpha.size();
  std::size_t total = 1;
  for (std::uint32_t a : alpha) total *= a + 1;

  std::vector<DivisorVector> out;
  out.reserve(total);
  DivisorVector cur{std::vector<std::uint32_t>(s, 0)};
  for (;;) {
    out.push_back(cur);
    // Lexicographic successor: bump the rightmost exponent that has room.
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (cur.r[i] < alpha[i]) {
        ++cur.r[i];
        std::fill(cur.r.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.r.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
  }
}

DivisorVector lcm_vector(const DivisorVector& a, const DivisorVector& b) {
  if (a.r.size() != b.r.size()) {
    throw std::domain_error("lcm_vector: mismatched prime support");
  }
  DivisorVector out{std::vector<std::uint32_t>(a.r.size())};
  for (std::size_t i = 0; i < a.r.size(); ++i) out.r[i] = std::max(a.r[i], b.r[i]);
  return out;
}

bool n_divides(const ModulePair& pair, const DivisorVector& d) {
  if (d.r.size() != pair.prime_count()) {
    throw std::domain_error("n_divides: exponent vector has wrong length");
  }
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    if (d.r[i] < pair.beta[i]) return false;
  }
  return true;
}

std::vector<std::size_t> d_support(const ModulePair& pair, const DivisorVector& d) {
  if (d.r.size() != pair.prime_count()) {
    throw std::domain_error("d_support: exponent vector has wrong length");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    if (d.r[i] < pair.beta[i]) out.push_back(i);
  }
  return out;
}

}  // namespace idealgraph
