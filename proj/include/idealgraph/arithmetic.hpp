#pragma once

#include <cstdint>
#include <vector>

namespace idealgraph {

// Largest modulus accepted by default; trial division stays cheap below this.
inline constexpr std::uint64_t kDefaultMaxModulus = 1'000'000'000;

// Prime factorization p1^a1 * ... * ps^as with p1 < ... < ps, all ai >= 1.
struct Factorization {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint32_t> exponents;

  std::size_t prime_count() const { return primes.size(); }
  std::uint64_t value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic trial division. Throws std::domain_error for m < 2 or m > max_m.
Factorization factorize(std::uint64_t m, std::uint64_t max_m = kDefaultMaxModulus);

// Exponent vector of a divisor of m, parallel to the owning pair's prime list.
// Stores exponents only; integer values are derived on demand.
struct DivisorVector {
  std::vector<std::uint32_t> r;

  friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
  friend auto operator<=>(const DivisorVector&, const DivisorVector&) = default;
};

// The pair (m, n) with n | m, n > 1.  beta holds the exponents of n on m's
// prime list (zero-padded where a prime of m does not divide n).
struct ModulePair {
  Factorization m_fact;
  std::vector<std::uint32_t> beta;
  std::uint64_t m_value = 0;
  std::uint64_t n_value = 0;

  std::size_t prime_count() const { return m_fact.prime_count(); }
  const std::vector<std::uint32_t>& alpha() const { return m_fact.exponents; }

  // S' = {i : beta[i] != 0}; never empty since n > 1.
  std::vector<std::size_t> module_support() const;
  std::size_t module_support_size() const;

  // True when n = p1*...*ps, i.e. beta[i] == 1 for every prime of m.
  bool module_is_radical() const;

  friend bool operator==(const ModulePair&, const ModulePair&) = default;
};

// Throws std::domain_error for m <= 1 / n <= 1 and rejects n that do not
// divide m ("not a module").
ModulePair make_module_pair(std::uint64_t m, std::uint64_t n,
                            std::uint64_t max_m = kDefaultMaxModulus);

// Integer value of a divisor given as an exponent vector.
std::uint64_t divisor_value(const ModulePair& pair, const DivisorVector& d);

// All divisors of m (including 1 and m), sorted lexicographically by
// exponent vector.  Size is always prod(alpha[i] + 1).
std::vector<DivisorVector> enumerate_divisors(const ModulePair& pair);

// Componentwise max, the exponent vector of lcm(a, b).  Throws
// std::domain_error when the vectors live over different prime supports.
DivisorVector lcm_vector(const DivisorVector& a, const DivisorVector& b);

// True iff n | d, i.e. beta[i] <= r[i] for all i.
bool n_divides(const ModulePair& pair, const DivisorVector& d);

// D_d = {i : r[i] < beta[i]}.  Empty iff n | d; always a subset of S'.
std::vector<std::size_t> d_support(const ModulePair& pair, const DivisorVector& d);

}  // namespace idealgraph
