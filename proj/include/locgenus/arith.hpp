#pragma once

// Exact arithmetic substrate: big rationals, p-adic valuations, trial-division
// factorization and finite-precision p-adic integers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locgenus {

using Integer = mpz_class;
using Prime = std::uint64_t;

inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;
inline constexpr unsigned kDefaultPrecision = 32;

/// A rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& value) : value_(value) {}
  /// Throws DomainError when `den` is zero.
  Rat(const Integer& num, const Integer& den);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rat operator-() const { return from_mpq(-value_); }
  friend Rat operator+(const Rat& a, const Rat& b) { return from_mpq(a.value_ + b.value_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return from_mpq(a.value_ - b.value_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return from_mpq(a.value_ * b.value_); }
  /// Throws DomainError on division by zero.
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Accepts "[-]digits" or "[-]digits/digits"; the result is reduced.
  static Rat parse(std::string_view text);

 private:
  static Rat from_mpq(mpq_class v) {
    Rat r;
    r.value_ = std::move(v);
    r.value_.canonicalize();
    return r;
  }

  mpq_class value_;
};

/// One entry of a height sequence: a natural number or infinity.
class Val {
 public:
  constexpr Val() : Val(false, 0) {}
  static constexpr Val finite(std::uint64_t n) { return Val(false, n); }
  static constexpr Val infinity() { return Val(true, 0); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Only meaningful for finite values.
  constexpr std::uint64_t value() const { return n_; }

  friend constexpr bool operator==(Val a, Val b) = default;
  friend constexpr std::strong_ordering operator<=>(Val a, Val b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.n_ <=> b.n_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(n_); }

 private:
  constexpr Val(bool infinite, std::uint64_t n) : infinite_(infinite), n_(n) {}
  bool infinite_;
  std::uint64_t n_;
};

/// The natural numbers with a disjoint base point `*`. The base point orders first.
class NPlus {
 public:
  constexpr NPlus() : NPlus(false, 0) {}
  static constexpr NPlus star() { return NPlus(true, 0); }
  static constexpr NPlus of(std::uint64_t k) { return NPlus(false, k); }

  constexpr bool is_star() const { return star_; }
  constexpr std::uint64_t value() const { return k_; }

  friend constexpr bool operator==(NPlus a, NPlus b) = default;
  friend constexpr std::strong_ordering operator<=>(NPlus a, NPlus b) {
    if (a.star_ || b.star_) return b.star_ <=> a.star_;
    return a.k_ <=> b.k_;
  }

  std::string to_string() const { return star_ ? "*" : std::to_string(k_); }

 private:
  constexpr NPlus(bool star, std::uint64_t k) : star_(star), k_(k) {}
  bool star_;
  std::uint64_t k_;
};

bool is_prime(std::uint64_t n);

/// Sieve of Eratosthenes; empty for bound < 2.
std::vector<Prime> primes_up_to(std::uint64_t bound);

/// Exponent of p in q, std::nullopt standing for +infinity (q = 0).
/// Throws DomainError if p is not prime.
std::optional<std::int64_t> valuation(const Rat& q, Prime p);

struct PrimePower {
  Prime prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization of n >= 1. Every prime factor must be at most
/// `prime_bound`; otherwise a ResourceError is thrown.
std::vector<PrimePower> factor(const Integer& n, std::uint64_t prime_bound = kDefaultPrimeBound);

/// Representative of q + Z in [0, 1).
Rat mod_one(const Rat& q);

/// p^e as a big integer.
Integer prime_power(Prime p, std::uint64_t e);

/// A p-adic integer known modulo p^N. `exactly_zero` marks the honest zero,
/// which a residue alone cannot tell apart from a value of valuation >= N.
class PAdicApprox {
 public:
  /// Residue is reduced into [0, p^N). Throws DomainError for non-prime p or N = 0.
  PAdicApprox(Prime p, unsigned precision, const Integer& residue);

  /// z = 0 gives the exact zero.
  static PAdicApprox from_integer(const Integer& z, Prime p, unsigned precision = kDefaultPrecision);
  static PAdicApprox exact_zero(Prime p, unsigned precision = kDefaultPrecision);

  Prime prime() const { return prime_; }
  unsigned precision() const { return precision_; }
  const Integer& residue() const { return residue_; }
  bool is_exactly_zero() const { return exactly_zero_; }
  Integer modulus() const { return prime_power(prime_, precision_); }
  bool is_unit() const;

  PAdicApprox negated() const;
  /// Multiplication by p^k at unchanged precision.
  PAdicApprox shifted(unsigned k) const;

  friend bool operator==(const PAdicApprox&, const PAdicApprox&) = default;

 private:
  PAdicApprox() = default;
  Prime prime_ = 2;
  unsigned precision_ = 1;
  Integer residue_;
  bool exactly_zero_ = false;
};

struct UnitDecomposition {
  unsigned k;
  PAdicApprox unit;  ///< precision N - k: what is left after extracting p^k
};

/// z = p^k * u with u a unit. std::nullopt is the base point (z exactly zero).
/// Throws DomainError("insufficient precision") when the residue vanishes but
/// z is not flagged as exactly zero.
std::optional<UnitDecomposition> padic_decompose(const PAdicApprox& z);

}  // namespace locgenus
