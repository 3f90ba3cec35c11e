#pragma once

// A computable fragment of Hom(Q, Q/Z): homomorphisms built from a rank-one
// kernel by the standard quotient map, then pre-composed with a rational unit
// and post-composed with finitely many Pruefer-component automorphisms.
// Every double coset Q^x \ Hom(Q, Q/Z) / Zhat whose kernel type is
// representable has a representative here (namely beta of the kernel).

#include <map>

#include "locgenus/arith.hpp"
#include "locgenus/rankone.hpp"

namespace locgenus {

/// An element of Q/Z, held as its representative in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rat& q) : value_(mod_one(q)) {}

  const Rat& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.value_ + b.value_); }
  friend bool operator==(const QmodZ&, const QmodZ&) = default;

 private:
  Rat value_;
};

/// Multiplication by an integer unit u (p does not divide u) on Z_{p^infty}.
/// The unit is stored reduced modulo p^modulus_exponent.
struct PrueferTwist {
  unsigned modulus_exponent = 1;
  Integer unit = 1;

  friend bool operator==(const PrueferTwist&, const PrueferTwist&) = default;
};

class ConnectingHom {
 public:
  /// Throws DomainError for a zero pre-composition, a non-prime twist key, a
  /// zero modulus exponent or a twist residue that is not a unit.
  ConnectingHom(HeightSequence kernel_heights, Rat precompose = Rat(1),
                std::map<Prime, PrueferTwist> twists = {});

  const HeightSequence& kernel_heights() const { return kernel_heights_; }
  const Rat& precompose() const { return precompose_; }
  const std::map<Prime, PrueferTwist>& twists() const { return twists_; }

  /// Same homomorphism followed by one more twist at p (composed with any existing one).
  ConnectingHom with_twist(Prime p, const PrueferTwist& twist) const;
  /// q -> d(r * q).
  ConnectingHom precomposed(const Rat& r) const;

  friend bool operator==(const ConnectingHom&, const ConnectingHom&) = default;

 private:
  HeightSequence kernel_heights_;
  Rat precompose_;
  std::map<Prime, PrueferTwist> twists_;
};

/// The composite Q -> Q/A = sum_{p in J} Z_{p^infty} -> Q/Z for A's heights,
/// with J the primes of finite height.
ConnectingHom beta(const RankOneGroup& a);

/// Component at p of q + A is p^{k_p} * q_p mod 1, q_p the p-primary part of q
/// in its partial-fraction decomposition. Primes of infinite height contribute 0.
QmodZ eval(const ConnectingHom& d, const Rat& q, std::uint64_t prime_bound = kDefaultPrimeBound);

/// eval(d, q) == 0.
bool in_kernel(const ConnectingHom& d, const Rat& q, std::uint64_t prime_bound = kDefaultPrimeBound);

/// The kernel as a subgroup of Q: heights k_p + v_p(r) for pre-composition r.
/// When some shifted height is negative the kernel misses 1; the result is
/// then the isomorphic copy s * ker(d), s the least positive integer with
/// 1 in s * ker(d), i.e. negative heights are raised to 0.
RankOneGroup kernel(const ConnectingHom& d, std::uint64_t prime_bound = kDefaultPrimeBound);

/// Class of d in Q^x \ Hom(Q, Q/Z) / Zhat, i.e. the type of its kernel.
TypeClass double_coset_class(const ConnectingHom& d, std::uint64_t prime_bound = kDefaultPrimeBound);

}  // namespace locgenus
