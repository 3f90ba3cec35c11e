#pragma once

// Rank-one torsion-free abelian groups, presented as subgroups Z <= A <= Q by
// their height sequences. Only eventually-constant sequences are representable:
// a default height plus finitely many exceptional primes.

#include <map>
#include <set>
#include <string>

#include "locgenus/arith.hpp"

namespace locgenus {

/// (k_p) over all primes: k_p = exceptions[p] if present, otherwise the default.
/// Exceptions equal to the default are dropped on construction, so equal
/// sequences compare equal as data.
class HeightSequence {
 public:
  HeightSequence() = default;
  /// Throws DomainError when an exception key is not prime.
  explicit HeightSequence(Val default_height, std::map<Prime, Val> exceptions = {});

  /// The sequence of Z: all heights zero.
  static HeightSequence integers() { return HeightSequence(Val::finite(0)); }
  /// The sequence of Q: all heights infinite.
  static HeightSequence rationals() { return HeightSequence(Val::infinity()); }

  Val default_height() const { return default_; }
  const std::map<Prime, Val>& exceptions() const { return exceptions_; }
  Val at(Prime p) const;

  /// Primes where k_p is infinite, when that set is finite (finite default).
  std::set<Prime> infinite_exceptions() const;
  /// Primes where k_p is finite, when that set is finite (infinite default).
  std::set<Prime> finite_exceptions() const;

  friend bool operator==(const HeightSequence&, const HeightSequence&) = default;

 private:
  Val default_ = Val::finite(0);
  std::map<Prime, Val> exceptions_;
};

/// Canonical representative of a similarity class of height sequences.
/// With a finite default only the infinite positions survive; with an
/// infinite default only the finite positions do.
struct TypeClass {
  Val default_height = Val::finite(0);
  std::set<Prime> infinite_primes;
  std::set<Prime> finite_primes;

  friend bool operator==(const TypeClass&, const TypeClass&) = default;
};

bool similar(const HeightSequence& s, const HeightSequence& t);
TypeClass type_of(const HeightSequence& s);

/// A = { q in Q : v_p(q) >= -k_p for every prime p }. Contains Z.
class RankOneGroup {
 public:
  RankOneGroup() = default;
  explicit RankOneGroup(HeightSequence heights) : heights_(std::move(heights)) {}

  const HeightSequence& heights() const { return heights_; }

  friend bool operator==(const RankOneGroup&, const RankOneGroup&) = default;

 private:
  HeightSequence heights_;
};

/// Throws ResourceError when the denominator of q has a prime factor above `prime_bound`.
bool member(const Rat& q, const RankOneGroup& a, std::uint64_t prime_bound = kDefaultPrimeBound);

/// k_p(A) = max { r >= 0 : 1 in p^r A }. Throws DomainError for non-prime p.
Val height(const RankOneGroup& a, Prime p);

/// Contains Z but no Z[1/p]: every height finite.
bool is_pseudo_integers(const RankOneGroup& a);

enum class LocalizationKind { IsoToZp, IsoToQ };

/// A tensor Z_(p): Z_(p) when k_p is finite, Q when it is infinite.
LocalizationKind localize(const RankOneGroup& a, Prime p);

/// Pointwise minimum of heights.
RankOneGroup intersect(const RankOneGroup& a, const RankOneGroup& b);
/// Pointwise maximum of heights.
RankOneGroup join(const RankOneGroup& a, const RankOneGroup& b);

}  // namespace locgenus
