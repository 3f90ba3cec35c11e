#pragma once

// Genus descriptors and classification rules:
//  * the extended rationalization genus of an odd sphere, indexed by
//    connecting homomorphisms Q -> Q/Z up to double cosets;
//  * the extended n-th Postnikov genus of S^n, indexed by prod_p N_+, with
//    symbolic fake-sphere models and their cohomological fingerprint;
//  * fake CP^n built from per-prime degree choices;
//  * the genus triviality rules for a small catalogue of finite complexes.
//
// Spaces are symbolic: a model stores its classifying data and answers the
// cohomology questions that data determines. No cell structures are built.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "locgenus/arith.hpp"
#include "locgenus/connecting.hpp"
#include "locgenus/rankone.hpp"

namespace locgenus {

inline constexpr unsigned kDefaultFingerprintCap = 64;
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// Throws DomainError unless n is odd and at least 3.
void require_odd_sphere_dimension(unsigned n);

// ---------------------------------------------------------------------------
// Extended rationalization genus of S^n, n odd.

/// Y(d) sitting in M(Q/Z, n-1) -> Y(d) -> K(Q, n) with connecting map d.
class RationalGenusElement {
 public:
  RationalGenusElement(unsigned dimension, ConnectingHom hom);

  unsigned dimension() const { return dimension_; }
  const ConnectingHom& hom() const { return hom_; }

 private:
  unsigned dimension_;
  ConnectingHom hom_;
};

/// A direct sum of full Pruefer groups, one per prime of a set that is either
/// finite or cofinite.
class TorsionShape {
 public:
  /// The primes where the heights are infinite.
  static TorsionShape infinite_locus(const HeightSequence& h);

  bool cofinite() const { return cofinite_; }
  /// The listed primes when finite, the omitted primes when cofinite.
  const std::set<Prime>& primes() const { return primes_; }
  bool contains(Prime p) const { return cofinite_ != primes_.contains(p); }
  bool empty() const { return !cofinite_ && primes_.empty(); }

  friend bool operator==(const TorsionShape&, const TorsionShape&) = default;

 private:
  bool cofinite_ = false;
  std::set<Prime> primes_;
};

struct RationalHomotopy {
  TypeClass pi_n;              ///< the kernel of d, up to isomorphism
  TorsionShape pi_n_minus_1;   ///< the cokernel of d
};

/// From 0 -> pi_n Y -> Q -> Q/Z -> pi_{n-1} Y -> 0.
RationalHomotopy homotopy_groups(const RationalGenusElement& y,
                                 std::uint64_t prime_bound = kDefaultPrimeBound);

/// d surjective, equivalently its kernel is a group of pseudo-integers.
bool is_n_minus_1_connected(const RationalGenusElement& y,
                            std::uint64_t prime_bound = kDefaultPrimeBound);

/// Complete invariant of Y in the extended genus: the double-coset class of d.
TypeClass classify_rational_genus(const RationalGenusElement& y,
                                  std::uint64_t prime_bound = kDefaultPrimeBound);

// ---------------------------------------------------------------------------
// Extended Postnikov genus of S^n.

/// An element of prod_p N_+ with all but finitely many entries equal to a default.
/// Entries equal to the default are dropped on construction.
class NPlusSequence {
 public:
  NPlusSequence() = default;
  /// Throws DomainError when a key is not prime.
  explicit NPlusSequence(NPlus default_entry, std::map<Prime, NPlus> exceptions = {});

  NPlus default_entry() const { return default_; }
  const std::map<Prime, NPlus>& exceptions() const { return exceptions_; }
  NPlus at(Prime p) const;
  /// Smallest prime that carries the default entry.
  Prime default_witness() const;

  friend bool operator==(const NPlusSequence&, const NPlusSequence&) = default;
  friend auto operator<=>(const NPlusSequence& a, const NPlusSequence& b) {
    if (auto c = a.default_ <=> b.default_; c != 0) return c;
    return a.exceptions_ <=> b.exceptions_;
  }

 private:
  NPlus default_ = NPlus::of(0);
  std::map<Prime, NPlus> exceptions_;
};

/// The sequence K = (k_p) classifying Y_K. All zeros is the standard sphere.
class PostnikovGenusDescriptor {
 public:
  PostnikovGenusDescriptor(unsigned dimension, NPlusSequence entries);

  static PostnikovGenusDescriptor standard(unsigned dimension) {
    return PostnikovGenusDescriptor(dimension, NPlusSequence(NPlus::of(0)));
  }

  unsigned dimension() const { return dimension_; }
  const NPlusSequence& entries() const { return entries_; }
  NPlus at(Prime p) const { return entries_.at(p); }

  friend bool operator==(const PostnikovGenusDescriptor&, const PostnikovGenusDescriptor&) = default;

 private:
  unsigned dimension_;
  NPlusSequence entries_;
};

/// The operation whose vanishing on multiples of the generator iota of
/// H^n(Y; Z) detects k_p: the cup square at p = 2, the integral reduced power
/// P^1 at odd p.
enum class ObstructionOperation { CupSquare, ReducedPowerP1 };

ObstructionOperation obstruction_operation(Prime p);

/// Symbolic model of Y_K: pi_n = Z, Postnikov section K(Z, n), connected
/// cover the p-completed covers S^n<n>^_p.
class FakeSphereModel {
 public:
  explicit FakeSphereModel(PostnikovGenusDescriptor descriptor);

  const PostnikovGenusDescriptor& descriptor() const { return descriptor_; }
  unsigned dimension() const { return descriptor_.dimension(); }

  /// Human-readable name: S^n, S^n_p, Y_{p,k}, K(Z,n) x S^n<n>, Y_K.
  std::string label() const;

  /// Cohomology oracle. The operation at p applied to m * iota vanishes iff
  /// p^{k_p} divides m. At a base-point entry it vanishes only for m = 0.
  bool obstruction_vanishes(Prime p, const Integer& multiple) const;

  /// The factor Y_{p, k_p} seen by B aut(S^n<n>^_p).
  FakeSphereModel restrict_to(Prime p) const;

 private:
  PostnikovGenusDescriptor descriptor_;
};

/// Y_{p,k}: pull-back of K(Z,n) --p^k--> K(Z,n) <- S^n_p; Y_{p,*} is
/// S^n<n>^_p x K(Z,n). Other primes carry the base point.
FakeSphereModel build_fake_sphere(unsigned n, Prime p, NPlus k);

/// Y_K from K; throws DomainError when K's dimension differs from n.
FakeSphereModel assemble_global(unsigned n, const PostnikovGenusDescriptor& k);

/// Smallest k with the obstruction operation vanishing on p^k * iota.
/// Beyond `cap` the search gives up: it reports the base point when the
/// model's descriptor says so and throws ResourceError otherwise.
NPlus fingerprint(const FakeSphereModel& y, Prime p, unsigned cap = kDefaultFingerprintCap);

/// Recovers K from fingerprints alone: one probe per exceptional prime plus
/// one at a prime carrying the default.
PostnikovGenusDescriptor classify_postnikov_genus(const FakeSphereModel& y,
                                                  unsigned cap = kDefaultFingerprintCap);

/// Component of [K(Z,n), B aut(S^n<n>^_p)] / {+-1} hit by z in Z_p:
/// the exponent k of z = p^k u, or the base point when z is zero.
NPlus classifying_map_class(unsigned n, Prime p, const PAdicApprox& z);

/// Fake CP^n from degrees m_p = p^{k_p} (a base-point exponent meaning
/// m_p = 0). The fiber K(Z, 2n+1) sees degree m_p^n, so the pulled-back fake
/// sphere of dimension 2n+1 has entries n * k_p.
PostnikovGenusDescriptor cp_fake_descriptor(unsigned n, const NPlusSequence& degree_exponents);

/// All descriptors supported on primes <= prime_bound with entries in
/// {*, 0..entry_bound} and 0 elsewhere, sorted. Work is split over `threads`
/// workers; the output does not depend on the split.
struct PostnikovEnumeration {
  std::vector<PostnikovGenusDescriptor> descriptors;
  std::uint64_t count = 0;
};

PostnikovEnumeration enumerate_postnikov_genus(unsigned n, std::uint64_t prime_bound,
                                               std::uint64_t entry_bound, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Genus triviality for catalogued finite complexes.

struct FiniteComplexDescriptor {
  std::string tag;
  bool simply_connected = false;
  bool pi2_finite = false;
  /// Largest degree with pi_d tensor Q nonzero; pi_{>N} tensor Q = 0 iff N >= this.
  unsigned rational_top = 0;
};

/// Catalogue: "S<n>" (n >= 1), "CP<n>" (n >= 1), "S2xS5", "CP2xS3".
/// Throws DomainError for anything else.
FiniteComplexDescriptor lookup_complex(std::string_view tag);

struct GenusFunctor {
  enum class Kind { Neisendorfer, PostnikovSection };
  Kind kind = Kind::Neisendorfer;
  unsigned section = 0;  ///< N for the N-th Postnikov section

  static GenusFunctor neisendorfer() { return {Kind::Neisendorfer, 0}; }
  static GenusFunctor postnikov(unsigned n) { return {Kind::PostnikovSection, n}; }
};

struct GenusVerdict {
  enum class Kind {
    Singleton,            ///< the extended genus and the genus are {X}
    UniqueFiniteComplex,  ///< X is the only finite complex in the genus
    HypothesesNotMet,
  };
  Kind kind = Kind::HypothesesNotMet;
  std::string complex;
  std::optional<std::string> witness;  ///< another finite complex in the genus, when catalogued

  std::string to_string() const;
  friend bool operator==(const GenusVerdict&, const GenusVerdict&) = default;
};

GenusVerdict finite_complex_genus_verdict(const FiniteComplexDescriptor& x, const GenusFunctor& functor);

}  // namespace locgenus
