#include "locgenus/genus.hpp"

#include <algorithm>
#include <charconv>
#include <thread>

#include "locgenus/error.hpp"

namespace locgenus {

void require_odd_sphere_dimension(unsigned n) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("dimension must be odd and at least 3, got " + std::to_string(n));
  }
}

RationalGenusElement::RationalGenusElement(unsigned dimension, ConnectingHom hom)
    : dimension_(dimension), hom_(std::move(hom)) {
  require_odd_sphere_dimension(dimension);
}

TorsionShape TorsionShape::infinite_locus(const HeightSequence& h) {
  TorsionShape out;
  out.cofinite_ = h.default_height().is_infinite();
  out.primes_ = out.cofinite_ ? h.finite_exceptions() : h.infinite_exceptions();
  return out;
}

RationalHomotopy homotopy_groups(const RationalGenusElement& y, std::uint64_t prime_bound) {
  const RankOneGroup ker = kernel(y.hom(), prime_bound);
  // The image of Q in each Z_{p^infty} is divisible, so it is 0 or everything:
  // 0 exactly where the kernel height is infinite.
  return {type_of(ker.heights()), TorsionShape::infinite_locus(ker.heights())};
}

bool is_n_minus_1_connected(const RationalGenusElement& y, std::uint64_t prime_bound) {
  return is_pseudo_integers(kernel(y.hom(), prime_bound));
}

TypeClass classify_rational_genus(const RationalGenusElement& y, std::uint64_t prime_bound) {
  return double_coset_class(y.hom(), prime_bound);
}

NPlusSequence::NPlusSequence(NPlus default_entry, std::map<Prime, NPlus> exceptions)
    : default_(default_entry) {
  for (const auto& [p, v] : exceptions) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (v != default_) exceptions_.emplace(p, v);
  }
}

NPlus NPlusSequence::at(Prime p) const {
  const auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

Prime NPlusSequence::default_witness() const {
  Prime p = 2;
  while (exceptions_.contains(p)) {
    do ++p;
    while (!is_prime(p));
  }
  return p;
}

PostnikovGenusDescriptor::PostnikovGenusDescriptor(unsigned dimension, NPlusSequence entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  require_odd_sphere_dimension(dimension);
}

ObstructionOperation obstruction_operation(Prime p) {
  return p == 2 ? ObstructionOperation::CupSquare : ObstructionOperation::ReducedPowerP1;
}

FakeSphereModel::FakeSphereModel(PostnikovGenusDescriptor descriptor)
    : descriptor_(std::move(descriptor)) {}

std::string FakeSphereModel::label() const {
  const std::string n = std::to_string(dimension());
  const NPlusSequence& k = descriptor_.entries();
  if (k.exceptions().empty()) {
    if (k.default_entry() == NPlus::of(0)) return "S^" + n;
    if (k.default_entry().is_star()) return "K(Z," + n + ") x S^" + n + "<" + n + ">";
  }
  if (k.default_entry().is_star() && k.exceptions().size() == 1) {
    const auto& [p, v] = *k.exceptions().begin();
    if (v == NPlus::of(0)) return "S^" + n + "_" + std::to_string(p);
    return "Y_{" + std::to_string(p) + "," + v.to_string() + "}";
  }
  return "Y_K";
}

bool FakeSphereModel::obstruction_vanishes(Prime p, const Integer& multiple) const {
  const NPlus k = descriptor_.at(p);
  if (k.is_star()) return multiple == 0;
  const Integer pk = prime_power(p, k.value());
  return mpz_divisible_p(multiple.get_mpz_t(), pk.get_mpz_t()) != 0;
}

FakeSphereModel FakeSphereModel::restrict_to(Prime p) const {
  return build_fake_sphere(dimension(), p, descriptor_.at(p));
}

FakeSphereModel build_fake_sphere(unsigned n, Prime p, NPlus k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return FakeSphereModel(PostnikovGenusDescriptor(n, NPlusSequence(NPlus::star(), {{p, k}})));
}

FakeSphereModel assemble_global(unsigned n, const PostnikovGenusDescriptor& k) {
  require_odd_sphere_dimension(n);
  if (k.dimension() != n) {
    throw DomainError("descriptor has dimension " + std::to_string(k.dimension()) +
                      ", expected " + std::to_string(n));
  }
  return FakeSphereModel(k);
}

NPlus fingerprint(const FakeSphereModel& y, Prime p, unsigned cap) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Integer multiple = 1;
  for (unsigned k = 0; k <= cap; ++k) {
    if (y.obstruction_vanishes(p, multiple)) return NPlus::of(k);
    multiple *= p;
  }
  if (y.descriptor().at(p).is_star()) return NPlus::star();
  throw ResourceError("fingerprint search at " + std::to_string(p) + " exceeded the cap " +
                      std::to_string(cap));
}

PostnikovGenusDescriptor classify_postnikov_genus(const FakeSphereModel& y, unsigned cap) {
  const NPlusSequence& stored = y.descriptor().entries();
  std::map<Prime, NPlus> recovered;
  for (const auto& entry : stored.exceptions()) recovered.emplace(entry.first, fingerprint(y, entry.first, cap));
  const NPlus default_entry = fingerprint(y, stored.default_witness(), cap);
  return PostnikovGenusDescriptor(y.dimension(), NPlusSequence(default_entry, std::move(recovered)));
}

NPlus classifying_map_class(unsigned n, Prime p, const PAdicApprox& z) {
  require_odd_sphere_dimension(n);
  if (z.prime() != p) {
    throw DomainError("p-adic value is " + std::to_string(z.prime()) + "-adic, expected " +
                      std::to_string(p));
  }
  const auto decomposition = padic_decompose(z);
  if (!decomposition) return NPlus::star();
  return NPlus::of(decomposition->k);
}

namespace {

// Class of the degree m_p^n on the fiber K(Z, 2n+1).
NPlus cp_entry(unsigned n, Prime p, NPlus exponent) {
  const unsigned dim = 2 * n + 1;
  if (exponent.is_star()) return classifying_map_class(dim, p, PAdicApprox::exact_zero(p));
  const Integer degree = prime_power(p, exponent.value());
  Integer fiber_degree;
  mpz_pow_ui(fiber_degree.get_mpz_t(), degree.get_mpz_t(), n);
  const auto needed = static_cast<unsigned>(exponent.value() * n + 1);
  const unsigned precision = std::max(kDefaultPrecision, needed);
  return classifying_map_class(dim, p, PAdicApprox::from_integer(fiber_degree, p, precision));
}

}  // namespace

PostnikovGenusDescriptor cp_fake_descriptor(unsigned n, const NPlusSequence& degree_exponents) {
  if (n < 1) throw DomainError("CP^n needs n >= 1");
  std::map<Prime, NPlus> entries;
  for (const auto& [p, k] : degree_exponents.exceptions()) entries.emplace(p, cp_entry(n, p, k));
  const NPlus default_entry = cp_entry(n, degree_exponents.default_witness(), degree_exponents.default_entry());
  return PostnikovGenusDescriptor(2 * n + 1, NPlusSequence(default_entry, std::move(entries)));
}

PostnikovEnumeration enumerate_postnikov_genus(unsigned n, std::uint64_t prime_bound,
                                               std::uint64_t entry_bound, unsigned threads) {
  require_odd_sphere_dimension(n);
  if (prime_bound < 2) throw DomainError("prime bound must be at least 2");
  const std::vector<Prime> primes = primes_up_to(prime_bound);
  Integer total;
  mpz_ui_pow_ui(total.get_mpz_t(), entry_bound + 2, primes.size());
  if (entry_bound > kEnumerationLimit || total > kEnumerationLimit) {
    throw ResourceError("enumeration would produce " + total.get_str() + " descriptors, limit " +
                        std::to_string(kEnumerationLimit));
  }
  const std::uint64_t count = total.get_ui();
  const std::uint64_t radix = entry_bound + 2;

  // Index i in mixed radix, first prime most significant; digit 0 is the base
  // point and digit d > 0 is the entry d - 1. Index order is therefore the
  // lexicographic order of (k_2, k_3, ...) with * first.
  auto decode = [&](std::uint64_t index) {
    std::map<Prime, NPlus> entries;
    for (std::size_t j = primes.size(); j-- > 0;) {
      const std::uint64_t digit = index % radix;
      index /= radix;
      entries.emplace(primes[j], digit == 0 ? NPlus::star() : NPlus::of(digit - 1));
    }
    return PostnikovGenusDescriptor(n, NPlusSequence(NPlus::of(0), std::move(entries)));
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1));
  std::vector<std::vector<PostnikovGenusDescriptor>> chunks(workers);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        chunks[w].reserve(end - begin);
        for (std::uint64_t i = begin; i < end; ++i) chunks[w].push_back(decode(i));
      });
    }
  }
  PostnikovEnumeration out;
  out.count = count;
  out.descriptors.reserve(count);
  for (auto& chunk : chunks) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out.descriptors));
  }
  return out;
}

namespace {

std::optional<unsigned> parse_index(std::string_view digits) {
  unsigned value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

}  // namespace

FiniteComplexDescriptor lookup_complex(std::string_view tag) {
  if (tag == "S2xS5") return {"S2xS5", true, false, 5};
  if (tag == "CP2xS3") return {"CP2xS3", true, false, 5};
  if (tag.starts_with("CP")) {
    if (const auto n = parse_index(tag.substr(2))) return {std::string(tag), true, false, 2 * *n + 1};
  } else if (tag.starts_with("S")) {
    if (const auto n = parse_index(tag.substr(1))) {
      // pi_2(S^2) = Z; odd spheres are rationally K(Q, n), even ones carry pi_{2n-1}.
      const unsigned top = (*n % 2 == 1) ? *n : 2 * *n - 1;
      return {std::string(tag), *n >= 2, *n != 2, top};
    }
  }
  throw DomainError("unknown complex '" + std::string(tag) + "'");
}

std::string GenusVerdict::to_string() const {
  switch (kind) {
    case Kind::Singleton:
      return "singleton {" + complex + "}";
    case Kind::UniqueFiniteComplex:
      return "unique finite complex " + complex;
    case Kind::HypothesesNotMet:
      break;
  }
  std::string out = "hypotheses not met";
  if (witness) out += "; not singleton, witness " + *witness;
  return out;
}

GenusVerdict finite_complex_genus_verdict(const FiniteComplexDescriptor& x, const GenusFunctor& functor) {
  GenusVerdict verdict;
  verdict.complex = x.tag;
  const bool base = x.simply_connected && x.pi2_finite;
  if (functor.kind == GenusFunctor::Kind::Neisendorfer) {
    verdict.kind = base ? GenusVerdict::Kind::Singleton : GenusVerdict::Kind::HypothesesNotMet;
    return verdict;
  }
  if (base && functor.section >= x.rational_top) {
    verdict.kind = GenusVerdict::Kind::UniqueFiniteComplex;
    return verdict;
  }
  verdict.kind = GenusVerdict::Kind::HypothesesNotMet;
  // (S^2 x S^5)[2] = K(Z,2) and (S^2 x S^5)<2> = S^3 x S^5, both shared by CP^2 x S^3.
  if (x.tag == "S2xS5" && functor.section == 2) verdict.witness = "CP2xS3";
  return verdict;
}

}  // namespace locgenus
