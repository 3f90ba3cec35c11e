#include "locgenus/connecting.hpp"

#include "locgenus/error.hpp"

namespace locgenus {

namespace {

PrueferTwist normalized_twist(Prime p, PrueferTwist twist) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (twist.modulus_exponent == 0) throw DomainError("twist modulus exponent must be at least 1");
  const Integer m = prime_power(p, twist.modulus_exponent);
  Integer u;
  mpz_fdiv_r(u.get_mpz_t(), twist.unit.get_mpz_t(), m.get_mpz_t());
  if (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    throw DomainError("twist residue " + twist.unit.get_str() + " is not a unit mod " +
                      std::to_string(p));
  }
  twist.unit = u;
  return twist;
}

}  // namespace

ConnectingHom::ConnectingHom(HeightSequence kernel_heights, Rat precompose,
                             std::map<Prime, PrueferTwist> twists)
    : kernel_heights_(std::move(kernel_heights)), precompose_(std::move(precompose)) {
  if (precompose_.is_zero()) throw DomainError("pre-composition must be a nonzero rational");
  for (const auto& [p, t] : twists) twists_.emplace(p, normalized_twist(p, t));
}

ConnectingHom ConnectingHom::with_twist(Prime p, const PrueferTwist& twist) const {
  PrueferTwist next = normalized_twist(p, twist);
  auto twists = twists_;
  if (const auto it = twists.find(p); it != twists.end()) {
    next.modulus_exponent = std::max(next.modulus_exponent, it->second.modulus_exponent);
    next.unit = it->second.unit * next.unit;
  }
  twists[p] = next;
  return ConnectingHom(kernel_heights_, precompose_, std::move(twists));
}

ConnectingHom ConnectingHom::precomposed(const Rat& r) const {
  return ConnectingHom(kernel_heights_, precompose_ * r, twists_);
}

ConnectingHom beta(const RankOneGroup& a) { return ConnectingHom(a.heights()); }

QmodZ eval(const ConnectingHom& d, const Rat& q, std::uint64_t prime_bound) {
  const Rat r = d.precompose() * q;
  if (r.is_integer()) return QmodZ();
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  Rat total;
  for (const auto& [p, e] : factor(den, prime_bound)) {
    const Val k = d.kernel_heights().at(p);
    if (k.is_infinite() || e <= k.value()) continue;
    // r = num / (p^e * b) with p not dividing b; the p-primary part is c / p^e
    // with c = num * b^{-1} mod p^e.
    const Integer pe = prime_power(p, e);
    const Integer b = den / pe;
    Integer b_inv;
    mpz_invert(b_inv.get_mpz_t(), b.get_mpz_t(), pe.get_mpz_t());
    Integer c = num * b_inv;
    if (const auto it = d.twists().find(p); it != d.twists().end()) c *= it->second.unit;
    // Multiplying by p^{k_p} leaves c / p^{e - k_p}.
    const Integer shrunk = prime_power(p, e - k.value());
    Integer reduced;
    mpz_fdiv_r(reduced.get_mpz_t(), c.get_mpz_t(), shrunk.get_mpz_t());
    total = total + Rat(reduced, shrunk);
  }
  return QmodZ(total);
}

bool in_kernel(const ConnectingHom& d, const Rat& q, std::uint64_t prime_bound) {
  return eval(d, q, prime_bound).is_zero();
}

RankOneGroup kernel(const ConnectingHom& d, std::uint64_t prime_bound) {
  // q in ker iff r q in A iff v_p(q) >= -(k_p + v_p(r)).
  const HeightSequence& h = d.kernel_heights();
  std::map<Prime, std::int64_t> shift;
  for (const auto& [p, e] : factor(abs(d.precompose().numerator()), prime_bound)) shift[p] += e;
  for (const auto& [p, e] : factor(d.precompose().denominator(), prime_bound)) shift[p] -= e;

  std::map<Prime, Val> exceptions = h.exceptions();
  for (const auto& [p, s] : shift) {
    const Val k = h.at(p);
    if (k.is_infinite()) continue;
    const auto shifted = static_cast<std::int64_t>(k.value()) + s;
    exceptions[p] = Val::finite(shifted < 0 ? 0 : static_cast<std::uint64_t>(shifted));
  }
  return RankOneGroup(HeightSequence(h.default_height(), std::move(exceptions)));
}

TypeClass double_coset_class(const ConnectingHom& d, std::uint64_t prime_bound) {
  return type_of(kernel(d, prime_bound).heights());
}

}  // namespace locgenus
