#include "locgenus/rankone.hpp"

#include <algorithm>

#include "locgenus/error.hpp"

namespace locgenus {

HeightSequence::HeightSequence(Val default_height, std::map<Prime, Val> exceptions)
    : default_(default_height) {
  for (const auto& [p, v] : exceptions) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (v != default_) exceptions_.emplace(p, v);
  }
}

Val HeightSequence::at(Prime p) const {
  const auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

std::set<Prime> HeightSequence::infinite_exceptions() const {
  std::set<Prime> out;
  for (const auto& [p, v] : exceptions_) {
    if (v.is_infinite()) out.insert(p);
  }
  return out;
}

std::set<Prime> HeightSequence::finite_exceptions() const {
  std::set<Prime> out;
  for (const auto& [p, v] : exceptions_) {
    if (v.is_finite()) out.insert(p);
  }
  return out;
}

bool similar(const HeightSequence& s, const HeightSequence& t) {
  const Val ds = s.default_height();
  const Val dt = t.default_height();
  // Off the finitely many exceptions the sequences are constant; a nonzero
  // constant difference, or infinity against a finite value, occurs at
  // infinitely many primes.
  if (ds != dt) return false;
  if (ds.is_finite()) return s.infinite_exceptions() == t.infinite_exceptions();
  return s.finite_exceptions() == t.finite_exceptions();
}

TypeClass type_of(const HeightSequence& s) {
  TypeClass out;
  out.default_height = s.default_height();
  if (out.default_height.is_finite()) {
    out.infinite_primes = s.infinite_exceptions();
  } else {
    out.finite_primes = s.finite_exceptions();
  }
  return out;
}

bool member(const Rat& q, const RankOneGroup& a, std::uint64_t prime_bound) {
  for (const auto& [p, e] : factor(q.denominator(), prime_bound)) {
    const Val k = a.heights().at(p);
    if (k.is_finite() && e > k.value()) return false;
  }
  return true;
}

Val height(const RankOneGroup& a, Prime p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return a.heights().at(p);
}

bool is_pseudo_integers(const RankOneGroup& a) {
  const HeightSequence& h = a.heights();
  return h.default_height().is_finite() && h.infinite_exceptions().empty();
}

LocalizationKind localize(const RankOneGroup& a, Prime p) {
  return height(a, p).is_finite() ? LocalizationKind::IsoToZp : LocalizationKind::IsoToQ;
}

namespace {

template <typename Combine>
RankOneGroup pointwise(const RankOneGroup& a, const RankOneGroup& b, Combine combine) {
  const HeightSequence& ha = a.heights();
  const HeightSequence& hb = b.heights();
  std::map<Prime, Val> exceptions;
  for (const auto& [p, v] : ha.exceptions()) exceptions.emplace(p, combine(v, hb.at(p)));
  for (const auto& [p, v] : hb.exceptions()) exceptions.emplace(p, combine(ha.at(p), v));
  return RankOneGroup(
      HeightSequence(combine(ha.default_height(), hb.default_height()), std::move(exceptions)));
}

}  // namespace

RankOneGroup intersect(const RankOneGroup& a, const RankOneGroup& b) {
  return pointwise(a, b, [](Val x, Val y) { return std::min(x, y); });
}

RankOneGroup join(const RankOneGroup& a, const RankOneGroup& b) {
  return pointwise(a, b, [](Val x, Val y) { return std::max(x, y); });
}

}  // namespace locgenus
