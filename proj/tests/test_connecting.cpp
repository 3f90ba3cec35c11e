#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "locgenus/connecting.hpp"
#include "locgenus/error.hpp"

using namespace locgenus;

namespace {

constexpr Val inf = Val::infinity();
constexpr Val fin(std::uint64_t n) { return Val::finite(n); }
HeightSequence hs(Val def, std::map<Prime, Val> ex = {}) { return HeightSequence(def, std::move(ex)); }

// Standard connecting map by brute force: for each prime p of the denominator
// search c in [0, p^e) with q - c/p^e free of p in its denominator, then
// scale by p^{k_p}. Only usable for small denominators.
Rat brute_beta_eval(const HeightSequence& h, const Rat& q) {
  Rat total;
  for (const Prime p : primes_up_to(13)) {
    const auto v = valuation(q, p);
    if (!v || *v >= 0) continue;
    const auto e = static_cast<std::uint64_t>(-*v);
    const Integer pe = prime_power(p, e);
    Integer c = 0;
    for (; c < pe; ++c) {
      const Rat rest = q - Rat(c, pe);
      if (rest.is_zero() || *valuation(rest, p) >= 0) break;
    }
    REQUIRE(c < pe);
    const Val k = h.at(p);
    if (k.is_infinite()) continue;
    total = total + Rat(c * prime_power(p, k.value()), pe);
  }
  return mod_one(total);
}

// a / d with d built from 2, 3, 5, 7 with exponents <= 3.
Rat small_probe(testing::Gen& gen) {
  Integer den = 1;
  for (const Prime p : {2, 3, 5, 7}) den *= prime_power(p, gen.uniform(0, 3));
  return Rat(Integer(static_cast<long>(gen.uniform(0, 20000)) - 10000), den);
}

}  // namespace

TEST_CASE("beta examples") {
  const ConnectingHom std_z = beta(RankOneGroup());
  CHECK(eval(std_z, Rat(1, 2)).value() == Rat(1, 2));
  CHECK(eval(std_z, Rat(3, 4)).value() == Rat(3, 4));
  CHECK(eval(std_z, Rat(-1, 3)).value() == Rat(2, 3));

  const ConnectingHom k2 = beta(RankOneGroup(hs(fin(0), {{2, fin(1)}})));
  CHECK(eval(k2, Rat(1, 2)).is_zero());
  CHECK(eval(k2, Rat(1, 4)).value() == Rat(1, 2));

  const ConnectingHom no2 = beta(RankOneGroup(hs(fin(0), {{2, inf}})));
  for (int r = 0; r < 12; ++r) CHECK(eval(no2, Rat(Integer(3), prime_power(2, r))).is_zero());
  // 1/6 = 1/2 - 1/3: only the 3-primary part -1/3 survives.
  CHECK(eval(no2, Rat(1, 6)).value() == Rat(2, 3));

  testing::Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    const RankOneGroup a(gen.heights());
    for (int j = 0; j < 20; ++j) {
      const Rat q = gen.probe();
      if (member(q, a)) CHECK(eval(beta(a), q).is_zero());
    }
  }
}

TEST_CASE("eval agrees with brute-force partial fractions") {
  testing::Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const HeightSequence h = gen.heights();
    const ConnectingHom d = beta(RankOneGroup(h));
    for (int j = 0; j < 10; ++j) {
      const Rat q = small_probe(gen);
      CHECK(eval(d, q).value() == brute_beta_eval(h, q));
    }
  }
}

TEST_CASE("eval is additive and kills the preimage of Z") {
  testing::Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    ConnectingHom d = beta(RankOneGroup(gen.heights())).precomposed(gen.nonzero_rat());
    const Prime p = gen.prime();
    d = d.with_twist(p, {static_cast<unsigned>(gen.uniform(1, 6)), gen.unit(p)});
    for (int j = 0; j < 5; ++j) {
      const Rat x = gen.probe(), y = gen.probe();
      CHECK(eval(d, x + y) == eval(d, x) + eval(d, y));
      const long m = static_cast<long>(gen.uniform(0, 1000)) - 500;
      CHECK(eval(d, Rat(m) / d.precompose()).is_zero());
    }
  }
}

TEST_CASE("ConnectingHom validation") {
  CHECK_THROWS_AS(ConnectingHom(HeightSequence::integers(), Rat(0)), DomainError);
  CHECK_THROWS_AS(ConnectingHom(HeightSequence::integers(), Rat(1), {{4, {1, Integer(1)}}}), DomainError);
  CHECK_THROWS_AS(ConnectingHom(HeightSequence::integers(), Rat(1), {{3, {0, Integer(1)}}}), DomainError);
  CHECK_THROWS_AS(ConnectingHom(HeightSequence::integers(), Rat(1), {{3, {2, Integer(6)}}}), DomainError);
  const ConnectingHom d(HeightSequence::integers(), Rat(1), {{3, {2, Integer(-1)}}});
  CHECK(d.twists().at(3).unit == 8);
}

TEST_CASE("twists act by automorphisms of each Pruefer component") {
  const ConnectingHom d = beta(RankOneGroup()).with_twist(5, {1, Integer(2)});
  CHECK(eval(d, Rat(1, 5)).value() == Rat(2, 5));
  CHECK(eval(d, Rat(1, 25)).value() == Rat(2, 25));
  CHECK(eval(d, Rat(1, 3)).value() == Rat(1, 3));
  // Twisting -1 at every prime of a probe negates it.
  const ConnectingHom neg = beta(RankOneGroup()).with_twist(2, {3, Integer(-1)}).with_twist(3, {2, Integer(-1)});
  CHECK(eval(neg, Rat(1, 6)).value() == Rat(5, 6));
}

TEST_CASE("kernel examples") {
  testing::Gen gen(34);
  for (int i = 0; i < 50; ++i) {
    const RankOneGroup a(gen.heights());
    CHECK(kernel(beta(a)) == a);
  }
  // Pre-composition with 2: ker = { q : 2q in Z } = (1/2)Z.
  const ConnectingHom two = beta(RankOneGroup()).precomposed(Rat(2));
  CHECK(in_kernel(two, Rat(1, 2)));
  CHECK_FALSE(in_kernel(two, Rat(1, 4)));
  CHECK_FALSE(in_kernel(two, Rat(1, 3)));
  CHECK(kernel(two).heights() == hs(fin(0), {{2, fin(1)}}));

  const ConnectingHom twisted = beta(RankOneGroup(hs(fin(1), {{7, fin(3)}}))).with_twist(7, {2, Integer(10)});
  CHECK(kernel(twisted).heights() == hs(fin(1), {{7, fin(3)}}));
  for (int j = 0; j < 200; ++j) {
    const Rat q = gen.probe();
    CHECK(in_kernel(twisted, q) == in_kernel(beta(kernel(twisted)), q));
  }
}

TEST_CASE("kernel heights follow the pre-composition") {
  testing::Gen gen(35);
  for (int i = 0; i < 200; ++i) {
    const HeightSequence h = gen.heights();
    const Rat r = gen.nonzero_rat();
    const ConnectingHom d = beta(RankOneGroup(h)).precomposed(r);
    const RankOneGroup ker = kernel(d);
    bool contains_one = true;
    for (const Prime p : primes_up_to(50)) {
      const Val k = h.at(p);
      if (k.is_infinite()) {
        CHECK(ker.heights().at(p).is_infinite());
        continue;
      }
      const std::int64_t shifted = static_cast<std::int64_t>(k.value()) + *valuation(r, p);
      contains_one = contains_one && shifted >= 0;
      CHECK(ker.heights().at(p) == fin(static_cast<std::uint64_t>(std::max<std::int64_t>(shifted, 0))));
    }
    // When 1 is in the true kernel, kernel() is exactly { q : eval(d, q) = 0 }.
    if (contains_one) {
      for (int j = 0; j < 30; ++j) {
        const Rat q = gen.probe();
        CHECK(member(q, ker) == in_kernel(d, q));
      }
    }
  }
}

TEST_CASE("double_coset_class") {
  testing::Gen gen(36);
  for (int i = 0; i < 200; ++i) {
    const RankOneGroup a(gen.heights());
    const ConnectingHom d = beta(a);
    CHECK(double_coset_class(d) == type_of(a.heights()));
    CHECK(double_coset_class(d.precomposed(Rat(3, 5))) == double_coset_class(d));
    CHECK(double_coset_class(d.with_twist(7, {2, Integer(3)})) == double_coset_class(d));
    CHECK(double_coset_class(d.precomposed(gen.nonzero_rat())) == double_coset_class(d));
  }
}

TEST_CASE("eval is surjective on Z[1/p]/Z exactly when k_p is finite") {
  struct Case {
    Prime p;
    unsigned r;
  };
  for (const Case c : {Case{2, 10}, Case{3, 6}, Case{5, 4}}) {
    for (const Val k : {fin(0), fin(2), inf}) {
      const ConnectingHom d = beta(RankOneGroup(hs(fin(1), {{c.p, k}})));
      const Integer target = prime_power(c.p, c.r);
      // Probes a / p^{r + k}: enough to reach every c / p^r when k is finite.
      const std::uint64_t extra = k.is_finite() ? k.value() : 3;
      const Integer den = prime_power(c.p, c.r + extra);
      std::set<Rat> hit;
      for (Integer a = 0; a < den; ++a) hit.insert(eval(d, Rat(a, den)).value());
      if (k.is_finite()) {
        CHECK(hit.size() == target.get_ui());
      } else {
        CHECK(hit == std::set<Rat>{Rat(0)});
      }
    }
  }
}
