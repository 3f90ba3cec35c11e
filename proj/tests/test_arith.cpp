#include <doctest.h>

#include "generators.hpp"
#include "locgenus/arith.hpp"
#include "locgenus/error.hpp"

using namespace locgenus;

namespace {

// Counts p in n by repeated machine division; independent of the GMP path.
long count_factor(std::uint64_t n, std::uint64_t p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<Prime> naive_primes(std::uint64_t bound) {
  std::vector<Prime> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d < n; ++d) prime = prime && (n % d != 0);
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("valuation examples") {
  CHECK(count_factor(12, 2) == 2);
  CHECK(valuation(Rat(12), 2) == 2);
  for (const Prime p : {2, 3, 5, 97}) CHECK(valuation(Rat(1), p) == 0);
  CHECK(count_factor(8, 2) == 3);
  CHECK(valuation(Rat(3, 8), 2) == -3);
  CHECK_FALSE(valuation(Rat(0), 7).has_value());
  CHECK_THROWS_AS(valuation(Rat(12), 4), DomainError);
  CHECK_THROWS_AS(valuation(Rat(12), 1), DomainError);
}

TEST_CASE("valuation agrees with machine trial division") {
  for (std::uint64_t a = 1; a < 300; ++a) {
    for (std::uint64_t b : {1, 2, 9, 50, 243}) {
      for (const Prime p : {2, 3, 5, 7}) {
        CHECK(valuation(Rat(Integer(a), Integer(b)), p) ==
              count_factor(a, p) - count_factor(b, p));
      }
    }
  }
}

TEST_CASE("valuation is additive") {
  testing::Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const Rat a = gen.nonzero_rat();
    const Rat b = gen.nonzero_rat();
    for (const Prime p : {2, 3, 5, 7}) {
      CHECK(*valuation(a * b, p) == *valuation(a, p) + *valuation(b, p));
    }
  }
}

TEST_CASE("primes_up_to matches a naive sieve") {
  CHECK(primes_up_to(10) == std::vector<Prime>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<Prime>{2});
  CHECK(primes_up_to(30) == std::vector<Prime>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(500) == naive_primes(500));
  for (std::uint64_t n = 0; n < 500; ++n) {
    const auto ps = naive_primes(n);
    CHECK(is_prime(n) == (!ps.empty() && ps.back() == n));
  }
}

TEST_CASE("factor reconstructs its input and honours the bound") {
  for (std::uint64_t n = 1; n < 2000; ++n) {
    Integer product = 1;
    for (const auto& [p, e] : factor(Integer(n))) {
      CHECK(is_prime(p));
      product *= prime_power(p, e);
    }
    CHECK(product == n);
  }
  CHECK(factor(Integer(1)).empty());
  CHECK_THROWS_AS(factor(Integer(1'000'003)), ResourceError);
  CHECK(factor(Integer(1'000'003), 2'000'000) == std::vector<PrimePower>{{1'000'003, 1}});
  CHECK(factor(Integer(97), 100) == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factor(Integer(97), 50), ResourceError);
  CHECK_THROWS_AS(factor(Integer(0)), DomainError);
}

TEST_CASE("mod_one") {
  CHECK(mod_one(Rat(7, 4)) == Rat(3, 4));
  CHECK(mod_one(Rat(-1, 3)) == Rat(2, 3));
  CHECK(mod_one(Rat(5)) == Rat(0));
  testing::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    const Rat q = gen.probe();
    const Rat r = mod_one(q);
    CHECK(r >= Rat(0));
    CHECK(r < Rat(1));
    CHECK(mod_one(r) == r);
    CHECK((q - r).is_integer());
    const long m = static_cast<long>(gen.uniform(0, 200)) - 100;
    CHECK(mod_one(q + Rat(m)) == r);
  }
}

TEST_CASE("Rat parsing and printing") {
  CHECK(Rat::parse("3/8") == Rat(3, 8));
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(Rat::parse("5").to_string() == "5");
  CHECK(Rat(-3, 2).to_string() == "-3/2");
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("padic_decompose examples") {
  SUBCASE("12 at p = 2") {
    const auto d = padic_decompose(PAdicApprox(2, 8, Integer(12)));
    REQUIRE(d.has_value());
    CHECK(d->k == 2);
    CHECK(d->unit.precision() == 6);
    CHECK(d->unit.residue() == 3);
    CHECK(d->unit.is_unit());
  }
  SUBCASE("exact zero is the base point") {
    CHECK_FALSE(padic_decompose(PAdicApprox::exact_zero(3)).has_value());
  }
  SUBCASE("unit") {
    const auto d = padic_decompose(PAdicApprox(5, 4, Integer(7)));
    REQUIRE(d.has_value());
    CHECK(d->k == 0);
    CHECK(d->unit.residue() == 7);
    CHECK(d->unit.precision() == 4);
  }
  SUBCASE("vanishing residue without the exact flag") {
    CHECK_THROWS_AS(padic_decompose(PAdicApprox(2, 4, Integer(16))), DomainError);
    CHECK_THROWS_AS(padic_decompose(PAdicApprox::from_integer(prime_power(3, 40), 3)), DomainError);
  }
}

TEST_CASE("PAdicApprox construction") {
  const PAdicApprox neg = PAdicApprox::from_integer(Integer(-1), 5, 3);
  CHECK(neg.residue() == 124);
  CHECK(neg.is_unit());
  CHECK(neg.negated().residue() == 1);
  CHECK_FALSE(PAdicApprox::from_integer(Integer(25), 5, 2).is_exactly_zero());
  CHECK(PAdicApprox::from_integer(Integer(0), 5, 2).is_exactly_zero());
  CHECK_THROWS_AS(PAdicApprox(6, 3, Integer(1)), DomainError);
  CHECK_THROWS_AS(PAdicApprox(7, 0, Integer(1)), DomainError);
}

TEST_CASE("padic_decompose roundtrip") {
  testing::Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    const Prime p = gen.prime();
    const auto n = static_cast<unsigned>(gen.uniform(1, 40));
    const auto k = static_cast<unsigned>(gen.uniform(0, n - 1));
    const Integer u = gen.unit(p);
    const PAdicApprox z = PAdicApprox(p, n, u).shifted(k);
    const auto d = padic_decompose(z);
    REQUIRE(d.has_value());
    CHECK(d->k == k);
    const Integer m = prime_power(p, n - k);
    CHECK(d->unit.residue() == Integer((u % m + m) % m));
    CHECK(d->unit.precision() == n - k);
  }
}

TEST_CASE("NPlus and Val ordering") {
  CHECK(NPlus::star() < NPlus::of(0));
  CHECK(NPlus::of(2) < NPlus::of(3));
  CHECK(Val::finite(100) < Val::infinity());
  CHECK(std::min(Val::infinity(), Val::finite(4)) == Val::finite(4));
  CHECK(NPlus::star().to_string() == "*");
  CHECK(Val::infinity().to_string() == "inf");
}
