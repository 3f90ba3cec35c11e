#include "locgenus/arith.hpp"

#include <cctype>

#include "locgenus/error.hpp"

namespace locgenus {

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rat::from_mpq(a.value_ / b.value_);
}

std::string Rat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, 0, true));
  const Integer num = parse_integer(text.substr(0, slash), 0, true);
  const Integer den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rat(num, den);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Prime> primes_up_to(std::uint64_t bound) {
  std::vector<Prime> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

void require_prime(Prime p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::int64_t integer_valuation(Integer n, Prime p) {
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace

std::optional<std::int64_t> valuation(const Rat& q, Prime p) {
  require_prime(p);
  if (q.is_zero()) return std::nullopt;
  return integer_valuation(q.numerator(), p) - integer_valuation(q.denominator(), p);
}

std::vector<PrimePower> factor(const Integer& n, std::uint64_t prime_bound) {
  if (n < 1) throw DomainError("factor expects a positive integer, got " + n.get_str());
  std::vector<PrimePower> out;
  Integer rest = n;
  std::uint64_t d = 2;
  // Divisors are tried in increasing order, so a composite d never divides `rest`.
  for (; d <= prime_bound && Integer(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.push_back({d, e});
  }
  if (rest == 1) return out;
  // Either d*d > rest (so rest is prime) or the bound stopped the search.
  if (Integer(d) * d > rest && rest <= prime_bound) {
    out.push_back({rest.get_ui(), 1});
    return out;
  }
  throw ResourceError("factorization of " + n.get_str() + " needs primes beyond the bound " +
                      std::to_string(prime_bound));
}

Rat mod_one(const Rat& q) {
  Integer floor_part;
  const Integer num = q.numerator();
  const Integer den = q.denominator();
  mpz_fdiv_q(floor_part.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q - Rat(floor_part);
}

Integer prime_power(Prime p, std::uint64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

PAdicApprox::PAdicApprox(Prime p, unsigned precision, const Integer& residue)
    : prime_(p), precision_(precision) {
  require_prime(p);
  if (precision == 0) throw DomainError("p-adic precision must be positive");
  const Integer m = modulus();
  mpz_fdiv_r(residue_.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
}

PAdicApprox PAdicApprox::from_integer(const Integer& z, Prime p, unsigned precision) {
  PAdicApprox out(p, precision, z);
  out.exactly_zero_ = (z == 0);
  return out;
}

PAdicApprox PAdicApprox::exact_zero(Prime p, unsigned precision) {
  return from_integer(Integer(0), p, precision);
}

bool PAdicApprox::is_unit() const {
  return !exactly_zero_ && !mpz_divisible_ui_p(residue_.get_mpz_t(), prime_);
}

PAdicApprox PAdicApprox::negated() const {
  PAdicApprox out(prime_, precision_, -residue_);
  out.exactly_zero_ = exactly_zero_;
  return out;
}

PAdicApprox PAdicApprox::shifted(unsigned k) const {
  PAdicApprox out(prime_, precision_, residue_ * prime_power(prime_, k));
  out.exactly_zero_ = exactly_zero_;
  return out;
}

std::optional<UnitDecomposition> padic_decompose(const PAdicApprox& z) {
  if (z.is_exactly_zero()) return std::nullopt;
  if (z.residue() == 0) {
    throw DomainError("insufficient precision: valuation at " + std::to_string(z.prime()) +
                      " is at least the precision " + std::to_string(z.precision()));
  }
  Integer u = z.residue();
  unsigned k = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), z.prime())) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), z.prime());
    ++k;
  }
  return UnitDecomposition{k, PAdicApprox(z.prime(), z.precision() - k, u)};
}

}  // namespace locgenus
