#include "thuemorse/exact.hpp"

#include "lexer.hpp"

namespace thuemorse {

ExactQ::ExactQ(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw Error("zero denominator");
  value_.canonicalize();
}

ExactQ ExactQ::parse(std::string_view text) {
  detail::Scanner in(text);
  bool negative = in.consume('-');
  BigInt num(in.digits());
  BigInt den = 1;
  if (in.consume('/')) {
    den = BigInt(in.digits());
    if (in.consume('^')) {
      long long k = in.integer();
      if (k < 0 || k > 100000) in.fail("exponent out of range");
      den = ipow(static_cast<unsigned>(den.get_ui()), static_cast<unsigned>(k));
    }
  }
  if (!in.at_end()) in.fail("trailing characters");
  if (den == 0) in.fail("zero denominator");
  return ExactQ(negative ? BigInt(-num) : num, den);
}

std::optional<unsigned> ExactQ::q_power(unsigned q) const {
  BigInt d = value_.get_den();
  unsigned k = 0;
  while (d != 1) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), q) == 0) return std::nullopt;
    d /= q;
    ++k;
  }
  return k;
}

std::optional<unsigned> ExactQ::q_adic_exponent(unsigned q) const {
  BigInt d = value_.get_den();
  const BigInt base = q;
  unsigned k = 0;
  while (d != 1) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return std::nullopt;
    d /= g;
    ++k;
  }
  return k;
}

std::string ExactQ::render(unsigned q) const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  if (auto k = q_power(q); k && *k > 1)
    return value_.get_num().get_str() + "/" + std::to_string(q) + "^" + std::to_string(*k);
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt ipow(unsigned q, unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, k);
  return r;
}

}  // namespace thuemorse
