#include "thuemorse/ring.hpp"

#include "thuemorse/error.hpp"

namespace thuemorse {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p))
    throw Error("F_" + std::to_string(p) +
                " is not a prime field; prime-power fields are not supported");
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  if (text.starts_with("Fp:")) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad prime in ring specification \"" + std::string(text) + "\"");
    return prime_field(std::stoul(digits));
  }
  throw Error("unknown ring \"" + std::string(text) + "\"; expected Q, Z or Fp:<p>");
}

Coeff Ring::normalize(const Coeff& c) const {
  switch (kind_) {
    case Kind::Rationals:
      return c;
    case Kind::Integers:
      if (c.get_den() != 1) throw Error("coefficient " + c.get_str() + " is not an integer");
      return c;
    case Kind::PrimeField: {
      mpz_class p(p_), num = c.get_num(), den = c.get_den(), inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("coefficient " + c.get_str() + " is undefined modulo " + std::to_string(p_));
      mpz_class r = num * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      return Coeff(r);
    }
  }
  return c;
}

bool Ring::is_unit(const Coeff& c) const {
  switch (kind_) {
    case Kind::Integers:
      return c == 1 || c == -1;
    default:
      return sgn(c) != 0;
  }
}

Coeff Ring::inverse(const Coeff& c) const {
  if (!is_unit(c)) throw Error(c.get_str() + " is not invertible in " + name());
  if (kind_ == Kind::PrimeField) return normalize(Coeff(1) / c);
  return Coeff(1) / c;
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::PrimeField: return "Fp:" + std::to_string(p_);
  }
  return "?";
}

}  // namespace thuemorse
