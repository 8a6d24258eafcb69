#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thuemorse {

/// Coefficients are stored as exact rationals and kept normalized for the
/// ring: integral over Z, reduced into [0, p) over F_p.
using Coeff = mpq_class;

class Ring {
 public:
  enum class Kind { Rationals, Integers, PrimeField };

  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers() { return Ring(Kind::Integers, 0); }
  /// Throws Error unless p is prime.
  static Ring prime_field(unsigned long p);
  /// "Q", "Z" or "Fp:<p>".
  static Ring parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// p for F_p, 0 otherwise.
  unsigned long characteristic() const noexcept { return p_; }

  /// Brings c into canonical form; throws Error if c is not in the ring
  /// (a non-integer over Z, or a denominator divisible by p over F_p).
  Coeff normalize(const Coeff& c) const;
  bool is_unit(const Coeff& c) const;
  /// Multiplicative inverse; throws Error for non-units.
  Coeff inverse(const Coeff& c) const;

  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

}  // namespace thuemorse
