#pragma once

// Words over the alphabet {x_0, ..., x_{q-1}}: free monoid and free group
// elements, the Thue-Morse substitution and the cyclic generator shift.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "thuemorse/error.hpp"

namespace thuemorse {

/// Number of generators q; also the size of the tree alphabet.
class Alphabet {
 public:
  explicit Alphabet(unsigned q);

  unsigned size() const noexcept { return q_; }
  bool contains(unsigned index) const noexcept { return index < q_; }
  /// Residue of i modulo q, for any signed i.
  unsigned wrap(long long i) const noexcept;

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned q_;
};

/// x_gen or x_gen^{-1}.
struct Letter {
  unsigned gen = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {gen, !inverse}; }
  constexpr bool cancels(Letter other) const noexcept {
    return gen == other.gen && inverse != other.inverse;
  }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A sequence of letters. Used both for monoid words (positive letters only)
/// and for free group words; nothing is reduced implicitly, see free_reduce.
///
/// Words are ordered shortlex, so the empty word sorts first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(unsigned gen) { return Word{{gen, false}}; }
  /// Positive word x_{i_1} x_{i_2} ...
  static Word from_indices(const std::vector<unsigned>& indices);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// True when no letter is inverted.
  bool is_positive() const noexcept;
  /// Throws InvalidLetter if some index is >= q.
  void check(Alphabet alphabet) const;

  void push_back(Letter l) { letters_.push_back(l); }
  /// Appends with cancellation at the seam; keeps a reduced word reduced.
  void push_back_reduced(Letter l);

  /// Formal inverse: reversed, every letter inverted.
  Word inverse() const;
  /// n-th power; negative n uses the inverse. Not reduced.
  Word pow(long long n) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Letter-level free reduction. Idempotent and never lengthens.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w) noexcept;
/// free_reduce(a * b) without building the unreduced product.
Word reduced_product(const Word& a, const Word& b);

/// Thue-Morse substitution x_i -> x_i x_{i+1} ... x_{i-1}, extended to inverse
/// letters by theta(x^-1) = theta(x)^-1 so that it is a group endomorphism.
Word theta(const Word& w, Alphabet alphabet);
/// Cyclic generator shift x_i -> x_{i+shift mod q}; signs are preserved.
Word gamma(const Word& w, Alphabet alphabet, long long shift = 1);

/// Letter n (0-based) of the Thue-Morse word W_q, the fixed point of theta
/// starting at x_0: the base-q digit sum of n, modulo q.
unsigned tm_letter(Alphabet alphabet, std::uint64_t n) noexcept;
/// First n letters of W_q. Memory is linear in n.
Word tm_prefix(Alphabet alphabet, std::size_t n);

/// "x0 x1^-1 x2"; the empty word renders as "1".
std::string to_string(const Word& w);

/// Parses the word grammar
///
///   word    := factor*            (juxtaposition)
///   factor  := primary ('^' integer)?
///   primary := 'x' index | '1' | '(' word ')' | '[' word ',' word ']'
///
/// where [a,b] = a^-1 b^-1 a b. The result is not reduced.
Word parse_word(std::string_view text, Alphabet alphabet);

}  // namespace thuemorse

template <>
struct std::hash<thuemorse::Word> {
  std::size_t operator()(const thuemorse::Word& w) const noexcept;
};
