#pragma once

// Wreath recursions for self-similar groups: decomposition, tree action,
// the word problem in the injective quotient, nucleus and boundedness.
//
// Products are read left to right: in g*h the element g acts first. With
// phi(g) = <g_a> pi this gives
//
//   perm(gh) = perm(h) o perm(g),   (gh)_a = g_a * h_{perm(g)(a)},
//
// and the action g(a v) = pi(a) g_a(v) satisfies (gh)(v) = h(g(v)).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thuemorse/exact.hpp"
#include "thuemorse/words.hpp"

namespace thuemorse {

class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned n);
  /// j -> j + shift mod n.
  static Permutation shift(unsigned n, long long shift);
  static Permutation transposition(unsigned n, unsigned a, unsigned b);

  unsigned operator()(unsigned a) const { return images_[a]; }
  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  const std::vector<unsigned>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// This permutation followed by next: a -> next(this(a)).
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

std::string to_string(const Permutation& p);

/// A permutation of the alphabet decorated by one group word per letter.
struct WreathElement {
  std::vector<Word> sections;
  Permutation perm;

  unsigned degree() const noexcept { return perm.size(); }
  bool is_identity_perm() const noexcept { return perm.is_identity(); }

  static WreathElement identity(unsigned q);
  WreathElement inverse() const;
  /// Wreath product; g acts first. Sections are freely reduced.
  friend WreathElement operator*(const WreathElement& g, const WreathElement& h);
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Generator images x_i -> <sections> perm. The tree alphabet and the
/// generating set both have size q.
class WreathRecursion {
 public:
  WreathRecursion(Alphabet alphabet, std::vector<WreathElement> images, std::string name);

  /// G_q: x_0 -> <x_0,...,x_{q-1}>(j -> j-1), x_i -> <1,...,1>(j -> j-1).
  /// The strand from j carries x_j and ends at j-1; with products read left
  /// to right this gives decompose(theta(w)) = <w, gamma(w), ...>.
  static WreathRecursion thue_morse(Alphabet alphabet);
  /// H_q in its inverted-generator form:
  /// x_0 -> <x_0^-1,...,x_{q-1}^-1>(a_i -> a_{i-1}), x_i -> <1,...,1>(a_0 a_i).
  static WreathRecursion thue_morse_variant(Alphabet alphabet);
  /// The same variant before inverting generators (sections x_0,...,x_{q-1}).
  static WreathRecursion thue_morse_variant_plain(Alphabet alphabet);
  /// Every generator acts trivially.
  static WreathRecursion trivial(Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  unsigned degree() const noexcept { return alphabet_.size(); }
  const std::string& name() const noexcept { return name_; }
  const WreathElement& image(unsigned gen) const { return images_.at(gen); }

 private:
  Alphabet alphabet_;
  std::vector<WreathElement> images_;
  std::string name_;
};

/// Vertex of the rooted tree A^*, as its path from the root.
using TreeVertex = std::vector<unsigned>;

/// Letters concatenated ("0110"), dot-separated when q > 10; "e" for the root.
std::string to_string(const TreeVertex& v);

/// Outcome of a semi-decision procedure.
class Verdict {
 public:
  enum class Kind { True, False, Unknown };

  static Verdict yes() { return Verdict(Kind::True, 0); }
  static Verdict no() { return Verdict(Kind::False, 0); }
  static Verdict unknown(std::size_t cap) { return Verdict(Kind::Unknown, cap); }

  Kind kind() const noexcept { return kind_; }
  bool is_true() const noexcept { return kind_ == Kind::True; }
  bool is_false() const noexcept { return kind_ == Kind::False; }
  bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }
  /// The budget that ran out; zero unless unknown.
  std::size_t cap() const noexcept { return cap_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(Kind k, std::size_t cap) : kind_(k), cap_(cap) {}
  Kind kind_;
  std::size_t cap_;
};

/// "true", "false" or "unknown(cap=N)".
std::string to_string(const Verdict& v);

inline constexpr std::size_t kDefaultStateCap = 100000;

/// phi(g), the product of the generator images along g.
WreathElement decompose(const WreathRecursion& r, const Word& g);
/// g(v) = pi(v_1) g_{v_1}(v_2 ... v_n).
TreeVertex act(const WreathRecursion& r, const Word& g, const TreeVertex& v);
/// Iterated section g_v, freely reduced.
Word section(const WreathRecursion& r, const Word& g, const TreeVertex& v);

/// Decides g = 1 in the injective quotient by coinductive closure: every word
/// reached through sections is assumed trivial; a nontrivial root permutation
/// refutes, a closed set certifies. Unknown once more than cap states appear.
Verdict is_trivial(const WreathRecursion& r, const Word& g, std::size_t cap = kDefaultStateCap);
/// is_trivial(g h^-1).
Verdict equal(const WreathRecursion& r, const Word& g, const Word& h,
              std::size_t cap = kDefaultStateCap);

/// Least n in [1, max_power] with g^n certified trivial.
std::optional<std::size_t> order_of(const WreathRecursion& r, const Word& g,
                                    std::size_t max_power,
                                    std::size_t cap = kDefaultStateCap);

/// A shortest (then lexicographically least) vertex moved by g, searching
/// depths 1..depth_cap.
std::optional<TreeVertex> moved_vertex(const WreathRecursion& r, const Word& g,
                                       std::size_t depth_cap);

struct Nucleus {
  /// One representative per equal() class, shortlex-least first.
  std::vector<Word> elements;
  /// False when the state cap stopped the closure early.
  bool closed = true;
};

/// Closure from the generators, their inverses and 1, repeatedly adding the
/// sections of pairwise products and keeping states that lie on, or are
/// reachable from, a cycle of the section graph.
Nucleus nucleus(const WreathRecursion& r, std::size_t cap = 10000);

/// Entry n (n = 0..depth) counts the vertices v of level n whose section g_v
/// is not certified trivial.
std::vector<BigInt> boundedness_profile(const WreathRecursion& r, const Word& g,
                                        std::size_t depth);

/// Root permutations of all sections g_v with |v| <= depth. A portrait of
/// depth 0 is just the root permutation.
struct Portrait {
  Permutation perm;
  std::vector<Portrait> children;  // empty at the bottom level
};

Portrait portrait(const WreathRecursion& r, const Word& g, std::size_t depth);

}  // namespace thuemorse
