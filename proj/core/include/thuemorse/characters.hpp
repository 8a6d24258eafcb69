#pragma once

// Self-similar characters on the groups and algebras, evaluated exactly.
//
// A character chi satisfying q chi(s) = sum_{i,j} k(i,j) chi(phi(s)_{i,j})
// is computed by closing the entry classes reachable from s under phi,
// fixing the base classes, and solving the resulting linear system over Q.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thuemorse/algebra.hpp"
#include "thuemorse/exact.hpp"
#include "thuemorse/group.hpp"

namespace thuemorse {

class Kernel {
 public:
  /// Square matrix; throws Error if rows are ragged or empty.
  explicit Kernel(std::vector<std::vector<ExactQ>> entries);

  /// k = 1 everywhere: the spread character on algebras, the trivial
  /// character on groups.
  static Kernel ones(unsigned q);
  /// k(a,b) = [a = b]: the fixed-point character.
  static Kernel identity(unsigned q);
  /// "ones", "identity", or rows separated by ';' with entries separated by
  /// ',' (e.g. "1,0;0,1"). Entries use the ExactQ grammar.
  static Kernel parse(std::string_view text, unsigned q);

  unsigned size() const noexcept { return static_cast<unsigned>(k_.size()); }
  const ExactQ& operator()(unsigned a, unsigned b) const { return k_[a][b]; }
  /// Exact check: every principal minor is nonnegative.
  bool is_positive_semidefinite() const;

 private:
  std::vector<std::vector<ExactQ>> k_;
};

std::string to_string(const Kernel& k);

/// The character chi_0 on coefficients.
class BaseCharacter {
 public:
  enum class Kind { Trivial, UnitEmbedding };

  /// 0 -> 0, every other scalar -> 1.
  static BaseCharacter trivial() { return BaseCharacter(Kind::Trivial, 0, 0); }
  /// F_p only: a primitive root g -> exp(2 pi i / (p-1)). Experimental; the
  /// engine accepts it only while every base value met is real (0 or +-1).
  static BaseCharacter unit_embedding(const Ring& ring);

  Kind kind() const noexcept { return kind_; }
  /// Trivial chi_0 ignores nonzero scalars, so classes may be normalized.
  bool scalar_blind() const noexcept { return kind_ == Kind::Trivial; }

  /// chi_0(c) = zeta^exponent with zeta a primitive order-th root of unity.
  struct Value {
    bool zero = false;
    unsigned long exponent = 0;
    unsigned long order = 1;
  };
  Value evaluate(const Coeff& c) const;
  /// chi_0(c) when it is real, otherwise nullopt.
  std::optional<ExactQ> real_value(const Coeff& c) const;

 private:
  BaseCharacter(Kind k, unsigned long p, unsigned long g) : kind_(k), p_(p), generator_(g) {}
  Kind kind_;
  unsigned long p_;
  unsigned long generator_;
};

struct CharOptions {
  std::size_t cap_classes = 10000;
  /// Expand the recursion this many levels past the base cases before
  /// solving. The value must not depend on it.
  unsigned extra_levels = 0;
  BaseCharacter base = BaseCharacter::trivial();
  /// State budget for recognizing trivial group words (group_char).
  std::size_t trivial_states = 1000;
  /// Called with every value spread_char returns.
  std::function<void(const ExactQ&)> observe;
};

struct CharResult {
  /// Empty when the class closure exceeded cap.
  std::optional<ExactQ> value;
  std::size_t classes_used = 0;
  /// Longest chain of phi applications from the input to a class.
  unsigned depth = 0;
  std::size_t cap = 0;

  bool known() const noexcept { return value.has_value(); }
};

/// Kernel = 1; a single monomial times a unit counts 1.
CharResult spread_char(const Element& s, const CharOptions& options = {});
/// Weighted recursion; base cases are 0 and nonzero scalars.
CharResult algebra_char(const Element& s, const Kernel& k, const CharOptions& options = {});
/// q chi(g) = sum_a k(a, pi(a)) chi(g_a) with chi(1) = 1.
CharResult group_char(const WreathRecursion& r, const Word& g, const Kernel& k,
                      const CharOptions& options = {});

/// spread_char that throws CapExceeded instead of returning an empty value.
ExactQ spread_value(const Element& s, const CharOptions& options = {});

// ------------------------------------------------------------------ Counting

struct CountOptions {
  std::size_t cap_classes = 10000;
  /// Depth budget when certifying the x_i -> x_1 collapse with is_zero.
  unsigned zero_depth = 8;
};

/// Replaces every x_i, i >= 1, by x_1 and reduces runs of x_1 modulo x_1^q.
Element collapse(const Element& e);
/// e is a unit multiple of 1 or of a single letter (x_0, x_1, and in mode B
/// their inverses) in the quotient, after a certified collapse.
bool in_L(const Element& e, const CountOptions& options = {});

/// Number of (u, v) in A^k x A^k with phi^k(s)_{u,v} in L. Evolves a
/// multiset of entry classes; never materializes phi^k(s). Single-threaded.
BigInt count_L(const Element& s, unsigned k, const CountOptions& options = {});

struct GrowthReport {
  ExactQ chi;
  std::vector<unsigned> ks;
  /// q^k chi - count_L(s, k) for each k.
  std::vector<ExactQ> differences;
  bool stable = false;
  /// The common difference when stable.
  std::optional<ExactQ> constant;
};

GrowthReport growth_constant(const Element& s, unsigned k_min, unsigned k_max,
                             const CountOptions& count = {}, const CharOptions& chars = {});

// -------------------------------------------------------------- Additivity

struct ComponentReport {
  Element element;
  ExactQ value;
  /// phi(element) has no off-diagonal entry.
  bool diagonal = false;
  /// spread_char(gamma^i(element)) = spread_char(element) for all i.
  bool gamma_invariant = false;
};

struct AdditivityReport {
  Element sigma;
  ExactQ lhs;
  ExactQ rhs;
  bool additive = false;
  std::vector<ComponentReport> components;
};

AdditivityReport additivity_check(std::span<const Element> parts, const CharOptions& options = {});

// ----------------------------------------------------------------- Witness

struct WitnessOptions {
  /// Largest number of sigma-nesting levels; at most q^max_level pieces.
  unsigned max_level = 4;
  /// Largest scaled target (target * q^K) the coin search will handle.
  std::size_t budget = 1000000;
  CharOptions chars;
};

struct WitnessResult {
  std::optional<Element> element;
  /// Engine value of element; equals the target whenever element is set.
  std::optional<ExactQ> value;
  std::size_t pieces = 0;
  unsigned level = 0;
  /// Why the search stopped without a witness.
  std::string note;
};

/// Writes target as a sum of pieces with known values (2/q^j from
/// 1 - (x_0...x_{q-1})^{q^j}, and 1 from x_0), packs them into nested sigma
/// images padded with zeros, and verifies the result with spread_char.
/// Throws Error unless target is in Z[1/q] and nonnegative.
WitnessResult theorem_witness(const Algebra& algebra, const ExactQ& target,
                              const WitnessOptions& options = {});

}  // namespace thuemorse
