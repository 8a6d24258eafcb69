#pragma once

// Sparse noncommutative polynomials over x_0..x_{q-1} and the matrix
// recursion phi: T -> M_q(T) of the Thue-Morse algebras.
//
// Mode A is the free algebra T (positive letters only); mode B is the group
// ring of the free group, where monomials are freely reduced words. Matrices
// follow the group convention: if x -> <g_a> pi then phi(x) carries g_a at
// (a, pi(a)), so phi is multiplicative for the ordinary matrix product.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thuemorse/group.hpp"
#include "thuemorse/ring.hpp"
#include "thuemorse/words.hpp"

namespace thuemorse {

enum class Mode { A, B };

class Element;

/// The ambient algebra: alphabet size, coefficient ring and mode. Cheap to
/// copy; every Element carries one.
class Algebra {
 public:
  explicit Algebra(Alphabet alphabet, Ring ring = Ring::rationals(), Mode mode = Mode::B);

  Alphabet alphabet() const noexcept;
  unsigned q() const noexcept { return alphabet().size(); }
  const Ring& ring() const noexcept;
  Mode mode() const noexcept;
  /// The group recursion whose monomial matrices define phi.
  const WreathRecursion& recursion() const noexcept;

  Element zero() const;
  Element one() const;
  Element scalar(const Coeff& c) const;
  Element generator(unsigned i) const;
  /// c * w. In mode B w is reduced; in mode A inverse letters throw.
  Element monomial(const Word& w, const Coeff& c = 1) const;

  /// Element grammar, e.g. "2*x0 x1 - 1 + x1^-1 x0" or "(x1^3 - 1)(x0 - 1)".
  ///
  ///   expr    := ['+'|'-'] term (('+'|'-') term)*
  ///   term    := factor ('*'? factor)*
  ///   factor  := primary ('^' integer)?
  ///   primary := integer ['/' integer] | 'x' index | '(' expr ')'
  ///            | '[' expr ',' expr ']'
  ///
  /// Negative powers and commutators need invertible monomials (mode B).
  Element parse(std::string_view text) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

std::string to_string(Mode m);

class Element {
 public:
  using Terms = std::map<Word, Coeff>;

  const Algebra& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero multiple of the empty word.
  bool is_nonzero_scalar() const noexcept;
  /// Exactly one term.
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Coeff coefficient(const Word& w) const;
  /// Coefficient of the shortlex-least monomial; zero for the zero element.
  Coeff leading_coefficient() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Coeff& c, const Element& a);
  Element pow(unsigned long n) const;
  /// Inverse of an invertible monomial (mode B, unit coefficient).
  Element monomial_inverse() const;
  /// Adds c * w in place (w reduced in mode B, rejected in mode A if it has
  /// inverse letters).
  Element& add(const Word& w, const Coeff& c);

  friend bool operator==(const Element& a, const Element& b);
  /// Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const Element& a, const Element& b);

 private:
  friend class Algebra;
  explicit Element(Algebra algebra) : algebra_(std::move(algebra)) {}

  Algebra algebra_;
  Terms terms_;
};

/// "2*x0 x1 - 1 + x1^-1 x0"; the zero element renders as "0".
std::string to_string(const Element& e);

/// Scales e so that its leading coefficient is 1 (over Z: so that it is
/// positive). Two elements that differ by a unit have the same result.
Element normalize(const Element& e);

/// Dense q x q matrix with algebra entries.
class Matrix {
 public:
  Matrix(const Algebra& algebra, unsigned n);
  static Matrix identity(const Algebra& algebra, unsigned n);

  unsigned size() const noexcept { return n_; }
  const Element& operator()(unsigned i, unsigned j) const { return entries_[i * n_ + j]; }
  Element& operator()(unsigned i, unsigned j) { return entries_[i * n_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  unsigned n_;
  std::vector<Element> entries_;
};

/// Nested-array rendering: [["1","-x0"],["-x1","1"]].
std::string to_string(const Matrix& m);

// ------------------------------------------------------------- Operations

/// The decomposition phi(s), extended linearly and multiplicatively.
Matrix phi(const Element& s);

/// Adjoint for mode B: reverses monomials and inverts letters.
Element star(const Element& s);
/// Termwise Thue-Morse substitution.
Element theta(const Element& s);
/// Termwise cyclic generator shift.
Element gamma(const Element& s, long long shift = 1);

/// sigma(s_0,...,s_{q-1}) = theta(s_0) + x_1 theta(s_1) + ... + x_1^{q-1} theta(s_{q-1}).
Element sigma(std::span<const Element> parts);

/// True when every term has a monomial of length at most 1, i.e. s lies in
/// the span of 1 and the single letters.
bool is_nuclear(const Element& s);

struct ZeroVerdict {
  enum class Kind { Zero, NonZero, Unknown };
  Kind kind = Kind::Unknown;
  /// Depth at which phi^depth(s) vanished or showed a scalar entry; the
  /// depth cap for Unknown.
  unsigned depth = 0;
  /// For NonZero: entry position in phi^depth(s) and its scalar value.
  TreeVertex row;
  TreeVertex col;
  Coeff scalar;

  bool is_zero() const noexcept { return kind == Kind::Zero; }
  bool is_nonzero() const noexcept { return kind == Kind::NonZero; }
  bool is_unknown() const noexcept { return kind == Kind::Unknown; }
};

std::string to_string(const ZeroVerdict& v);

/// Decides s in the union of the ideals J_n: Zero(n) when phi^n(s) vanishes in
/// the free algebra, NonZero when some iterate has a nonzero scalar entry
/// (scalars are fixed by phi), Unknown past max_depth.
ZeroVerdict is_zero(const Element& s, unsigned max_depth = 8);

/// Least n with every entry of phi^n(s) nuclear; nullopt past cap.
std::optional<unsigned> contraction_depth(const Element& s, unsigned cap = 32);

/// phi^depth(s) as a sparse q^depth x q^depth matrix. Row/column indices are
/// tree vertices read as base-q numbers, most significant letter first.
struct SparseMatrix {
  unsigned q = 2;
  unsigned depth = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Element> entries;
};

SparseMatrix expand(const Element& s, unsigned depth);

struct RowColBound {
  std::size_t max_row = 0;
  std::size_t max_col = 0;
  friend bool operator==(const RowColBound&, const RowColBound&) = default;
};

/// Per level n = 0..depth, the largest number of nonzero entries in a row and
/// in a column of phi^n(s). Materializes the matrices; keep depth small.
std::vector<RowColBound> row_col_bound_profile(const Element& s, unsigned depth);

/// Omega_0 = {0} and 1 - gamma^i(x_0...x_{q-1})^{q^k} for k <= k_max, then
/// Omega_{n+1} = union_i gamma^i sigma(Omega_n^q), with tuples enumerated in
/// lexicographic order. Syntactic deduplication; at most size_cap elements.
std::vector<Element> omega_enumerate(const Algebra& algebra, unsigned level, unsigned k_max,
                                     std::size_t size_cap);

}  // namespace thuemorse
