#include "thuemorse/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexer.hpp"

namespace thuemorse {

// -------------------------------------------------------------------- Algebra

struct Algebra::Data {
  Alphabet alphabet;
  Ring ring;
  Mode mode;
  WreathRecursion recursion;
};

Algebra::Algebra(Alphabet alphabet, Ring ring, Mode mode)
    : data_(std::make_shared<const Data>(
          Data{alphabet, ring, mode, WreathRecursion::thue_morse(alphabet)})) {}

Alphabet Algebra::alphabet() const noexcept { return data_->alphabet; }
const Ring& Algebra::ring() const noexcept { return data_->ring; }
Mode Algebra::mode() const noexcept { return data_->mode; }
const WreathRecursion& Algebra::recursion() const noexcept { return data_->recursion; }

bool operator==(const Algebra& a, const Algebra& b) {
  return a.data_ == b.data_ || (a.alphabet() == b.alphabet() && a.ring() == b.ring() &&
                                a.mode() == b.mode());
}

std::string to_string(Mode m) { return m == Mode::A ? "A" : "B"; }

Element Algebra::zero() const { return Element(*this); }

Element Algebra::one() const { return scalar(1); }

Element Algebra::scalar(const Coeff& c) const {
  Element e(*this);
  e.add(Word{}, c);
  return e;
}

Element Algebra::generator(unsigned i) const { return monomial(Word::generator(i)); }

Element Algebra::monomial(const Word& w, const Coeff& c) const {
  Element e(*this);
  e.add(w, c);
  return e;
}

// -------------------------------------------------------------------- Element

Element& Element::add(const Word& w, const Coeff& c) {
  const Algebra& alg = algebra_;
  if (alg.mode() == Mode::A && !w.is_positive())
    throw InvalidLetter("inverse letters are not allowed in mode A: " + to_string(w));
  w.check(alg.alphabet());
  Coeff value = alg.ring().normalize(c);
  if (sgn(value) == 0) return *this;
  Word key = alg.mode() == Mode::B && !is_freely_reduced(w) ? free_reduce(w) : w;
  auto [it, inserted] = terms_.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second = alg.ring().normalize(it->second + value);
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

bool Element::is_nonzero_scalar() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

Coeff Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff Element::leading_coefficient() const {
  return terms_.empty() ? Coeff(0) : terms_.begin()->second;
}

namespace {

void require_same(const Algebra& a, const Algebra& b) {
  if (!(a == b)) throw Error("elements belong to different algebras");
}

}  // namespace

Element Element::operator-() const {
  Element r(algebra_);
  for (const auto& [w, c] : terms_) r.add(w, -c);
  return r;
}

Element& Element::operator+=(const Element& rhs) {
  require_same(algebra_, rhs.algebra_);
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same(algebra_, rhs.algebra_);
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same(a.algebra_, b.algebra_);
  const bool reduce = a.algebra_.mode() == Mode::B;
  Element r(a.algebra_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(reduce ? reduced_product(wa, wb) : wa * wb, ca * cb);
  return r;
}

Element operator*(const Coeff& c, const Element& a) {
  Element r(a.algebra_);
  for (const auto& [w, x] : a.terms_) r.add(w, c * x);
  return r;
}

Element Element::pow(unsigned long n) const {
  Element result = algebra_.one();
  Element base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

Element Element::monomial_inverse() const {
  if (algebra_.mode() != Mode::B) throw UnsupportedMode("inverses need mode B");
  if (!is_monomial()) throw Error("only monomials are invertible here: " + to_string(*this));
  const auto& [w, c] = *terms_.begin();
  return algebra_.monomial(w.inverse(), algebra_.ring().inverse(c));
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

bool operator<(const Element& a, const Element& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (auto c = x.first <=> y.first; c != 0) return c < 0;
        return x.second < y.second;
      });
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    Coeff magnitude = abs(c);
    if (w.empty())
      s += magnitude.get_str();
    else if (magnitude == 1)
      s += to_string(w);
    else
      s += magnitude.get_str() + "*" + to_string(w);
  }
  return s;
}

Element normalize(const Element& e) {
  if (e.is_zero()) return e;
  const Ring& ring = e.algebra().ring();
  const Coeff lead = e.leading_coefficient();
  if (lead == 1) return e;
  if (ring.kind() == Ring::Kind::Integers) return sgn(lead) > 0 ? e : -e;
  return ring.inverse(lead) * e;
}

// -------------------------------------------------------------------- Parsing

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const Algebra& algebra) : in_(text), alg_(algebra) {}

  Element parse() {
    Element e = expr();
    if (!in_.at_end()) in_.fail("unexpected character");
    return e;
  }

 private:
  Element expr() {
    bool negate = in_.consume('-');
    if (!negate) in_.consume('+');
    Element sum = term();
    if (negate) sum = -sum;
    for (;;) {
      if (in_.consume('+'))
        sum += term();
      else if (in_.consume('-'))
        sum -= term();
      else
        return sum;
    }
  }

  bool starts_factor() {
    char c = in_.peek();
    return c == 'x' || c == '(' || c == '[' || in_.peek_digit();
  }

  Element term() {
    Element product = factor();
    for (;;) {
      if (in_.consume('*'))
        product = product * factor();
      else if (starts_factor())
        product = product * factor();
      else
        return product;
    }
  }

  Element factor() {
    Element p = primary();
    if (in_.consume('^')) {
      long long n = in_.integer();
      p = n >= 0 ? p.pow(static_cast<unsigned long>(n))
                 : p.monomial_inverse().pow(static_cast<unsigned long>(-n));
    }
    return p;
  }

  Element primary() {
    if (in_.consume('x')) {
      long long i = in_.integer();
      if (i < 0 || !alg_.alphabet().contains(static_cast<unsigned>(i)))
        throw InvalidLetter("generator x" + std::to_string(i) + " outside alphabet of size " +
                            std::to_string(alg_.q()));
      return alg_.generator(static_cast<unsigned>(i));
    }
    if (in_.consume('(')) {
      Element e = expr();
      in_.expect(')');
      return e;
    }
    if (in_.consume('[')) {
      Element a = expr();
      in_.expect(',');
      Element b = expr();
      in_.expect(']');
      return a.monomial_inverse() * b.monomial_inverse() * a * b;
    }
    mpz_class num(in_.digits());
    mpz_class den = 1;
    if (in_.consume('/')) den = mpz_class(in_.digits());
    if (den == 0) in_.fail("zero denominator");
    return alg_.scalar(Coeff(num, den));
  }

  detail::Scanner in_;
  const Algebra& alg_;
};

}  // namespace

Element Algebra::parse(std::string_view text) const { return ElementParser(text, *this).parse(); }

// --------------------------------------------------------------------- Matrix

Matrix::Matrix(const Algebra& algebra, unsigned n) : n_(n), entries_(std::size_t(n) * n, algebra.zero()) {}

Matrix Matrix::identity(const Algebra& algebra, unsigned n) {
  Matrix m(algebra, n);
  for (unsigned i = 0; i < n; ++i) m(i, i) = algebra.one();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
}

bool Matrix::is_diagonal() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.entries_.front().algebra(), a.n_);
  for (unsigned i = 0; i < a.n_; ++i)
    for (unsigned k = 0; k < a.n_; ++k) {
      const Element& x = a(i, k);
      if (x.is_zero()) continue;
      for (unsigned j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (unsigned i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (unsigned j = 0; j < m.size(); ++j) s += (j ? ",\"" : "\"") + to_string(m(i, j)) + "\"";
    s += "]";
  }
  return s + "]";
}

// ----------------------------------------------------------------- Operations

Matrix phi(const Element& s) {
  const Algebra& alg = s.algebra();
  Matrix m(alg, alg.q());
  for (const auto& [w, c] : s.terms()) {
    const WreathElement d = decompose(alg.recursion(), w);
    for (unsigned a = 0; a < alg.q(); ++a) m(a, d.perm(a)).add(d.sections[a], c);
  }
  return m;
}

Element star(const Element& s) {
  if (s.algebra().mode() != Mode::B) throw UnsupportedMode("star is only defined in mode B");
  Element r = s.algebra().zero();
  for (const auto& [w, c] : s.terms()) r.add(w.inverse(), c);
  return r;
}

Element theta(const Element& s) {
  Element r = s.algebra().zero();
  for (const auto& [w, c] : s.terms()) r.add(theta(w, s.algebra().alphabet()), c);
  return r;
}

Element gamma(const Element& s, long long shift) {
  Element r = s.algebra().zero();
  for (const auto& [w, c] : s.terms()) r.add(gamma(w, s.algebra().alphabet(), shift), c);
  return r;
}

Element sigma(std::span<const Element> parts) {
  if (parts.empty()) throw Error("sigma needs q arguments");
  const Algebra& alg = parts.front().algebra();
  if (parts.size() != alg.q())
    throw Error("sigma needs exactly q = " + std::to_string(alg.q()) + " arguments");
  Element r = alg.zero();
  Element shift = alg.one();
  const Element x1 = alg.generator(1);
  for (const Element& p : parts) {
    r += shift * theta(p);
    shift = shift * x1;
  }
  return r;
}

bool is_nuclear(const Element& s) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const auto& t) { return t.first.size() <= 1; });
}

std::string to_string(const ZeroVerdict& v) {
  switch (v.kind) {
    case ZeroVerdict::Kind::Zero:
      return "zero(depth=" + std::to_string(v.depth) + ")";
    case ZeroVerdict::Kind::NonZero:
      return "nonzero(depth=" + std::to_string(v.depth) + ", entry=(" + to_string(v.row) + "," +
             to_string(v.col) + "), scalar=" + v.scalar.get_str() + ")";
    case ZeroVerdict::Kind::Unknown:
      break;
  }
  return "unknown(cap=" + std::to_string(v.depth) + ")";
}

ZeroVerdict is_zero(const Element& s, unsigned max_depth) {
  struct Site {
    TreeVertex row, col;
    Element value;
  };
  ZeroVerdict v;
  if (s.is_zero()) {
    v.kind = ZeroVerdict::Kind::Zero;
    return v;
  }
  if (s.is_nonzero_scalar()) {
    v.kind = ZeroVerdict::Kind::NonZero;
    v.scalar = s.leading_coefficient();
    return v;
  }
  // Distinct entries up to units; zero-ness and scalar-ness are unit invariant.
  std::map<Element, Site> level;
  level.emplace(normalize(s), Site{{}, {}, s});
  const unsigned q = s.algebra().q();
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    std::map<Element, Site> next;
    for (const auto& [key, site] : level) {
      const Matrix m = phi(site.value);
      for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j) {
          const Element& e = m(i, j);
          if (e.is_zero()) continue;
          TreeVertex row = site.row, col = site.col;
          row.push_back(i);
          col.push_back(j);
          if (e.is_nonzero_scalar()) {
            v.kind = ZeroVerdict::Kind::NonZero;
            v.depth = depth;
            v.row = std::move(row);
            v.col = std::move(col);
            v.scalar = e.leading_coefficient();
            return v;
          }
          next.try_emplace(normalize(e), Site{std::move(row), std::move(col), e});
        }
    }
    if (next.empty()) {
      v.kind = ZeroVerdict::Kind::Zero;
      v.depth = depth;
      return v;
    }
    level = std::move(next);
  }
  v.kind = ZeroVerdict::Kind::Unknown;
  v.depth = max_depth;
  return v;
}

std::optional<unsigned> contraction_depth(const Element& s, unsigned cap) {
  std::set<Element> level{normalize(s)};
  for (unsigned depth = 0;; ++depth) {
    if (std::all_of(level.begin(), level.end(), [](const Element& e) { return is_nuclear(e); }))
      return depth;
    if (depth == cap) return std::nullopt;
    std::set<Element> next;
    for (const Element& e : level) {
      const Matrix m = phi(e);
      for (unsigned i = 0; i < m.size(); ++i)
        for (unsigned j = 0; j < m.size(); ++j)
          if (!m(i, j).is_zero()) next.insert(normalize(m(i, j)));
    }
    level = std::move(next);
  }
}

SparseMatrix expand(const Element& s, unsigned depth) {
  const unsigned q = s.algebra().q();
  double bits = depth * std::log2(static_cast<double>(q));
  if (bits > 62) throw Error("explicit expansion of depth " + std::to_string(depth) + " is too large");
  SparseMatrix out{q, 0, {}};
  if (!s.is_zero()) out.entries.emplace(std::pair<std::uint64_t, std::uint64_t>{0, 0}, s);
  for (unsigned n = 0; n < depth; ++n) {
    SparseMatrix next{q, n + 1, {}};
    for (const auto& [pos, e] : out.entries) {
      const Matrix m = phi(e);
      for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j)
          if (!m(i, j).is_zero())
            next.entries.emplace(std::pair{pos.first * q + i, pos.second * q + j}, m(i, j));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<RowColBound> row_col_bound_profile(const Element& s, unsigned depth) {
  std::vector<RowColBound> profile;
  SparseMatrix level{s.algebra().q(), 0, {}};
  if (!s.is_zero()) level.entries.emplace(std::pair<std::uint64_t, std::uint64_t>{0, 0}, s);
  for (unsigned n = 0;; ++n) {
    std::map<std::uint64_t, std::size_t> rows, cols;
    for (const auto& [pos, e] : level.entries) {
      ++rows[pos.first];
      ++cols[pos.second];
    }
    RowColBound b;
    for (const auto& [r, c] : rows) b.max_row = std::max(b.max_row, c);
    for (const auto& [r, c] : cols) b.max_col = std::max(b.max_col, c);
    profile.push_back(b);
    if (n == depth) break;
    SparseMatrix next{level.q, n + 1, {}};
    for (const auto& [pos, e] : level.entries) {
      const Matrix m = phi(e);
      for (unsigned i = 0; i < level.q; ++i)
        for (unsigned j = 0; j < level.q; ++j)
          if (!m(i, j).is_zero())
            next.entries.emplace(std::pair{pos.first * level.q + i, pos.second * level.q + j},
                                 m(i, j));
    }
    level = std::move(next);
  }
  return profile;
}

std::vector<Element> omega_enumerate(const Algebra& algebra, unsigned level, unsigned k_max,
                                     std::size_t size_cap) {
  const unsigned q = algebra.q();
  std::vector<Element> current;
  std::set<Element> seen;
  auto offer = [&](std::vector<Element>& into, std::set<Element>& dedup, Element e) {
    if (into.size() >= size_cap) return false;
    if (dedup.insert(e).second) into.push_back(std::move(e));
    return true;
  };

  std::vector<unsigned> all(q);
  for (unsigned i = 0; i < q; ++i) all[i] = i;
  const Element block = algebra.monomial(Word::from_indices(all));
  offer(current, seen, algebra.zero());
  for (unsigned k = 0; k <= k_max; ++k) {
    const Element power = block.pow(ipow(q, k).get_ui());
    for (unsigned i = 0; i < q; ++i)
      if (!offer(current, seen, algebra.one() - gamma(power, i))) break;
  }

  for (unsigned n = 0; n < level; ++n) {
    std::vector<Element> next;
    std::set<Element> dedup;
    const std::size_t m = current.size();
    std::vector<std::size_t> index(q, 0);
    bool room = m > 0;
    while (room) {
      std::vector<Element> tuple;
      for (std::size_t i : index) tuple.push_back(current[i]);
      const Element base = sigma(tuple);
      for (unsigned i = 0; i < q && room; ++i) room = offer(next, dedup, gamma(base, i));
      // Odometer over index tuples, last coordinate fastest.
      std::size_t pos = q;
      while (pos > 0 && ++index[pos - 1] == m) index[--pos] = 0;
      if (pos == 0) break;
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace thuemorse
