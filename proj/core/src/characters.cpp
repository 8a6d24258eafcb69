#include "thuemorse/characters.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "thuemorse/error.hpp"
#include "thuemorse/linear_system.hpp"

namespace thuemorse {

// --------------------------------------------------------------------- Kernel

Kernel::Kernel(std::vector<std::vector<ExactQ>> entries) : k_(std::move(entries)) {
  if (k_.empty()) throw Error("kernel must be nonempty");
  for (const auto& row : k_)
    if (row.size() != k_.size()) throw Error("kernel must be square");
}

Kernel Kernel::ones(unsigned q) {
  return Kernel(std::vector<std::vector<ExactQ>>(q, std::vector<ExactQ>(q, ExactQ(1))));
}

Kernel Kernel::identity(unsigned q) {
  std::vector<std::vector<ExactQ>> k(q, std::vector<ExactQ>(q, ExactQ(0)));
  for (unsigned a = 0; a < q; ++a) k[a][a] = 1;
  return Kernel(std::move(k));
}

Kernel Kernel::parse(std::string_view text, unsigned q) {
  if (text == "ones") return ones(q);
  if (text == "identity") return identity(q);
  std::vector<std::vector<ExactQ>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    std::vector<ExactQ> entries;
    std::size_t s = 0;
    while (s <= row.size()) {
      std::size_t e = row.find(',', s);
      if (e == std::string_view::npos) e = row.size();
      entries.push_back(ExactQ::parse(row.substr(s, e - s)));
      s = e + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  if (rows.size() != q) throw ParseError("kernel needs " + std::to_string(q) + " rows");
  return Kernel(std::move(rows));
}

namespace {

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

bool Kernel::is_positive_semidefinite() const {
  const unsigned n = size();
  if (n > 16) throw Error("semidefiniteness check limited to 16 x 16 kernels");
  // Symmetric part; for symmetric matrices nonnegative principal minors
  // characterize semidefiniteness.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<mpq_class>> m(idx.size(), std::vector<mpq_class>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        m[i][j] = ((*this)(idx[i], idx[j]).value() + (*this)(idx[j], idx[i]).value()) / 2;
    if (sgn(determinant(std::move(m))) < 0) return false;
  }
  return true;
}

std::string to_string(const Kernel& k) {
  std::string s;
  for (unsigned a = 0; a < k.size(); ++a) {
    if (a) s += ";";
    for (unsigned b = 0; b < k.size(); ++b) s += (b ? "," : "") + k(a, b).to_string();
  }
  return s;
}

// -------------------------------------------------------------- BaseCharacter

BaseCharacter BaseCharacter::unit_embedding(const Ring& ring) {
  if (ring.kind() != Ring::Kind::PrimeField)
    throw UnsupportedMode("the unit-group embedding needs a prime field");
  const unsigned long p = ring.characteristic();
  if (p > 1000000) throw UnsupportedMode("unit-group embedding limited to p <= 10^6");
  if (p == 2) return BaseCharacter(Kind::UnitEmbedding, 2, 1);
  std::vector<unsigned long> factors;
  unsigned long m = p - 1;
  for (unsigned long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (unsigned long g = 2; g < p; ++g) {
    bool primitive = true;
    for (unsigned long f : factors) {
      mpz_class r;
      mpz_class base(g), mod(p);
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / f, mod.get_mpz_t());
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return BaseCharacter(Kind::UnitEmbedding, p, g);
  }
  throw Error("no primitive root found");
}

BaseCharacter::Value BaseCharacter::evaluate(const Coeff& c) const {
  Value v;
  if (sgn(c) == 0) {
    v.zero = true;
    return v;
  }
  if (kind_ == Kind::Trivial) return v;
  if (c.get_den() != 1) throw Error("prime-field scalars are integers");
  mpz_class target = c.get_num() % mpz_class(p_);
  if (target < 0) target += p_;
  v.order = p_ - 1;
  unsigned long x = 1;
  for (unsigned long e = 0; e < p_ - 1; ++e) {
    if (target == x) {
      v.exponent = e;
      return v;
    }
    x = x * generator_ % p_;  // p <= 10^6, no overflow
  }
  throw Error("scalar is not a unit");
}

std::optional<ExactQ> BaseCharacter::real_value(const Coeff& c) const {
  const Value v = evaluate(c);
  if (v.zero) return ExactQ(0);
  if (v.exponent == 0) return ExactQ(1);
  if (v.order % 2 == 0 && 2 * v.exponent == v.order) return ExactQ(-1);
  return std::nullopt;
}

// ------------------------------------------------------------------- Engine

namespace {

template <class Key>
struct Expansion {
  std::optional<mpq_class> base;
  std::vector<std::pair<Key, mpq_class>> children;
};

// Breadth-first closure of classes followed by an exact solve.
template <class Key, class Expand>
CharResult close_and_solve(const Key& root, std::size_t cap, Expand&& expand) {
  CharResult result;
  result.cap = cap;
  std::map<Key, std::size_t> index{{root, 0}};
  std::vector<Key> keys{root};
  std::vector<unsigned> depth{0};
  std::vector<FixedPointEquation> system;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Key key = keys[i];
    Expansion<Key> ex = expand(key);
    FixedPointEquation eq;
    if (ex.base) {
      eq.constant = *ex.base;
    } else {
      for (auto& [child, weight] : ex.children) {
        auto [it, inserted] = index.try_emplace(child, keys.size());
        if (inserted) {
          if (keys.size() >= cap) {
            result.classes_used = keys.size();
            return result;
          }
          keys.push_back(child);
          depth.push_back(depth[i] + 1);
        }
        eq.terms.emplace_back(it->second, weight);
      }
    }
    system.push_back(std::move(eq));
  }
  const auto values = solve_fixed_point(system);
  result.value = ExactQ(values[0]);
  result.classes_used = keys.size();
  result.depth = *std::max_element(depth.begin(), depth.end());
  return result;
}

ExactQ real_base(const BaseCharacter& base, const Coeff& c) {
  auto v = base.real_value(c);
  if (!v) throw UnsupportedMode("base character takes a non-real value on " + c.get_str());
  return *v;
}

// kernel == nullptr means k = 1.
CharResult element_char(const Element& s, const Kernel* kernel, bool monomial_base,
                        const CharOptions& options) {
  const Algebra& alg = s.algebra();
  const unsigned q = alg.q();
  if (kernel && kernel->size() != q)
    throw Error("kernel size " + std::to_string(kernel->size()) + " does not match q = " +
                std::to_string(q));
  const bool blind = options.base.scalar_blind();
  auto canon = [&](const Element& e) { return blind ? normalize(e) : e; };
  using Key = std::pair<Element, unsigned>;

  auto expand = [&](const Key& key) {
    Expansion<Key> ex;
    const auto& [e, forced] = key;
    if (e.is_zero()) {
      ex.base = 0;
      return ex;
    }
    if (forced == 0 && (e.is_nonzero_scalar() || (monomial_base && e.is_monomial()))) {
      ex.base = real_base(options.base, e.leading_coefficient()).value();
      return ex;
    }
    const Matrix m = phi(e);
    const unsigned next = forced > 0 ? forced - 1 : 0;
    for (unsigned i = 0; i < q; ++i)
      for (unsigned j = 0; j < q; ++j) {
        if (m(i, j).is_zero()) continue;
        mpq_class w = kernel ? (*kernel)(i, j).value() : mpq_class(1);
        if (sgn(w) == 0) continue;
        w /= q;
        ex.children.emplace_back(Key{canon(m(i, j)), next}, w);
      }
    return ex;
  };
  return close_and_solve(Key{canon(s), options.extra_levels}, options.cap_classes, expand);
}

}  // namespace

CharResult spread_char(const Element& s, const CharOptions& options) {
  CharResult r = element_char(s, nullptr, true, options);
  if (r.value && options.observe) options.observe(*r.value);
  return r;
}

CharResult algebra_char(const Element& s, const Kernel& k, const CharOptions& options) {
  return element_char(s, &k, false, options);
}

CharResult group_char(const WreathRecursion& r, const Word& g, const Kernel& k,
                      const CharOptions& options) {
  const unsigned q = r.degree();
  if (k.size() != q) throw Error("kernel size does not match the recursion degree");
  g.check(r.alphabet());
  using Key = std::pair<Word, unsigned>;
  auto expand = [&](const Key& key) {
    Expansion<Key> ex;
    const auto& [w, forced] = key;
    if (forced == 0 && (w.empty() || is_trivial(r, w, options.trivial_states).is_true())) {
      ex.base = 1;
      return ex;
    }
    const WreathElement d = decompose(r, w);
    const unsigned next = forced > 0 ? forced - 1 : 0;
    for (unsigned a = 0; a < q; ++a) {
      mpq_class weight = k(a, d.perm(a)).value();
      if (sgn(weight) == 0) continue;
      weight /= q;
      ex.children.emplace_back(Key{d.sections[a], next}, weight);
    }
    return ex;
  };
  return close_and_solve(Key{free_reduce(g), options.extra_levels}, options.cap_classes, expand);
}

ExactQ spread_value(const Element& s, const CharOptions& options) {
  CharResult r = spread_char(s, options);
  if (!r.value) throw CapExceeded("spread character closure exceeded " +
                                      std::to_string(r.cap) + " classes", r.classes_used);
  return *r.value;
}

// ------------------------------------------------------------------ Counting

Element collapse(const Element& e) {
  const Algebra& alg = e.algebra();
  const long long q = alg.q();
  const bool signed_runs = alg.mode() == Mode::B;
  Element out = alg.zero();
  for (const auto& [w, c] : e.terms()) {
    Word image;
    long long run = 0;
    auto flush = [&] {
      long long r = ((run % q) + q) % q;
      if (signed_runs && 2 * r > q) r -= q;
      for (long long t = 0; t < (r < 0 ? -r : r); ++t) image.push_back(Letter{1, r < 0});
      run = 0;
    };
    for (const Letter& l : w) {
      if (l.gen == 0) {
        flush();
        image.push_back(l);
      } else {
        run += l.inverse ? -1 : 1;
      }
    }
    flush();
    out.add(image, c);
  }
  return out;
}

bool in_L(const Element& e, const CountOptions& options) {
  if (e.is_zero()) return false;
  const Element c = collapse(e);
  if (!c.is_monomial()) return false;
  const auto& [w, coeff] = *c.terms().begin();
  if (w.size() > 1 || !e.algebra().ring().is_unit(coeff)) return false;
  if (c == e) return true;
  return is_zero(e - c, options.zero_depth).is_zero();
}

BigInt count_L(const Element& s, unsigned k, const CountOptions& options) {
  std::map<Element, BigInt> current;
  if (!s.is_zero()) current.emplace(normalize(s), 1);
  std::map<Element, std::vector<Element>> children;
  for (unsigned step = 0; step < k; ++step) {
    std::map<Element, BigInt> next;
    for (const auto& [cls, n] : current) {
      auto it = children.find(cls);
      if (it == children.end()) {
        std::vector<Element> entries;
        const Matrix m = phi(cls);
        for (unsigned i = 0; i < m.size(); ++i)
          for (unsigned j = 0; j < m.size(); ++j)
            if (!m(i, j).is_zero()) entries.push_back(normalize(m(i, j)));
        it = children.emplace(cls, std::move(entries)).first;
      }
      for (const Element& child : it->second) next[child] += n;
    }
    if (next.size() > options.cap_classes)
      throw CapExceeded("count_L closure exceeded " + std::to_string(options.cap_classes) +
                            " classes at step " + std::to_string(step + 1),
                        next.size());
    current = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [cls, n] : current)
    if (in_L(cls, options)) total += n;
  return total;
}

GrowthReport growth_constant(const Element& s, unsigned k_min, unsigned k_max,
                             const CountOptions& count, const CharOptions& chars) {
  if (k_min >= k_max) throw Error("growth_constant needs k_min < k_max");
  GrowthReport report;
  report.chi = spread_value(s, chars);
  const unsigned q = s.algebra().q();
  for (unsigned k = k_min; k <= k_max; ++k) {
    report.ks.push_back(k);
    report.differences.push_back(ExactQ(ipow(q, k), 1) * report.chi -
                                 ExactQ(count_L(s, k, count), 1));
  }
  report.stable = std::all_of(report.differences.begin(), report.differences.end(),
                              [&](const ExactQ& d) { return d == report.differences.front(); });
  if (report.stable) report.constant = report.differences.front();
  return report;
}

// --------------------------------------------------------------- Additivity

AdditivityReport additivity_check(std::span<const Element> parts, const CharOptions& options) {
  if (parts.empty()) throw Error("additivity_check needs q elements");
  const Algebra& alg = parts.front().algebra();
  AdditivityReport report{sigma(parts), 0, 0, false, {}};
  report.lhs = spread_value(report.sigma, options);
  for (const Element& part : parts) {
    ComponentReport c{part, spread_value(part, options), phi(part).is_diagonal(), true};
    for (unsigned i = 1; i < alg.q() && c.gamma_invariant; ++i)
      c.gamma_invariant = spread_value(gamma(part, i), options) == c.value;
    report.rhs += c.value;
    report.components.push_back(std::move(c));
  }
  report.additive = report.lhs == report.rhs;
  return report;
}

// ------------------------------------------------------------------ Witness

WitnessResult theorem_witness(const Algebra& algebra, const ExactQ& target,
                              const WitnessOptions& options) {
  const unsigned q = algebra.q();
  if (!target.in_nonneg_q_adic(q))
    throw Error("target " + target.to_string() + " is not a nonnegative element of Z[1/" +
                std::to_string(q) + "]");
  WitnessResult result;
  if (target.is_zero()) {
    result.element = algebra.zero();
    result.value = ExactQ(0);
    return result;
  }

  // Coin values in units of 1/q^K. One level finer than the target: a
  // reduced target such as 2/2^2 = 1/2 needs the piece 2/q^2.
  const unsigned K = *target.q_adic_exponent(q) + 1;
  const BigInt scaled = target.numerator() * (ipow(q, K) / target.denominator());
  if (scaled > BigInt(static_cast<unsigned long>(options.budget))) {
    result.note = "scaled target " + scaled.get_str() + " exceeds budget";
    return result;
  }
  const std::size_t T = scaled.get_ui();
  struct Coin {
    std::size_t units;
    int power;  // -1: the monomial x_0
  };
  std::vector<Coin> coins;
  for (unsigned j = 0; j <= K; ++j) {
    BigInt u = 2 * ipow(q, K - j);
    if (u <= BigInt(static_cast<unsigned long>(T))) coins.push_back({u.get_ui(), static_cast<int>(j)});
  }
  if (ipow(q, K) <= BigInt(static_cast<unsigned long>(T))) coins.push_back({ipow(q, K).get_ui(), -1});

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(T + 1, kNone), choice(T + 1, 0);
  best[0] = 0;
  for (std::size_t t = 1; t <= T; ++t)
    for (std::size_t c = 0; c < coins.size(); ++c)
      if (coins[c].units <= t && best[t - coins[c].units] != kNone &&
          best[t - coins[c].units] + 1 < best[t]) {
        best[t] = best[t - coins[c].units] + 1;
        choice[t] = c;
      }
  if (best[T] == kNone) {
    result.note = "no sum of piece values reaches the target";
    return result;
  }

  std::vector<unsigned> all(q);
  for (unsigned i = 0; i < q; ++i) all[i] = i;
  const Word block = Word::from_indices(all);
  std::vector<Element> layer;
  for (std::size_t t = T; t > 0; t -= coins[choice[t]].units) {
    const Coin& c = coins[choice[t]];
    if (c.power < 0)
      layer.push_back(algebra.generator(0));
    else
      layer.push_back(algebra.one() -
                      algebra.monomial(block.pow(ipow(q, static_cast<unsigned>(c.power)).get_si())));
  }
  result.pieces = layer.size();
  unsigned level = 0;
  for (std::size_t leaves = 1; leaves < layer.size(); leaves *= q) ++level;
  result.level = level;
  if (level > options.max_level) {
    result.note = std::to_string(layer.size()) + " pieces need " + std::to_string(level) +
                  " sigma levels";
    return result;
  }
  std::size_t leaves = 1;
  for (unsigned n = 0; n < level; ++n) leaves *= q;
  layer.resize(leaves, algebra.zero());
  while (layer.size() > 1) {
    std::vector<Element> up;
    for (std::size_t i = 0; i < layer.size(); i += q)
      up.push_back(sigma(std::span<const Element>(layer.data() + i, q)));
    layer = std::move(up);
  }

  const ExactQ value = spread_value(layer.front(), options.chars);
  result.value = value;
  if (value == target) {
    result.element = layer.front();
  } else {
    result.note = "candidate evaluated to " + value.render(q);
  }
  return result;
}

}  // namespace thuemorse
