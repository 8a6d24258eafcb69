#include "thuemorse/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace thuemorse {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (unsigned i : images_) {
    if (i >= images_.size() || hit[i]) throw Error("permutation images are not a bijection");
    hit[i] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

Permutation Permutation::shift(unsigned n, long long shift) {
  Alphabet a(n);
  std::vector<unsigned> v(n);
  for (unsigned j = 0; j < n; ++j) v[j] = a.wrap(static_cast<long long>(j) + shift);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(unsigned n, unsigned a, unsigned b) {
  Permutation p = identity(n);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> v(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) v[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<unsigned> v(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) v[i] = next.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (unsigned i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p(i));
  }
  return s + "]";
}

// -------------------------------------------------------------- WreathElement

WreathElement WreathElement::identity(unsigned q) {
  return {std::vector<Word>(q), Permutation::identity(q)};
}

WreathElement WreathElement::inverse() const {
  const Permutation inv = perm.inverse();
  WreathElement r{std::vector<Word>(degree()), inv};
  for (unsigned b = 0; b < degree(); ++b) r.sections[b] = sections[inv(b)].inverse();
  return r;
}

WreathElement operator*(const WreathElement& g, const WreathElement& h) {
  WreathElement r{std::vector<Word>(g.degree()), g.perm.then(h.perm)};
  for (unsigned a = 0; a < g.degree(); ++a)
    r.sections[a] = reduced_product(g.sections[a], h.sections[g.perm(a)]);
  return r;
}

// ------------------------------------------------------------ WreathRecursion

WreathRecursion::WreathRecursion(Alphabet alphabet, std::vector<WreathElement> images,
                                 std::string name)
    : alphabet_(alphabet), images_(std::move(images)), name_(std::move(name)) {
  if (images_.size() != alphabet_.size())
    throw Error("a recursion needs one image per generator");
  for (auto& img : images_) {
    if (img.perm.size() != alphabet_.size() || img.sections.size() != alphabet_.size())
      throw Error("generator image has the wrong degree");
    for (auto& s : img.sections) {
      s.check(alphabet_);
      s = free_reduce(s);
    }
  }
}

WreathRecursion WreathRecursion::thue_morse(Alphabet alphabet) {
  const unsigned q = alphabet.size();
  std::vector<WreathElement> images;
  WreathElement x0{{}, Permutation::shift(q, -1)};
  for (unsigned a = 0; a < q; ++a) x0.sections.push_back(Word::generator(a));
  images.push_back(std::move(x0));
  for (unsigned i = 1; i < q; ++i) images.push_back({std::vector<Word>(q), Permutation::shift(q, -1)});
  return WreathRecursion(alphabet, std::move(images), "G" + std::to_string(q));
}

namespace {

WreathRecursion variant(Alphabet alphabet, bool inverted) {
  const unsigned q = alphabet.size();
  std::vector<WreathElement> images;
  WreathElement x0{{}, Permutation::shift(q, -1)};
  for (unsigned a = 0; a < q; ++a) x0.sections.push_back(Word{{a, inverted}});
  images.push_back(std::move(x0));
  for (unsigned i = 1; i < q; ++i)
    images.push_back({std::vector<Word>(q), Permutation::transposition(q, 0, i)});
  return WreathRecursion(alphabet, std::move(images),
                         (inverted ? "H" : "H'") + std::to_string(q));
}

}  // namespace

WreathRecursion WreathRecursion::thue_morse_variant(Alphabet alphabet) { return variant(alphabet, true); }

WreathRecursion WreathRecursion::thue_morse_variant_plain(Alphabet alphabet) {
  return variant(alphabet, false);
}

WreathRecursion WreathRecursion::trivial(Alphabet alphabet) {
  std::vector<WreathElement> images(alphabet.size(), WreathElement::identity(alphabet.size()));
  return WreathRecursion(alphabet, std::move(images), "trivial");
}

// ------------------------------------------------------------------ Actions

std::string to_string(const TreeVertex& v) {
  if (v.empty()) return "e";
  const bool wide = std::any_of(v.begin(), v.end(), [](unsigned a) { return a > 9; });
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string to_string(const Verdict& v) {
  switch (v.kind()) {
    case Verdict::Kind::True: return "true";
    case Verdict::Kind::False: return "false";
    case Verdict::Kind::Unknown: break;
  }
  return "unknown(cap=" + std::to_string(v.cap()) + ")";
}

WreathElement decompose(const WreathRecursion& r, const Word& g) {
  g.check(r.alphabet());
  const unsigned q = r.degree();
  std::vector<Permutation> inverse_perm;
  inverse_perm.reserve(q);
  for (unsigned i = 0; i < q; ++i) inverse_perm.push_back(r.image(i).perm.inverse());

  // Follow each strand a through the letters of g, collecting the sections
  // met on the way.
  WreathElement out{std::vector<Word>(q), Permutation()};
  std::vector<unsigned> perm(q);
  for (unsigned a = 0; a < q; ++a) {
    unsigned p = a;
    Word& s = out.sections[a];
    for (Letter l : g) {
      const WreathElement& img = r.image(l.gen);
      if (!l.inverse) {
        for (Letter x : img.sections[p]) s.push_back_reduced(x);
        p = img.perm(p);
      } else {
        const unsigned b = inverse_perm[l.gen](p);
        const Word& t = img.sections[b];
        for (auto it = t.letters().rbegin(); it != t.letters().rend(); ++it)
          s.push_back_reduced(it->inverted());
        p = b;
      }
    }
    perm[a] = p;
  }
  out.perm = Permutation(std::move(perm));
  return out;
}

TreeVertex act(const WreathRecursion& r, const Word& g, const TreeVertex& v) {
  TreeVertex out;
  out.reserve(v.size());
  Word w = free_reduce(g);
  for (unsigned a : v) {
    if (!r.alphabet().contains(a)) throw InvalidLetter("vertex letter outside the alphabet");
    if (w.empty()) {
      out.push_back(a);
      continue;
    }
    WreathElement d = decompose(r, w);
    out.push_back(d.perm(a));
    w = std::move(d.sections[a]);
  }
  return out;
}

Word section(const WreathRecursion& r, const Word& g, const TreeVertex& v) {
  Word w = free_reduce(g);
  for (unsigned a : v) {
    if (!r.alphabet().contains(a)) throw InvalidLetter("vertex letter outside the alphabet");
    if (w.empty()) break;
    w = std::move(decompose(r, w).sections[a]);
  }
  return w;
}

// ------------------------------------------------------------- Word problem

Verdict is_trivial(const WreathRecursion& r, const Word& g, std::size_t cap) {
  if (cap == 0) throw Error("state cap must be positive");
  Word start = free_reduce(g);
  if (start.empty()) return Verdict::yes();
  std::unordered_set<Word> assumed{start};
  std::deque<Word> pending{std::move(start)};
  while (!pending.empty()) {
    Word w = std::move(pending.front());
    pending.pop_front();
    WreathElement d = decompose(r, w);
    if (!d.perm.is_identity()) return Verdict::no();
    for (Word& s : d.sections) {
      if (s.empty() || assumed.contains(s)) continue;
      if (assumed.size() >= cap) return Verdict::unknown(cap);
      assumed.insert(s);
      pending.push_back(std::move(s));
    }
  }
  return Verdict::yes();
}

Verdict equal(const WreathRecursion& r, const Word& g, const Word& h, std::size_t cap) {
  return is_trivial(r, g * h.inverse(), cap);
}

std::optional<std::size_t> order_of(const WreathRecursion& r, const Word& g, std::size_t max_power,
                                    std::size_t cap) {
  const Word base = free_reduce(g);
  Word power;
  for (std::size_t n = 1; n <= max_power; ++n) {
    power = reduced_product(power, base);
    if (is_trivial(r, power, cap).is_true()) return n;
  }
  return std::nullopt;
}

std::optional<TreeVertex> moved_vertex(const WreathRecursion& r, const Word& g,
                                       std::size_t depth_cap) {
  struct Node {
    TreeVertex prefix;
    Word word;
  };
  std::vector<Node> frontier{{{}, free_reduce(g)}};
  for (std::size_t depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<WreathElement> decs;
    decs.reserve(frontier.size());
    // Frontier is in lexicographic prefix order, so the first hit is the
    // least moved vertex of this depth.
    for (const Node& n : frontier) {
      decs.push_back(decompose(r, n.word));
      const Permutation& p = decs.back().perm;
      for (unsigned a = 0; a < r.degree(); ++a) {
        if (p(a) != a) {
          TreeVertex v = n.prefix;
          v.push_back(a);
          return v;
        }
      }
    }
    std::vector<Node> next;
    std::unordered_set<Word> seen;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (unsigned a = 0; a < r.degree(); ++a) {
        Word& s = decs[i].sections[a];
        if (s.empty() || !seen.insert(s).second) continue;
        TreeVertex v = frontier[i].prefix;
        v.push_back(a);
        next.push_back({std::move(v), std::move(s)});
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& x, const Node& y) { return x.prefix < y.prefix; });
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ Nucleus

namespace {

/// States of the section graph, identified up to equal().
class SectionGraph {
 public:
  SectionGraph(const WreathRecursion& r, std::size_t cap) : r_(r), cap_(cap) {}

  /// Class of w, creating it if new; nullopt once the cap is exceeded.
  std::optional<std::size_t> classify(const Word& raw) {
    Word w = free_reduce(raw);
    if (auto it = index_.find(w); it != index_.end()) return it->second;
    const Permutation p = decompose(r_, w).perm;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (root_[i] != p || !equal(r_, w, reps_[i]).is_true()) continue;
      if (w < reps_[i]) reps_[i] = w;
      index_.emplace(std::move(w), i);
      return i;
    }
    if (reps_.size() >= cap_) return std::nullopt;
    index_.emplace(w, reps_.size());
    reps_.push_back(std::move(w));
    root_.push_back(p);
    edges_.emplace_back();
    expanded_.push_back(false);
    return reps_.size() - 1;
  }

  /// Expands every state reachable from the given ones. False if capped.
  bool close(std::vector<std::size_t> pending) {
    while (!pending.empty()) {
      std::size_t s = pending.back();
      pending.pop_back();
      if (expanded_[s]) continue;
      expanded_[s] = true;
      WreathElement d = decompose(r_, reps_[s]);
      std::vector<std::size_t> targets;
      for (const Word& sec : d.sections) {
        auto t = classify(sec);
        if (!t) return false;
        targets.push_back(*t);
        pending.push_back(*t);
      }
      edges_[s] = std::move(targets);
    }
    return true;
  }

  /// States lying on a cycle or reachable from one.
  std::vector<std::size_t> recurrent_closure() const {
    const std::size_t n = reps_.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    int counter = 0, ncomp = 0;
    std::vector<std::size_t> comp_size;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (std::size_t w : edges_[v]) {
        if (index[w] < 0) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::size_t size = 0;
        for (;;) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
          ++size;
          if (w == v) break;
        }
        comp_size.push_back(size);
        ++ncomp;
      }
    };
    for (std::size_t v = 0; v < n; ++v)
      if (index[v] < 0) visit(v);

    std::vector<bool> marked(n, false);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
      bool self_loop = std::find(edges_[v].begin(), edges_[v].end(), v) != edges_[v].end();
      if (comp_size[comp[v]] > 1 || self_loop) {
        marked[v] = true;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t w : edges_[v])
        if (!marked[w]) {
          marked[w] = true;
          queue.push_back(w);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
      if (marked[v]) out.push_back(v);
    return out;
  }

  const Word& rep(std::size_t i) const { return reps_[i]; }

 private:
  const WreathRecursion& r_;
  std::size_t cap_;
  std::vector<Word> reps_;
  std::vector<Permutation> root_;
  std::vector<std::vector<std::size_t>> edges_;
  std::vector<bool> expanded_;
  std::unordered_map<Word, std::size_t> index_;
};

}  // namespace

Nucleus nucleus(const WreathRecursion& r, std::size_t cap) {
  SectionGraph graph(r, cap);
  Nucleus out;
  auto finish = [&](const std::vector<std::size_t>& states, bool closed) {
    out.closed = closed;
    for (std::size_t s : states) out.elements.push_back(graph.rep(s));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  };

  std::vector<std::size_t> seeds;
  auto seed = [&](const Word& w) {
    auto c = graph.classify(w);
    if (c) seeds.push_back(*c);
    return c.has_value();
  };
  bool ok = seed(Word{});
  for (unsigned i = 0; i < r.degree() && ok; ++i)
    ok = seed(Word::generator(i)) && seed(Word{{i, true}});
  if (!ok || !graph.close(seeds)) return finish({}, false);

  std::vector<std::size_t> current = graph.recurrent_closure();
  for (;;) {
    seeds.clear();
    for (std::size_t a : current)
      for (std::size_t b : current)
        if (!seed(graph.rep(a) * graph.rep(b))) return finish(current, false);
    if (!graph.close(seeds)) return finish(current, false);
    std::vector<std::size_t> next = graph.recurrent_closure();
    if (next == current) break;
    current = std::move(next);
  }
  return finish(current, true);
}

// ------------------------------------------------------- Boundedness, portrait

std::vector<BigInt> boundedness_profile(const WreathRecursion& r, const Word& g, std::size_t depth) {
  std::unordered_map<Word, bool> trivial;
  auto nontrivial = [&](const Word& w) {
    if (w.empty()) return false;
    auto it = trivial.find(w);
    if (it == trivial.end()) it = trivial.emplace(w, is_trivial(r, w).is_true()).first;
    return !it->second;
  };

  std::vector<BigInt> profile;
  std::map<Word, BigInt> level;
  if (Word w = free_reduce(g); nontrivial(w)) level.emplace(std::move(w), 1);
  for (std::size_t n = 0;; ++n) {
    BigInt total = 0;
    for (const auto& [w, count] : level) total += count;
    profile.push_back(total);
    if (n == depth) break;
    std::map<Word, BigInt> next;
    for (const auto& [w, count] : level) {
      for (Word& s : decompose(r, w).sections)
        if (nontrivial(s)) next[std::move(s)] += count;
    }
    level = std::move(next);
  }
  return profile;
}

Portrait portrait(const WreathRecursion& r, const Word& g, std::size_t depth) {
  WreathElement d = decompose(r, free_reduce(g));
  Portrait p{d.perm, {}};
  if (depth > 0)
    for (const Word& s : d.sections) p.children.push_back(portrait(r, s, depth - 1));
  return p;
}

}  // namespace thuemorse
