#include "thuemorse/words.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace thuemorse {

Alphabet::Alphabet(unsigned q) : q_(q) {
  if (q < 2) throw Error("alphabet size must be at least 2, got " + std::to_string(q));
}

unsigned Alphabet::wrap(long long i) const noexcept {
  long long r = i % static_cast<long long>(q_);
  return static_cast<unsigned>(r < 0 ? r + q_ : r);
}

Word Word::from_indices(const std::vector<unsigned>& indices) {
  Word w;
  w.letters_.reserve(indices.size());
  for (unsigned i : indices) w.letters_.push_back({i, false});
  return w;
}

bool Word::is_positive() const noexcept {
  return std::none_of(letters_.begin(), letters_.end(), [](Letter l) { return l.inverse; });
}

void Word::check(Alphabet alphabet) const {
  for (Letter l : letters_)
    if (!alphabet.contains(l.gen))
      throw InvalidLetter("letter x" + std::to_string(l.gen) + " is outside the alphabet of size " +
                          std::to_string(alphabet.size()));
}

void Word::push_back_reduced(Letter l) {
  if (!letters_.empty() && letters_.back().cancels(l))
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverted());
  return r;
}

Word Word::pow(long long n) const {
  const Word base = n < 0 ? inverse() : *this;
  unsigned long long times = n < 0 ? -static_cast<unsigned long long>(n) : n;
  Word r;
  r.letters_.reserve(base.size() * times);
  for (unsigned long long k = 0; k < times; ++k)
    r.letters_.insert(r.letters_.end(), base.letters_.begin(), base.letters_.end());
  return r;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word free_reduce(const Word& w) {
  Word r;
  for (Letter l : w) r.push_back_reduced(l);
  return r;
}

bool is_freely_reduced(const Word& w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

Word reduced_product(const Word& a, const Word& b) {
  Word r = a;
  for (Letter l : b) r.push_back_reduced(l);
  return r;
}

Word theta(const Word& w, Alphabet alphabet) {
  w.check(alphabet);
  const unsigned q = alphabet.size();
  std::vector<Letter> out;
  out.reserve(w.size() * q);
  for (Letter l : w) {
    if (!l.inverse) {
      for (unsigned j = 0; j < q; ++j) out.push_back({(l.gen + j) % q, false});
    } else {
      for (unsigned j = q; j-- > 0;) out.push_back({(l.gen + j) % q, true});
    }
  }
  return Word(std::move(out));
}

Word gamma(const Word& w, Alphabet alphabet, long long shift) {
  w.check(alphabet);
  const unsigned s = alphabet.wrap(shift);
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back({(l.gen + s) % alphabet.size(), l.inverse});
  return Word(std::move(out));
}

unsigned tm_letter(Alphabet alphabet, std::uint64_t n) noexcept {
  const unsigned q = alphabet.size();
  std::uint64_t sum = 0;
  for (; n > 0; n /= q) sum += n % q;
  return static_cast<unsigned>(sum % q);
}

Word tm_prefix(Alphabet alphabet, std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({tm_letter(alphabet, i), false});
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'x';
    s += std::to_string(w[i].gen);
    if (w[i].inverse) s += "^-1";
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, Alphabet alphabet) : in_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = word();
    if (!in_.at_end()) in_.fail("unexpected character");
    return w;
  }

 private:
  Word word() {
    Word w;
    for (;;) {
      char c = in_.peek();
      if (c == 'x' || c == '1' || c == '(' || c == '[')
        w *= factor();
      else
        return w;
    }
  }

  Word factor() {
    Word p = primary();
    if (in_.consume('^')) p = p.pow(in_.integer());
    return p;
  }

  Word primary() {
    if (in_.consume('x')) {
      long long i = in_.integer();
      if (i < 0 || !alphabet_.contains(static_cast<unsigned>(i)))
        throw InvalidLetter("generator x" + std::to_string(i) + " outside alphabet of size " +
                            std::to_string(alphabet_.size()));
      return Word::generator(static_cast<unsigned>(i));
    }
    if (in_.consume('(')) {
      Word w = word();
      in_.expect(')');
      return w;
    }
    if (in_.consume('[')) {
      Word a = word();
      in_.expect(',');
      Word b = word();
      in_.expect(']');
      return a.inverse() * b.inverse() * a * b;
    }
    if (in_.digits() != "1") in_.fail("only the literal 1 may appear in a word");
    return {};
  }

  detail::Scanner in_;
  Alphabet alphabet_;
};

}  // namespace

Word parse_word(std::string_view text, Alphabet alphabet) { return WordParser(text, alphabet).parse(); }

}  // namespace thuemorse

std::size_t std::hash<thuemorse::Word>::operator()(const thuemorse::Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto l : w) {
    h ^= (static_cast<std::size_t>(l.gen) << 1) | (l.inverse ? 1u : 0u);
    h *= 0x100000001b3ull;
  }
  return h;
}
