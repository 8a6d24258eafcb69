#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "thuemorse/algebra.hpp"
#include "thuemorse/characters.hpp"
#include "thuemorse/dynamics.hpp"
#include "thuemorse/error.hpp"
#include "thuemorse/group.hpp"
#include "thuemorse/verify.hpp"
#include "thuemorse/words.hpp"

namespace thuemorse::cli {

namespace {

using nlohmann::json;

struct Global {
  unsigned q = 2;
  std::string ring = "Q";
  std::string mode = "B";
  std::string group = "G";
  std::size_t cap_classes = 10000;
  std::size_t cap_states = kDefaultStateCap;
  unsigned depth = 0;
  CLI::Option* depth_opt = nullptr;
  bool json = false;
  std::uint32_t seed = 20240611;

  unsigned depth_or(unsigned fallback) const { return depth_opt->count() ? depth : fallback; }
};

class Session {
 public:
  Session(Global& g, std::ostream& out) : g_(g), out_(out) {}

  const Global& global() const { return g_; }
  Alphabet alphabet() const { return Alphabet(g_.q); }

  Algebra algebra() const {
    Mode mode;
    if (g_.mode == "A")
      mode = Mode::A;
    else if (g_.mode == "B")
      mode = Mode::B;
    else
      throw ParseError("--mode must be A or B");
    return Algebra(alphabet(), Ring::parse(g_.ring), mode);
  }

  WreathRecursion recursion() const {
    if (g_.group == "G") return WreathRecursion::thue_morse(alphabet());
    if (g_.group == "H") return WreathRecursion::thue_morse_variant(alphabet());
    throw ParseError("--group must be G or H");
  }

  Word word(const std::string& text) const { return parse_word(text, alphabet()); }
  Element element(const std::string& text) const { return algebra().parse(text); }

  void emit(const std::string& text, const json& j) {
    if (g_.json)
      out_ << j.dump() << '\n';
    else
      out_ << text << '\n';
  }

  int code = kExitOk;

 private:
  Global& g_;
  std::ostream& out_;
};

TreeVertex parse_vertex(const std::string& text, Alphabet alphabet) {
  TreeVertex v;
  if (text.empty() || text == "e") return v;
  auto push = [&](const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParseError("bad tree vertex: " + text);
    const unsigned long a = std::stoul(digits);
    if (!alphabet.contains(static_cast<unsigned>(a)) || a > 100000)
      throw InvalidLetter("vertex letter " + digits + " out of range in " + text);
    v.push_back(static_cast<unsigned>(a));
  };
  if (text.find('.') != std::string::npos) {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, '.')) push(part);
  } else {
    for (char c : text) push(std::string(1, c));
  }
  return v;
}

json vertex_json(const TreeVertex& v) { return json(v); }

json wreath_json(const WreathElement& w) {
  json sections = json::array();
  for (const Word& s : w.sections) sections.push_back(to_string(s));
  return {{"perm", w.perm.images()}, {"sections", sections}};
}

std::string wreath_text(const WreathElement& w) {
  std::string s = "<";
  for (std::size_t a = 0; a < w.sections.size(); ++a)
    s += (a ? ", " : "") + to_string(w.sections[a]);
  return s + "> " + to_string(w.perm);
}

json element_json(const Element& e) {
  json terms = json::object();
  for (const auto& [w, c] : e.terms()) terms[to_string(w)] = c.get_str();
  return {{"element", to_string(e)}, {"terms", terms}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json exact_json(const ExactQ& v, unsigned q) {
  return {{"value", v.render(q)}, {"num", v.numerator().get_str()},
          {"den", v.denominator().get_str()}};
}

json char_json(const CharResult& r, unsigned q) {
  json j = exact_json(*r.value, q);
  j["classes_used"] = r.classes_used;
  j["depth"] = r.depth;
  return j;
}

std::string unknown_text(std::size_t cap) { return "unknown(cap=" + std::to_string(cap) + ")"; }

void emit_verdict(Session& s, const Verdict& v) {
  s.emit(to_string(v), to_string(v));
  if (v.is_unknown()) s.code = kExitUnknown;
}

void emit_char(Session& s, const CharResult& r) {
  const unsigned q = s.global().q;
  if (!r.known()) {
    s.emit(unknown_text(r.cap), json{{"value", unknown_text(r.cap)}, {"classes_used", r.classes_used}});
    s.code = kExitUnknown;
    return;
  }
  s.emit(r.value->render(q), char_json(r, q));
}

json portrait_json(const Portrait& p) {
  json children = json::array();
  for (const Portrait& c : p.children) children.push_back(portrait_json(c));
  return {{"perm", p.perm.images()}, {"children", children}};
}

void portrait_text(const Portrait& p, TreeVertex& at, std::ostream& out) {
  out << to_string(at) << ": " << to_string(p.perm) << '\n';
  for (unsigned a = 0; a < p.children.size(); ++a) {
    at.push_back(a);
    portrait_text(p.children[a], at, out);
    at.pop_back();
  }
}

CharOptions char_options(const Session& s) {
  CharOptions o;
  o.cap_classes = s.global().cap_classes;
  o.trivial_states = std::min<std::size_t>(s.global().cap_states, 1000);
  return o;
}

CountOptions count_options(const Session& s) {
  CountOptions o;
  o.cap_classes = s.global().cap_classes;
  return o;
}

std::vector<Element> parse_parts(const Session& s, const std::vector<std::string>& texts) {
  if (texts.size() != s.global().q)
    throw ParseError("expected " + std::to_string(s.global().q) + " elements, got " +
                     std::to_string(texts.size()));
  std::vector<Element> parts;
  for (const auto& t : texts) parts.push_back(s.element(t));
  return parts;
}

// Option storage for one invocation.
struct Args {
  std::size_t n = 0;
  std::string text, g, h, vertex, e, target, suite;
  std::string kernel_text = "ones";
  std::vector<std::string> parts;
  unsigned times = 1;
  long long shift = 1;
  std::size_t max_power = 64;
  unsigned level = 0, k = 1, k_min = 1, k_max = 8, omega_k_max = 2, verify_k_max = 5;
  unsigned extra = 0, max_level = 4;
  std::size_t limit = 1000;
  std::string preset = "2", viewport = "0,0,4", out_path = "julia.pgm";
  RenderConfig cfg;
  bool seed_set = false;
};

// A leaf command registers its action here; it runs after parsing succeeds.
using Action = std::function<void(Session&)>;

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
               std::optional<Action>& slot, Action action) {
  CLI::App* cmd = parent->add_subcommand(name, help);
  cmd->callback([&slot, action = std::move(action)] { slot = action; });
  return cmd;
}

// ---------------------------------------------------------------- word

void add_word(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = app.add_subcommand("word", "Thue-Morse words, substitution and generator shift");
  cmd->require_subcommand(1);

  auto* prefix = leaf(cmd, "prefix", "first N letters of the Thue-Morse word", slot, [&a](Session& s) {
    const Word w = tm_prefix(s.alphabet(), a.n);
    s.emit(to_string(w), json{{"n", a.n}, {"word", to_string(w)}});
  });
  prefix->add_option("n", a.n, "prefix length")->required();

  auto* subst = leaf(cmd, "subst", "apply the substitution theta", slot, [&a](Session& s) {
    Word w = s.word(a.text);
    for (unsigned i = 0; i < a.times; ++i) w = theta(w, s.alphabet());
    s.emit(to_string(w), json{{"word", to_string(w)}});
  });
  subst->add_option("word", a.text, "input word")->required();
  subst->add_option("--times", a.times, "number of applications");

  auto* gam = leaf(cmd, "gamma", "shift generator indices cyclically", slot, [&a](Session& s) {
    const Word w = gamma(s.word(a.text), s.alphabet(), a.shift);
    s.emit(to_string(w), json{{"word", to_string(w)}});
  });
  gam->add_option("word", a.text, "input word")->required();
  gam->add_option("--shift", a.shift, "index shift");
}

// ---------------------------------------------------------------- group

void add_group(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = app.add_subcommand("group", "the groups G_q and H_q");
  cmd->require_subcommand(1);

  auto* dec = leaf(cmd, "decompose", "wreath decomposition <g_0,...> pi", slot, [&a](Session& s) {
    const WreathElement w = decompose(s.recursion(), s.word(a.g));
    s.emit(wreath_text(w), wreath_json(w));
  });
  dec->add_option("word", a.g)->required();

  auto* act_cmd = leaf(cmd, "act", "image of a tree vertex", slot, [&a](Session& s) {
    const TreeVertex v = act(s.recursion(), s.word(a.g), parse_vertex(a.vertex, s.alphabet()));
    s.emit(to_string(v), vertex_json(v));
  });
  act_cmd->add_option("word", a.g)->required();
  act_cmd->add_option("vertex", a.vertex, "path such as 0110, or 3.10.2 when q > 10")->required();

  auto* sec = leaf(cmd, "section", "section g_v", slot, [&a](Session& s) {
    const Word w = section(s.recursion(), s.word(a.g), parse_vertex(a.vertex, s.alphabet()));
    s.emit(to_string(w), json(to_string(w)));
  });
  sec->add_option("word", a.g)->required();
  sec->add_option("vertex", a.vertex)->required();

  auto* triv = leaf(cmd, "trivial", "decide g = 1", slot, [&a](Session& s) {
    emit_verdict(s, is_trivial(s.recursion(), s.word(a.g), s.global().cap_states));
  });
  triv->add_option("word", a.g)->required();

  auto* eq = leaf(cmd, "equal", "decide g = h", slot, [&a](Session& s) {
    emit_verdict(s, equal(s.recursion(), s.word(a.g), s.word(a.h), s.global().cap_states));
  });
  eq->add_option("first", a.g)->required();
  eq->add_option("second", a.h)->required();

  auto* ord = leaf(cmd, "order", "least n with g^n = 1", slot, [&a](Session& s) {
    const auto n = order_of(s.recursion(), s.word(a.g), a.max_power, s.global().cap_states);
    if (n) {
      s.emit(std::to_string(*n), json(*n));
    } else {
      const std::string t = "unknown(max=" + std::to_string(a.max_power) + ")";
      s.emit(t, json(t));
      s.code = kExitUnknown;
    }
  });
  ord->add_option("word", a.g)->required();
  ord->add_option("--max", a.max_power, "largest power tried");

  leaf(cmd, "nucleus", "nucleus representatives", slot, [&a](Session& s) {
    const Nucleus n = nucleus(s.recursion(), s.global().cap_states);
    json words = json::array();
    std::string text;
    for (const Word& w : n.elements) {
      words.push_back(to_string(w));
      text += to_string(w) + '\n';
    }
    text += n.closed ? "closed, " : "NOT closed, ";
    text += std::to_string(n.elements.size()) + " classes";
    s.emit(text, json{{"elements", words}, {"closed", n.closed}});
    if (!n.closed) s.code = kExitUnknown;
  });

  auto* bnd = leaf(cmd, "bounded", "nontrivial sections per level", slot, [&a](Session& s) {
    const auto profile = boundedness_profile(s.recursion(), s.word(a.g), s.global().depth_or(6));
    json counts = json::array();
    std::string text;
    for (std::size_t n = 0; n < profile.size(); ++n) {
      counts.push_back(profile[n].get_str());
      text += (n ? " " : "") + profile[n].get_str();
    }
    s.emit(text, json{{"profile", counts}});
  });
  bnd->add_option("word", a.g)->required();

  auto* por = leaf(cmd, "portrait", "root permutations of sections", slot, [&a](Session& s) {
    const Portrait p = portrait(s.recursion(), s.word(a.g), s.global().depth_or(2));
    std::ostringstream text;
    TreeVertex at;
    portrait_text(p, at, text);
    std::string t = text.str();
    t.pop_back();
    s.emit(t, portrait_json(p));
  });
  por->add_option("word", a.g)->required();

  auto* mov = leaf(cmd, "moved", "shortest vertex moved by g", slot, [&a](Session& s) {
    const auto v = moved_vertex(s.recursion(), s.word(a.g), s.global().depth_or(8));
    if (v)
      s.emit(to_string(*v), vertex_json(*v));
    else
      s.emit("none", nullptr);
  });
  mov->add_option("word", a.g)->required();
}

// ---------------------------------------------------------------- algebra

void add_algebra(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = app.add_subcommand("algebra", "the algebras A_q and B_q");
  cmd->require_subcommand(1);


  auto* ph = leaf(cmd, "phi", "matrix decomposition", slot, [&a](Session& s) {
    const Matrix m = phi(s.element(a.e));
    s.emit(to_string(m), matrix_json(m));
  });
  ph->add_option("element", a.e)->required();

  auto* zr = leaf(cmd, "zero", "decide s = 0 in the quotient", slot, [&a](Session& s) {
    const ZeroVerdict v = is_zero(s.element(a.e), s.global().depth_or(8));
    json j{{"verdict", v.is_zero() ? "zero" : v.is_nonzero() ? "nonzero" : "unknown"},
           {"depth", v.depth}};
    if (v.is_nonzero()) {
      j["row"] = v.row;
      j["col"] = v.col;
      j["scalar"] = v.scalar.get_str();
    }
    s.emit(to_string(v), j);
    if (v.is_unknown()) s.code = kExitUnknown;
  });
  zr->add_option("element", a.e)->required();

  auto* st = leaf(cmd, "star", "adjoint", slot, [&a](Session& s) {
    const Element r = star(s.element(a.e));
    s.emit(to_string(r), element_json(r));
  });
  st->add_option("element", a.e)->required();

  auto* sg = leaf(cmd, "sigma", "sigma(s_0, ..., s_{q-1})", slot, [&a](Session& s) {
    const auto in = parse_parts(s, a.parts);
    const Element r = sigma(in);
    s.emit(to_string(r), element_json(r));
  });
  sg->add_option("elements", a.parts, "q elements")->required();

  auto* om = leaf(cmd, "omega", "enumerate Omega_n", slot, [&a](Session& s) {
    const auto elems = omega_enumerate(s.algebra(), a.level, a.omega_k_max, a.limit);
    json arr = json::array();
    std::string text;
    for (const Element& x : elems) {
      arr.push_back(to_string(x));
      text += to_string(x) + '\n';
    }
    text += std::to_string(elems.size()) + " elements";
    s.emit(text, json{{"level", a.level}, {"elements", arr}});
  });
  om->add_option("level", a.level, "nesting level n")->required();
  om->add_option("--kmax", a.omega_k_max, "largest k in Omega_0");
  om->add_option("--limit", a.limit, "size cap");

  auto* cd = leaf(cmd, "cdepth", "contraction depth", slot, [&a](Session& s) {
    const unsigned cap = s.global().depth_or(32);
    const auto d = contraction_depth(s.element(a.e), cap);
    if (d) {
      s.emit(std::to_string(*d), json(*d));
    } else {
      s.emit(unknown_text(cap), json(unknown_text(cap)));
      s.code = kExitUnknown;
    }
  });
  cd->add_option("element", a.e)->required();

  auto* rc = leaf(cmd, "rcbound", "row/column nonzero counts per level", slot, [&a](Session& s) {
    const auto prof = row_col_bound_profile(s.element(a.e), s.global().depth_or(3));
    json arr = json::array();
    std::string text;
    for (std::size_t n = 0; n < prof.size(); ++n) {
      arr.push_back({{"row", prof[n].max_row}, {"col", prof[n].max_col}});
      text += (n ? "\n" : "") + std::to_string(n) + ": row " + std::to_string(prof[n].max_row) +
              " col " + std::to_string(prof[n].max_col);
    }
    s.emit(text, arr);
  });
  rc->add_option("element", a.e)->required();
}

// ---------------------------------------------------------------- char

void add_char(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = app.add_subcommand("char", "self-similar characters");
  cmd->require_subcommand(1);


  auto* sp = leaf(cmd, "spread", "spread character", slot, [&a](Session& s) {
    CharOptions o = char_options(s);
    o.extra_levels = a.extra;
    emit_char(s, spread_char(s.element(a.e), o));
  });
  sp->add_option("element", a.e)->required();
  sp->add_option("--a.extra-levels", a.extra, "expand further before solving");

  auto* kr = leaf(cmd, "kernel", "character of a kernel on the algebra", slot, [&a](Session& s) {
    const Kernel k = Kernel::parse(a.kernel_text, s.global().q);
    emit_char(s, algebra_char(s.element(a.e), k, char_options(s)));
  });
  kr->add_option("element", a.e)->required();
  kr->add_option("--kernel", a.kernel_text, "ones, identity, or rows like 1,0;0,1");

  auto* gr = leaf(cmd, "group", "character of a kernel on the group", slot, [&a](Session& s) {
    const Kernel k = Kernel::parse(a.kernel_text, s.global().q);
    emit_char(s, group_char(s.recursion(), s.word(a.e), k, char_options(s)));
  });
  gr->add_option("word", a.e)->required();
  gr->add_option("--kernel", a.kernel_text, "ones, identity, or rows like 1,0;0,1");

  auto* cnt = leaf(cmd, "count", "entries of phi^k(s) in L", slot, [&a](Session& s) {
    const BigInt n = count_L(s.element(a.e), a.k, count_options(s));
    s.emit(n.get_str(), json{{"k", a.k}, {"count", n.get_str()}});
  });
  cnt->add_option("element", a.e)->required();
  cnt->add_option("--k", a.k, "level")->required();

  auto* gro = leaf(cmd, "growth", "q^k chi(s) - count_L(s, k)", slot, [&a](Session& s) {
    const unsigned q = s.global().q;
    const GrowthReport r = growth_constant(s.element(a.e), a.k_min, a.k_max, count_options(s), char_options(s));
    std::string text = "chi = " + r.chi.render(q);
    json diffs = json::array();
    for (std::size_t i = 0; i < r.ks.size(); ++i) {
      text += "\nk=" + std::to_string(r.ks[i]) + " " + r.differences[i].render(q);
      diffs.push_back({{"k", r.ks[i]}, {"difference", r.differences[i].render(q)}});
    }
    text += r.stable ? "\nconstant " + r.constant->render(q) : "\nnot constant";
    json j{{"chi", exact_json(r.chi, q)}, {"differences", diffs}, {"stable", r.stable}};
    if (r.constant) j["constant"] = r.constant->render(q);
    s.emit(text, j);
  });
  gro->add_option("element", a.e)->required();
  gro->add_option("--kmin", a.k_min);
  gro->add_option("--kmax", a.k_max);

  auto* add = leaf(cmd, "additivity", "chi(sigma(s)) against sum of chi(s_i)", slot, [&a](Session& s) {
    const unsigned q = s.global().q;
    const auto in = parse_parts(s, a.parts);
    const AdditivityReport r = additivity_check(in, char_options(s));
    std::string text = "sigma = " + to_string(r.sigma) + "\nchi(sigma) = " + r.lhs.render(q) +
                       "\nsum/q = " + r.rhs.render(q);
    json comps = json::array();
    for (const auto& c : r.components) {
      text += "\n  " + to_string(c.element) + ": " + c.value.render(q) +
              (c.diagonal ? " diagonal" : " not-diagonal") +
              (c.gamma_invariant ? " gamma-invariant" : " not-gamma-invariant");
      comps.push_back({{"element", to_string(c.element)},
                       {"value", c.value.render(q)},
                       {"diagonal", c.diagonal},
                       {"gamma_invariant", c.gamma_invariant}});
    }
    text += r.additive ? "\nadditive" : "\nNOT additive";
    s.emit(text, json{{"sigma", to_string(r.sigma)},
                      {"lhs", r.lhs.render(q)},
                      {"rhs", r.rhs.render(q)},
                      {"additive", r.additive},
                      {"components", comps}});
    if (!r.additive) s.code = kExitFail;
  });
  add->add_option("elements", a.parts, "q elements")->required();

  auto* wit = leaf(cmd, "witness", "element with a prescribed spread value", slot, [&a](Session& s) {
    const unsigned q = s.global().q;
    WitnessOptions o;
    o.max_level = a.max_level;
    o.chars = char_options(s);
    const WitnessResult r = theorem_witness(s.algebra(), ExactQ::parse(a.target), o);
    if (!r.element) {
      s.emit("not found: " + r.note, json{{"found", false}, {"note", r.note}});
      s.code = kExitUnknown;
      return;
    }
    s.emit(to_string(*r.element) + "\nvalue " + r.value->render(q),
           json{{"found", true},
                {"element", to_string(*r.element)},
                {"value", r.value->render(q)},
                {"pieces", r.pieces},
                {"level", r.level}});
  });
  wit->add_option("target", a.target, "nonnegative element of Z[1/q], e.g. 3/2^2")->required();
  wit->add_option("--max-level", a.max_level, "sigma nesting limit");
}

// ---------------------------------------------------------------- julia

void add_julia(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = app.add_subcommand("julia", "Julia sets by backward iteration");
  cmd->require_subcommand(1);

  auto* ren = leaf(cmd, "render", "write a PGM image", slot, [&a](Session& s) {
    const RationalMap f = a.preset == "z2" ? RationalMap::z_squared()
                                         : RationalMap::preset(static_cast<unsigned>(std::stoul(a.preset)));
    RenderConfig c = a.cfg;
    c.view = parse_viewport(a.viewport);
    if (!a.seed_set) c.seed = s.global().seed;
    const JuliaCloud cloud = julia_points(f, c);
    const GrayImage img = render(cloud.points, c);
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw Error("cannot open " + a.out_path);
    write_pgm(img, file);
    std::ostringstream text;
    text << "wrote " << a.out_path << " (" << img.width << 'x' << img.height << ", "
         << cloud.points.size() << " points, " << img.dark_pixels() << " dark pixels, "
         << cloud.skipped << " skipped, max residual " << cloud.max_residual << ")";
    s.emit(text.str(), json{{"out", a.out_path},
                            {"map", f.name()},
                            {"points", cloud.points.size()},
                            {"dark_pixels", img.dark_pixels()},
                            {"skipped", cloud.skipped},
                            {"max_residual", cloud.max_residual}});
  });
  ren->add_option("--preset", a.preset, "2..5 for f_q, or z2")
      ->check(CLI::IsMember({"z2", "2", "3", "4", "5"}));
  ren->add_option("--points", a.cfg.points);
  ren->add_option("--viewport", a.viewport, "cx,cy,width");
  ren->add_option("--width", a.cfg.width)->check(CLI::PositiveNumber);
  ren->add_option("--height", a.cfg.height)->check(CLI::PositiveNumber);
  ren->add_option("--threads", a.cfg.threads, "0 = hardware concurrency");
  ren->add_option("--out", a.out_path);
  ren->add_option_function<std::uint64_t>(
      "--render-seed", [&a](std::uint64_t v) { a.cfg.seed = v, a.seed_set = true; },
      "overrides --seed for the chains");
}

// ---------------------------------------------------------------- verify

void add_verify(CLI::App& app, std::optional<Action>& slot, Args& a) {
  auto* cmd = leaf(&app, "verify", "run the acceptance checks", slot, [&a](Session& s) {
    SuiteOptions o;
    o.seed = s.global().seed;
    o.q = s.global().q;
    o.k_max = a.verify_k_max;
    SuiteContext ctx(o);
    const auto results = run_suite(a.suite, ctx);
    std::ostringstream text;
    json arr = json::array();
    for (const CheckResult& r : results) {
      text << status(r) << "  " << r.id << "  " << r.name;
      if (!r.detail.empty()) text << "  [" << r.detail << "]";
      text << '\n';
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"status", status(r)},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    }
    std::string t = text.str();
    if (!t.empty()) t.pop_back();
    s.emit(t, arr);
    s.code = exit_code(results);
  });
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
  cmd->add_option("suite", a.suite, names)->required()->check(CLI::IsMember(suite_names()));
  cmd->add_option("--kmax", a.verify_k_max, "largest k for lemma-infinitesimal");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Thue-Morse self-similar groups and algebras", "thuemorse");
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--q", g.q, "alphabet size")->check(CLI::Range(2u, 1000u));
  app.add_option("--ring", g.ring, "coefficient ring: Q, Z or Fp:<p>");
  app.add_option("--mode", g.mode, "A (free algebra) or B (group ring)")
      ->check(CLI::IsMember({"A", "B"}));
  app.add_option("--group", g.group, "G or H")->check(CLI::IsMember({"G", "H"}));
  app.add_option("--cap-classes", g.cap_classes, "class budget for characters and counting");
  app.add_option("--cap-states", g.cap_states, "state budget for the word problem");
  g.depth_opt = app.add_option("--depth", g.depth, "depth budget (command specific default)");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed, "random seed");

  std::optional<Action> action;
  Args a;
  add_word(app, action, a);
  add_group(app, action, a);
  add_algebra(app, action, a);
  add_char(app, action, a);
  add_julia(app, action, a);
  add_verify(app, action, a);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? kExitOk : kExitFail;
  }

  Session session(g, out);
  try {
    if (action) (*action)(session);
  } catch (const CapExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    session.emit(unknown_text(e.reached()), json(unknown_text(e.reached())));
    return kExitUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return session.code;
}

}  // namespace thuemorse::cli
