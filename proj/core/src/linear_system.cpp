#include "thuemorse/linear_system.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "thuemorse/error.hpp"

namespace thuemorse {

namespace {

// Iterative Tarjan; components come out sinks first.
std::vector<std::vector<std::size_t>> strong_components(
    const std::vector<FixedPointEquation>& system) {
  const std::size_t n = system.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> calls{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto& terms = system[f.v].terms;
      if (f.next < terms.size()) {
        std::size_t u = terms[f.next++].first;
        if (index[u] == kUnset) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          calls.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
        continue;
      }
      std::size_t v = f.v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      out.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> solve_fixed_point(const std::vector<FixedPointEquation>& system,
                                         SolveStats* stats) {
  const std::size_t n = system.size();
  for (const auto& eq : system)
    for (const auto& [u, a] : eq.terms)
      if (u >= n) throw Error("equation refers to unknown variable " + std::to_string(u));

  std::vector<mpq_class> value(n);
  const auto components = strong_components(system);
  if (stats) *stats = {components.size(), 0};

  for (const auto& comp : components) {
    const std::size_t m = comp.size();
    if (stats) stats->largest_component = std::max(stats->largest_component, m);
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < m; ++i) local[comp[i]] = i;

    // (I - A) x = b over the component, with solved variables folded into b.
    std::vector<std::vector<mpq_class>> rows(m, std::vector<mpq_class>(m + 1, 0));
    for (std::size_t i = 0; i < m; ++i) {
      const auto& eq = system[comp[i]];
      rows[i][i] = 1;
      rows[i][m] = eq.constant;
      for (const auto& [u, a] : eq.terms) {
        if (auto it = local.find(u); it != local.end())
          rows[i][it->second] -= a;
        else
          rows[i][m] += a * value[u];
      }
    }
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t pivot = col;
      while (pivot < m && sgn(rows[pivot][col]) == 0) ++pivot;
      if (pivot == m)
        throw SingularSystem("singular component of size " + std::to_string(m) +
                             " (variable " + std::to_string(comp[col]) + ")");
      std::swap(rows[col], rows[pivot]);
      const mpq_class inv = 1 / rows[col][col];
      for (std::size_t k = col; k <= m; ++k) rows[col][k] *= inv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col || sgn(rows[r][col]) == 0) continue;
        const mpq_class factor = rows[r][col];
        for (std::size_t k = col; k <= m; ++k) rows[r][k] -= factor * rows[col][k];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      value[comp[i]] = rows[i][m];
    }
  }
  return value;
}

}  // namespace thuemorse
