#pragma once

// Exact solver for fixed-point systems x_v = sum_u a_vu x_u + b_v.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thuemorse {

struct FixedPointEquation {
  std::vector<std::pair<std::size_t, mpq_class>> terms;
  mpq_class constant;
};

struct SolveStats {
  std::size_t components = 0;
  std::size_t largest_component = 0;
};

/// Solves strongly connected components in dependency order with exact
/// Gaussian elimination. Throws SingularSystem when a component does not
/// have a unique solution.
std::vector<mpq_class> solve_fixed_point(const std::vector<FixedPointEquation>& system,
                                         SolveStats* stats = nullptr);

}  // namespace thuemorse
