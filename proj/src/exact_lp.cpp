#include "simonlab/exact_lp.hpp"

#include <cstddef>

#include "simonlab/error.hpp"

namespace simonlab {

void InequalitySystem::add(std::vector<mpq_class> row, mpq_class bound, std::string name) {
  if (static_cast<int>(row.size()) != variables) throw DimensionMismatch("inequality has the wrong width");
  lhs.push_back(std::move(row));
  rhs.push_back(std::move(bound));
  names.push_back(std::move(name));
}

FeasibilityOutcome solve_feasibility(const InequalitySystem& system) {
  const std::size_t m = system.size();
  const std::size_t nv = static_cast<std::size_t>(system.variables);
  // Column layout: x+ | x- | slack | artificial | rhs.
  const std::size_t u0 = 0, v0 = nv, s0 = 2 * nv, a0 = 2 * nv + m;
  const std::size_t ncols = 2 * nv + 2 * m;
  const std::size_t rhs = ncols;

  std::vector<std::vector<mpq_class>> tab(m + 1, std::vector<mpq_class>(ncols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = system.rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) {
      tab[i][u0 + j] = sign * system.lhs[i][j];
      tab[i][v0 + j] = -sign * system.lhs[i][j];
    }
    tab[i][s0 + i] = sign;
    tab[i][a0 + i] = 1;
    tab[i][rhs] = sign * system.rhs[i];
    basis[i] = a0 + i;
  }
  // Phase-one objective row: reduced costs of sum(artificials), and -z.
  std::vector<mpq_class>& obj = tab[m];
  for (std::size_t j = 0; j < a0; ++j) {
    for (std::size_t i = 0; i < m; ++i) obj[j] -= tab[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) obj[rhs] -= tab[i][rhs];

  while (true) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;

    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      mpq_class r = tab[i][rhs] / tab[i][enter];
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == m) throw Error("phase-one simplex reported an unbounded direction");

    const mpq_class pivot = tab[leave][enter];
    for (mpq_class& x : tab[leave]) x /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const mpq_class factor = tab[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) {
        if (tab[leave][j] != 0) tab[i][j] -= factor * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }

  FeasibilityOutcome out;
  if (obj[rhs] != 0) {
    // At the phase-one optimum the slack reduced costs are nonnegative Farkas
    // multipliers for the original rows.
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.farkas[i] = obj[s0 + i];
    if (!is_farkas_certificate(system, out.farkas)) throw Error("simplex produced an invalid infeasibility certificate");
    return out;
  }
  out.feasible = true;
  out.point.assign(nv, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < v0) {
      out.point[basis[i] - u0] += tab[i][rhs];
    } else if (basis[i] < s0) {
      out.point[basis[i] - v0] -= tab[i][rhs];
    }
  }
  if (!satisfies(system, out.point)) throw Error("simplex produced an infeasible witness");
  return out;
}

bool satisfies(const InequalitySystem& system, const std::vector<mpq_class>& point) {
  if (point.size() != static_cast<std::size_t>(system.variables)) return false;
  for (std::size_t i = 0; i < system.size(); ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < point.size(); ++j) acc += system.lhs[i][j] * point[j];
    if (acc > system.rhs[i]) return false;
  }
  return true;
}

bool is_farkas_certificate(const InequalitySystem& system, const std::vector<mpq_class>& y) {
  if (y.size() != system.size()) return false;
  std::vector<mpq_class> combo(static_cast<std::size_t>(system.variables), 0);
  mpq_class bound = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y[i] * system.lhs[i][j];
    bound += y[i] * system.rhs[i];
  }
  for (const mpq_class& c : combo) {
    if (c != 0) return false;
  }
  return bound < 0;
}

}  // namespace simonlab
