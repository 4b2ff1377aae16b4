#pragma once

#include <optional>
#include <vector>

#include "rootsets/linalg.hpp"

namespace rootsets {

/// Homogeneous sign constraints on an unknown covector lambda:
///   <lambda, v> = 0  for v in zero,
///   <lambda, v> >= 0 for v in nonneg,
///   <lambda, v> > 0  for v in strict_pos.
/// All vectors share dim and must have rational coordinates.
struct SignProblem {
  std::size_t dim = 0;
  std::vector<Vec> zero;
  std::vector<Vec> nonneg;
  std::vector<Vec> strict_pos;
};

/// Relative-interior point of the cone of a strictness-free SignProblem.
/// forced_zero lists the indices of nonneg vectors on which EVERY feasible
/// covector vanishes; lambda is strictly positive on all the others.
struct ConePoint {
  Covec lambda;
  std::vector<std::size_t> forced_zero;
};

/// Decides the sign problem exactly. Strictness is homogenized to
/// <lambda, v> >= 1, valid because the constraints form a cone. Returns a
/// feasible covector (primitive integer coordinates) or nullopt.
///
/// Runs a phase-1 rational simplex with Bland's rule on the Farkas
/// alternative system, whose basis has size dim+1 regardless of the number
/// of constraints; the feasible point is read off the optimal multipliers.
std::optional<Covec> strict_feasible(const SignProblem& p);

/// Requires strict_pos empty. The point is the sum of one feasible covector
/// per achievable strict constraint, processed in input order; the forced
/// set is certified by per-constraint infeasibility and is re-derivable.
ConePoint relative_interior(const SignProblem& p);

/// Independent decision path for cross-checks: Fourier-Motzkin elimination.
/// Intended for small instances (dim <= 4, <= 16 constraints or so).
bool fourier_motzkin_feasible(const SignProblem& p);

}  // namespace rootsets
