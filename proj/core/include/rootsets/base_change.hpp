#pragma once

#include "rootsets/parabolic.hpp"
#include "rootsets/root_system.hpp"

namespace rootsets {

/// Half of a finite symmetric root set, closed under root addition.
struct PositiveSystem {
  RootSubset positives;
};

/// The indecomposable elements of a positive system.
struct Base {
  std::vector<RootId> simples;  // ascending ids
};

struct GenerationFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimpleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BaseNotSpanningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Validates the positive-system invariants (one sign per root pair,
/// closure) and wraps the subset.
PositiveSystem make_positive_system(RootSubset positives);

/// The catalog's standard positive system: roots whose coordinate vector is
/// lexicographically positive. Lex order is compatible with addition, so
/// this is closed for every finite system.
PositiveSystem lex_positive_system(const RootSystemPtr& sys);

/// Indecomposables; throws GenerationFailureError when repeatedly adding
/// simples does not regenerate the positives.
Base base_of(const PositiveSystem& pos);

/// Base change at a simple root: flips {a, 2a} to {-a, -2a} and keeps every
/// other positive. Works uniformly for even and odd (isotropic) simples.
PositiveSystem reflect(const PositiveSystem& pos, RootId simple);

struct PrincipalizeResult {
  Base base;     // final base, contained in P
  Covec lambda;  // 1 on simples with -a outside P, 0 on the others
  std::vector<std::size_t> measures;  // |positives \ P| per iteration, strictly decreasing
};

/// Reflects away from P until the whole base lies inside it, then extends
/// the indicator values on the base to a covector. Requires a parabolic P
/// over a finite system whose bases span the canonical space.
PrincipalizeResult principalize(const RootSubset& p, const PositiveSystem& start);

}  // namespace rootsets
