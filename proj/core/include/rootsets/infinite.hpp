#pragma once

#include "rootsets/parabolic.hpp"

namespace rootsets {

/// Generator data for a parabolic subset of a window-truncated affine
/// system. Functionals live in the full canonical coordinates (base part
/// followed by the delta coordinate); dimensions are window-independent.
struct AffineDescriptor {
  enum class Type { Standard, Imaginary, Mixed };
  Type type = Type::Standard;
  Covec lambda1;
  std::optional<Covec> lambda2;  // Mixed only: proper cut of the first kernel
};

struct UnstableAtWindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedScalarFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Realizes the descriptor as a subset of the truncated system:
///   Standard/Imaginary: P = Delta^0(L) |_| Delta^+(L);
///   Mixed: the two-step cut by (L1, L2).
/// Validates the descriptor invariants and that the result is parabolic in
/// the window.
RootSubset make_affine_parabolic(const RootSystemPtr& sys, const AffineDescriptor& d);

/// Window-scale classification of a parabolic subset of a truncated affine
/// system into the three proper types. The verdict is recomputed at window
/// N+2 from the recovered descriptor; disagreement raises
/// UnstableAtWindowError. Verdicts are window-scale statements only.
struct AffineClassification {
  enum class Outcome { Standard, Imaginary, Mixed, NotParabolic };
  Outcome outcome = Outcome::NotParabolic;
  std::optional<Covec> lambda1, lambda2;
  std::optional<ParabolicViolation> violation;
  bool stable = false;
};

AffineClassification classify_affine(const RootSubset& p);

enum class ToroidalRoute { Case1, Fold, Dense, Greedy };

struct ToroidalWitness {
  WitnessChain chain;
  ToroidalRoute route = ToroidalRoute::Greedy;
  bool stable = false;
};

/// Strong-parabolicity witness for a subset of a truncated toroidal system,
/// following the coset/lattice case split:
///   - some real coset fully inside P: separate the coset shadow S in the
///     base system and recurse into the kernel;
///   - otherwise separate T = P n Gamma. A rational separator folds the
///     lattice onto a single imaginary axis and the folded set is searched
///     directly; an irrational (quadratic) separator, supplied via
///     lattice_hint, triggers the infimum construction
///         L(a) = -min{ <hint, g> : a + g in P }
///     evaluated exactly over the window.
/// Structured routes that do not pan out at the window fall back to the
/// greedy search; the returned chain always verifies against P. The dense
/// route re-checks its minima at window N+2 and raises
/// UnstableAtWindowError when attainment is unstable.
ToroidalWitness toroidal_witness(const RootSubset& p,
                                 const std::optional<Covec>& lattice_hint = std::nullopt);

}  // namespace rootsets
