#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rootsets/cone.hpp"
#include "rootsets/root_system.hpp"

namespace rootsets {

/// Sign partition of a root system under a covector.
struct Triangular {
  Covec lambda;
  std::vector<RootId> minus, zero, plus;
};

/// Ordered functionals certifying strong parabolicity: P is exactly the set
/// of roots whose pairing vector (<l1,a>, ..., <lk,a>) is lexicographically
/// >= 0. The empty chain certifies P = Delta. Each deeper functional is
/// only constrained on, and only evaluated on, the previous kernels' roots.
struct WitnessChain {
  std::vector<Covec> chain;
};

struct ParabolicViolation {
  enum class Kind { MissingPair, OpenTriple };
  Kind kind = Kind::MissingPair;
  RootId alpha = 0;          // MissingPair: neither alpha nor -alpha in P
  RootId beta = 0, sum = 0;  // OpenTriple: alpha, beta in P, sum in Delta \ P
};

/// Recorded when the greedy recursion dies: at `level` (1-based) every
/// feasible functional vanishes on the whole current span although the
/// current subset is proper. Levels 1..level-1 carry the functionals found
/// so far; forced_zero[i] lists the root ids pinned to the kernel at level
/// i+1 (re-derivable as per-constraint infeasibility).
struct Obstruction {
  std::size_t level = 0;
  std::vector<Covec> chain;
  std::vector<std::vector<RootId>> forced_zero;
};

enum class VerdictClass {
  NotParabolic,
  Principal,
  StronglyParabolicNotPrincipal,
  ParabolicNotStronglyParabolic,
};

/// Classification outcome; every variant carries a re-checkable certificate.
struct Verdict {
  VerdictClass cls = VerdictClass::NotParabolic;
  std::optional<Covec> lambda;                  // Principal
  std::optional<WitnessChain> chain;            // StronglyParabolicNotPrincipal
  std::optional<Obstruction> obstruction;       // ParabolicNotStronglyParabolic
  std::optional<ParabolicViolation> violation;  // NotParabolic
};

struct NotParabolicInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeGuardError : std::length_error {
  using std::length_error::length_error;
};

/// Checks Delta = P u -P and closure under root addition. Returns the first
/// violation in id order, or nullopt when P is parabolic.
std::optional<ParabolicViolation> check_parabolic(const RootSubset& p);
bool is_parabolic(const RootSubset& p);

Triangular make_triangular(const Covec& lambda, const RootSystem& sys);

/// Greedy minimal-kernel recursion: at every level take the relative
/// interior of { l : l >= 0 on P_cur, l <= 0 off P_cur } and descend into
/// its kernel. Succeeds iff any witness chain exists (the relative-interior
/// choice only ever shrinks kernels). Throws NotParabolicInputError.
std::variant<WitnessChain, Obstruction> strongly_parabolic_witness(const RootSubset& p);

/// Single-functional witness: P = Delta^0 |_| Delta^+ for the returned
/// covector. Non-parabolic input simply yields nullopt.
std::optional<Covec> principal_witness(const RootSubset& p);

/// Runs the predicates strongest-first and re-verifies every certificate
/// before returning it.
Verdict classify(const RootSubset& p);

/// Exhaustive second opinion: recurses over all realizable sign patterns.
/// Guarded: throws SizeGuardError when the system exceeds size_guard roots.
bool oracle_strongly_parabolic(const RootSubset& p, std::size_t size_guard = 20);

/// The set cut out by a lexicographic chain (the WitnessChain semantics).
RootSubset subset_from_chain(const RootSystemPtr& sys, const std::vector<Covec>& chain);

bool chain_cuts_subset(const std::vector<Covec>& chain, const RootSubset& p);

/// Re-checks a verdict's certificate against raw pairings only; used by the
/// CLI --verify replay and the certificate soundness suite.
bool verify_verdict(const RootSubset& p, const Verdict& v);

/// The greedy recursion over an explicit symmetric vector list; `in` marks
/// the target subset. Backs strongly_parabolic_witness and the folded-set
/// searches of the infinite-system module. Obstruction indices refer to
/// positions in `vectors`.
std::variant<std::vector<Covec>, Obstruction> greedy_chain(std::size_t dim,
                                                           const std::vector<Vec>& vectors,
                                                           const std::vector<bool>& in);

}  // namespace rootsets
