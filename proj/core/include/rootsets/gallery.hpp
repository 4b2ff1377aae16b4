#pragma once

#include <string>

#include "rootsets/parabolic.hpp"

namespace rootsets {

struct NarrativeCheck {
  std::string name;
  bool ok = false;
};

/// A named construction together with its classification and the
/// re-derivable side conditions that guard against mis-transcription.
struct CounterexampleReport {
  RootSubset subset;
  Verdict verdict;
  std::vector<NarrativeCheck> checks;

  bool all_checks_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// The H(n) construction (n >= 10): height-positive roots plus the
/// height-zero roots with nonnegative prefix sums plus five extra roots;
/// for n > 10 the preimage of the H(10) set under coordinate truncation.
/// Parabolic but not strongly parabolic.
CounterexampleReport h_counterexample(int n);

/// The psl(m|m) construction (m >= 3): all epsilon- and tau-sorted
/// differences plus the off-diagonal odd roots. Parabolic but not strongly
/// parabolic; a weighted sum of its one-sided members vanishes.
/// `variant` may also be "sl" to realize the same set over sl(m|m).
CounterexampleReport psl_counterexample(int m, const std::string& variant = "psl");

/// Image in psl(m|m) of the principal parabolic subset of gl(m|m) cut out
/// by gl_lambda, under the canonical surjection of coordinate spaces.
RootSubset psl_from_gl_image(int m, const Covec& gl_lambda);

/// All parabolic subsets of a small finite system (guard: at most 18
/// roots), optionally classified. Enumeration picks one of {+a}, {-a},
/// {+-a} per root pair first, then filters by closure.
struct EnumeratedSubset {
  RootSubset subset;
  std::optional<Verdict> verdict;
};

std::vector<EnumeratedSubset> enumerate_parabolic(const RootSystemPtr& sys, bool classify_mode,
                                                  std::size_t size_guard = 18);

}  // namespace rootsets
