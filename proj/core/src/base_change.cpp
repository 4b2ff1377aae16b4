#include "rootsets/base_change.hpp"

#include <algorithm>

namespace rootsets {

PositiveSystem make_positive_system(RootSubset positives) {
  const RootSystem& sys = positives.system();
  for (RootId id = 0; id < sys.size(); ++id) {
    if (positives.contains(id) == positives.contains(sys.neg_id(id)))
      throw std::invalid_argument("positive system: need exactly one sign per root pair");
  }
  for (RootId a : positives.members()) {
    for (RootId b : positives.members()) {
      if (b < a) continue;
      auto s = sys.sum_id(a, b);
      if (s && !positives.contains(*s))
        throw std::invalid_argument("positive system: not closed under addition");
    }
  }
  return PositiveSystem{std::move(positives)};
}

PositiveSystem lex_positive_system(const RootSystemPtr& sys) {
  Vec zero(sys->canon_dim());
  std::vector<RootId> ids;
  for (const auto& r : sys->roots())
    if (lex_less(zero, r.vec)) ids.push_back(r.id);
  return PositiveSystem{RootSubset(sys, ids)};
}

Base base_of(const PositiveSystem& pos) {
  const RootSystem& sys = pos.positives.system();
  const auto& members = pos.positives.members();
  std::vector<bool> decomposable(sys.size(), false);
  for (RootId a : members) {
    for (RootId b : members) {
      if (b < a) continue;
      auto s = sys.sum_id(a, b);
      if (s && pos.positives.contains(*s)) decomposable[*s] = true;
    }
  }
  Base base;
  for (RootId id : members)
    if (!decomposable[id]) base.simples.push_back(id);

  // Regenerate by repeated addition of a simple; mismatch means the input
  // was not a genuine positive system.
  std::vector<bool> generated(sys.size(), false);
  for (RootId s : base.simples) generated[s] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (RootId x = 0; x < sys.size(); ++x) {
      if (!generated[x]) continue;
      for (RootId s : base.simples) {
        auto sum = sys.sum_id(x, s);
        if (sum && pos.positives.contains(*sum) && !generated[*sum]) {
          generated[*sum] = true;
          grew = true;
        }
      }
    }
  }
  for (RootId id : members)
    if (!generated[id])
      throw GenerationFailureError("base_of: simples do not regenerate the positive system");
  return base;
}

PositiveSystem reflect(const PositiveSystem& pos, RootId simple) {
  const RootSystem& sys = pos.positives.system();
  Base base = base_of(pos);
  if (std::find(base.simples.begin(), base.simples.end(), simple) == base.simples.end())
    throw NotSimpleError("reflect: root is not simple in this positive system");

  std::vector<RootId> flip = {simple};
  if (auto twice = sys.sum_id(simple, simple)) flip.push_back(*twice);

  std::vector<RootId> ids;
  for (RootId id : pos.positives.members())
    if (std::find(flip.begin(), flip.end(), id) == flip.end()) ids.push_back(id);
  for (RootId id : flip) ids.push_back(sys.neg_id(id));
  return make_positive_system(RootSubset(pos.positives.system_ptr(), ids));
}

PrincipalizeResult principalize(const RootSubset& p, const PositiveSystem& start) {
  const RootSystem& sys = p.system();
  if (sys.kind() != SystemKind::Finite)
    throw std::invalid_argument("principalize: system must be finite");
  if (check_parabolic(p).has_value())
    throw NotParabolicInputError("principalize: input subset is not parabolic");

  auto out_count = [&](const PositiveSystem& pos) {
    std::size_t n = 0;
    for (RootId id : pos.positives.members())
      if (!p.contains(id)) ++n;
    return n;
  };

  PrincipalizeResult result;
  PositiveSystem cur = start;
  result.measures.push_back(out_count(cur));
  while (true) {
    Base base = base_of(cur);
    RootId pick = sys.size();
    for (RootId s : base.simples) {
      if (!p.contains(s)) {
        pick = s;
        break;
      }
    }
    if (pick == sys.size()) {
      result.base = std::move(base);
      break;
    }
    cur = reflect(cur, pick);
    std::size_t m = out_count(cur);
    if (m >= result.measures.back())
      throw std::logic_error("principalize: measure failed to decrease");
    result.measures.push_back(m);
  }

  // Extend the base values to a covector: 1 on simples whose negative lies
  // outside P, 0 on the others.
  Matrix rows;
  std::vector<Scalar> rhs;
  for (RootId s : result.base.simples) {
    rows.push_back(sys.root(s).vec.c);
    rhs.push_back(Scalar(p.contains(sys.neg_id(s)) ? 0 : 1));
  }
  if (rank(rows) < sys.canon_dim())
    throw BaseNotSpanningError("principalize: base does not span the canonical space");
  auto sol = solve(rows, rhs);
  if (!sol) throw std::logic_error("principalize: inconsistent base extension");
  result.lambda = Covec(std::move(*sol));

  Triangular t = make_triangular(result.lambda, sys);
  std::vector<RootId> cut = t.zero;
  cut.insert(cut.end(), t.plus.begin(), t.plus.end());
  std::sort(cut.begin(), cut.end());
  if (cut != p.members())
    throw std::logic_error("principalize: output contract violated (P != zero + plus)");
  return result;
}

}  // namespace rootsets
