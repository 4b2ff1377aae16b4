#include "rootsets/infinite.hpp"

#include <algorithm>
#include <map>

namespace rootsets {

namespace {

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

Vec head_part(const Vec& v, std::size_t wdim) {
  Vec w(wdim);
  std::copy(v.c.begin(), v.c.begin() + static_cast<long>(wdim), w.c.begin());
  return w;
}

Vec tail_part(const Vec& v, std::size_t wdim) {
  Vec g(v.dim() - wdim);
  std::copy(v.c.begin() + static_cast<long>(wdim), v.c.end(), g.c.begin());
  return g;
}

Covec pad_w_covec(const Covec& lw, std::size_t canon_dim) {
  Covec l(canon_dim);
  std::copy(lw.c.begin(), lw.c.end(), l.c.begin());
  return l;
}

bool nonzero_on_roots(const Covec& l, const RootSystem& sys) {
  for (const auto& r : sys.roots())
    if (pairing(l, r.vec).sign() != 0) return true;
  return false;
}

/// Principal-style single functional cutting `in` out of `vectors`:
/// zero on in n -in, positive on in \ -in, negative outside.
std::optional<Covec> separate(std::size_t dim, const std::vector<Vec>& vectors,
                              const std::vector<bool>& in) {
  std::map<Vec, std::size_t, LexLess> index;
  for (std::size_t i = 0; i < vectors.size(); ++i) index.emplace(vectors[i], i);
  SignProblem prob;
  prob.dim = dim;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto neg = index.find(-vectors[i]);
    if (neg == index.end()) throw std::logic_error("separate: set not symmetric");
    if (in[i]) {
      if (in[neg->second]) {
        if (!lex_less(vectors[i], vectors[neg->second])) continue;
        prob.zero.push_back(vectors[i]);
      } else {
        prob.strict_pos.push_back(vectors[i]);
      }
    } else {
      prob.strict_pos.push_back(-vectors[i]);
    }
  }
  return strict_feasible(prob);
}

}  // namespace

// ---------------------------------------------------------------------------
// Affine systems
// ---------------------------------------------------------------------------

RootSubset make_affine_parabolic(const RootSystemPtr& sys, const AffineDescriptor& d) {
  if (sys->kind() != SystemKind::Affine)
    throw std::invalid_argument("make_affine_parabolic: affine system required");
  if (d.lambda1.dim() != sys->canon_dim())
    throw std::invalid_argument("make_affine_parabolic: functional dimension mismatch");
  const Vec& delta = sys->imaginary_gens().at(0);
  const Scalar on_delta = pairing(d.lambda1, delta);

  std::vector<Covec> chain = {d.lambda1};
  switch (d.type) {
    case AffineDescriptor::Type::Standard:
      if (on_delta.sign() == 0)
        throw std::invalid_argument("standard descriptor: functional must not vanish on delta");
      break;
    case AffineDescriptor::Type::Imaginary:
      if (on_delta.sign() != 0)
        throw std::invalid_argument("imaginary descriptor: functional must vanish on delta");
      if (!nonzero_on_roots(d.lambda1, *sys))
        throw std::invalid_argument("imaginary descriptor: functional vanishes on all roots");
      break;
    case AffineDescriptor::Type::Mixed: {
      if (on_delta.sign() != 0)
        throw std::invalid_argument("mixed descriptor: first functional must vanish on delta");
      if (!nonzero_on_roots(d.lambda1, *sys))
        throw std::invalid_argument("mixed descriptor: first functional vanishes on all roots");
      if (!d.lambda2 || d.lambda2->dim() != sys->canon_dim())
        throw std::invalid_argument("mixed descriptor: second functional missing or mis-sized");
      bool proper = false;
      for (const auto& r : sys->roots()) {
        if (pairing(d.lambda1, r.vec).sign() == 0 && pairing(*d.lambda2, r.vec).sign() < 0) {
          proper = true;
          break;
        }
      }
      if (!proper)
        throw std::invalid_argument("mixed descriptor: second functional does not cut the kernel");
      chain.push_back(*d.lambda2);
      break;
    }
  }
  RootSubset p = subset_from_chain(sys, chain);
  if (check_parabolic(p).has_value())
    throw std::logic_error("make_affine_parabolic: cut is not parabolic");
  return p;
}

namespace {

AffineClassification classify_affine_impl(const RootSubset& p, bool check_stability) {
  const RootSystemPtr sys = p.system_ptr();
  if (sys->kind() != SystemKind::Affine)
    throw std::invalid_argument("classify_affine: affine system required");
  if (sys->window() < 4) throw std::invalid_argument("classify_affine: window must be >= 4");

  AffineClassification out;
  if (auto viol = check_parabolic(p)) {
    out.outcome = AffineClassification::Outcome::NotParabolic;
    out.violation = *viol;
    return out;
  }
  if (p.is_full()) {
    // Delta itself: zero functional, all imaginary roots inside.
    out.outcome = AffineClassification::Outcome::Imaginary;
    out.lambda1 = Covec(sys->canon_dim());
    out.stable = true;
    return out;
  }

  RootSystemPtr base = build_finite(sys->base_name());
  const std::size_t wdim = sys->base_dim();
  std::vector<std::vector<RootId>> coset(base->size());
  for (const auto& r : sys->roots()) {
    Vec w = head_part(r.vec, wdim);
    if (w.is_zero()) continue;
    auto bid = base->id_of(w);
    if (!bid) throw std::logic_error("classify_affine: unknown base part");
    coset[*bid].push_back(r.id);
  }
  auto contained = [&](std::size_t bid) {
    return std::all_of(coset[bid].begin(), coset[bid].end(),
                       [&](RootId id) { return p.contains(id); });
  };
  auto meets = [&](std::size_t bid) {
    return std::any_of(coset[bid].begin(), coset[bid].end(),
                       [&](RootId id) { return p.contains(id); });
  };

  bool case1 = false;
  for (RootId bid = 0; bid < base->size() && !case1; ++bid) case1 = contained(bid);

  if (case1) {
    std::vector<RootId> s_ids;
    for (RootId bid = 0; bid < base->size(); ++bid)
      if (meets(bid)) s_ids.push_back(bid);
    RootSubset shadow(base, s_ids);
    if (check_parabolic(shadow).has_value())
      throw UnstableAtWindowError("classify_affine: coset shadow not parabolic in window");
    if (shadow.is_full())
      throw UnstableAtWindowError("classify_affine: degenerate coset shadow at this window");
    auto lam_w = principal_witness(shadow);
    if (!lam_w)
      throw UnstableAtWindowError("classify_affine: coset shadow not principal at this window");
    Covec l1 = pad_w_covec(*lam_w, sys->canon_dim());

    std::vector<RootId> kernel;
    for (const auto& r : sys->roots()) {
      int s = pairing(l1, r.vec).sign();
      if (s > 0 && !p.contains(r.id))
        throw UnstableAtWindowError("classify_affine: positive side escapes P");
      if (s < 0 && p.contains(r.id))
        throw UnstableAtWindowError("classify_affine: negative side meets P");
      if (s == 0) kernel.push_back(r.id);
    }
    bool kernel_inside = std::all_of(kernel.begin(), kernel.end(),
                                     [&](RootId id) { return p.contains(id); });
    if (kernel_inside) {
      out.outcome = AffineClassification::Outcome::Imaginary;
      out.lambda1 = l1;
    } else {
      std::vector<Vec> kvecs;
      std::vector<bool> kin;
      for (RootId id : kernel) {
        kvecs.push_back(sys->root(id).vec);
        kin.push_back(p.contains(id));
      }
      auto l2 = separate(sys->canon_dim(), kvecs, kin);
      if (!l2)
        throw UnstableAtWindowError("classify_affine: kernel part is not two-step at this window");
      if (!chain_cuts_subset({l1, *l2}, p))
        throw UnstableAtWindowError("classify_affine: recovered chain does not reproduce P");
      if (principal_witness(p).has_value())
        throw UnstableAtWindowError("classify_affine: trichotomy ambiguity at this window");
      out.outcome = AffineClassification::Outcome::Mixed;
      out.lambda1 = l1;
      out.lambda2 = *l2;
    }
  } else {
    for (RootId bid = 0; bid < base->size(); ++bid) {
      if (!meets(bid))
        throw UnstableAtWindowError("classify_affine: empty coset without a contained negative");
    }
    auto lam = principal_witness(p);
    if (!lam)
      throw UnstableAtWindowError("classify_affine: no principal witness at this window");
    if (pairing(*lam, sys->imaginary_gens().at(0)).sign() == 0)
      throw UnstableAtWindowError("classify_affine: standard witness vanishes on delta");
    out.outcome = AffineClassification::Outcome::Standard;
    out.lambda1 = *lam;
  }

  if (check_stability) {
    AffineDescriptor d;
    d.type = out.outcome == AffineClassification::Outcome::Standard
                 ? AffineDescriptor::Type::Standard
             : out.outcome == AffineClassification::Outcome::Imaginary
                 ? AffineDescriptor::Type::Imaginary
                 : AffineDescriptor::Type::Mixed;
    d.lambda1 = *out.lambda1;
    d.lambda2 = out.lambda2;
    auto sys2 = build_affine(base, sys->window() + 2);
    RootSubset p2 = make_affine_parabolic(sys2, d);
    for (const auto& r : sys->roots()) {
      auto id2 = sys2->id_of(r.vec);
      if (!id2 || p.contains(r.id) != p2.contains(*id2))
        throw UnstableAtWindowError("classify_affine: descriptor fails to extend P to N+2");
    }
    auto again = classify_affine_impl(p2, false);
    if (again.outcome != out.outcome)
      throw UnstableAtWindowError("classify_affine: verdict changes at window N+2");
    out.stable = true;
  }
  return out;
}

}  // namespace

AffineClassification classify_affine(const RootSubset& p) { return classify_affine_impl(p, true); }

// ---------------------------------------------------------------------------
// Toroidal systems
// ---------------------------------------------------------------------------

namespace {

struct NeedFallback {
  const char* why;
};

struct ToroCtx {
  const RootSubset* p = nullptr;
  const RootSystem* sys = nullptr;
  std::size_t wdim = 0, rank = 0;
  std::vector<Vec> wpart, gpart;  // per root id
  std::vector<bool> lattice;
};

ToroCtx make_ctx(const RootSubset& p) {
  ToroCtx ctx;
  ctx.p = &p;
  ctx.sys = &p.system();
  ctx.rank = ctx.sys->lattice_rank();
  ctx.wdim = ctx.sys->base_dim();
  ctx.wpart.reserve(ctx.sys->size());
  for (const auto& r : ctx.sys->roots()) {
    ctx.wpart.push_back(head_part(r.vec, ctx.wdim));
    ctx.gpart.push_back(tail_part(r.vec, ctx.wdim));
    ctx.lattice.push_back(ctx.wpart.back().is_zero());
  }
  return ctx;
}

void check_hint_field(const Covec& hint, int quad_base) {
  for (const auto& s : hint.c) {
    if (!s.is_rational() && s.quad_base() != quad_base)
      throw UnsupportedScalarFieldError(
          "toroidal_witness: lattice hint outside the system's quadratic field");
  }
}

bool is_irrational(const Covec& l) {
  return std::any_of(l.c.begin(), l.c.end(), [](const Scalar& s) { return !s.is_rational(); });
}

/// Eq-style infimum construction for a dense lattice separator: for every
/// real coset the minimum of <hint, gamma> over its P-members is taken
/// exactly, and the negated minima are interpolated linearly on the base
/// parts. Returns nullopt when the window minima are not linear.
std::optional<Covec> dense_first_functional(const ToroCtx& ctx, const std::vector<RootId>& cur,
                                            const Covec& hint) {
  std::map<Vec, std::optional<Scalar>, LexLess> minima;  // base part -> min over P-members
  for (RootId id : cur) {
    if (ctx.lattice[id]) continue;
    auto [it, fresh] = minima.try_emplace(ctx.wpart[id], std::nullopt);
    if (!ctx.p->contains(id)) continue;
    Scalar v = pairing(hint, Vec(ctx.gpart[id].c));
    if (!it->second || v < *it->second) it->second = v;
  }
  Matrix rows;
  std::vector<Scalar> rhs;
  for (const auto& [w, m] : minima) {
    if (!m) return std::nullopt;  // a coset misses P: not a dense case-2 window
    rows.push_back(w.c);
    rhs.push_back(-*m);
  }
  auto sol = solve(rows, rhs);
  if (!sol) return std::nullopt;
  Covec full(ctx.sys->canon_dim());
  for (std::size_t i = 0; i < ctx.wdim; ++i) full.c[i] = (*sol)[i];
  for (std::size_t j = 0; j < ctx.rank; ++j) full.c[ctx.wdim + j] = hint.c[j];
  return full;
}

std::vector<Covec> toro_rec(const ToroCtx& ctx, const std::vector<RootId>& cur,
                            const std::optional<Covec>& hint, ToroidalRoute& route, bool top) {
  const RootSubset& p = *ctx.p;
  if (std::all_of(cur.begin(), cur.end(), [&](RootId id) { return p.contains(id); })) return {};

  // Real cosets present in the current level, grouped by base part.
  std::map<Vec, std::vector<RootId>, LexLess> groups;
  std::vector<RootId> lattice_ids;
  for (RootId id : cur) {
    if (ctx.lattice[id])
      lattice_ids.push_back(id);
    else
      groups[ctx.wpart[id]].push_back(id);
  }

  bool case1 = false;
  for (const auto& [w, ids] : groups) {
    if (std::all_of(ids.begin(), ids.end(), [&](RootId id) { return p.contains(id); })) {
      case1 = true;
      break;
    }
  }

  if (case1) {
    if (top) route = ToroidalRoute::Case1;
    // Shadow of P on the base parts; separate it principally over W.
    std::vector<Vec> wvecs;
    std::vector<bool> win;
    bool all_meet = true;
    for (const auto& [w, ids] : groups) {
      bool m = std::any_of(ids.begin(), ids.end(), [&](RootId id) { return p.contains(id); });
      wvecs.push_back(w);
      win.push_back(m);
      all_meet = all_meet && m;
    }
    if (all_meet) throw NeedFallback{"degenerate coset shadow"};
    auto lam_w = separate(ctx.wdim, wvecs, win);
    if (!lam_w) throw NeedFallback{"coset shadow not principally separable"};
    Covec l1 = pad_w_covec(*lam_w, ctx.sys->canon_dim());
    std::vector<RootId> kernel;
    for (RootId id : cur) {
      int s = pairing(l1, ctx.sys->root(id).vec).sign();
      if (s > 0 && !p.contains(id)) throw NeedFallback{"positive side escapes P"};
      if (s < 0 && p.contains(id)) throw NeedFallback{"negative side meets P"};
      if (s == 0) kernel.push_back(id);
    }
    if (kernel.size() == cur.size()) throw NeedFallback{"no progress in case 1"};
    std::vector<Covec> rest = toro_rec(ctx, kernel, std::nullopt, route, false);
    rest.insert(rest.begin(), l1);
    return rest;
  }

  // Case 2: every coset meets P; separate T = P n Gamma on the lattice part.
  for (const auto& [w, ids] : groups) {
    if (!std::any_of(ids.begin(), ids.end(), [&](RootId id) { return p.contains(id); }))
      throw NeedFallback{"coset missing P in case 2"};
  }

  Covec lambda_u(ctx.rank);
  if (top && hint) {
    lambda_u = *hint;
    for (RootId id : lattice_ids) {
      int s = pairing(lambda_u, Vec(ctx.gpart[id].c)).sign();
      if (p.contains(id) ? s < 0 : s > 0)
        throw std::invalid_argument("toroidal_witness: lattice hint incompatible with P");
    }
  } else {
    SignProblem prob;
    prob.dim = ctx.rank;
    for (RootId id : lattice_ids)
      prob.nonneg.push_back(p.contains(id) ? Vec(ctx.gpart[id].c) : -Vec(ctx.gpart[id].c));
    lambda_u = relative_interior(prob).lambda;
  }

  if (is_irrational(lambda_u)) {
    if (top) route = ToroidalRoute::Dense;
    auto l1 = dense_first_functional(ctx, cur, lambda_u);
    if (!l1)
      throw UnstableAtWindowError(
          "toroidal_witness: window minima of the dense construction are not linear");
    std::vector<RootId> kernel;
    for (RootId id : cur) {
      int s = pairing(*l1, ctx.sys->root(id).vec).sign();
      if (s > 0 && !p.contains(id))
        throw UnstableAtWindowError("toroidal_witness: dense functional misses P on + side");
      if (s < 0 && p.contains(id))
        throw UnstableAtWindowError("toroidal_witness: dense functional meets P on - side");
      if (s == 0) kernel.push_back(id);
    }
    if (kernel.size() == cur.size())
      throw UnstableAtWindowError("toroidal_witness: dense functional vanishes on the level");
    std::vector<Covec> rest = toro_rec(ctx, kernel, std::nullopt, route, false);
    rest.insert(rest.begin(), *l1);
    return rest;
  }

  // Rational separator: fold the lattice onto one imaginary axis and search
  // the folded finite set directly.
  if (top) route = ToroidalRoute::Fold;
  std::map<Vec, int, LexLess> folded_state;  // 0 unseen, 1 in P, 2 out, 3 conflict
  auto fold = [&](RootId id) {
    Vec f(ctx.wdim + 1);
    for (std::size_t i = 0; i < ctx.wdim; ++i) f.c[i] = ctx.wpart[id].c[i];
    f.c[ctx.wdim] = pairing(lambda_u, Vec(ctx.gpart[id].c));
    return f;
  };
  for (RootId id : cur) {
    Vec f = fold(id);
    int tag = p.contains(id) ? 1 : 2;
    auto [it, fresh] = folded_state.try_emplace(f, tag);
    if (!fresh && it->second != tag) throw NeedFallback{"fold collision across the boundary"};
  }
  std::vector<Vec> folded;
  std::vector<bool> fin;
  for (const auto& [f, tag] : folded_state) {
    folded.push_back(f);
    fin.push_back(tag == 1);
  }
  auto res = greedy_chain(ctx.wdim + 1, folded, fin);
  if (std::holds_alternative<Obstruction>(res)) throw NeedFallback{"folded search obstructed"};
  std::vector<Covec> chain;
  for (const auto& mu : std::get<std::vector<Covec>>(res)) {
    Covec full(ctx.sys->canon_dim());
    for (std::size_t i = 0; i < ctx.wdim; ++i) full.c[i] = mu.c[i];
    for (std::size_t j = 0; j < ctx.rank; ++j) full.c[ctx.wdim + j] = mu.c[ctx.wdim] * lambda_u.c[j];
    chain.push_back(std::move(full));
  }
  return chain;
}

}  // namespace

ToroidalWitness toroidal_witness(const RootSubset& p, const std::optional<Covec>& lattice_hint) {
  const RootSystemPtr sys = p.system_ptr();
  if (sys->kind() != SystemKind::Toroidal)
    throw std::invalid_argument("toroidal_witness: toroidal system required");
  if (sys->window() < 4) throw std::invalid_argument("toroidal_witness: window must be >= 4");
  if (check_parabolic(p).has_value())
    throw NotParabolicInputError("toroidal_witness: subset is not parabolic in the window");

  ToroidalWitness out;
  if (p.is_full()) {
    out.stable = true;
    return out;  // empty chain certifies P = Delta
  }

  ToroCtx ctx = make_ctx(p);
  if (lattice_hint) {
    if (lattice_hint->dim() != ctx.rank)
      throw std::invalid_argument("toroidal_witness: hint dimension != lattice rank");
    check_hint_field(*lattice_hint, sys->quad_base());
  }

  std::vector<RootId> all(sys->size());
  for (RootId i = 0; i < all.size(); ++i) all[i] = i;
  try {
    out.chain.chain = toro_rec(ctx, all, lattice_hint, out.route, true);
  } catch (const NeedFallback&) {
    out.route = ToroidalRoute::Greedy;
    auto res = strongly_parabolic_witness(p);
    if (std::holds_alternative<Obstruction>(res))
      throw UnstableAtWindowError("toroidal_witness: no witness chain at this window");
    out.chain = std::get<WitnessChain>(std::move(res));
  }
  if (!chain_cuts_subset(out.chain.chain, p))
    throw std::logic_error("toroidal_witness: certificate self-check failed");

  // Window coherence at N+2: the chain's cut there stays parabolic, and for
  // the dense route the window minima must reproduce the same functional.
  RootSystemPtr base = build_finite(sys->base_name());
  auto sys2 = build_toroidal(base, ctx.rank, sys->window() + 2);
  RootSubset p2 = subset_from_chain(sys2, out.chain.chain);
  if (check_parabolic(p2).has_value())
    throw UnstableAtWindowError("toroidal_witness: cut not parabolic at window N+2");
  if (out.route == ToroidalRoute::Dense && lattice_hint) {
    ToroCtx ctx2 = make_ctx(p2);
    std::vector<RootId> all2(sys2->size());
    for (RootId i = 0; i < all2.size(); ++i) all2[i] = i;
    auto l2 = dense_first_functional(ctx2, all2, *lattice_hint);
    if (!l2 || !(*l2 == out.chain.chain.front()))
      throw UnstableAtWindowError("toroidal_witness: dense minima unstable at window N+2");
  }
  out.stable = true;
  return out;
}

}  // namespace rootsets
