#include "rootsets/gallery.hpp"

#include <algorithm>

namespace rootsets {

namespace {

long coord_as_long(const Scalar& s) {
  const Rational& q = s.as_rational();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::logic_error("expected small integer coordinate");
  return q.get_num().get_si();
}

// The five height-zero roots singled out in the H(10) construction, in the
// first five coordinates.
const long kFiveRoots[5][5] = {
    {-1, 1, 1, -1, 0},
    {-1, 1, 1, 0, -1},
    {-1, 1, 0, 1, -1},
    {-1, 0, 1, 1, -1},
    {0, -1, 1, 1, -1},
};

bool truncated_in_h10_set(const std::vector<long>& k) {
  // k has >= 5 entries; decides membership of the truncation in P u {0}.
  long hgt = k[0] + k[1] + k[2] + k[3] + k[4];
  bool zero = true;
  for (int i = 0; i < 5; ++i) zero = zero && k[i] == 0;
  if (zero) return true;
  if (hgt > 0) return true;
  if (hgt < 0) return false;
  bool prefix_ok = true;
  long s = 0;
  for (int i = 0; i < 4; ++i) {
    s += k[i];
    prefix_ok = prefix_ok && s >= 0;
  }
  if (prefix_ok) return true;
  for (const auto& f : kFiveRoots) {
    if (std::equal(f, f + 5, k.begin())) return true;
  }
  return false;
}

/// Every vector annihilated by all of `rows` has equal first five
/// coordinates (exact nullspace computation).
bool nullspace_forces_equal_head(const Matrix& rows, std::size_t dim) {
  for (const auto& basis_vec : nullspace(rows, dim)) {
    for (int i = 1; i < 5; ++i)
      if (!(basis_vec[static_cast<std::size_t>(i)] == basis_vec[0])) return false;
  }
  return true;
}

}  // namespace

CounterexampleReport h_counterexample(int n) {
  if (n < 10) throw std::invalid_argument("h_counterexample: requires n >= 10");
  RootSystemPtr sys = build_finite("H(" + std::to_string(n) + ")");
  const std::size_t l = sys->canon_dim();

  std::vector<RootId> ids;
  for (const auto& r : sys->roots()) {
    std::vector<long> k(l);
    for (std::size_t i = 0; i < l; ++i) k[i] = coord_as_long(r.vec.c[i]);
    if (truncated_in_h10_set(k)) ids.push_back(r.id);
  }
  RootSubset p(sys, ids);

  CounterexampleReport rep{p, classify(p), {}};

  auto five_ids = [&]() {
    std::vector<RootId> out;
    for (const auto& f : kFiveRoots) {
      Vec v(l);
      for (int i = 0; i < 5; ++i) v.c[static_cast<std::size_t>(i)] = Scalar(f[i]);
      auto id = sys->id_of(v);
      if (!id) throw std::logic_error("h_counterexample: special root missing");
      out.push_back(*id);
    }
    return out;
  }();

  bool five_one_sided = true;
  for (RootId id : five_ids)
    five_one_sided = five_one_sided && p.contains(id) && !p.contains(sys->neg_id(id));
  rep.checks.push_back({"five-roots-in-P-minus-negP", five_one_sided});

  {
    Matrix rows;
    for (const auto& f : kFiveRoots) {
      std::vector<Scalar> row(l);
      for (int i = 0; i < 5; ++i) row[static_cast<std::size_t>(i)] = Scalar(f[i]);
      rows.push_back(std::move(row));
    }
    rep.checks.push_back({"five-roots-force-equality", nullspace_forces_equal_head(rows, l)});
  }

  bool heights_in = true;
  for (const auto& r : sys->roots()) {
    Scalar hgt;
    for (std::size_t i = 0; i < 5; ++i) hgt += r.vec.c[i];
    // positive truncated height forces membership, negative forces exclusion
    if (hgt.sign() > 0) heights_in = heights_in && p.contains(r.id);
    if (hgt.sign() < 0) heights_in = heights_in && !p.contains(r.id);
  }
  rep.checks.push_back({"height-sign-respected", heights_in});

  if (rep.verdict.cls == VerdictClass::ParabolicNotStronglyParabolic) {
    const auto& ob = *rep.verdict.obstruction;
    bool five_forced = true;
    for (RootId id : five_ids)
      five_forced = five_forced &&
                    std::find(ob.forced_zero.at(0).begin(), ob.forced_zero.at(0).end(), id) !=
                        ob.forced_zero.at(0).end();
    rep.checks.push_back({"five-roots-forced-at-level-1", five_forced});

    Matrix rows;
    for (RootId id : ob.forced_zero.at(0)) rows.push_back(sys->root(id).vec.c);
    rep.checks.push_back(
        {"level-1-forced-zeros-imply-equal-lambda", nullspace_forces_equal_head(rows, l)});
  }
  return rep;
}

CounterexampleReport psl_counterexample(int m, const std::string& variant) {
  if (m < 3) throw std::invalid_argument("psl_counterexample: requires m >= 3");
  if (variant != "psl" && variant != "sl")
    throw std::invalid_argument("psl_counterexample: variant must be 'psl' or 'sl'");
  std::string name = variant + "(" + std::to_string(m) + "|" + std::to_string(m) + ")";
  RootSystemPtr sys = build_finite(name);
  const std::size_t raw = static_cast<std::size_t>(2 * m);

  auto raw_unit = [&](std::size_t i, long v = 1) {
    Vec e(raw);
    e.c[i] = Scalar(v);
    return e;
  };
  auto id_of_raw = [&](const Vec& r) {
    auto id = sys->id_of(sys->space().project(r));
    if (!id) throw std::logic_error("psl_counterexample: expected root missing");
    return *id;
  };

  std::vector<RootId> ids;
  std::size_t mm = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      if (i < j) {
        ids.push_back(id_of_raw(raw_unit(i) - raw_unit(j)));            // eps_i - eps_j
        ids.push_back(id_of_raw(raw_unit(mm + i) - raw_unit(mm + j)));  // tau_i - tau_j
      }
      if (i != j) ids.push_back(id_of_raw(raw_unit(i) - raw_unit(mm + j)));  // eps_i - tau_j
    }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  RootSubset p(sys, ids);

  CounterexampleReport rep{p, classify(p), {}};

  // The telescoping combination with weights 1, 2, ..., m, ..., 2, 1 along
  // eps_1-eps_2, ..., eps_m-tau_1, ..., tau_{m-1}-tau_m.
  std::vector<std::pair<long, Vec>> combo;
  for (std::size_t i = 0; i + 1 < mm; ++i)
    combo.emplace_back(static_cast<long>(i + 1), raw_unit(i) - raw_unit(i + 1));
  combo.emplace_back(m, raw_unit(mm - 1) - raw_unit(mm));
  for (std::size_t i = 0; i + 1 < mm; ++i)
    combo.emplace_back(m - 1 - static_cast<long>(i), raw_unit(mm + i) - raw_unit(mm + i + 1));

  Vec sum(sys->canon_dim());
  bool members_one_sided = true;
  for (const auto& [w, rawvec] : combo) {
    Vec v = sys->space().project(rawvec);
    sum += Scalar(w) * v;
    auto id = sys->id_of(v);
    members_one_sided =
        members_one_sided && id && p.contains(*id) && !p.contains(sys->neg_id(*id));
  }
  rep.checks.push_back({"relation-sum-zero", sum.is_zero()});
  rep.checks.push_back({"combination-members-in-P-minus-negP", members_one_sided});
  return rep;
}

RootSubset psl_from_gl_image(int m, const Covec& gl_lambda) {
  if (m < 2) throw std::invalid_argument("psl_from_gl_image: requires m >= 2");
  RootSystemPtr gl = build_finite("gl(" + std::to_string(m) + "|" + std::to_string(m) + ")");
  RootSystemPtr psl = build_finite("psl(" + std::to_string(m) + "|" + std::to_string(m) + ")");
  if (gl_lambda.dim() != gl->canon_dim())
    throw std::invalid_argument("psl_from_gl_image: functional dimension mismatch");

  // The surjection factors through raw coordinates: embed a gl-canonical
  // vector on the free raw columns, then project into the psl quotient;
  // the ambiguity lies inside the psl relations, so the map is well defined.
  std::vector<RootId> ids;
  for (const auto& r : gl->roots()) {
    if (pairing(gl_lambda, r.vec).sign() < 0) continue;
    Vec image = psl->space().project(gl->space().embed(r.vec));
    if (image.is_zero()) throw std::logic_error("psl_from_gl_image: root image vanished");
    auto id = psl->id_of(image);
    if (!id) throw std::logic_error("psl_from_gl_image: image is not a psl root");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  RootSubset image(psl, ids);
  if (check_parabolic(image).has_value())
    throw std::logic_error("psl_from_gl_image: image is not parabolic");
  return image;
}

std::vector<EnumeratedSubset> enumerate_parabolic(const RootSystemPtr& sys, bool classify_mode,
                                                  std::size_t size_guard) {
  if (sys->size() > size_guard)
    throw SizeGuardError("enumerate_parabolic: system exceeds size guard");

  std::vector<std::pair<RootId, RootId>> lines;
  for (RootId id = 0; id < sys->size(); ++id) {
    RootId neg = sys->neg_id(id);
    if (id < neg) lines.emplace_back(id, neg);
  }

  std::vector<EnumeratedSubset> out;
  std::vector<int> choice(lines.size(), 0);  // 0: +a, 1: -a, 2: both
  while (true) {
    std::vector<RootId> ids;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (choice[i] != 1) ids.push_back(lines[i].first);
      if (choice[i] != 0) ids.push_back(lines[i].second);
    }
    RootSubset p(sys, ids);
    if (is_parabolic(p)) {
      EnumeratedSubset e{p, std::nullopt};
      if (classify_mode) e.verdict = classify(p);
      out.push_back(std::move(e));
    }
    std::size_t pos = 0;
    while (pos < choice.size() && choice[pos] == 2) choice[pos++] = 0;
    if (pos == choice.size()) break;
    ++choice[pos];
  }
  std::sort(out.begin(), out.end(), [](const EnumeratedSubset& a, const EnumeratedSubset& b) {
    return a.subset.members() < b.subset.members();
  });
  return out;
}

}  // namespace rootsets
