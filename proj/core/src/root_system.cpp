#include "rootsets/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rootsets {

namespace {

Vec unit(std::size_t dim, std::size_t i, long v = 1) {
  Vec e(dim);
  e.c[i] = Scalar(v);
  return e;
}

Vec ones(std::size_t dim, long from, long to, long v = 1) {
  Vec e(dim);
  for (long i = from; i < to; ++i) e.c[static_cast<std::size_t>(i)] = Scalar(v);
  return e;
}

}  // namespace

class SystemBuilder {
 public:
  std::string name;
  SystemKind kind = SystemKind::Finite;
  std::size_t raw_dim = 0;
  std::vector<Vec> relations;
  std::vector<std::pair<Vec, Parity>> raw_roots;
  std::string base_name;
  int window = 0;
  std::vector<Vec> imaginary_raw;
  bool allow_merge = false;  // psl-style quotients may identify distinct raw roots

  void root(Vec v, Parity p) { raw_roots.emplace_back(std::move(v), p); }

  RootSystemPtr finalize() const;
};

RootSystemPtr SystemBuilder::finalize() const {
  auto sys = std::make_shared<RootSystem>();
  sys->name_ = name;
  sys->kind_ = kind;
  sys->base_name_ = base_name;
  sys->window_ = window;
  sys->space_ = AmbientSpace::build(raw_dim, relations);

  std::vector<std::pair<Vec, Parity>> projected;
  for (const auto& [raw, parity] : raw_roots) {
    Vec v = sys->space_.project(raw);
    if (v.is_zero()) throw std::invalid_argument(name + ": root projects to zero");
    projected.emplace_back(std::move(v), parity);
  }
  std::sort(projected.begin(), projected.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  std::vector<std::pair<Vec, Parity>> uniq;
  for (auto& rp : projected) {
    if (!uniq.empty() && uniq.back().first == rp.first) {
      if (uniq.back().second != rp.second)
        throw std::logic_error(name + ": parity clash on merged roots");
      if (!allow_merge) throw std::logic_error(name + ": unexpected duplicate root image");
      continue;
    }
    uniq.push_back(std::move(rp));
  }

  sys->roots_.reserve(uniq.size());
  for (std::size_t i = 0; i < uniq.size(); ++i)
    sys->roots_.push_back(Root{i, std::move(uniq[i].first), uniq[i].second});

  // Integer fast-path coordinates: scale by the lcm of all denominators.
  mpz_class lcd = 1;
  for (const auto& r : sys->roots_)
    for (const auto& s : r.vec.c) {
      mpz_class m;
      mpz_lcm(m.get_mpz_t(), lcd.get_mpz_t(), s.as_rational().get_den().get_mpz_t());
      lcd = m;
    }
  sys->int_coords_.reserve(sys->roots_.size());
  for (const auto& r : sys->roots_) {
    std::vector<long> iv(r.vec.dim());
    for (std::size_t j = 0; j < iv.size(); ++j) {
      mpq_class scaled = r.vec.c[j].as_rational() * Rational(lcd);
      if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p())
        throw std::logic_error(name + ": integer coordinate overflow");
      iv[j] = scaled.get_num().get_si();
    }
    sys->int_index_.emplace(iv, r.id);
    sys->int_coords_.push_back(std::move(iv));
  }

  sys->neg_ids_.resize(sys->roots_.size());
  for (const auto& r : sys->roots_) {
    std::vector<long> neg = sys->int_coords_[r.id];
    for (auto& x : neg) x = -x;
    auto it = sys->int_index_.find(neg);
    if (it == sys->int_index_.end())
      throw std::logic_error(name + ": root set is not symmetric");
    sys->neg_ids_[r.id] = it->second;
  }

  for (const auto& g : imaginary_raw) sys->imaginary_gens_.push_back(sys->space_.project(g));
  return sys;
}

std::optional<RootId> RootSystem::id_of(const Vec& canonical) const {
  if (canonical.dim() != canon_dim()) return std::nullopt;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), canonical,
                             [](const Root& r, const Vec& v) { return lex_less(r.vec, v); });
  if (it != roots_.end() && it->vec == canonical) return it->id;
  return std::nullopt;
}

std::optional<RootId> RootSystem::sum_id(RootId a, RootId b) const {
  const auto& x = int_coords_[a];
  const auto& y = int_coords_[b];
  std::vector<long> s(x.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
  auto it = int_index_.find(s);
  if (it == int_index_.end()) return std::nullopt;
  return it->second;
}

RootSubset::RootSubset(RootSystemPtr sys, const std::vector<RootId>& ids) : sys_(std::move(sys)) {
  mask_.assign(sys_->size(), false);
  for (RootId id : ids) {
    if (id >= sys_->size()) throw std::out_of_range("RootSubset: id out of range");
    mask_[id] = true;
  }
  for (RootId id = 0; id < mask_.size(); ++id)
    if (mask_[id]) members_.push_back(id);
}

RootSubset RootSubset::full(RootSystemPtr sys) {
  std::vector<RootId> all(sys->size());
  for (RootId i = 0; i < all.size(); ++i) all[i] = i;
  return RootSubset(std::move(sys), all);
}

RootSubset RootSubset::empty(RootSystemPtr sys) { return RootSubset(std::move(sys), {}); }

RootSubset RootSubset::negated() const {
  std::vector<RootId> ids;
  ids.reserve(members_.size());
  for (RootId id : members_) ids.push_back(sys_->neg_id(id));
  return RootSubset(sys_, ids);
}

RootSubset RootSubset::with(RootId id) const {
  auto ids = members_;
  ids.push_back(id);
  return RootSubset(sys_, ids);
}

RootSubset RootSubset::without(RootId id) const {
  std::vector<RootId> ids;
  ids.reserve(members_.size());
  for (RootId m : members_)
    if (m != id) ids.push_back(m);
  return RootSubset(sys_, ids);
}

// ---------------------------------------------------------------------------
// Finite catalog
// ---------------------------------------------------------------------------

namespace {

// e_i - e_j for all i != j within [from, to).
void add_type_a_block(SystemBuilder& b, std::size_t from, std::size_t to, Parity p) {
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = from; j < to; ++j)
      if (i != j) b.root(unit(b.raw_dim, i) - unit(b.raw_dim, j), p);
}

// +-e_i +- e_j for i < j within [from, to).
void add_pair_block(SystemBuilder& b, std::size_t from, std::size_t to, Parity p) {
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = i + 1; j < to; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          b.root(unit(b.raw_dim, i, si) + unit(b.raw_dim, j, sj), p);
}

void add_short_block(SystemBuilder& b, std::size_t from, std::size_t to, long scale, Parity p) {
  for (std::size_t i = from; i < to; ++i)
    for (int s : {1, -1}) b.root(unit(b.raw_dim, i, s * scale), p);
}

// +-e_i +- t_j over two index blocks (mixed even/odd pairs).
void add_cross_block(SystemBuilder& b, std::size_t a_from, std::size_t a_to, std::size_t b_from,
                     std::size_t b_to, Parity p) {
  for (std::size_t i = a_from; i < a_to; ++i)
    for (std::size_t j = b_from; j < b_to; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          b.root(unit(b.raw_dim, i, si) + unit(b.raw_dim, j, sj), p);
}

SystemBuilder make_A(int n) {
  SystemBuilder b;
  b.name = "A" + std::to_string(n);
  b.raw_dim = static_cast<std::size_t>(n) + 1;
  b.relations = {ones(b.raw_dim, 0, n + 1)};
  add_type_a_block(b, 0, b.raw_dim, Parity::Even);
  return b;
}

SystemBuilder make_B(int n) {
  SystemBuilder b;
  b.name = "B" + std::to_string(n);
  b.raw_dim = static_cast<std::size_t>(n);
  add_pair_block(b, 0, b.raw_dim, Parity::Even);
  add_short_block(b, 0, b.raw_dim, 1, Parity::Even);
  return b;
}

SystemBuilder make_C(int n) {
  SystemBuilder b;
  b.name = "C" + std::to_string(n);
  b.raw_dim = static_cast<std::size_t>(n);
  add_pair_block(b, 0, b.raw_dim, Parity::Even);
  add_short_block(b, 0, b.raw_dim, 2, Parity::Even);
  return b;
}

SystemBuilder make_D(int n) {
  SystemBuilder b;
  b.name = "D" + std::to_string(n);
  b.raw_dim = static_cast<std::size_t>(n);
  add_pair_block(b, 0, b.raw_dim, Parity::Even);
  return b;
}

SystemBuilder make_G2() {
  SystemBuilder b;
  b.name = "G2";
  b.raw_dim = 3;
  b.relations = {ones(3, 0, 3)};
  add_type_a_block(b, 0, 3, Parity::Even);  // short roots
  for (std::size_t i = 0; i < 3; ++i) {
    Vec v = unit(3, i, 2);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) v -= unit(3, j);
    b.root(v, Parity::Even);
    b.root(-v, Parity::Even);
  }
  return b;
}

SystemBuilder make_F4() {
  SystemBuilder b;
  b.name = "F4";
  b.raw_dim = 4;
  add_pair_block(b, 0, 4, Parity::Even);
  add_short_block(b, 0, 4, 1, Parity::Even);
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
    b.root(v, Parity::Even);
  }
  return b;
}

SystemBuilder make_E8() {
  SystemBuilder b;
  b.name = "E8";
  b.raw_dim = 8;
  add_pair_block(b, 0, 8, Parity::Even);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec v(8);
    for (std::size_t i = 0; i < 8; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
    b.root(v, Parity::Even);
  }
  return b;
}

SystemBuilder make_E7() {
  SystemBuilder b;
  b.name = "E7";
  b.raw_dim = 8;
  b.relations = {unit(8, 6) + unit(8, 7)};
  add_pair_block(b, 0, 6, Parity::Even);
  b.root(unit(8, 6) - unit(8, 7), Parity::Even);
  b.root(unit(8, 7) - unit(8, 6), Parity::Even);
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;  // odd number of minus signs
    Vec v(8);
    for (std::size_t i = 0; i < 6; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
    v.c[6] = Scalar(-1, 2);
    v.c[7] = Scalar(1, 2);
    b.root(v, Parity::Even);
    b.root(-v, Parity::Even);
  }
  return b;
}

SystemBuilder make_E6() {
  SystemBuilder b;
  b.name = "E6";
  b.raw_dim = 8;
  b.relations = {unit(8, 5) - unit(8, 6), unit(8, 6) + unit(8, 7)};
  add_pair_block(b, 0, 5, Parity::Even);
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of minus signs
    Vec v(8);
    for (std::size_t i = 0; i < 5; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
    v.c[5] = Scalar(-1, 2);
    v.c[6] = Scalar(-1, 2);
    v.c[7] = Scalar(1, 2);
    b.root(v, Parity::Even);
    b.root(-v, Parity::Even);
  }
  return b;
}

// sl / gl / psl share the epsilon-tau root pattern and differ by relations.
void add_sl_roots(SystemBuilder& b, std::size_t m, std::size_t n) {
  add_type_a_block(b, 0, m, Parity::Even);
  add_type_a_block(b, m, m + n, Parity::Even);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = unit(b.raw_dim, i) - unit(b.raw_dim, m + j);
      b.root(v, Parity::Odd);
      b.root(-v, Parity::Odd);
    }
}

SystemBuilder make_sl(int m, int n) {
  SystemBuilder b;
  b.name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  b.raw_dim = static_cast<std::size_t>(m + n);
  Vec str = ones(b.raw_dim, 0, m) - ones(b.raw_dim, m, m + n);
  if (m == n) {
    // sl(m|m): the supertrace direction lies in the span of the roots, so the
    // canonical space (span of the root lattice) coincides with psl(m|m)'s.
    b.relations = {ones(b.raw_dim, 0, m), ones(b.raw_dim, m, m + n)};
  } else {
    b.relations = {str};
  }
  add_sl_roots(b, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  b.allow_merge = (m == n && m == 2);
  return b;
}

SystemBuilder make_gl(int m) {
  SystemBuilder b;
  b.name = "gl(" + std::to_string(m) + "|" + std::to_string(m) + ")";
  b.raw_dim = static_cast<std::size_t>(2 * m);
  // The generators satisfy no relation; quotienting by the all-ones direction
  // (a complement of the root span) puts coordinates on the span itself.
  b.relations = {ones(b.raw_dim, 0, 2 * m)};
  add_sl_roots(b, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  return b;
}

SystemBuilder make_psl(int m) {
  SystemBuilder b;
  b.name = "psl(" + std::to_string(m) + "|" + std::to_string(m) + ")";
  b.raw_dim = static_cast<std::size_t>(2 * m);
  b.relations = {ones(b.raw_dim, 0, m), ones(b.raw_dim, m, 2 * m)};
  add_sl_roots(b, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  b.allow_merge = (m == 2);
  return b;
}

SystemBuilder make_psq(int n) {
  SystemBuilder b = make_A(n - 1);
  b.name = "psq(" + std::to_string(n) + ")";
  return b;
}

SystemBuilder make_osp(int m, int two_n) {
  int n = two_n / 2, p = m / 2;
  SystemBuilder b;
  b.name = "osp(" + std::to_string(m) + "|" + std::to_string(two_n) + ")";
  b.raw_dim = static_cast<std::size_t>(p + n);
  std::size_t P = static_cast<std::size_t>(p), N = static_cast<std::size_t>(n);
  add_pair_block(b, 0, P, Parity::Even);
  add_pair_block(b, P, P + N, Parity::Even);
  add_short_block(b, P, P + N, 2, Parity::Even);
  add_cross_block(b, 0, P, P, P + N, Parity::Odd);
  if (m % 2 == 1) {
    add_short_block(b, 0, P, 1, Parity::Even);
    add_short_block(b, P, P + N, 1, Parity::Odd);
  }
  return b;
}

SystemBuilder make_D21() {
  SystemBuilder b;
  b.name = "D(2,1)";
  b.raw_dim = 3;
  add_short_block(b, 0, 3, 2, Parity::Even);
  for (int mask = 0; mask < 8; ++mask) {
    Vec v(3);
    for (std::size_t i = 0; i < 3; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1);
    b.root(v, Parity::Odd);
  }
  return b;
}

SystemBuilder make_F4super() {
  SystemBuilder b;
  b.name = "F(4)";
  b.raw_dim = 4;  // e1..e3, delta
  add_pair_block(b, 0, 3, Parity::Even);
  add_short_block(b, 0, 3, 1, Parity::Even);
  add_short_block(b, 3, 4, 1, Parity::Even);
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v.c[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
    b.root(v, Parity::Odd);
  }
  return b;
}

SystemBuilder make_G3super() {
  SystemBuilder b;
  b.name = "G(3)";
  b.raw_dim = 4;  // e1..e3 with sum zero, delta
  b.relations = {ones(4, 0, 3)};
  add_type_a_block(b, 0, 3, Parity::Even);
  for (std::size_t i = 0; i < 3; ++i) {
    Vec v = unit(4, i, 2);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) v -= unit(4, j);
    b.root(v, Parity::Even);
    b.root(-v, Parity::Even);
  }
  b.root(unit(4, 3, 2), Parity::Even);
  b.root(unit(4, 3, -2), Parity::Even);
  b.root(unit(4, 3), Parity::Odd);
  b.root(unit(4, 3, -1), Parity::Odd);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      Vec w = unit(4, i) - unit(4, j);
      for (int s : {1, -1}) b.root(w + unit(4, 3, s), Parity::Odd);
    }
  return b;
}

SystemBuilder make_H(int n) {
  int l = n / 2;
  SystemBuilder b;
  b.name = "H(" + std::to_string(n) + ")";
  b.raw_dim = static_cast<std::size_t>(l);
  std::vector<int> k(static_cast<std::size_t>(l), -1);
  while (true) {
    int weight = 0;
    Vec v(b.raw_dim);
    for (std::size_t i = 0; i < b.raw_dim; ++i) {
      v.c[i] = Scalar(k[i]);
      weight += std::abs(k[i]);
    }
    if (weight > 0) b.root(v, weight % 2 == 0 ? Parity::Even : Parity::Odd);
    std::size_t pos = 0;
    while (pos < k.size() && k[pos] == 1) k[pos++] = -1;
    if (pos == k.size()) break;
    ++k[pos];
  }
  return b;
}

int parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad integer in system name: '" + s + "'");
  return std::stoi(s);
}

}  // namespace

RootSystemPtr build_finite(const std::string& name) {
  auto inner = [&](std::size_t open) {
    if (name.back() != ')') throw std::invalid_argument("unbalanced system name: " + name);
    return name.substr(open + 1, name.size() - open - 2);
  };

  if (name == "G2") return make_G2().finalize();
  if (name == "F4") return make_F4().finalize();
  if (name == "E6") return make_E6().finalize();
  if (name == "E7") return make_E7().finalize();
  if (name == "E8") return make_E8().finalize();
  if (name == "D(2,1)") return make_D21().finalize();
  if (name == "F(4)") return make_F4super().finalize();
  if (name == "G(3)") return make_G3super().finalize();

  if (name.rfind("sl(", 0) == 0 || name.rfind("gl(", 0) == 0 || name.rfind("psl(", 0) == 0) {
    std::size_t open = name.find('(');
    std::string body = inner(open);
    std::size_t bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("expected m|n in " + name);
    int m = parse_int(body.substr(0, bar)), n = parse_int(body.substr(bar + 1));
    std::string head = name.substr(0, open);
    if (head == "sl") {
      if (m < 1 || n < 1 || (m == n && m < 2))
        throw std::invalid_argument("sl(m|n): need m,n >= 1 (m = n needs m >= 2)");
      return make_sl(m, n).finalize();
    }
    if (m != n) throw std::invalid_argument(head + "(m|n) requires m == n");
    if (m < 2) throw std::invalid_argument(head + "(m|m) requires m >= 2");
    return (head == "gl" ? make_gl(m) : make_psl(m)).finalize();
  }
  if (name.rfind("psq(", 0) == 0) {
    int n = parse_int(inner(3));
    if (n < 2) throw std::invalid_argument("psq(n) requires n >= 2");
    return make_psq(n).finalize();
  }
  if (name.rfind("osp(", 0) == 0) {
    std::string body = inner(3);
    std::size_t bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("expected m|2n in " + name);
    int m = parse_int(body.substr(0, bar)), two_n = parse_int(body.substr(bar + 1));
    if (m < 1 || two_n < 2 || two_n % 2 != 0)
      throw std::invalid_argument("osp(m|2n): need m >= 1 and even second parameter >= 2");
    return make_osp(m, two_n).finalize();
  }
  if (name.rfind("H(", 0) == 0) {
    int n = parse_int(inner(1));
    if (n < 5) throw std::invalid_argument("H(n) requires n >= 5");
    return make_H(n).finalize();
  }

  if (name.size() >= 2 && std::isalpha(name[0])) {
    int n = parse_int(name.substr(1));
    switch (name[0]) {
      case 'A':
        if (n < 1) throw std::invalid_argument("A(n) requires n >= 1");
        return make_A(n).finalize();
      case 'B':
        if (n < 1) throw std::invalid_argument("B(n) requires n >= 1");
        return make_B(n).finalize();
      case 'C':
        if (n < 1) throw std::invalid_argument("C(n) requires n >= 1");
        return make_C(n).finalize();
      case 'D':
        if (n < 2) throw std::invalid_argument("D(n) requires n >= 2");
        return make_D(n).finalize();
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown system: " + name);
}

RootSystemPtr build_affine(const RootSystemPtr& base, int window) {
  if (base->kind() != SystemKind::Finite)
    throw std::invalid_argument("build_affine: base must be finite");
  if (window < 1) throw std::invalid_argument("build_affine: window must be >= 1");
  SystemBuilder b;
  b.name = base->name() + "^(1)";
  b.kind = SystemKind::Affine;
  b.base_name = base->name();
  b.window = window;
  b.raw_dim = base->canon_dim() + 1;
  for (const auto& r : base->roots()) {
    for (int k = -window; k <= window; ++k) {
      Vec v(b.raw_dim);
      std::copy(r.vec.c.begin(), r.vec.c.end(), v.c.begin());
      v.c.back() = Scalar(k);
      b.root(std::move(v), r.parity);
    }
  }
  for (int k = -window; k <= window; ++k) {
    if (k == 0) continue;
    b.root(unit(b.raw_dim, b.raw_dim - 1, k), Parity::Even);
  }
  b.imaginary_raw = {unit(b.raw_dim, b.raw_dim - 1)};
  return b.finalize();
}

RootSystemPtr build_toroidal(const RootSystemPtr& base, std::size_t lattice_rank, int window) {
  if (base->kind() != SystemKind::Finite)
    throw std::invalid_argument("build_toroidal: base must be finite");
  if (lattice_rank < 2) throw std::invalid_argument("build_toroidal: lattice rank must be >= 2");
  if (window < 1) throw std::invalid_argument("build_toroidal: window must be >= 1");
  SystemBuilder b;
  b.name = "T" + std::to_string(lattice_rank) + "(" + base->name() + ")";
  b.kind = SystemKind::Toroidal;
  b.base_name = base->name();
  b.window = window;
  const std::size_t w = base->canon_dim();
  b.raw_dim = w + lattice_rank;

  std::vector<int> gamma(lattice_rank, -window);
  auto advance = [&]() {
    std::size_t pos = 0;
    while (pos < lattice_rank && gamma[pos] == window) gamma[pos++] = -window;
    if (pos == lattice_rank) return false;
    ++gamma[pos];
    return true;
  };
  while (true) {
    bool gamma_zero = std::all_of(gamma.begin(), gamma.end(), [](int g) { return g == 0; });
    for (const auto& r : base->roots()) {
      Vec v(b.raw_dim);
      std::copy(r.vec.c.begin(), r.vec.c.end(), v.c.begin());
      for (std::size_t i = 0; i < lattice_rank; ++i) v.c[w + i] = Scalar(gamma[i]);
      b.root(std::move(v), r.parity);
    }
    if (!gamma_zero) {
      Vec v(b.raw_dim);
      for (std::size_t i = 0; i < lattice_rank; ++i) v.c[w + i] = Scalar(gamma[i]);
      b.root(std::move(v), Parity::Even);
    }
    if (!advance()) break;
  }
  for (std::size_t i = 0; i < lattice_rank; ++i) b.imaginary_raw.push_back(unit(b.raw_dim, w + i));
  return b.finalize();
}

RootSystemPtr resolve_system(const std::string& name, int window) {
  auto caret = name.find("^(1)");
  if (caret != std::string::npos) {
    if (window < 1) throw std::invalid_argument("affine system '" + name + "' needs --window");
    return build_affine(build_finite(name.substr(0, caret)), window);
  }
  if (name.size() > 1 && name[0] == 'T' && std::isdigit(name[1])) {
    auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
      std::size_t rank = static_cast<std::size_t>(parse_int(name.substr(1, open - 1)));
      if (window < 1) throw std::invalid_argument("toroidal system '" + name + "' needs --window");
      return build_toroidal(build_finite(name.substr(open + 1, name.size() - open - 2)), rank,
                            window);
    }
  }
  return build_finite(name);
}

}  // namespace rootsets
