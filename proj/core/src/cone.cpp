#include "rootsets/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rootsets {

namespace {

using RatVec = std::vector<Rational>;

RatVec to_rational(const Vec& v, std::size_t dim) {
  if (v.dim() != dim) throw std::invalid_argument("SignProblem: vector dimension mismatch");
  RatVec r(dim);
  for (std::size_t i = 0; i < dim; ++i) r[i] = v.c[i].as_rational();
  return r;
}

/// Phase-1 simplex for the alternative system
///   sum_j x_j * col_j = (0, ..., 0, 1),  x >= 0,
/// where col_j carries a constraint vector and a final "strictness" entry.
/// A solution is a Farkas certificate that the original problem is
/// infeasible; when the phase-1 optimum stays positive, the simplex
/// multipliers of the final basis produce a feasible covector instead.
class AlternativeSimplex {
 public:
  AlternativeSimplex(std::size_t n_rows) : n_(n_rows) {}

  void add_column(RatVec col) { cols_.push_back(std::move(col)); }

  /// Returns the feasible covector of the PRIMAL sign problem (dimension
  /// n_-1), or nullopt when the primal is infeasible.
  std::optional<RatVec> run() {
    const std::size_t m = cols_.size();
    // Basis starts as the artificial identity; artificials get column ids
    // m..m+n-1 so Bland's rule prefers real columns.
    basis_.resize(n_);
    binv_.assign(n_, RatVec(n_, 0));
    xb_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      basis_[i] = m + i;
      binv_[i][i] = 1;
    }
    xb_[n_ - 1] = 1;  // rhs = unit vector on the strictness row

    while (true) {
      // Simplex multipliers pi = c_B * B^{-1}; c is 1 on artificials only.
      RatVec pi(n_, 0);
      for (std::size_t i = 0; i < n_; ++i) {
        if (basis_[i] >= m) {
          for (std::size_t k = 0; k < n_; ++k) pi[k] += binv_[i][k];
        }
      }
      // Bland: first column with negative reduced cost enters.
      std::size_t enter = m;
      for (std::size_t j = 0; j < m; ++j) {
        if (in_basis(j)) continue;
        Rational rc = 0;  // c_j = 0 for real columns
        for (std::size_t k = 0; k < n_; ++k)
          if (sgn(cols_[j][k]) != 0) rc -= pi[k] * cols_[j][k];
        if (sgn(rc) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == m) {
        // Optimal. Objective = sum of basic artificial values.
        Rational opt = 0;
        for (std::size_t i = 0; i < n_; ++i)
          if (basis_[i] >= m) opt += xb_[i];
        if (sgn(opt) == 0) return std::nullopt;  // Farkas certificate found
        RatVec lambda(n_ - 1);
        for (std::size_t k = 0; k + 1 < n_; ++k) lambda[k] = -pi[k] / opt;
        return lambda;
      }
      // Direction d = B^{-1} * col_enter.
      RatVec d(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k)
          if (sgn(cols_[enter][k]) != 0) d[i] += binv_[i][k] * cols_[enter][k];
      // Ratio test; ties broken by smallest leaving basis column id (Bland).
      std::size_t leave = n_;
      Rational best;
      for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(d[i]) <= 0) continue;
        Rational ratio = xb_[i] / d[i];
        if (leave == n_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == n_) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(enter, leave, d);
    }
  }

 private:
  bool in_basis(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void pivot(std::size_t enter, std::size_t leave, const RatVec& d) {
    Rational piv = d[leave];
    for (auto& x : binv_[leave]) x /= piv;
    xb_[leave] /= piv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == leave || sgn(d[i]) == 0) continue;
      Rational f = d[i];
      for (std::size_t k = 0; k < n_; ++k) binv_[i][k] -= f * binv_[leave][k];
      xb_[i] -= f * xb_[leave];
    }
    basis_[leave] = enter;
  }

  std::size_t n_;
  std::vector<RatVec> cols_;
  std::vector<std::size_t> basis_;
  std::vector<RatVec> binv_;
  RatVec xb_;
};

Covec to_covec(const RatVec& v) {
  Covec l(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) l.c[i] = Scalar(v[i]);
  return l;
}

}  // namespace

std::optional<Covec> strict_feasible(const SignProblem& p) {
  if (p.strict_pos.empty()) return Covec(p.dim);  // lambda = 0 works

  const std::size_t n = p.dim + 1;
  AlternativeSimplex simplex(n);
  auto push = [&](const RatVec& v, bool strict, bool negate) {
    RatVec col(n, 0);
    for (std::size_t i = 0; i < p.dim; ++i) col[i] = negate ? Rational(-v[i]) : v[i];
    col[p.dim] = strict ? 1 : 0;
    simplex.add_column(std::move(col));
  };
  for (const auto& v : p.zero) {
    RatVec r = to_rational(v, p.dim);
    push(r, false, false);
    push(r, false, true);
  }
  for (const auto& v : p.nonneg) push(to_rational(v, p.dim), false, false);
  for (const auto& v : p.strict_pos) push(to_rational(v, p.dim), true, false);

  auto sol = simplex.run();
  if (!sol) return std::nullopt;
  Covec lambda = normalize_primitive(to_covec(*sol));

  // The multipliers are exact, but recheck every constraint anyway.
  for (const auto& v : p.zero)
    if (pairing(lambda, v).sign() != 0) throw std::logic_error("strict_feasible: zero recheck failed");
  for (const auto& v : p.nonneg)
    if (pairing(lambda, v).sign() < 0) throw std::logic_error("strict_feasible: nonneg recheck failed");
  for (const auto& v : p.strict_pos)
    if (pairing(lambda, v).sign() <= 0) throw std::logic_error("strict_feasible: strict recheck failed");
  return lambda;
}

ConePoint relative_interior(const SignProblem& p) {
  if (!p.strict_pos.empty())
    throw std::invalid_argument("relative_interior: strict constraints not allowed");
  ConePoint out;
  out.lambda = Covec(p.dim);
  for (std::size_t i = 0; i < p.nonneg.size(); ++i) {
    if (pairing(out.lambda, p.nonneg[i]).sign() > 0) continue;  // already achieved
    SignProblem probe;
    probe.dim = p.dim;
    probe.zero = p.zero;
    probe.nonneg = p.nonneg;
    probe.strict_pos = {p.nonneg[i]};
    if (auto mu = strict_feasible(probe)) {
      out.lambda += *mu;
    } else {
      out.forced_zero.push_back(i);
    }
  }
  if (!out.lambda.is_zero()) out.lambda = normalize_primitive(out.lambda);

  // Relative-interior contract: strictly positive exactly off the forced set.
  std::size_t fz = 0;
  for (std::size_t i = 0; i < p.nonneg.size(); ++i) {
    bool forced = fz < out.forced_zero.size() && out.forced_zero[fz] == i;
    if (forced) ++fz;
    int s = pairing(out.lambda, p.nonneg[i]).sign();
    if (forced ? s != 0 : s <= 0)
      throw std::logic_error("relative_interior: sign contract violated");
  }
  for (const auto& v : p.zero)
    if (pairing(out.lambda, v).sign() != 0)
      throw std::logic_error("relative_interior: kernel contract violated");
  return out;
}

bool fourier_motzkin_feasible(const SignProblem& p) {
  // Rows are pairs (coefficients, strict). Eliminating a variable combines
  // each positive-coefficient row with each negative one; the combination is
  // strict when either parent is.
  using Row = std::pair<RatVec, bool>;
  std::vector<Row> rows;
  auto add_row = [&](RatVec v, bool strict) {
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
    if (all_zero) return !strict;  // "0 > 0" is infeasible, "0 >= 0" is vacuous
    rows.emplace_back(std::move(v), strict);
    return true;
  };
  for (const auto& v : p.zero) {
    RatVec r = to_rational(v, p.dim);
    RatVec neg = r;
    for (auto& x : neg) x = -x;
    if (!add_row(r, false) || !add_row(neg, false)) return false;
  }
  for (const auto& v : p.nonneg)
    if (!add_row(to_rational(v, p.dim), false)) return false;
  for (const auto& v : p.strict_pos)
    if (!add_row(to_rational(v, p.dim), true)) return false;

  for (std::size_t var = 0; var < p.dim; ++var) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.first[var]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    std::map<RatVec, bool> dedup;
    for (const auto& [pv, ps] : pos) {
      for (const auto& [nv, ns] : neg) {
        RatVec combo(p.dim);
        Rational a = -nv[var], b = pv[var];  // both positive multipliers
        bool nonzero = false;
        for (std::size_t k = 0; k < p.dim; ++k) {
          combo[k] = a * pv[k] + b * nv[k];
          if (sgn(combo[k]) != 0) nonzero = true;
        }
        bool strict = ps || ns;
        if (!nonzero) {
          if (strict) return false;
          continue;
        }
        // Normalize so duplicates collapse.
        Rational scale = 0;
        for (const auto& q : combo)
          if (sgn(q) != 0) {
            scale = abs(q);
            break;
          }
        for (auto& q : combo) q /= scale;
        auto [it, inserted] = dedup.emplace(combo, strict);
        if (!inserted) it->second = it->second || strict;
      }
    }
    for (auto& [v, s] : dedup) next.emplace_back(v, s);
    rows = std::move(next);
    if (rows.size() > 200000) throw std::length_error("fourier_motzkin: row blow-up");
  }
  // Only all-zero rows can remain, and those were screened on insertion.
  for (const auto& [v, s] : rows) {
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
    if (all_zero && s) return false;
  }
  return true;
}

}  // namespace rootsets
