#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootsets/linalg.hpp"

namespace rootsets {

using RootId = std::size_t;

enum class Parity { Even, Odd };

struct Root {
  RootId id = 0;
  Vec vec;       // canonical coordinates, always rational
  Parity parity = Parity::Even;
};

enum class SystemKind { Finite, Affine, Toroidal };

/// A finite set of nonzero vectors closed under negation, with stable ids:
/// id == rank of the coordinate vector in lexicographic order.
///
/// Affine and toroidal systems are window truncations of the infinite sets
///   (R + Z*delta) u (Z \ 0)*delta    and    (R + Gamma) u (Gamma \ 0),
/// with the imaginary lattice coordinates bounded by |k_i| <= window.
///
/// Instances are immutable after construction and safe to share.
class RootSystem {
 public:
  const std::string& name() const { return name_; }
  SystemKind kind() const { return kind_; }
  const AmbientSpace& space() const { return space_; }
  std::size_t canon_dim() const { return space_.canon_dim(); }

  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootId id) const { return roots_.at(id); }

  std::optional<RootId> id_of(const Vec& canonical) const;
  RootId neg_id(RootId id) const { return neg_ids_[id]; }

  /// id of root(a).vec + root(b).vec, when that sum is again a root.
  std::optional<RootId> sum_id(RootId a, RootId b) const;

  /// Coordinates scaled to integers by the system-wide denominator lcm;
  /// backs the closure fast path.
  const std::vector<std::vector<long>>& int_coords() const { return int_coords_; }

  // Metadata for affine/toroidal systems.
  const std::string& base_name() const { return base_name_; }
  int window() const { return window_; }
  std::size_t lattice_rank() const { return imaginary_gens_.size(); }
  const std::vector<Vec>& imaginary_gens() const { return imaginary_gens_; }
  /// Dimension of the finite part W (canon_dim minus lattice rank).
  std::size_t base_dim() const { return canon_dim() - lattice_rank(); }

  /// Quadratic extension base available for functionals over this system.
  int quad_base() const { return quad_base_; }

 private:
  friend class SystemBuilder;
  std::string name_;
  SystemKind kind_ = SystemKind::Finite;
  AmbientSpace space_;
  std::vector<Root> roots_;
  std::vector<RootId> neg_ids_;
  std::vector<std::vector<long>> int_coords_;
  std::map<std::vector<long>, RootId> int_index_;
  std::string base_name_;
  int window_ = 0;
  std::vector<Vec> imaginary_gens_;
  int quad_base_ = 2;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Subset of a root system's roots, by id. Immutable.
class RootSubset {
 public:
  RootSubset(RootSystemPtr sys, const std::vector<RootId>& ids);

  static RootSubset full(RootSystemPtr sys);
  static RootSubset empty(RootSystemPtr sys);

  const RootSystem& system() const { return *sys_; }
  const RootSystemPtr& system_ptr() const { return sys_; }

  bool contains(RootId id) const { return mask_[id]; }
  const std::vector<RootId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_full() const { return members_.size() == sys_->size(); }

  RootSubset negated() const;
  RootSubset with(RootId id) const;
  RootSubset without(RootId id) const;

  friend bool operator==(const RootSubset& x, const RootSubset& y) {
    return x.sys_ == y.sys_ && x.members_ == y.members_;
  }

 private:
  RootSystemPtr sys_;
  std::vector<bool> mask_;
  std::vector<RootId> members_;
};

/// Builds a finite catalog system by name. Supported names:
///   A1.., B1.., C1.., D2.., G2, F4, E6, E7, E8,
///   sl(m|n) with m != n, sl(m|m), gl(m|m), psl(m|m), psq(n),
///   osp(m|2n), D(2,1), F(4), G(3), H(n) with n >= 5.
RootSystemPtr build_finite(const std::string& name);

/// Window truncation of the untwisted affine extension of a finite system.
RootSystemPtr build_affine(const RootSystemPtr& base, int window);

/// Window truncation of the rank-n toroidal extension, n >= 2.
RootSystemPtr build_toroidal(const RootSystemPtr& base, std::size_t lattice_rank, int window);

/// Resolves a catalog name, including "X^(1)" / "Tn(X)" forms that require
/// an explicit window.
RootSystemPtr resolve_system(const std::string& name, int window = 0);

}  // namespace rootsets
