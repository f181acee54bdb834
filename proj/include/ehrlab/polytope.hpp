#pragma once

#include <span>
#include <string>
#include <vector>

#include "ehrlab/lattice.hpp"

namespace ehrlab {

/// a·x <= b (inequality) or a·x = b (equation).
struct Halfspace {
  IntVec a;
  Integer b;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& x, const Halfspace& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

struct HalfspaceRep {
  /// Facet-defining, primitive normals, sorted.
  std::vector<Halfspace> inequalities;
  /// Affine hull; first nonzero entry of each normal is positive.
  std::vector<Halfspace> equations;

  /// strict: every inequality strict (relative interior); equations exact.
  bool contains(const IntVec& x, bool strict = false) const;
  /// Scales offsets by m.
  HalfspaceRep dilated(const Integer& m) const;
};

/// Facets of conv(points) where the points are full-dimensional in Z^r.
/// incidence[f][i] tells whether point i lies on facet f.
struct FullDimFacets {
  std::vector<Halfspace> facets;
  std::vector<std::vector<bool>> incidence;
};

FullDimFacets full_dimensional_facets(const std::vector<IntVec>& points);

/// Exact facets plus affine-hull equations of conv(vertices).
/// Throws Error(DimensionTooLarge) beyond desk scale.
HalfspaceRep dual_description(const std::vector<IntVec>& vertices);

class LatticePolytope {
 public:
  LatticePolytope() = default;
  /// Deduplicates, drops points that are not vertices, sorts the rest.
  static LatticePolytope from_points(std::vector<IntVec> points);
  /// Columns of the matrix are the candidate vertices.
  static LatticePolytope from_columns(const IntMatrix& m);

  const std::vector<IntVec>& vertices() const noexcept { return vertices_; }
  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return basis_.rank; }
  const HalfspaceRep& hrep() const noexcept { return hrep_; }
  /// Lattice coordinates of the affine hull (origin at the first vertex).
  const AffineLatticeBasis& lattice() const noexcept { return basis_; }
  /// Vertices in reduced coordinates (first one is 0).
  const std::vector<IntVec>& reduced_vertices() const noexcept { return reduced_vertices_; }
  /// Facets in reduced coordinates.
  const std::vector<Halfspace>& reduced_facets() const noexcept { return reduced_facets_; }
  bool is_simplex() const { return static_cast<int>(vertices_.size()) == dim() + 1; }

  bool contains(const IntVec& x, bool strict = false) const { return hrep_.contains(x, strict); }
  LatticePolytope dilate(long m) const;
  LatticePolytope translate(const IntVec& t) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<IntVec> vertices_;
  int ambient_ = 0;
  AffineLatticeBasis basis_;
  std::vector<IntVec> reduced_vertices_;
  std::vector<Halfspace> reduced_facets_;
  HalfspaceRep hrep_;
};

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope pyramid(const LatticePolytope& p);
/// Every summand must have the origin as a vertex (Error(OriginNotVertex)).
LatticePolytope free_sum(std::span<const LatticePolytope> ps);
/// Error(AmbientMismatch) for different ambient dimensions.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

}  // namespace ehrlab
