#include <random>

#include "doctest.h"
#include "ehrlab/counting.hpp"
#include "ehrlab/error.hpp"
#include "ehrlab/polytope.hpp"
#include "oracle.hpp"

using namespace ehrlab;

namespace {

std::vector<IntVec> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> out;
  for (auto r : rows) out.push_back(to_int_vec(r));
  return out;
}

std::vector<IntVec> reeve_vertices(long q) { return pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, q, q + 1}}); }

}  // namespace

TEST_CASE("unit square") {
  auto sq = LatticePolytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);
  const auto& h = sq.hrep();
  CHECK(h.equations.empty());
  std::vector<Halfspace> expected{
      {to_int_vec({-1, 0}), 0}, {to_int_vec({0, -1}), 0}, {to_int_vec({0, 1}), 1}, {to_int_vec({1, 0}), 1}};
  std::sort(expected.begin(), expected.end());
  CHECK(h.inequalities == expected);
  CHECK(sq.contains(to_int_vec({1, 1})));
  CHECK_FALSE(sq.contains(to_int_vec({1, 1}), true));
  CHECK_FALSE(sq.contains(to_int_vec({2, 0})));
}

TEST_CASE("redundant points are dropped") {
  auto p = LatticePolytope::from_points(pts({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 0}, {2, 2}, {1, 1}}));
  CHECK(p.vertices() == pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST_CASE("Reeve tetrahedron facets and lattice points") {
  auto r = LatticePolytope::from_points(reeve_vertices(2));
  CHECK(r.is_simplex());
  CHECK(r.hrep().inequalities.size() == 4);
  // Every vertex tight on exactly three facets.
  for (const auto& v : r.vertices()) {
    int tight = 0;
    for (const auto& f : r.hrep().inequalities) {
      Integer s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += f.a[i] * v[i];
      CHECK(s <= f.b);
      if (s == f.b) ++tight;
    }
    CHECK(tight == 3);
  }
  // Brute force over the bounding box with barycentric coordinates.
  auto verts = reeve_vertices(2);
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 2; ++y)
      for (long z = 0; z <= 3; ++z) {
        std::vector<Rat> p{Rat(x), Rat(y), Rat(z)};
        bool inside = true;
        for (const auto& l : oracle::barycentric(verts, p)) inside = inside && l >= 0;
        CHECK(inside == r.contains(to_int_vec({x, y, z})));
      }
  CHECK(enumerate(r, 1).size() == 4);
}

TEST_CASE("facets of standard shapes") {
  std::vector<IntVec> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(to_int_vec({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  CHECK(dual_description(cube).inequalities.size() == 6);
  auto cross = pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  auto h = dual_description(cross);
  CHECK(h.inequalities.size() == 8);
  for (const auto& f : h.inequalities) CHECK(f.b == 1);
}

TEST_CASE("lower-dimensional polytopes carry equations") {
  auto tri = LatticePolytope::from_points(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(tri.dim() == 2);
  CHECK(tri.ambient_dim() == 3);
  REQUIRE(tri.hrep().equations.size() == 1);
  CHECK(tri.hrep().equations[0].a == to_int_vec({1, 1, 1}));
  CHECK(tri.hrep().equations[0].b == 1);
  CHECK(tri.hrep().inequalities.size() == 3);
  CHECK(count(tri, 2) == 6);
  CHECK(count(tri, 3, true) == 1);
}

TEST_CASE("Smith normal form") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    IntMatrix a(rows, IntVec(cols));
    for (auto& r : a)
      for (auto& x : r) x = c(rng);
    SmithForm s = smith_normal_form(a);
    IntMatrix d = multiply(multiply(s.u, a), s.v);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Integer expect = (i == j && static_cast<int>(i) < s.rank) ? s.divisors[i] : Integer(0);
        CHECK(d[i][j] == expect);
      }
    for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.divisors[static_cast<std::size_t>(i) + 1] % s.divisors[static_cast<std::size_t>(i)] == 0);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.rank == rank(a));
  }
}

TEST_CASE("affine lattice basis round trip") {
  auto p = pts({{1, 2, 3}, {3, 2, 1}, {1, 4, 1}});
  AffineLatticeBasis b = affine_lattice_basis(p);
  CHECK(b.rank == 2);
  for (const auto& x : p) CHECK(b.lift(b.reduce(x)) == x);
  // Differences (2,0,-2),(0,2,-2) generate an index-4 sublattice of the plane x+y+z=6.
  CHECK_FALSE(b.spans());
  Integer idx = 1;
  for (const auto& dv : b.divisors) idx *= dv;
  CHECK(idx == 4);
}

TEST_CASE("constructions") {
  auto seg = LatticePolytope::from_points(pts({{0}, {2}}));
  auto tri = LatticePolytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}}));
  auto pr = product(seg, tri);
  CHECK(pr.dim() == 3);
  CHECK(pr.vertices().size() == 6);
  // |P x Q| = |P| |Q| at every dilation.
  for (long m = 0; m <= 3; ++m) CHECK(count(pr, m) == count(seg, m) * count(tri, m));

  auto pyr = pyramid(tri);
  CHECK(pyr.dim() == 3);
  CHECK(pyr.vertices().size() == 4);

  auto seg0 = LatticePolytope::from_points(pts({{0}, {3}}));
  std::vector<LatticePolytope> parts{seg0, tri};
  auto fs = free_sum(parts);
  CHECK(fs.dim() == 3);
  CHECK(fs.vertices().size() == 4);

  std::vector<LatticePolytope> bad{LatticePolytope::from_points(pts({{1}, {2}})), tri};
  try {
    free_sum(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OriginNotVertex);
  }
  try {
    minkowski_sum(seg, tri);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientMismatch);
  }
  auto sq = minkowski_sum(LatticePolytope::from_points(pts({{0, 0}, {1, 0}})), LatticePolytope::from_points(pts({{0, 0}, {0, 1}})));
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.dilate(3).vertices() == pts({{0, 0}, {0, 3}, {3, 0}, {3, 3}}));
  CHECK(sq.translate(to_int_vec({1, -1})).vertices() == pts({{1, -1}, {1, 0}, {2, -1}, {2, 0}}));
}

TEST_CASE("dimension limit") {
  // The 13-cube is not a simplex and is past the exact-hull limit.
  std::vector<IntVec> v;
  for (int m = 0; m < (1 << 13); ++m) {
    IntVec p;
    for (int i = 0; i < 13; ++i) p.emplace_back((m >> i) & 1);
    v.push_back(p);
  }
  try {
    LatticePolytope::from_points(v);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionTooLarge);
  }
}
