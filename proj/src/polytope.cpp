#include "ehrlab/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <numeric>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr int kMaxDimension = 12;
constexpr int kMaxSimplexDimension = 40;

struct Ray {
  IntVec y;
  Bits tight;
};

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

void make_primitive(IntVec& v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Rank test for adding a row to an echelon basis kept over Q.
struct RowSpace {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> pivots;

  bool add(const IntVec& v) {
    std::vector<Rat> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rat f = r[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * rows[k][j];
    }
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) return false;
    const Rat inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rat f = rows[k][p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) rows[k][j] -= f * r[j];
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }
};

Halfspace to_ambient(const Halfspace& h, const AffineLatticeBasis& basis) {
  const std::size_t n = basis.origin.size();
  Halfspace out;
  out.a.assign(n, Integer(0));
  for (std::size_t i = 0; i < h.a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out.a[j] += h.a[i] * basis.to_reduced[i][j];
  out.b = h.b + dot(out.a, basis.origin);
  Integer g = content(out.a);
  if (g > 1) {
    for (auto& x : out.a) x /= g;
    out.b /= g;
  }
  return out;
}

std::vector<Halfspace> ambient_equations(const AffineLatticeBasis& basis) {
  std::vector<Halfspace> eqs;
  for (std::size_t i = 0; i < basis.equation_rows.size(); ++i) {
    Halfspace e{basis.equation_rows[i], basis.equation_values[i]};
    Integer g = content(e.a);
    if (g > 1) {
      for (auto& x : e.a) x /= g;
      e.b /= g;
    }
    auto first = std::find_if(e.a.begin(), e.a.end(), [](const Integer& x) { return x != 0; });
    if (first != e.a.end() && *first < 0) {
      for (auto& x : e.a) x = -x;
      e.b = -e.b;
    }
    eqs.push_back(std::move(e));
  }
  std::sort(eqs.begin(), eqs.end());
  return eqs;
}

void check_scale(int r, std::size_t npoints) {
  const bool simplex = npoints == static_cast<std::size_t>(r) + 1;
  if (r > kMaxSimplexDimension || (!simplex && r > kMaxDimension)) {
    throw Error(ErrorCode::DimensionTooLarge, "dimension " + std::to_string(r) + " is beyond desk scale");
  }
}

}  // namespace

bool HalfspaceRep::contains(const IntVec& x, bool strict) const {
  for (const auto& e : equations) {
    if (dot(e.a, x) != e.b) return false;
  }
  for (const auto& h : inequalities) {
    Integer v = dot(h.a, x);
    if (strict ? v >= h.b : v > h.b) return false;
  }
  return true;
}

HalfspaceRep HalfspaceRep::dilated(const Integer& m) const {
  HalfspaceRep out = *this;
  for (auto& h : out.inequalities) h.b *= m;
  for (auto& e : out.equations) e.b *= m;
  return out;
}

FullDimFacets full_dimensional_facets(const std::vector<IntVec>& points) {
  FullDimFacets out;
  if (points.empty()) throw Error(ErrorCode::BadParameter, "facets of no points");
  const std::size_t r = points[0].size();
  const std::size_t n = points.size();
  if (r == 0) return out;
  std::vector<IntVec> lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    lifted[i].reserve(r + 1);
    lifted[i].emplace_back(1);
    lifted[i].insert(lifted[i].end(), points[i].begin(), points[i].end());
  }

  // Initial simplex of r + 1 affinely independent points.
  RowSpace space;
  std::vector<std::size_t> init;
  for (std::size_t i = 0; i < n && init.size() < r + 1; ++i) {
    if (space.add(lifted[i])) init.push_back(i);
  }
  if (init.size() != r + 1) throw Error(ErrorCode::NotFullRankData, "points are not full-dimensional");

  // Rays of {y : M y >= 0} are the columns of M^{-1}.
  std::vector<std::vector<Rat>> aug(r + 1, std::vector<Rat>(2 * (r + 1)));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j <= r; ++j) aug[i][j] = lifted[init[i]][j];
    aug[i][r + 1 + i] = 1;
  }
  for (std::size_t c = 0; c <= r; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    const Rat inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i <= r; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rat f = aug[i][c];
      for (std::size_t j = 0; j < aug[i].size(); ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= r; ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i <= r; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), aug[i][r + 1 + j].get_den_mpz_t());
    Ray ray;
    ray.y.resize(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      Rat v = aug[i][r + 1 + j] * den;
      ray.y[i] = v.get_num();
    }
    make_primitive(ray.y);
    ray.tight = Bits(n);
    for (std::size_t k = 0; k <= r; ++k) {
      if (k != j) ray.tight.set(init[k]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(n, false);
  for (auto i : init) done[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rays[k].y, lifted[i]);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (val[k] == 0) rays[k].tight.set(i);
      }
      continue;
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 1 < r) continue;
        bool adjacent = true;
        for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
          if (w != p && w != q && common.is_subset_of(rays[w].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.y.resize(r + 1);
        const Integer sp = val[p];
        const Integer sq = -val[q];
        for (std::size_t t = 0; t <= r; ++t) nr.y[t] = sp * rays[q].y[t] + sq * rays[p].y[t];
        make_primitive(nr.y);
        nr.tight = common;
        nr.tight.set(i);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0) next.push_back(std::move(rays[k]));
      if (val[k] == 0) {
        rays[k].tight.set(i);
        next.push_back(std::move(rays[k]));
      }
    }
    rays = std::move(next);
  }

  // y0 + y'·p >= 0 becomes (-y')·p <= y0.
  std::vector<std::pair<Halfspace, std::vector<bool>>> rows;
  for (auto& ray : rays) {
    Halfspace h;
    h.a.assign(ray.y.begin() + 1, ray.y.end());
    for (auto& x : h.a) x = -x;
    h.b = ray.y[0];
    Integer g = content(h.a);
    for (auto& x : h.a) x /= g;
    h.b /= g;
    std::vector<bool> inc(n);
    for (std::size_t k = 0; k < n; ++k) inc[k] = ray.tight.test(k);
    rows.emplace_back(std::move(h), std::move(inc));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [h, inc] : rows) {
    out.facets.push_back(std::move(h));
    out.incidence.push_back(std::move(inc));
  }
  return out;
}

HalfspaceRep dual_description(const std::vector<IntVec>& vertices) {
  return LatticePolytope::from_points(vertices).hrep();
}

LatticePolytope LatticePolytope::from_points(std::vector<IntVec> points) {
  if (points.empty()) throw Error(ErrorCode::BadParameter, "polytope with no points");
  const std::size_t n = points[0].size();
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::AmbientMismatch, "points of mixed dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  {
    IntMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
      IntVec d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
      diffs.push_back(std::move(d));
    }
    check_scale(diffs.empty() ? 0 : rank(diffs), points.size());
  }

  LatticePolytope out;
  out.ambient_ = static_cast<int>(n);
  out.basis_ = affine_lattice_basis(points);
  const int r = out.basis_.rank;
  check_scale(r, points.size());

  std::vector<IntVec> reduced;
  for (const auto& p : points) reduced.push_back(out.basis_.reduce(p));

  if (r == 0) {
    out.vertices_ = points;
    out.reduced_vertices_ = reduced;
  } else {
    FullDimFacets fd = full_dimensional_facets(reduced);
    // A point is a vertex iff the facets through it have full rank.
    for (std::size_t i = 0; i < points.size(); ++i) {
      IntMatrix normals;
      for (std::size_t f = 0; f < fd.facets.size(); ++f) {
        if (fd.incidence[f][i]) normals.push_back(fd.facets[f].a);
      }
      if (!normals.empty() && rank(normals) == r) {
        out.vertices_.push_back(points[i]);
        out.reduced_vertices_.push_back(reduced[i]);
      }
    }
    out.reduced_facets_ = fd.facets;
  }
  // The lexicographically smallest point is always a vertex, so the
  // reduced origin is unchanged by the pruning above.
  for (const auto& f : out.reduced_facets_) out.hrep_.inequalities.push_back(to_ambient(f, out.basis_));
  std::sort(out.hrep_.inequalities.begin(), out.hrep_.inequalities.end());
  out.hrep_.equations = ambient_equations(out.basis_);
  return out;
}

LatticePolytope LatticePolytope::from_columns(const IntMatrix& m) {
  if (m.empty() || m[0].empty()) throw Error(ErrorCode::BadParameter, "empty vertex matrix");
  return from_points(transpose(m));
}

LatticePolytope LatticePolytope::dilate(long m) const {
  if (m < 1) throw Error(ErrorCode::BadParameter, "dilation factor must be positive");
  LatticePolytope out = *this;
  for (auto& v : out.vertices_)
    for (auto& x : v) x *= m;
  for (auto& v : out.reduced_vertices_)
    for (auto& x : v) x *= m;
  for (auto& x : out.basis_.origin) x *= m;
  for (auto& x : out.basis_.equation_values) x *= m;
  for (auto& f : out.reduced_facets_) f.b *= m;
  out.hrep_ = hrep_.dilated(m);
  return out;
}

LatticePolytope LatticePolytope::translate(const IntVec& t) const {
  if (static_cast<int>(t.size()) != ambient_) throw Error(ErrorCode::AmbientMismatch, "translation vector dimension");
  std::vector<IntVec> pts = vertices_;
  for (auto& v : pts)
    for (std::size_t i = 0; i < t.size(); ++i) v[i] += t[i];
  return from_points(std::move(pts));
}

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<IntVec> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      IntVec v = a;
      v.insert(v.end(), b.begin(), b.end());
      pts.push_back(std::move(v));
    }
  }
  return LatticePolytope::from_points(std::move(pts));
}

LatticePolytope pyramid(const LatticePolytope& p) {
  std::vector<IntVec> pts;
  for (const auto& a : p.vertices()) {
    IntVec v = a;
    v.emplace_back(0);
    pts.push_back(std::move(v));
  }
  IntVec apex(static_cast<std::size_t>(p.ambient_dim()) + 1, Integer(0));
  apex.back() = 1;
  pts.push_back(std::move(apex));
  return LatticePolytope::from_points(std::move(pts));
}

LatticePolytope free_sum(std::span<const LatticePolytope> ps) {
  if (ps.empty()) throw Error(ErrorCode::BadParameter, "free sum of nothing");
  std::size_t total = 0;
  for (const auto& p : ps) {
    IntVec zero(static_cast<std::size_t>(p.ambient_dim()), Integer(0));
    if (std::find(p.vertices().begin(), p.vertices().end(), zero) == p.vertices().end()) {
      throw Error(ErrorCode::OriginNotVertex, "free sum summand does not have the origin as a vertex");
    }
    total += static_cast<std::size_t>(p.ambient_dim());
  }
  std::vector<IntVec> pts;
  std::size_t offset = 0;
  for (const auto& p : ps) {
    for (const auto& v : p.vertices()) {
      IntVec w(total, Integer(0));
      for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
      pts.push_back(std::move(w));
    }
    offset += static_cast<std::size_t>(p.ambient_dim());
  }
  return LatticePolytope::from_points(std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "Minkowski summands live in different ambient spaces");
  }
  std::vector<IntVec> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      IntVec v = a;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
      pts.push_back(std::move(v));
    }
  }
  return LatticePolytope::from_points(std::move(pts));
}

}  // namespace ehrlab
