#include "ehrlab/real_roots.hpp"

#include <algorithm>
#include <set>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

void require_nonzero(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial is zero");
}

// Sign changes of the chain evaluated at x, zeros skipped.
int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sign(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rat cauchy_radius(const Poly& p) {
  Rat max_ratio(0);
  const Rat& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) max_ratio = std::max(max_ratio, Rat(abs(p.coeffs()[static_cast<std::size_t>(i)] / lc)));
  return max_ratio + 1;
}

void collect_divisors(const Integer& n, std::vector<Integer>& out) {
  Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
}

}  // namespace

Poly squarefree_part(const Poly& p) {
  require_nonzero(p);
  if (p.degree() <= 0) return Poly::constant(Rat(1));
  Poly g = gcd(p, p.derivative());
  return exact_divide(p, g).monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  require_nonzero(p);
  std::vector<Poly> chain{p.primitive()};
  Poly next = p.derivative();
  if (next.is_zero()) return chain;
  chain.push_back(next.primitive());
  while (true) {
    Poly rem = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (rem.is_zero()) break;
    chain.push_back((-rem).primitive());
  }
  return chain;
}

int count_real_roots(const Poly& p) {
  require_nonzero(p);
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi) {
  require_nonzero(p);
  if (p.degree() <= 0 || hi <= lo) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

bool is_real_rooted(const Poly& p) {
  require_nonzero(p);
  if (p.degree() <= 0) return true;
  Poly sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  int distinct = sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
  return distinct == sf.degree();
}

Rat positivity_tail_bound(const Poly& p) {
  require_nonzero(p);
  if (p.leading() <= 0) {
    throw Error(ErrorCode::NonpositiveLeadingCoefficient, "leading coefficient of " + p.to_string() + " is not positive");
  }
  return cauchy_radius(p);
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rat& max_width) {
  require_nonzero(p);
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  Poly sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  auto count = [&](const Rat& lo, const Rat& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
  };
  Rat radius = cauchy_radius(sf);
  std::vector<RootInterval> stack{{-radius, radius}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int n = count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1 && iv.hi - iv.lo <= max_width) {
      out.push_back(iv);
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<Rat> rational_roots(const Poly& p) {
  require_nonzero(p);
  std::set<Rat> roots;
  if (p.degree() <= 0) return {};
  Poly q = p.primitive();
  // Strip the root at zero first so the constant term is nonzero.
  int low = 0;
  while (q.coeffs()[static_cast<std::size_t>(low)] == 0) ++low;
  if (low > 0) {
    roots.insert(Rat(0));
    std::vector<Rat> rest(q.coeffs().begin() + low, q.coeffs().end());
    q = Poly(std::move(rest));
  }
  if (q.degree() >= 1) {
    std::vector<Integer> num_divs;
    std::vector<Integer> den_divs;
    collect_divisors(q.coeffs().front().get_num(), num_divs);
    collect_divisors(q.leading().get_num(), den_divs);
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        for (int s : {1, -1}) {
          Rat cand = make_rat(a * s, b);
          if (q(cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace ehrlab
