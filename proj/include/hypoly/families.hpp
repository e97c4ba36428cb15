#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

/// r-uniform elementary path with m edges (r >= 2, m >= 0).
struct PathSpec {
  unsigned m = 0;
  unsigned r = 2;
};

/// r-uniform elementary cycle with m edges (r >= 2, m >= 3).
struct CycleSpec {
  unsigned m = 3;
  unsigned r = 2;
};

/// Complete r-uniform hyperstar on [n] centered at n (1 <= r <= n).
struct HyperstarSpec {
  unsigned n = 1;
  unsigned r = 1;
};

/// Sunflower with s seeds and one edge per petal; an edge holds the seeds and
/// its petal. At most one petal may be empty (no parallel edges), s >= 1.
struct SunflowerSpec {
  std::vector<unsigned> petal_sizes;
  unsigned seeds = 1;

  /// The r-uniform sunflower with ell edges and s seeds.
  static SunflowerSpec uniform(unsigned r, unsigned ell, unsigned s);
};

using FamilySpec = std::variant<PathSpec, CycleSpec, HyperstarSpec, SunflowerSpec>;

/// Throws ValidationError when the parameters are outside the family's domain.
void validate(const FamilySpec& spec);

/// Deterministic construction. Paths and cycles use vertices v0, v1, ... laid
/// out along the edges e1, e2, ...; labels are zero-padded so label order
/// follows construction order.
Hypergraph make_family(const FamilySpec& spec);

/// xi of the r-uniform path with m edges and t = 1, from the three bases
/// P0 = 1, P1 = x^r + x y + z, P2 = (x^(r-1) + y) P1 + z x^(r-1) and
///   P_m = (x^(r-1) + y) P_(m-1) + z x^(r-2) P_(m-2) for m >= 3.
/// P_0 = 1 is the empty-path convention of the recurrence, whereas
/// make_family builds a single vertex for m = 0.
Poly path_xi(unsigned m, unsigned r);

/// Coefficients 0..order of the path generating function
///   N(s) / (1 - (x^(r-1) + y) s - z x^(r-2) s^2),
///   N(s) = 1 + (x^r + x y + z - x^(r-1) - y) s + z x^(r-2) (x - 1) s^2,
/// expanded as a power series in s.
std::vector<Poly> path_gf_series(unsigned r, unsigned order);

/// Fibonacci polynomials in x: F1 = F2 = 1, F_(k+1) = x F_k + F_(k-1).
Poly fibonacci_poly(unsigned k);

/// xi of the r-uniform cycle with m edges and t = 1. C3 comes from the
/// constructed hypergraph; for m >= 4
///   C_m = x^(r-2) P_(m-1) + y C_(m-1) + z x^(2r-4) P_(m-3).
Poly cycle_xi(unsigned m, unsigned r);

/// Multivariate chromatic polynomial of the hyperstar H_{n,r}:
///   q^n + sum_{S subset [n-1], |S| >= r-1} p (t_{S+n} - 1) (q - 1)^(n - |S| - 1),
/// where t_{S+n} multiplies t{T} over the r-sets T with n in T inside S + n.
/// Edge ids match make_family(HyperstarSpec{n, r}).
Poly hyperstar_chromatic(unsigned n, unsigned r);

/// Uniform-t form: q^n + sum_k C(n-1, k) p (t^C(k, r-1) - 1) (q - 1)^(n-k-1).
Poly hyperstar_chromatic_trivariate(unsigned n, unsigned r);

/// q^n + sum_{S subset E} p (t_S - 1) prod_{e not in S} (q^(|e|-s) - 1).
/// Edge ids match make_family(spec).
Poly sunflower_chromatic(const SunflowerSpec& spec);

/// q^n + sum_{k=1..ell} p C(ell, k) (t^k - 1) (q^(r-s) - 1)^(ell-k).
Poly sunflower_chromatic_uniform(unsigned r, unsigned ell, unsigned s);

}  // namespace hypoly
