#pragma once

// Irreducible characters of SU(3) on the maximal torus.
//
// Three independent evaluators are provided:
//   * chi_weyl     alternating Weyl sum over the Weyl denominator,
//   * chi_descent  wall-indexed sum of rank-one characters (descent formula),
//   * chi_schur    one unit phase per Gelfand-Tsetlin pattern.
// chi_stable picks whichever is well conditioned at the given point.
//
// The lambda-level entry points evaluate the shifted character
// chi~(lambda, H) = chi(lambda - rho, H) for any regular triple lambda, which
// is what the antisymmetry identities are stated for.

#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <string_view>

#include "su3/cartan.hpp"

namespace su3 {

using Complex = std::complex<double>;

enum class Method { weyl, descent, schur };

std::string_view method_name(Method m);

/// Dispatcher threshold on wall norms.
inline constexpr double kWallEpsilon = 1e-3;
/// Walls at or below this are treated as exactly singular by the divisions.
inline constexpr double kSingularWall = 1e-14;
/// chi_schur refuses representations larger than this.
inline constexpr std::int64_t kSchurDimLimit = 10'000'000;
/// Condition value reported when no division took place.
inline constexpr double kNoDivision = std::numeric_limits<double>::infinity();

struct CharValue {
  Complex value;
  Method method = Method::weyl;
  /// Wall used by the descent path, -1 otherwise.
  int wall = -1;
  /// 1 / (smallest wall norm divided by), kNoDivision for the oracle.
  double condition = kNoDivision;
};

struct DescentTerm {
  WeylElement element;
  int det = 1;
  /// exp(i (<s lambda, H> - m u))
  Complex phase;
  /// chi_rank1(m, u)
  double rank1 = 0.0;
  /// <s lambda, alpha_j>
  std::int64_t m = 0;
};

struct DescentTermSet {
  int wall = 0;
  /// -1 / prod_{k != j} 2i sin(<alpha_k, H>/2); the sign converts the extended
  /// simple roots back to the positive system {alpha_1, alpha_2, -alpha_0}.
  Complex prefactor;
  std::array<DescentTerm, 3> terms;

  Complex sum() const;
  Complex assembled() const { return prefactor * sum(); }
};

/// sin(m u) / sin(u), continuous across u in pi*Z.
double chi_rank1(std::int64_t m, double u);

/// Throws Error(singular_input) when some wall norm is <= kSingularWall.
CharValue chi_weyl(const RegularTriple& lambda, const TorusPoint& h);
CharValue chi_weyl(const DominantWeight& mu, const TorusPoint& h);

/// Throws Error(resource_guard) when dim(mu) > kSchurDimLimit.
CharValue chi_schur(const DominantWeight& mu, const TorusPoint& h);

/// Throws Error(singular_input) naming the wall when one of the two prefactor
/// walls is <= kSingularWall.
DescentTermSet descent_terms(const RegularTriple& lambda, const TorusPoint& h, int wall);
CharValue chi_descent(const RegularTriple& lambda, const TorusPoint& h, int wall);
CharValue chi_descent(const DominantWeight& mu, const TorusPoint& h, int wall);

/// Weyl formula when every wall norm is >= kWallEpsilon, descent along the
/// smallest wall when only one is below it, Gelfand-Tsetlin otherwise. When
/// the oracle exceeds kSchurDimLimit, descent is used as long as its two
/// divisor walls are nonzero; only then does the resource guard surface.
CharValue chi_stable(const DominantWeight& mu, const TorusPoint& h);
/// Same, reusing sines = wall_sines(h).
CharValue chi_stable(const DominantWeight& mu, const TorusPoint& h, const std::array<double, 3>& sines);

}  // namespace su3
