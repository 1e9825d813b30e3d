#pragma once

// Root data of A2 = su(3) in angle-triple coordinates.
//
// A torus point H is a triple (theta_1, theta_2, theta_3) with zero sum, and
// the root alpha_jk pairs with it as <alpha_jk, H> = theta_j - theta_k. Every
// root then has |alpha|^2 = 2 and every weight-root pairing is an integer.
// Indices are 0-based throughout: alpha_1 = (0,1), alpha_2 = (1,2) and
// alpha_0 = (2,0), so that alpha_0 + alpha_1 + alpha_2 = 0.

#include <array>
#include <cstdint>
#include <vector>

namespace su3 {

using Triple = std::array<double, 3>;
using IntTriple = std::array<std::int64_t, 3>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

class TorusPoint {
 public:
  TorusPoint() = default;

  /// Accepts any triple whose sum is within 1e-9 of zero and removes the
  /// residual mean, so the stored triple sums to zero to rounding.
  static TorusPoint from_angles(const Triple& theta);

  /// Alcove coordinates t1 = theta_1 - theta_2, t2 = theta_2 - theta_3.
  static TorusPoint from_alcove(double t1, double t2);

  const Triple& theta() const noexcept { return theta_; }
  double t1() const noexcept { return theta_[0] - theta_[1]; }
  double t2() const noexcept { return theta_[1] - theta_[2]; }

 private:
  explicit TorusPoint(const Triple& theta) : theta_(theta) {}
  Triple theta_{0.0, 0.0, 0.0};
};

struct Root {
  int j = 0;
  int k = 1;

  Root negated() const noexcept { return {k, j}; }
  friend bool operator==(const Root&, const Root&) = default;
};

inline constexpr Root kAlpha0{2, 0};
inline constexpr Root kAlpha1{0, 1};
inline constexpr Root kAlpha2{1, 2};

/// Extended simple roots indexed by wall: [0] = alpha_0, [1] = alpha_1,
/// [2] = alpha_2.
inline constexpr std::array<Root, 3> kExtendedSimpleRoots{kAlpha0, kAlpha1, kAlpha2};

/// Phi+ = {alpha_1, alpha_2, -alpha_0}.
inline constexpr std::array<Root, 3> kPositiveRoots{kAlpha1, kAlpha2, Root{0, 2}};

struct DominantWeight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  DominantWeight() = default;
  DominantWeight(std::int64_t a_, std::int64_t b_);

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

/// lambda = mu + rho modulo uniform shift, stored with ell_3 = 0.
class RegularTriple {
 public:
  static RegularTriple from_weight(const DominantWeight& mu);
  /// Canonicalizes an arbitrary integer triple (subtracts ell_3).
  static RegularTriple from_ell(const IntTriple& ell);

  const IntTriple& ell() const noexcept { return ell_; }
  bool is_regular() const noexcept;

  friend bool operator==(const RegularTriple&, const RegularTriple&) = default;

 private:
  explicit RegularTriple(const IntTriple& ell) : ell_(ell) {}
  IntTriple ell_{0, 0, 0};
};

/// A permutation of the three coordinates. Acting on a vector v it places
/// v[i] at position perm[i].
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement from_permutation(const std::array<int, 3>& perm);
  static WeylElement reflection(const Root& alpha);

  const std::array<int, 3>& perm() const noexcept { return perm_; }
  int sign() const noexcept { return sign_; }

  WeylElement inverse() const;
  /// (this * other)(v) = this(other(v)).
  WeylElement operator*(const WeylElement& other) const;

  Triple apply(const Triple& v) const;
  IntTriple apply(const IntTriple& v) const;
  Root apply(const Root& alpha) const { return {perm_[alpha.j], perm_[alpha.k]}; }

  friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.perm_ == y.perm_; }

 private:
  std::array<int, 3> perm_{0, 1, 2};
  int sign_ = 1;
};

/// {e, s0, s1, s2, s1 s0, s0 s1}.
const std::array<WeylElement, 6>& weyl_group();

/// Coset representatives W_j = {e, s_{j+1}, s_{j+1} s_j} with W = {e, s_j} W_j.
std::array<WeylElement, 3> coset_representatives(int wall);

double pairing(const TorusPoint& h, const Root& alpha);
std::int64_t pairing(const RegularTriple& lambda, const Root& alpha);
/// <lambda, H>; gauge invariant because theta sums to zero.
double pairing(const RegularTriple& lambda, const TorusPoint& h);

/// |sin(<alpha, H>/2)|
double wall_norm(const TorusPoint& h, const Root& alpha);
/// Wall norms for alpha_0, alpha_1, alpha_2 in that order.
std::array<double, 3> wall_norms(const TorusPoint& h);
/// Signed sin(<alpha, H>/2) in the same order; wall_norms are their absolute values.
std::array<double, 3> wall_sines(const TorusPoint& h);

TorusPoint act(const WeylElement& s, const TorusPoint& h);
RegularTriple act(const WeylElement& s, const RegularTriple& lambda);

std::int64_t dim(const DominantWeight& mu);

struct MuStats {
  std::int64_t mu_bar = 0;
  std::int64_t mu_under = 0;
  /// {a+1, b+1, a+b+2} in descending order.
  IntTriple sorted{0, 0, 0};
};

MuStats mu_stats(const DominantWeight& mu);

/// theta <- s(theta) + 2 pi * translation
struct FoldStep {
  WeylElement permutation;
  IntTriple translation{0, 0, 0};
};

struct FoldResult {
  TorusPoint point;
  std::vector<FoldStep> log;
};

/// Reduces a zero-sum angle triple into the alcove
/// A = {t1 >= 0, t2 >= 0, t1 + t2 <= 2 pi} using coordinate permutations and
/// translations by 2 pi times zero-sum integer triples.
FoldResult fold_to_alcove(const Triple& theta_raw);

}  // namespace su3
