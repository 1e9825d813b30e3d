#include "su3/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "su3/error.hpp"

namespace su3 {

namespace {

std::string format_triple(const Triple& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

int permutation_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TorusPoint TorusPoint::from_angles(const Triple& theta) {
  const double sum = theta[0] + theta[1] + theta[2];
  if (!std::isfinite(sum) || std::abs(sum) > 1e-9)
    throw Error(ErrorCode::invalid_argument,
                "torus angles must sum to zero, got " + format_triple(theta));
  const double mean = sum / 3.0;
  return TorusPoint({theta[0] - mean, theta[1] - mean, theta[2] - mean});
}

TorusPoint TorusPoint::from_alcove(double t1, double t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2))
    throw Error(ErrorCode::invalid_argument, "alcove coordinates must be finite");
  // theta_1 - theta_2 = t1 and theta_2 - theta_3 = t2 hold exactly when t1 == 0
  // or t2 == 0, so wall points stay exactly on their walls.
  return TorusPoint({(2.0 * t1 + t2) / 3.0, (t2 - t1) / 3.0, -(t1 + 2.0 * t2) / 3.0});
}

DominantWeight::DominantWeight(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
  if (a < 0 || b < 0)
    throw Error(ErrorCode::invalid_argument, "dominant weight labels must be nonnegative, got (" +
                                                 std::to_string(a) + "," + std::to_string(b) + ")");
}

RegularTriple RegularTriple::from_weight(const DominantWeight& mu) {
  return RegularTriple({mu.a + mu.b + 2, mu.b + 1, 0});
}

RegularTriple RegularTriple::from_ell(const IntTriple& ell) {
  return RegularTriple({ell[0] - ell[2], ell[1] - ell[2], 0});
}

bool RegularTriple::is_regular() const noexcept {
  return ell_[0] != ell_[1] && ell_[1] != ell_[2] && ell_[0] != ell_[2];
}

WeylElement WeylElement::from_permutation(const std::array<int, 3>& perm) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2})
    throw Error(ErrorCode::invalid_argument, "not a permutation of {0,1,2}");
  WeylElement s;
  s.perm_ = perm;
  s.sign_ = permutation_sign(perm);
  return s;
}

WeylElement WeylElement::reflection(const Root& alpha) {
  std::array<int, 3> p{0, 1, 2};
  std::swap(p[alpha.j], p[alpha.k]);
  return from_permutation(p);
}

WeylElement WeylElement::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[perm_[i]] = i;
  return from_permutation(inv);
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::array<int, 3> p{};
  for (int i = 0; i < 3; ++i) p[i] = perm_[other.perm_[i]];
  return from_permutation(p);
}

Triple WeylElement::apply(const Triple& v) const {
  Triple out{};
  for (int i = 0; i < 3; ++i) out[perm_[i]] = v[i];
  return out;
}

IntTriple WeylElement::apply(const IntTriple& v) const {
  IntTriple out{};
  for (int i = 0; i < 3; ++i) out[perm_[i]] = v[i];
  return out;
}

const std::array<WeylElement, 6>& weyl_group() {
  static const std::array<WeylElement, 6> group = [] {
    const auto s0 = WeylElement::reflection(kAlpha0);
    const auto s1 = WeylElement::reflection(kAlpha1);
    const auto s2 = WeylElement::reflection(kAlpha2);
    return std::array<WeylElement, 6>{WeylElement{}, s0, s1, s2, s1 * s0, s0 * s1};
  }();
  return group;
}

std::array<WeylElement, 3> coset_representatives(int wall) {
  if (wall < 0 || wall > 2) throw Error(ErrorCode::invalid_argument, "wall index must be 0, 1 or 2");
  const auto sj = WeylElement::reflection(kExtendedSimpleRoots[wall]);
  const auto snext = WeylElement::reflection(kExtendedSimpleRoots[(wall + 1) % 3]);
  return {WeylElement{}, snext, snext * sj};
}

double pairing(const TorusPoint& h, const Root& alpha) {
  return h.theta()[alpha.j] - h.theta()[alpha.k];
}

std::int64_t pairing(const RegularTriple& lambda, const Root& alpha) {
  return lambda.ell()[alpha.j] - lambda.ell()[alpha.k];
}

double pairing(const RegularTriple& lambda, const TorusPoint& h) {
  const auto& l = lambda.ell();
  const auto& t = h.theta();
  return static_cast<double>(l[0]) * t[0] + static_cast<double>(l[1]) * t[1] +
         static_cast<double>(l[2]) * t[2];
}

double wall_norm(const TorusPoint& h, const Root& alpha) {
  return std::abs(std::sin(0.5 * pairing(h, alpha)));
}

std::array<double, 3> wall_norms(const TorusPoint& h) {
  return {wall_norm(h, kAlpha0), wall_norm(h, kAlpha1), wall_norm(h, kAlpha2)};
}

std::array<double, 3> wall_sines(const TorusPoint& h) {
  std::array<double, 3> s{};
  for (int k = 0; k < 3; ++k) s[k] = std::sin(0.5 * pairing(h, kExtendedSimpleRoots[k]));
  return s;
}

TorusPoint act(const WeylElement& s, const TorusPoint& h) {
  return TorusPoint::from_angles(s.apply(h.theta()));
}

RegularTriple act(const WeylElement& s, const RegularTriple& lambda) {
  return RegularTriple::from_ell(s.apply(lambda.ell()));
}

std::int64_t dim(const DominantWeight& mu) {
  return (mu.a + 1) * (mu.b + 1) * (mu.a + mu.b + 2) / 2;
}

MuStats mu_stats(const DominantWeight& mu) {
  MuStats st;
  st.sorted = {mu.a + mu.b + 2, std::max(mu.a, mu.b) + 1, std::min(mu.a, mu.b) + 1};
  st.mu_bar = st.sorted[0];
  st.mu_under = st.sorted[2];
  return st;
}

FoldResult fold_to_alcove(const Triple& theta_raw) {
  FoldResult result;
  Triple theta = TorusPoint::from_angles(theta_raw).theta();

  const double norm = std::sqrt(theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]);
  const auto max_iterations = static_cast<long>(10.0 * (1.0 + norm / kTwoPi));

  for (long iter = 0;; ++iter) {
    if (iter > max_iterations)
      throw Error(ErrorCode::non_convergence,
                  "alcove folding did not converge for " + format_triple(theta_raw));

    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return theta[x] > theta[y]; });
    if (order != std::array<int, 3>{0, 1, 2}) {
      // theta[order[r]] moves to rank r, i.e. perm[order[r]] = r
      std::array<int, 3> perm{};
      for (int r = 0; r < 3; ++r) perm[order[r]] = r;
      const auto s = WeylElement::from_permutation(perm);
      theta = s.apply(theta);
      result.log.push_back({s, {0, 0, 0}});
    }
    if (theta[0] - theta[2] <= kTwoPi) break;
    theta[0] -= kTwoPi;
    theta[2] += kTwoPi;
    result.log.push_back({WeylElement{}, {-1, 0, 1}});
  }
  result.point = TorusPoint::from_angles(theta);
  return result;
}

}  // namespace su3
