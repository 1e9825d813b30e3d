#include "su3/character.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "su3/error.hpp"

namespace su3 {

namespace {

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::weyl: return "weyl";
    case Method::descent: return "descent";
    case Method::schur: return "schur";
  }
  return "unknown";
}

Complex DescentTermSet::sum() const {
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) acc += static_cast<double>(t.det) * t.phase * t.rank1;
  return acc;
}

double chi_rank1(std::int64_t m, double u) {
  if (m == 0) return 0.0;
  const double sign = m < 0 ? -1.0 : 1.0;
  const std::int64_t n = m < 0 ? -m : m;
  const double s = std::sin(u);
  if (std::abs(s) >= 1e-8) return sign * std::sin(static_cast<double>(n) * u) / s;

  // U_{n-1}(cos u)
  const double x = std::cos(u);
  double prev = 1.0;
  double cur = 2.0 * x;
  if (n == 1) return sign * prev;
  for (std::int64_t k = 2; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return sign * cur;
}

namespace {

CharValue weyl_value(const RegularTriple& lambda, const TorusPoint& h, const std::array<double, 3>& sines) {
  const double min_wall = std::min({std::abs(sines[0]), std::abs(sines[1]), std::abs(sines[2])});
  if (!(min_wall > kSingularWall))
    throw Error(ErrorCode::singular_input,
                "chi_weyl needs a regular torus point (smallest wall norm " +
                    std::to_string(min_wall) + "); use chi_stable near walls");

  Complex numerator{0.0, 0.0};
  for (const auto& s : weyl_group())
    numerator += static_cast<double>(s.sign()) * unit_phase(pairing(act(s, lambda), h));

  // positive roots are alpha_1, alpha_2 and -alpha_0, so
  // prod_{Phi+} 2i sin(x) = (2i)^3 (-s0 s1 s2) = 8i s0 s1 s2
  const Complex denominator{0.0, 8.0 * sines[0] * sines[1] * sines[2]};

  CharValue out;
  out.value = numerator / denominator;
  out.method = Method::weyl;
  out.condition = 1.0 / min_wall;
  return out;
}

}  // namespace

CharValue chi_weyl(const RegularTriple& lambda, const TorusPoint& h) {
  return weyl_value(lambda, h, wall_sines(h));
}

CharValue chi_weyl(const DominantWeight& mu, const TorusPoint& h) {
  return chi_weyl(RegularTriple::from_weight(mu), h);
}

CharValue chi_schur(const DominantWeight& mu, const TorusPoint& h) {
  const std::int64_t d = dim(mu);
  if (d > kSchurDimLimit)
    throw Error(ErrorCode::resource_guard,
                "chi_schur refuses dim " + std::to_string(d) + " > " + std::to_string(kSchurDimLimit));

  // Gelfand-Tsetlin patterns with top row (a+b, b, 0): middle row (m1, m2)
  // with a+b >= m1 >= b >= m2 >= 0, bottom entry k with m1 >= k >= m2. The
  // pattern's weight is (k, m1 + m2 - k, n - m1 - m2) with n = a + 2b.
  const std::int64_t top = mu.a + mu.b;
  const std::int64_t mid = mu.b;
  const std::int64_t n = mu.a + 2 * mu.b;

  std::array<std::vector<Complex>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].resize(static_cast<std::size_t>(n + 1));
    for (std::int64_t e = 0; e <= n; ++e)
      powers[i][static_cast<std::size_t>(e)] = unit_phase(static_cast<double>(e) * h.theta()[i]);
  }

  CompensatedSum re;
  CompensatedSum im;
  for (std::int64_t m1 = top; m1 >= mid; --m1) {
    for (std::int64_t m2 = mid; m2 >= 0; --m2) {
      const std::int64_t row = m1 + m2;
      const Complex x3 = powers[2][static_cast<std::size_t>(n - row)];
      for (std::int64_t k = m1; k >= m2; --k) {
        const Complex z = powers[0][static_cast<std::size_t>(k)] *
                          powers[1][static_cast<std::size_t>(row - k)] * x3;
        re.add(z.real());
        im.add(z.imag());
      }
    }
  }

  CharValue out;
  out.value = {re.value(), im.value()};
  out.method = Method::schur;
  out.condition = kNoDivision;
  return out;
}

DescentTermSet descent_terms(const RegularTriple& lambda, const TorusPoint& h, int wall) {
  if (wall < 0 || wall > 2) throw Error(ErrorCode::invalid_argument, "wall index must be 0, 1 or 2");

  DescentTermSet set;
  set.wall = wall;

  Complex denominator{1.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    if (k == wall) continue;
    const double x = 0.5 * pairing(h, kExtendedSimpleRoots[k]);
    if (!(std::abs(std::sin(x)) > kSingularWall))
      throw Error(ErrorCode::singular_input, "descent along wall " + std::to_string(wall) +
                                                 " needs wall alpha_" + std::to_string(k) +
                                                 " to be regular");
    denominator *= Complex{0.0, 2.0 * std::sin(x)};
  }
  set.prefactor = -1.0 / denominator;

  const Root alpha_j = kExtendedSimpleRoots[wall];
  const double u = 0.5 * pairing(h, alpha_j);
  const auto reps = coset_representatives(wall);
  for (int r = 0; r < 3; ++r) {
    const auto nu = act(reps[r], lambda);
    auto& term = set.terms[r];
    term.element = reps[r];
    term.det = reps[r].sign();
    term.m = pairing(nu, alpha_j);
    term.rank1 = chi_rank1(term.m, u);
    term.phase = unit_phase(pairing(nu, h) - static_cast<double>(term.m) * u);
  }
  return set;
}

CharValue chi_descent(const RegularTriple& lambda, const TorusPoint& h, int wall) {
  const auto set = descent_terms(lambda, h, wall);
  const auto walls = wall_norms(h);
  double min_wall = 1.0;
  for (int k = 0; k < 3; ++k)
    if (k != wall) min_wall = std::min(min_wall, walls[k]);

  CharValue out;
  out.value = set.assembled();
  out.method = Method::descent;
  out.wall = wall;
  out.condition = 1.0 / min_wall;
  return out;
}

CharValue chi_descent(const DominantWeight& mu, const TorusPoint& h, int wall) {
  return chi_descent(RegularTriple::from_weight(mu), h, wall);
}

CharValue chi_stable(const DominantWeight& mu, const TorusPoint& h) { return chi_stable(mu, h, wall_sines(h)); }

CharValue chi_stable(const DominantWeight& mu, const TorusPoint& h, const std::array<double, 3>& sines) {
  const std::array<double, 3> walls{std::abs(sines[0]), std::abs(sines[1]), std::abs(sines[2])};
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int x, int y) { return walls[x] < walls[y]; });

  if (walls[order[0]] >= kWallEpsilon) return weyl_value(RegularTriple::from_weight(mu), h, sines);
  if (walls[order[1]] >= kWallEpsilon) return chi_descent(mu, h, order[0]);
  if (dim(mu) <= kSchurDimLimit) return chi_schur(mu, h);
  // the oracle is out of budget; descent stays exact while the two walls it
  // divides by are nonzero
  if (walls[order[1]] > kSingularWall) return chi_descent(mu, h, order[0]);
  return chi_schur(mu, h);
}

}  // namespace su3
