#include "su3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "su3/character.hpp"
#include "su3/error.hpp"
#include "su3/parallel.hpp"

namespace su3 {

namespace {

double unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// A point whose wall_norm for wall j is d, with the other two walls at least
// sin(pi/10).
TorusPoint near_wall_point(int j, double d, double s) {
  const double gap = 2.0 * std::asin(d);
  const double along = (0.1 + 0.8 * s) * (kTwoPi - gap);
  switch (j) {
    case 0: return TorusPoint::from_alcove(along, kTwoPi - gap - along);
    case 1: return TorusPoint::from_alcove(gap, along);
    default: return TorusPoint::from_alcove(along, gap);
  }
}

}  // namespace

TorusPoint alcove_point(std::uint64_t x, std::uint64_t y) {
  double u = unit(x), v = unit(y);
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return TorusPoint::from_alcove(kTwoPi * u, kTwoPi * v);
}

OracleDiffReport oracle_diff(const OracleDiffConfig& config) {
  if (config.max_label < 0 || config.points == 0)
    throw Error(ErrorCode::invalid_argument, "oracle diff needs max_label >= 0 and points > 0");
  if (!(config.regular_wall > 0.0 && config.regular_wall < 0.8))
    throw Error(ErrorCode::invalid_argument, "regular_wall must lie in (0, 0.8)");
  if (!(config.near_wall > 0.0 && config.near_wall < 0.1))
    throw Error(ErrorCode::invalid_argument, "near_wall must lie in (0, 0.1)");

  std::mt19937_64 rng(config.seed);
  std::vector<TorusPoint> regular;
  while (regular.size() < config.points) {
    const auto x = rng(), y = rng();
    const auto h = alcove_point(x, y);
    const auto w = wall_norms(h);
    if (*std::min_element(w.begin(), w.end()) >= config.regular_wall) regular.push_back(h);
  }
  std::array<std::vector<TorusPoint>, 3> near;
  for (int j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < config.points; ++i) {
      const double d = config.near_wall * unit(rng());
      near[j].push_back(near_wall_point(j, d, unit(rng())));
    }

  std::vector<DominantWeight> weights;
  for (std::int64_t a = 0; a <= config.max_label; ++a)
    for (std::int64_t b = 0; b <= config.max_label; ++b) weights.emplace_back(a, b);

  OracleDiffReport out;
  out.rows.resize(weights.size());
  parallel_for(weights.size(), [&](std::size_t w) {
    const auto& mu = weights[w];
    const double d = static_cast<double>(dim(mu));
    OracleDiffRow row;
    row.mu = mu;
    for (const auto& h : regular)
      row.weyl_vs_schur = std::max(row.weyl_vs_schur, std::abs(chi_weyl(mu, h).value - chi_schur(mu, h).value) / d);
    for (int j = 0; j < 3; ++j)
      for (const auto& h : near[j])
        row.descent_vs_schur[j] =
            std::max(row.descent_vs_schur[j], std::abs(chi_descent(mu, h, j).value - chi_schur(mu, h).value) / d);
    out.rows[w] = row;
  });
  for (const auto& row : out.rows) {
    out.max_weyl_vs_schur = std::max(out.max_weyl_vs_schur, row.weyl_vs_schur);
    for (double x : row.descent_vs_schur) out.max_descent_vs_schur = std::max(out.max_descent_vs_schur, x);
  }
  return out;
}

}  // namespace su3
