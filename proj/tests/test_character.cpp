#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "su3/character.hpp"
#include "su3/error.hpp"

using namespace su3;

namespace {

constexpr double kPi = 3.14159265358979323846;

double dimd(const DominantWeight& mu) { return static_cast<double>(dim(mu)); }

TorusPoint random_point(std::mt19937_64& rng) {
  const auto t = oracle::random_alcove(rng);
  return TorusPoint::from_alcove(t[0], t[1]);
}

TorusPoint random_regular_point(std::mt19937_64& rng, double min_wall) {
  for (;;) {
    const auto h = random_point(rng);
    const auto w = wall_norms(h);
    if (*std::min_element(w.begin(), w.end()) >= min_wall) return h;
  }
}

}  // namespace

TEST_CASE("rank-one character values") {
  for (double u : {0.1, 1.0, 2.5, -4.0}) CHECK(chi_rank1(1, u) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chi_rank1(2, kPi / 3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(chi_rank1(0, 0.7) == 0.0);
  for (std::int64_t m : {1, 2, 7, 40}) {
    CHECK(chi_rank1(m, 0.0) == static_cast<double>(m));
    CHECK(chi_rank1(m, 1e-12) == doctest::Approx(static_cast<double>(m)).epsilon(1e-12));
    // removable singularity at u = pi: U_{m-1}(-1) = (-1)^{m-1} m
    const double at_pi = (m % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(m);
    CHECK(chi_rank1(m, kPi) == doctest::Approx(at_pi).epsilon(1e-12));
    CHECK(chi_rank1(m, kPi + 1e-7) == doctest::Approx(at_pi).epsilon(1e-7));
    CHECK(chi_rank1(-m, 0.9) == -chi_rank1(m, 0.9));
  }
}

TEST_CASE("rank-one bound holds on a dense grid") {
  double worst = 1.0;
  for (std::int64_t m = -200; m <= 200; ++m) {
    for (int i = 0; i < 10000; ++i) {
      const double u = -kPi + 2 * kPi * (i + 0.5) / 10000.0;
      const double s = std::abs(std::sin(u));
      const double bound = std::min(static_cast<double>(std::abs(m)), s > 0 ? 1.0 / s : INFINITY);
      worst = std::min(worst, bound - std::abs(chi_rank1(m, u)));
    }
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("Weyl formula examples") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto v = chi_weyl(DominantWeight{0, 0}, random_regular_point(rng, 1e-6)).value;
    CHECK(std::abs(v - Complex{1.0, 0.0}) <= 1e-10);
  }
  auto v = chi_weyl(DominantWeight{1, 0}, TorusPoint::from_angles({kPi / 2, -kPi / 2, 0.0}));
  CHECK(std::abs(v.value - Complex{1.0, 0.0}) <= 1e-12);
  CHECK(v.method == Method::weyl);
  CHECK(v.condition == doctest::Approx(1.0 / std::sin(kPi / 4)));

  v = chi_weyl(DominantWeight{1, 1}, TorusPoint::from_angles({2 * kPi / 3, 0.0, -2 * kPi / 3}));
  CHECK(std::abs(v.value - Complex{-1.0, 0.0}) <= 1e-12);

  CHECK_THROWS_AS(chi_weyl(DominantWeight{1, 0}, TorusPoint{}), Error);
  try {
    chi_weyl(DominantWeight{1, 0}, TorusPoint::from_alcove(0.0, 1.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_input);
  }
}

TEST_CASE("Gelfand-Tsetlin oracle") {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b) {
      const auto v = chi_schur({a, b}, TorusPoint{});
      CHECK(v.value == Complex{dimd({a, b}), 0.0});
      CHECK(v.method == Method::schur);
    }
  const auto v = chi_schur({1, 0}, TorusPoint::from_angles({kPi / 2, -kPi / 2, 0.0}));
  CHECK(std::abs(v.value - Complex{1.0, 0.0}) <= 1e-15);
  CHECK(std::abs(chi_schur({0, 0}, TorusPoint::from_alcove(1.0, 2.0)).value - Complex{1.0, 0.0}) == 0.0);

  CHECK_THROWS_AS(chi_schur({270, 270}, TorusPoint{}), Error);
}

TEST_CASE("Gelfand-Tsetlin sum matches Jacobi-Trudi") {
  std::mt19937_64 rng(5);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int i = 0; i < 5; ++i) {
        const auto h = random_point(rng);
        const auto ref = oracle::schur_jacobi_trudi(a, b, h.theta());
        CHECK(std::abs(chi_schur({a, b}, h).value - ref) <= 1e-9 * dimd({a, b}));
      }
}

TEST_CASE("descent formula") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto h = random_regular_point(rng, 1e-4);
    for (int j = 0; j < 3; ++j) {
      const auto v = chi_descent(DominantWeight{0, 0}, h, j);
      CHECK(std::abs(v.value - Complex{1.0, 0.0}) <= 1e-9);
      CHECK(v.method == Method::descent);
      CHECK(v.wall == j);
    }
  }

  // exactly on the alpha_0 wall: theta_3 = theta_1
  const DominantWeight mu{5, 2};
  const auto on_wall = TorusPoint::from_angles({0.4, -0.8, 0.4});
  CHECK(wall_norm(on_wall, kAlpha0) == 0.0);
  const auto ref = chi_schur(mu, on_wall).value;
  CHECK(std::abs(chi_descent(mu, on_wall, 0).value - ref) <= 1e-8 * dimd(mu));
  // and the Weyl formula approaches it along a path onto the wall
  const auto near = TorusPoint::from_angles({0.4 + 1e-5, -0.8, 0.4 - 1e-5});
  CHECK(std::abs(chi_weyl(mu, near).value - ref) <= 1e-3 * dimd(mu));

  CHECK_THROWS_AS(descent_terms(RegularTriple::from_weight(mu), on_wall, 1), Error);
  CHECK_THROWS_AS(descent_terms(RegularTriple::from_weight(mu), on_wall, 3), Error);
}

TEST_CASE("descent terms respect the rank-one bound") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const DominantWeight mu{static_cast<std::int64_t>(rng() % 30), static_cast<std::int64_t>(rng() % 30)};
    const auto h = random_regular_point(rng, 1e-6);
    const auto lam = RegularTriple::from_weight(mu);
    for (int j = 0; j < 3; ++j) {
      const auto set = descent_terms(lam, h, j);
      const double wn = wall_norm(h, kExtendedSimpleRoots[j]);
      for (const auto& t : set.terms) {
        const double bound = std::min(static_cast<double>(std::abs(t.m)), 1.0 / wn);
        CHECK(std::abs(t.rank1) <= bound + 1e-12);
        CHECK(t.det == t.element.sign());
      }
      CHECK(std::abs(set.assembled() - chi_weyl(lam, h).value) <= 1e-8 * dimd(mu));
    }
  }
}

TEST_CASE("stable dispatcher") {
  for (std::int64_t a = 0; a <= 10; ++a)
    for (std::int64_t b = 0; b <= 10; ++b)
      CHECK(chi_stable({a, b}, TorusPoint{}).value == Complex{dimd({a, b}), 0.0});

  const DominantWeight mu{5, 2};
  const auto regular = TorusPoint::from_angles({1.0, -0.3, -0.7});
  const auto v = chi_stable(mu, regular);
  CHECK(v.method == Method::weyl);
  CHECK(v.value == chi_weyl(mu, regular).value);

  const double s = 0.37;
  const auto near_wall = TorusPoint::from_angles({s, -2 * s - 1e-9, s + 1e-9});
  CHECK(std::abs(pairing(near_wall, kAlpha0) - 1e-9) <= 1e-15);
  const auto d = chi_stable(mu, near_wall);
  CHECK(d.method == Method::descent);
  CHECK(d.wall == 0);
  CHECK(std::abs(d.value - chi_schur(mu, near_wall).value) <= 1e-6 * dimd(mu));

  const auto corner = TorusPoint::from_alcove(1e-5, 2e-5);
  CHECK(chi_stable(mu, corner).method == Method::schur);

  // beyond the oracle budget the corner falls back to descent
  const DominantWeight big{600, 600};
  REQUIRE(dim(big) > kSchurDimLimit);
  const auto fb = chi_stable(big, corner);
  CHECK(fb.method == Method::descent);
  CHECK(std::abs(fb.value - chi_weyl(big, corner).value) <= 1e-8 * dimd(big));
  CHECK_THROWS_AS(chi_stable(big, TorusPoint{}), Error);
}

TEST_CASE("evaluator agreement at regular points") {
  std::mt19937_64 rng(17);
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (int i = 0; i < 10; ++i) {
        const auto h = random_regular_point(rng, 0.1);
        const auto w = chi_weyl(DominantWeight{a, b}, h).value;
        CHECK(std::abs(w - chi_schur({a, b}, h).value) <= 1e-8 * dimd({a, b}));
      }
}

TEST_CASE("character symmetries") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const DominantWeight mu{static_cast<std::int64_t>(rng() % 25), static_cast<std::int64_t>(rng() % 25)};
    const auto h = random_point(rng);
    const double tol = 1e-8 * dimd(mu);
    const auto ref = chi_stable(mu, h).value;
    CHECK(std::abs(ref) <= dimd(mu) * (1 + 1e-6));

    for (const auto& s : weyl_group()) CHECK(std::abs(chi_stable(mu, act(s, h)).value - ref) <= tol);

    const DominantWeight dual{mu.b, mu.a};
    CHECK(std::abs(chi_stable(dual, h).value - std::conj(ref)) <= 1e-10 * dimd(mu));

    const auto hr = random_regular_point(rng, 1e-3);
    const auto lam = RegularTriple::from_weight(mu);
    const auto base = chi_weyl(lam, hr).value;
    for (const auto& s : weyl_group())
      CHECK(std::abs(chi_weyl(act(s, lam), hr).value - static_cast<double>(s.sign()) * base) <= tol);
  }
}

TEST_CASE("folding preserves characters") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  const auto v = chi_schur({3, 2}, TorusPoint::from_angles({7 * kPi / 3, 0.0, -7 * kPi / 3})).value;
  CHECK(std::abs(v - chi_schur({3, 2}, fold_to_alcove({7 * kPi / 3, 0.0, -7 * kPi / 3}).point).value) <= 1e-10);

  for (int i = 0; i < 100; ++i) {
    const DominantWeight mu{static_cast<std::int64_t>(rng() % 20), static_cast<std::int64_t>(rng() % 20)};
    const double x = u(rng), y = u(rng);
    const Triple raw{x, y, -x - y};
    const auto before = chi_schur(mu, TorusPoint::from_angles(raw)).value;
    const auto after = chi_stable(mu, fold_to_alcove(raw).point).value;
    CHECK(std::abs(before - after) <= 1e-8 * dimd(mu));
  }
}
