#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "su3/cartan.hpp"
#include "su3/error.hpp"

using namespace su3;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("root pairings with a torus point") {
  const auto h = TorusPoint::from_angles({kPi / 3, 0.0, -kPi / 3});
  CHECK(pairing(h, kAlpha1) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(pairing(h, kAlpha0) == doctest::Approx(-2 * kPi / 3).epsilon(1e-15));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), y = u(rng);
    const auto p = TorusPoint::from_angles({x, y, -x - y});
    double s = 0.0;
    for (const auto& a : kExtendedSimpleRoots) s += pairing(p, a);
    CHECK(std::abs(s) <= 1e-12);
    CHECK(std::abs(p.theta()[0] + p.theta()[1] + p.theta()[2]) <= 1e-12);
  }
}

TEST_CASE("torus point construction") {
  CHECK_THROWS_AS(TorusPoint::from_angles({1.0, 0.0, 0.0}), Error);
  const auto p = TorusPoint::from_alcove(0.7, 1.9);
  CHECK(p.t1() == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(p.t2() == doctest::Approx(1.9).epsilon(1e-15));
  CHECK(TorusPoint::from_alcove(0.0, 2.5).t1() == 0.0);
  CHECK(TorusPoint::from_alcove(1.5, 0.0).t2() == 0.0);
}

TEST_CASE("wall norm") {
  const auto h = TorusPoint::from_angles({kPi / 3, 0.0, -kPi / 3});
  CHECK(wall_norm(h, kAlpha1) == doctest::Approx(0.5).epsilon(1e-15));
  for (const auto& a : kExtendedSimpleRoots) CHECK(wall_norm(TorusPoint{}, a) == 0.0);
  const auto periodic = TorusPoint::from_angles({kPi, -kPi, 0.0});
  CHECK(wall_norm(periodic, kAlpha1) <= 1e-15);
  CHECK(wall_norm(h, kAlpha2) == wall_norm(h, kAlpha2.negated()));
}

TEST_CASE("wall norm is Weyl equivariant") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), y = u(rng);
    const auto h = TorusPoint::from_angles({x, y, -x - y});
    for (const auto& s : weyl_group())
      for (const auto& a : kExtendedSimpleRoots)
        CHECK(std::abs(wall_norm(act(s, h), s.apply(a)) - wall_norm(h, a)) <= 1e-12);
  }
}

TEST_CASE("weight-root pairings") {
  const auto rho = RegularTriple::from_weight({0, 0});
  CHECK(rho.ell() == IntTriple{2, 1, 0});
  CHECK(pairing(rho, kAlpha1) == 1);
  CHECK(pairing(RegularTriple::from_weight({3, 1}), kAlpha0) == -6);
  CHECK(pairing(RegularTriple::from_weight({1, 1}), kAlpha2) == 2);

  for (std::int64_t a = 0; a < 6; ++a)
    for (std::int64_t b = 0; b < 6; ++b) {
      const auto l = RegularTriple::from_weight({a, b});
      CHECK(l.is_regular());
      CHECK(pairing(l, kAlpha1) == a + 1);
      CHECK(pairing(l, kAlpha2) == b + 1);
      CHECK(pairing(l, kAlpha0.negated()) == a + b + 2);
    }
  CHECK_THROWS_AS(DominantWeight(-1, 0), Error);
}

TEST_CASE("weyl group structure") {
  const auto& w = weyl_group();
  std::set<std::array<int, 3>> perms;
  for (const auto& s : w) perms.insert(s.perm());
  CHECK(perms.size() == 6);

  for (const auto& s : w)
    for (const auto& t : w) CHECK((s * t).sign() == s.sign() * t.sign());

  const Triple v{1.0, 2.0, -3.0};
  CHECK(WeylElement{}.apply(v) == v);
  const auto swap12 = WeylElement::reflection(kAlpha1);
  CHECK(swap12.apply(v) == Triple{2.0, 1.0, -3.0});
  CHECK(swap12.sign() == -1);

  const auto cycle = WeylElement::from_permutation({1, 2, 0});
  CHECK(cycle.sign() == 1);
  CHECK(!(cycle * cycle == WeylElement{}));
  CHECK(cycle * cycle * cycle == WeylElement{});

  const auto lam = RegularTriple::from_weight({2, 5});
  CHECK(act(swap12, lam).ell()[2] == 0);
}

TEST_CASE("cosets reproduce the Weyl group") {
  for (int j = 0; j < 3; ++j) {
    const auto sj = WeylElement::reflection(kExtendedSimpleRoots[j]);
    std::set<std::array<int, 3>> products;
    for (const auto& rep : coset_representatives(j)) {
      products.insert(rep.perm());
      products.insert((sj * rep).perm());
    }
    CHECK(products.size() == 6);
  }
}

TEST_CASE("Weyl pairing invariance") {
  const auto lam = RegularTriple::from_weight({4, 1});
  const auto h = TorusPoint::from_angles({0.3, 1.1, -1.4});
  for (const auto& s : weyl_group())
    CHECK(pairing(act(s, lam), act(s, h)) == doctest::Approx(pairing(lam, h)).epsilon(1e-14));
}

TEST_CASE("dimension formula") {
  CHECK(dim({0, 0}) == 1);
  CHECK(dim({1, 0}) == 3);
  CHECK(dim({1, 1}) == 8);
  for (std::int64_t a = 0; a <= 20; ++a)
    for (std::int64_t b = 0; b <= 20; ++b) CHECK(dim({a, b}) == oracle::gt_pattern_count(a, b));
}

TEST_CASE("mu statistics") {
  auto s = mu_stats({0, 0});
  CHECK(s.mu_bar == 2);
  CHECK(s.mu_under == 1);
  CHECK(s.sorted == IntTriple{2, 1, 1});
  s = mu_stats({3, 1});
  CHECK(s.mu_bar == 6);
  CHECK(s.mu_under == 2);
  CHECK(s.sorted == IntTriple{6, 4, 2});
  s = mu_stats({7, 7});
  CHECK(s.sorted == IntTriple{16, 8, 8});

  for (std::int64_t a = 0; a < 40; ++a)
    for (std::int64_t b = 0; b < 40; ++b) {
      const auto st = mu_stats({a, b});
      CHECK(st.sorted[0] >= st.sorted[1]);
      CHECK(st.sorted[1] >= st.sorted[2]);
      CHECK(st.sorted[2] >= 1);
      CHECK(2 * st.sorted[1] >= st.sorted[0]);
    }
}

TEST_CASE("fold to alcove") {
  auto r = fold_to_alcove({kPi / 3, 0.0, -kPi / 3});
  CHECK(r.point.theta()[0] == doctest::Approx(kPi / 3));
  CHECK(r.log.empty());

  r = fold_to_alcove({-kPi / 3, 0.0, kPi / 3});
  CHECK(r.point.theta()[0] == doctest::Approx(kPi / 3));
  CHECK(r.point.theta()[2] == doctest::Approx(-kPi / 3));

  r = fold_to_alcove({7 * kPi / 3, 0.0, -7 * kPi / 3});
  CHECK(r.point.theta()[0] == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(r.point.theta()[1] == doctest::Approx(0.0));

  CHECK_THROWS_AS(fold_to_alcove({1.0, 1.0, 1.0}), Error);
}

TEST_CASE("fold output lies in the alcove and replays from its log") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-60.0, 60.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), y = u(rng);
    const Triple raw{x, y, -x - y};
    const auto r = fold_to_alcove(raw);
    const double t1 = r.point.t1(), t2 = r.point.t2();
    CHECK(t1 >= -1e-9);
    CHECK(t2 >= -1e-9);
    CHECK(t1 + t2 <= kTwoPi + 1e-9);

    Triple replay = TorusPoint::from_angles(raw).theta();
    for (const auto& step : r.log) {
      replay = step.permutation.apply(replay);
      CHECK(step.translation[0] + step.translation[1] + step.translation[2] == 0);
      for (int k = 0; k < 3; ++k) replay[k] += kTwoPi * static_cast<double>(step.translation[k]);
    }
    for (int k = 0; k < 3; ++k) CHECK(std::abs(replay[k] - r.point.theta()[k]) <= 1e-9);
  }
}
