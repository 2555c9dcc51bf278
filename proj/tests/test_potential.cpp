#include <catch_amalgamated.hpp>

#include <random>

#include "dwell/potential.hpp"

using dwell::EvenPolynomialPotential;
using dwell::ExponentAnsatz;
using dwell::qes_residuals;
using dwell::reference_potential;
using dwell::solve_ansatz;
using Catch::Approx;

namespace {
const EvenPolynomialPotential model1({1.0, -2.0, -2.0, 1.0});
const EvenPolynomialPotential model2({0.0, -26.0, 6.0, 1.0});
const EvenPolynomialPotential model3({0.0, 1.5, -2.5, 0.25, -0.5, 0.25});
}  // namespace

TEST_CASE("potential evaluation", "[potential]") {
  CHECK(model1.evaluate(0.0) == 1.0);
  CHECK(model2.evaluate(0.0) == 0.0);
  CHECK(model3.evaluate(0.0) == 0.0);
  // direct sum of the coefficients at x = 1
  CHECK(model2.evaluate(1.0) == Approx(-19.0).margin(1e-14));

  SECTION("even function") {
    std::mt19937 rng(20240521);
    std::uniform_real_distribution<double> xd(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
      const double x = xd(rng);
      for (const auto& p : {model1, model2, model3})
        CHECK(p.evaluate(x) == p.evaluate(-x));
    }
  }
}

TEST_CASE("potential validation", "[potential]") {
  CHECK_THROWS_AS(EvenPolynomialPotential({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvenPolynomialPotential({1.0, -2.0, -2.0, -1.0}),
                  std::invalid_argument);  // leading coefficient <= 0
  CHECK_THROWS_AS(EvenPolynomialPotential({1.0, -2.0, -2.0}),
                  std::invalid_argument);  // odd coefficient count
  CHECK_THROWS_AS(EvenPolynomialPotential(2, {{3, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(EvenPolynomialPotential(2, {{8, 1.0}}), std::invalid_argument);

  const EvenPolynomialPotential by_degree(2, {{0, 1.0}, {2, -2.0}, {4, -2.0}, {6, 1.0}});
  CHECK(by_degree == model1);
  const EvenPolynomialPotential sparse(2, {{6, 1.0}});  // missing entries are zero
  CHECK(sparse.coefficient(0) == 0.0);
  CHECK(sparse.coefficient(1) == 0.0);
  CHECK(sparse.degree() == 6);
}

TEST_CASE("qes residuals", "[potential]") {
  const auto r1m1 = qes_residuals(model1);
  CHECK(std::abs(r1m1.r1) <= 1e-12);
  CHECK_FALSE(r1m1.r2.has_value());

  const auto r1m2 = qes_residuals(model2);
  CHECK(r1m2.r1 == Approx(-128.0).margin(1e-12));

  const auto r1m3 = qes_residuals(model3);
  REQUIRE(r1m3.r2.has_value());
  CHECK(std::abs(r1m3.r1) <= 1e-12);
  CHECK(std::abs(*r1m3.r2) <= 1e-12);

  CHECK_THROWS_AS(qes_residuals(EvenPolynomialPotential({0.0, 1.0})),
                  std::domain_error);  // K = 1 unsupported
}

TEST_CASE("reference potential expansion", "[potential]") {
  SECTION("K=2 exact ground state family") {
    const auto ref = reference_potential({2, {0.0, -0.5, 0.25}, 0.0}, 1.0);
    CHECK(ref.potential == model1);
    CHECK(ref.ground_energy == Approx(0.0).margin(1e-14));
  }
  SECTION("pure quartic exponent") {
    // F = x^4/4: F' = x^3, F'' = 3x^2, so V0 = A0 - 3x^2 + x^6, E0 = A0
    const auto ref = reference_potential({2, {0.0, 0.0, 0.25}, 0.0}, 0.7);
    CHECK(ref.potential.coefficient(0) == Approx(0.7));
    CHECK(ref.potential.coefficient(1) == Approx(-3.0));
    CHECK(ref.potential.coefficient(2) == Approx(0.0).margin(1e-15));
    CHECK(ref.potential.coefficient(3) == Approx(1.0));
    CHECK(ref.ground_energy == Approx(0.7));
  }
  SECTION("K=3 family") {
    const auto ref =
        reference_potential({3, {0.0, 0.0, -1.0 / 8.0, 1.0 / 12.0}, 0.0}, 0.0);
    CHECK(ref.potential == model3);
    CHECK(ref.ground_energy == Approx(0.0).margin(1e-14));
  }
  SECTION("F_K must be positive") {
    CHECK_THROWS_AS(reference_potential({2, {0.0, 0.5, -0.25}, 0.0}, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("ansatz solve on the worked models", "[potential]") {
  const auto a1 = solve_ansatz(model1);
  REQUIRE(a1.has_value());
  CHECK(a1->f[1] == Approx(-0.5).margin(1e-12));
  CHECK(a1->f[2] == Approx(0.25).margin(1e-12));
  CHECK(a1->e0 == Approx(0.0).margin(1e-12));

  CHECK_FALSE(solve_ansatz(model2).has_value());

  const auto a3 = solve_ansatz(model3);
  REQUIRE(a3.has_value());
  CHECK(a3->f[1] == Approx(0.0).margin(1e-12));
  CHECK(a3->f[2] == Approx(-0.125).margin(1e-12));
  CHECK(a3->f[3] == Approx(1.0 / 12.0).margin(1e-12));
  CHECK(a3->e0 == Approx(0.0).margin(1e-12));
}

TEST_CASE("ansatz round trip and shift properties", "[potential]") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> fd(-0.5, 0.5);
  std::uniform_real_distribution<double> fk(0.1, 0.5);
  std::uniform_real_distribution<double> a0d(-3.0, 3.0);

  for (int trial = 0; trial < 300; ++trial) {
    const int k = trial % 2 == 0 ? 2 : 3;
    ExponentAnsatz a;
    a.k = k;
    a.f.assign(static_cast<std::size_t>(k) + 1, 0.0);
    for (int j = 1; j < k; ++j) a.f[j] = fd(rng);
    a.f[k] = fk(rng);
    const double a0 = a0d(rng);

    const auto ref = reference_potential(a, a0);

    // residuals vanish on the constructed family
    const auto res = qes_residuals(ref.potential);
    CHECK(std::abs(res.r1) <= 1e-10);
    if (res.r2) CHECK(std::abs(*res.r2) <= 1e-10);

    // round trip recovers the exponent and the ground energy
    const auto back = solve_ansatz(ref.potential);
    REQUIRE(back.has_value());
    for (int j = 0; j <= k; ++j)
      CHECK(back->f[j] == Approx(a.f[j]).margin(1e-12));
    CHECK(back->e0 == Approx(ref.ground_energy).margin(1e-12));

    // shifting A0 shifts E0 by the same amount and leaves F alone
    const double shift = a0d(rng);
    const auto ref2 = reference_potential(a, a0 + shift);
    CHECK(ref2.ground_energy - ref.ground_energy == Approx(shift).margin(1e-12));
    for (std::size_t j = 1; j < ref.potential.term_count(); ++j)
      CHECK(ref2.potential.coefficient(j) == ref.potential.coefficient(j));
  }
}
