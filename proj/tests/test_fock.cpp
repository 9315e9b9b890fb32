#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polya/errors.hpp"
#include "polya/fock.hpp"

using namespace polya;

namespace {

FockVector annihilate_times(FockVector v, int k) {
  for (int i = 0; i < k; ++i) v = annihilate(v);
  return v;
}

}  // namespace

TEST_CASE("polya_state examples") {
  const FockVector uniform = polya_state(PolyaParams(3, 0.5, 0.5));
  REQUIRE(uniform.dim() == 4);
  for (double a : uniform.amps()) CHECK(a == doctest::Approx(0.5).epsilon(1e-15));

  const FockVector vacuum = polya_state(PolyaParams(4, 1.0, 0.0));
  CHECK(max_abs_difference(vacuum, FockVector::basis(0, 5)) == 0.0);

  const FockVector number = polya_state(PolyaParams(2, 0.0, 1.0));
  CHECK(max_abs_difference(number, FockVector::basis(2, 3)) == 0.0);
}

TEST_CASE("FockVector rejects non-finite amplitudes and empty storage") {
  CHECK_THROWS_AS(FockVector(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(FockVector(std::vector<double>{1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(FockVector::basis(3, 3), DomainError);
}

TEST_CASE("ladder actions on number states") {
  const FockVector zero_out = annihilate(FockVector::basis(0, 1));
  CHECK(zero_out.dim() == 1);
  CHECK(zero_out[0] == 0.0);

  const FockVector lowered = annihilate(FockVector::basis(3, 4));
  REQUIRE(lowered.dim() == 3);
  CHECK(lowered[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-16));
  CHECK(lowered[0] == 0.0);
  CHECK(lowered[1] == 0.0);

  const FockVector raised = create(FockVector::basis(0, 1));
  CHECK(max_abs_difference(raised, FockVector::basis(1, 2)) == 0.0);

  const FockVector counted = number_apply(FockVector::basis(2, 3));
  CHECK(max_abs_difference(counted, scale(FockVector::basis(2, 3), 2.0)) == 0.0);
}

TEST_CASE("inner products and norms") {
  CHECK(inner_product(FockVector::basis(2, 5), FockVector::basis(3, 5)) == 0.0);
  const FockVector v(std::vector<double>{0.3, -1.2, 2.0});
  CHECK(inner_product(v, v) == doctest::Approx(norm(v) * norm(v)).epsilon(1e-15));
  // Zero padding of the shorter vector.
  CHECK(inner_product(v, FockVector(std::vector<double>{1.0})) == doctest::Approx(0.3));
  for (const auto& t : oracle::standard_grid()) {
    const FockVector psi = polya_state(PolyaParams(t.M, t.gamma, t.eta));
    CHECK(std::abs(inner_product(psi, psi) - 1.0) <= 1e-12);
    for (double a : psi.amps()) CHECK(a >= 0.0);
  }
}

TEST_CASE("property: adjointness and the canonical commutator on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + trial % 17;
    const FockVector v(oracle::random_vector(rng, dim));
    const FockVector w(oracle::random_vector(rng, dim + 1));
    const double lhs = inner_product(w, create(v));
    const double rhs = inner_product(annihilate(w), v);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(lhs)));

    // a a^dagger - a^dagger a = 1; create never truncates so this is exact
    // on the whole of v.
    const FockVector commutator = add(annihilate(create(v)), scale(number_apply(v), -1.0));
    CHECK(max_abs_difference(commutator, v) <= 1e-12 * (1.0 + norm(v)));
  }
}

TEST_CASE("apply_annihilation_power examples") {
  const PolyaParams p(3, 0.5, 0.5);
  const auto identity = apply_annihilation_power(p, 0);
  CHECK(identity.scale == 1.0);
  REQUIRE(identity.mapped.has_value());
  CHECK(*identity.mapped == p);

  const auto gone = apply_annihilation_power(p, 4);
  CHECK(gone.scale == 0.0);
  CHECK_FALSE(gone.mapped.has_value());
  CHECK(max_abs_difference(annihilate_times(polya_state(p), 4), FockVector::zero(1)) == 0.0);

  // k = 1: the squared scale is the norm of a|psi>, i.e. <N> = M eta = 1.5.
  const auto once = apply_annihilation_power(p, 1);
  CHECK(once.scale == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  REQUIRE(once.mapped.has_value());
  CHECK(once.mapped->M() == 2);
  CHECK(once.mapped->gamma() == doctest::Approx(0.5 / 1.5));
  CHECK(once.mapped->eta() == doctest::Approx(1.0 / 1.5));
  const FockVector direct = annihilate(polya_state(p));
  CHECK(max_abs_difference(direct, scale(polya_state(*once.mapped), once.scale)) <= 1e-12);
  CHECK(max_abs_difference(annihilate(polya_state(p)),
                           scale(polya_state(*once.mapped), once.scale)) <= 1e-12);

  CHECK_THROWS_AS(apply_annihilation_power(p, -1), DomainError);
}

TEST_CASE("k-indexed prefactor variant does not reproduce the norm of a|psi>") {
  // [prod_i (M-i)(k gamma + eta)/(k gamma + 1)] disagrees with <N> = M eta
  // whenever gamma > 0 and eta < 1; the i-indexed product is the identity.
  const PolyaParams p(3, 0.5, 0.5);
  const double k_indexed = 3.0 * (0.5 + 0.5) / (0.5 + 1.0);
  const double norm_sq = std::pow(norm(annihilate(polya_state(p))), 2);
  CHECK(norm_sq == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(std::abs(k_indexed - norm_sq) > 0.4);
}

TEST_CASE("property: a^k closed form equals k-fold annihilation on the grid") {
  double worst = 0.0;
  for (const auto& t : oracle::standard_grid()) {
    const PolyaParams p(t.M, t.gamma, t.eta);
    FockVector v = polya_state(p);
    for (int k = 1; k <= t.M + 1; ++k) {
      v = annihilate(v);
      const auto closed = apply_annihilation_power(p, k);
      if (k > t.M) {
        CHECK(closed.scale == 0.0);
        CHECK(norm(v) == 0.0);
        continue;
      }
      REQUIRE(closed.mapped.has_value());
      const auto& m = *closed.mapped;
      CHECK(m.gamma() >= 0.0);
      CHECK(m.eta() >= 0.0);
      CHECK(m.eta() <= 1.0);
      if (closed.scale == 0.0) {
        // eta = 0: the vacuum is annihilated already at k = 1.
        CHECK(norm(v) == 0.0);
        continue;
      }
      // a^k|psi> reaches ~sqrt(M!) in magnitude; compare at unit scale.
      const double err = max_abs_difference(scale(v, 1.0 / closed.scale), polya_state(m));
      worst = std::max(worst, err);
      CAPTURE(t.M);
      CAPTURE(t.gamma);
      CAPTURE(t.eta);
      CAPTURE(k);
      CHECK(err <= 1e-11);
      if (t.M <= 5) CHECK(max_abs_difference(v, scale(polya_state(m), closed.scale)) <= 1e-11);
    }
  }
  MESSAGE("worst unit-scale error " << worst);
}
