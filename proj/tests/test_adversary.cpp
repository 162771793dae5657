#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "signseq/adversary.hpp"
#include "signseq/norms.hpp"

using namespace signseq;

namespace {

double euclid(const Vec& v) { return std::sqrt(dot(v, v)); }

}  // namespace

TEST_CASE("choose_unit_vector solves the law-of-cosines triangle") {
  const Vec x{0, -1};

  // theta = 60 degrees
  const Vec v = choose_unit_vector(x, std::numbers::sqrt3);
  CHECK(max_abs(v - Vec{std::sqrt(3.0) / 2.0, -0.5}) <= 1e-12);
  CHECK(dot(x + v, x + v) == doctest::Approx(3.0).epsilon(1e-12));

  // right angle
  const Vec w = choose_unit_vector(x, std::numbers::sqrt2);
  CHECK(max_abs(w - Vec{1, 0}) <= 1e-12);

  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> radius(1.0, 1.4);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> target_gap(0.0, 0.3);
  for (int i = 0; i < 500; ++i) {
    const Vec y = rotate(Vec{radius(rng), 0.0}, angle(rng));
    const double target = std::numbers::sqrt3 - target_gap(rng);
    const Vec u = choose_unit_vector(y, target);
    CHECK(std::fabs(euclid(u) - 1.0) <= 1e-12);
    CHECK(std::fabs(euclid(y + u) - target) <= 1e-9);
  }
}

TEST_CASE("choose_unit_vector rejects unsolvable geometry") {
  CHECK_THROWS_AS(choose_unit_vector(Vec{0.4, 0}, std::numbers::sqrt3), std::invalid_argument);
  CHECK_THROWS_AS(choose_unit_vector(Vec{0, -1}, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(choose_unit_vector(Vec{0, -1, 0}, 1.0), DimensionMismatch);
}

TEST_CASE("large delta falls back to the two perpendicular vectors") {
  const AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{0.4});
  REQUIRE(seq.vectors.size() == 2);
  CHECK(seq.vectors[0] == Vec{1, 0});
  CHECK(seq.vectors[1] == Vec{0, 1});
  CHECK(verify_adversary(seq));
}

TEST_CASE("small deltas build short sequences that beat every pattern") {
  for (double delta : {0.05, 0.1, 0.15, 0.2, 0.3}) {
    CAPTURE(delta);
    const AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{delta});
    const std::size_t n = seq.vectors.size();

    CHECK(static_cast<double>(n) < 3.0 + (std::numbers::sqrt2 - 1.0) / delta);
    for (const Vec& v : seq.vectors) CHECK(euclid(v) <= 1.0 + 1e-12);
    CHECK(std::fabs(euclid(seq.vectors.front()) - 1.0) <= 1e-12);
    CHECK(std::fabs(euclid(seq.vectors.back()) - 1.0) <= 1e-12);

    // trajectory bookkeeping
    REQUIRE(seq.trajectory.size() == n);
    Vec running = Vec::zero(2);
    for (std::size_t k = 0; k < n; ++k) {
      running -= seq.vectors[k];
      CHECK(max_abs(running - seq.trajectory[k]) <= 1e-12);
    }

    // growth phase: every step gains more than delta and keeps the reachable
    // partial sum at sqrt(3) - delta
    if (n > 2) {
      for (std::size_t k = 0; k + 2 < n; ++k) {
        const Vec& xk = seq.trajectory[k];
        const Vec& vnext = seq.vectors[k + 1];
        CHECK(euclid(seq.trajectory[k + 1]) > euclid(xk) + delta - 1e-9);
        CHECK(euclid(xk + vnext) >= std::numbers::sqrt3 - delta - 1e-9);
        // the parallelogram estimate behind the growth step
        const double lhs = dot(xk - vnext, xk - vnext);
        const double rhs = dot(xk, xk) + 2.0 * std::numbers::sqrt2 * delta + delta * delta;
        CHECK(lhs > rhs - 1e-9);
      }
    }

    CHECK(verify_adversary(seq));
  }
}

TEST_CASE("delta 0.1 stays within seven vectors") {
  const AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{0.1});
  CHECK(seq.vectors.size() <= 7);
}

TEST_CASE("delta 0.05 stays within eleven vectors and survives the oracle") {
  const AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{0.05});
  CHECK(seq.vectors.size() <= 11);
  CHECK(all_patterns_exceed(seq.vectors, NormSpec::euclidean(),
                            std::numbers::sqrt3 - 0.05 - 1e-9));
}

TEST_CASE("invalid deltas are rejected") {
  CHECK_THROWS_AS(build_lower_bound_sequence(AdversaryConfig{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_lower_bound_sequence(AdversaryConfig{-0.3}), std::invalid_argument);
  CHECK_THROWS_AS(build_lower_bound_sequence(AdversaryConfig{std::nan("")}),
                  std::invalid_argument);
}

TEST_CASE("verify_adversary rejects sequences that do not force the bound") {
  AdversarySequence fake;
  fake.delta = 0.1;
  fake.vectors = {Vec{0.1, 0}};
  fake.trajectory = {Vec{-0.1, 0}};
  CHECK_FALSE(verify_adversary(fake));

  // tampering with a built sequence is caught by the invariant re-checks
  AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{0.1});
  seq.trajectory[0] = Vec{5, 5};
  CHECK_FALSE(verify_adversary(seq));
}
