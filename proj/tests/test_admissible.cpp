#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "signseq/admissible.hpp"
#include "support/test_support.hpp"

using namespace signseq;
using testsupport::near_member;
using testsupport::signed_sums;

namespace {

std::vector<NormSpec> all_kinds() {
  return {NormSpec::euclidean(), NormSpec::l1(), NormSpec::linf(),
          NormSpec::polygon({Vec{1, 1}, Vec{-1, 1}, Vec{-1, -1}, Vec{1, -1}})};
}

AdmissibleSet run_inserts(std::span<const Vec> vectors, const NormSpec& spec,
                          double tol = kDefaultTol) {
  AdmissibleSet set;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    set = insert(set, vectors[i], i + 1, spec, tol).set;
  }
  return set;
}

}  // namespace

TEST_CASE("is_admissible basics") {
  const NormSpec e2 = NormSpec::euclidean();
  CHECK(is_admissible({}, e2));
  const std::vector<Vec> one{Vec{0.3, 0.1}};
  CHECK(is_admissible(one, e2));
  const std::vector<Vec> basis{Vec{1, 0}, Vec{0, 1}};
  CHECK(is_admissible(basis, e2));
  const std::vector<Vec> close{Vec{1, 0}, Vec{0.9, 0}};
  CHECK_FALSE(is_admissible(close, e2));

  const std::vector<Vec> too_many(17, Vec{0, 0});
  CHECK_THROWS_AS(is_admissible(too_many, e2), CapExceeded);
}

TEST_CASE("random 3-element unit-ball sets are never admissible") {
  for (const NormSpec& spec : all_kinds()) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
      const std::vector<Vec> triple{random_unit_ball_vector(spec, rng),
                                    random_unit_ball_vector(spec, rng),
                                    random_unit_ball_vector(spec, rng)};
      CHECK_FALSE(is_admissible(triple, spec));
    }
  }
}

TEST_CASE("pi_set enumerates the signed sums") {
  const AdmissibleSet empty;
  const auto pi0 = pi_set(empty);
  REQUIRE(pi0.size() == 1);
  CHECK(pi0[0].point.dim() == 0);
  CHECK(pi0[0].pattern.empty());

  AdmissibleSet one(std::vector<Atom>{Atom{Vec{1, 0}, {ProvenanceEntry{1, +1}}}});
  const auto pi1 = pi_set(one);
  REQUIRE(pi1.size() == 2);
  std::vector<Vec> points;
  for (const auto& e : pi1) points.push_back(e.point);
  CHECK(near_member(Vec{1, 0}, points, 0.0));
  CHECK(near_member(Vec{-1, 0}, points, 0.0));

  AdmissibleSet two(std::vector<Atom>{Atom{Vec{1, 0}, {ProvenanceEntry{1, +1}}},
                                      Atom{Vec{0, 1}, {ProvenanceEntry{2, +1}}}});
  const auto pi2 = pi_set(two);
  REQUIRE(pi2.size() == 4);
  points.clear();
  for (const auto& e : pi2) points.push_back(e.point);
  for (double sx : {1.0, -1.0}) {
    for (double sy : {1.0, -1.0}) CHECK(near_member(Vec{sx, sy}, points, 0.0));
  }
}

TEST_CASE("radius") {
  CHECK(radius(AdmissibleSet{}, NormSpec::euclidean()) == 0.0);
  AdmissibleSet two(std::vector<Atom>{Atom{Vec{1, 0}, {ProvenanceEntry{1, +1}}},
                                      Atom{Vec{0, 1}, {ProvenanceEntry{2, +1}}}});
  CHECK(radius(two, NormSpec::euclidean()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(radius(two, NormSpec::l1()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("insert extends when the set stays admissible") {
  const NormSpec e2 = NormSpec::euclidean();
  AdmissibleSet set = insert(AdmissibleSet{}, Vec{1, 0}, 1, e2).set;
  const InsertResult step = insert(set, Vec{0, 1}, 2, e2);
  CHECK(step.case_taken == InsertCase::extend);
  REQUIRE(step.set.size() == 2);
  CHECK(step.set.atoms()[0].value == Vec{1, 0});
  CHECK(step.set.atoms()[1].value == Vec{0, 1});
  CHECK(step.set.atoms()[1].provenance ==
        std::vector<ProvenanceEntry>{ProvenanceEntry{2, +1}});
}

TEST_CASE("insert collapses a short vector into an existing atom") {
  const NormSpec e2 = NormSpec::euclidean();
  AdmissibleSet set = insert(AdmissibleSet{}, Vec{1, 0}, 1, e2).set;
  const InsertResult step = insert(set, Vec{-0.5, 0}, 2, e2);
  CHECK(step.case_taken == InsertCase::collapse);
  CHECK(step.coefficients == SignPattern{+1});
  REQUIRE(step.set.size() == 1);
  CHECK(max_abs(step.set.atoms()[0].value - Vec{0.5, 0}) <= 1e-15);
  CHECK(step.set.atoms()[0].provenance ==
        std::vector<ProvenanceEntry>{ProvenanceEntry{1, +1}, ProvenanceEntry{2, +1}});
  CHECK_FALSE(step.warning.has_value());
}

// The selection rule, checked against an independent enumeration of all nine
// coefficient patterns: feasibility, the maximal non-zero count, and the
// lexicographic tie-break with -1 < 0 < +1.
TEST_CASE("insert picks the densest feasible combination, ties lexicographic") {
  const NormSpec e2 = NormSpec::euclidean();
  AdmissibleSet set = run_inserts(std::vector<Vec>{Vec{1, 0}, Vec{0, 1}}, e2);
  REQUIRE(set.size() == 2);
  const Vec v{0.1, 0.1};

  int best_count = -1;
  SignPattern best;
  for (int c0 : {-1, 0, +1}) {
    for (int c1 : {-1, 0, +1}) {
      const Vec combo =
          v + static_cast<double>(c0) * Vec{1, 0} + static_cast<double>(c1) * Vec{0, 1};
      if (norm(combo, e2) <= 1.0 + kDefaultTol) {
        const int count = (c0 != 0) + (c1 != 0);
        if (count > best_count) {
          best_count = count;
          best = {c0, c1};
        }
      }
    }
  }
  CHECK(best_count == 1);
  CHECK(best == SignPattern{-1, 0});

  const InsertResult step = insert(set, v, 3, e2);
  CHECK(step.case_taken == InsertCase::collapse);
  CHECK(step.coefficients == best);
  REQUIRE(step.set.size() == 2);
  // untouched atom first, collapsed atom appended
  CHECK(step.set.atoms()[0].value == Vec{0, 1});
  CHECK(max_abs(step.set.atoms()[1].value - Vec{-0.9, 0.1}) <= 1e-15);
  CHECK(step.set.atoms()[1].provenance ==
        std::vector<ProvenanceEntry>{ProvenanceEntry{1, -1}, ProvenanceEntry{3, +1}});
}

TEST_CASE("inserting into a full 2D set always collapses") {
  for (const NormSpec& spec : all_kinds()) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      AdmissibleSet set;
      std::size_t index = 1;
      while (set.size() < 2) {
        set = insert(set, random_unit_ball_vector(spec, rng), index++, spec).set;
      }
      const InsertResult step = insert(set, random_unit_ball_vector(spec, rng), index, spec);
      CHECK(step.case_taken == InsertCase::collapse);
      CHECK(step.set.size() <= 2);
    }
  }
}

TEST_CASE("insert rejects bad input") {
  const NormSpec e2 = NormSpec::euclidean();
  CHECK_THROWS_AS(insert(AdmissibleSet{}, Vec{1.5, 0}, 1, e2), InputTooLong);

  AdmissibleSet set = insert(AdmissibleSet{}, Vec{1, 0}, 1, e2).set;
  CHECK_THROWS_AS(insert(set, Vec{0, 1}, 1, e2), std::invalid_argument);
  CHECK_THROWS_AS(insert(set, Vec{0, 0, 1}, 2, e2), DimensionMismatch);
}

// Entered through a hand-built set that already violates admissibility, the
// collapse cannot find a feasible non-trivial combination and falls back to
// the minimum-norm one, reporting the excess over 1.
TEST_CASE("degenerate collapse emits a warning with the excess") {
  const NormSpec e2 = NormSpec::euclidean();
  AdmissibleSet broken(std::vector<Atom>{Atom{Vec{1, 0}, {ProvenanceEntry{1, +1}}},
                                         Atom{Vec{0.9, 0}, {ProvenanceEntry{2, +1}}}});
  const InsertResult step = insert(broken, Vec{0, 1}, 3, e2);
  CHECK(step.case_taken == InsertCase::collapse);
  REQUIRE(step.warning.has_value());
  CHECK(step.warning->index == 3);
  CHECK(step.warning->excess == doctest::Approx(std::sqrt(1.01) - 1.0).epsilon(1e-12));
  CHECK(step.coefficients == SignPattern{-1, +1});
  REQUIRE(step.set.size() == 1);
  CHECK(max_abs(step.set.atoms()[0].value - Vec{-0.1, 1.0}) <= 1e-15);
}

TEST_CASE("fuzzed insert runs keep every invariant") {
  std::mt19937_64 rng(8021);
  for (const NormSpec& spec : all_kinds()) {
    for (int run = 0; run < 50; ++run) {
      const std::size_t n = 1 + rng() % 12;
      std::vector<Vec> inputs;
      for (std::size_t i = 0; i < n; ++i) inputs.push_back(random_unit_ball_vector(spec, rng));

      AdmissibleSet set;
      for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Vec> old_values = set.values();
        const InsertResult step = insert(set, inputs[i], i + 1, spec);
        set = step.set;

        // no degeneracies on honest unit-ball data
        CHECK_FALSE(step.warning.has_value());
        // 2D cap (no 3-element admissible set exists)
        REQUIRE(set.size() <= 2);
        // the result is admissible at the same tolerance
        CHECK(is_admissible(set.values(), spec));
        // every atom stays in the (tolerance-inflated) unit ball
        for (const Atom& a : set.atoms()) CHECK(norm(a.value, spec) <= 1.0 + kDefaultTol);

        // provenances partition {1..i} exactly
        std::set<std::size_t> seen;
        for (const Atom& a : set.atoms()) {
          for (const ProvenanceEntry& e : a.provenance) {
            CHECK(seen.insert(e.index).second);
            CHECK(e.index <= i + 1);
          }
        }
        CHECK(seen.size() == i + 1);

        // atom values match their provenance reconstruction
        for (const Atom& a : set.atoms()) {
          Vec rebuilt = Vec::zero(2);
          for (const ProvenanceEntry& e : a.provenance) {
            if (e.sign > 0) {
              rebuilt += inputs[e.index - 1];
            } else {
              rebuilt -= inputs[e.index - 1];
            }
          }
          CHECK(max_abs(rebuilt - a.value) <= 1e-9);
        }

        // Pi-containment: Pi(new) inside (Pi(old) + v) union (Pi(old) - v)
        std::vector<Vec> reachable;
        for (const Vec& p : signed_sums(old_values, 2)) {
          reachable.push_back(p + inputs[i]);
          reachable.push_back(p - inputs[i]);
        }
        for (const Vec& q : signed_sums(set.values())) {
          CHECK(near_member(q, reachable, 1e-9));
        }
      }
    }
  }
}

TEST_CASE("euclidean two-atom sets obey the parallelogram bound") {
  const NormSpec e2 = NormSpec::euclidean();
  std::mt19937_64 rng(4242);
  int two_atom_sets = 0;
  for (int run = 0; run < 200; ++run) {
    const std::size_t n = 2 + rng() % 30;
    AdmissibleSet set;
    for (std::size_t i = 0; i < n; ++i) {
      set = insert(set, random_unit_ball_vector(e2, rng), i + 1, e2).set;
      if (set.size() == 2) {
        ++two_atom_sets;
        const Vec& a = set.atoms()[0].value;
        const Vec& b = set.atoms()[1].value;
        const double lhs = norm(a + b, e2);
        // parallelogram identity
        const double rhs2 = 2.0 * dot(a, a) + 2.0 * dot(b, b) - dot(a - b, a - b);
        CHECK(std::fabs(lhs * lhs - rhs2) <= 1e-9);
        // admissibility forces ||a - b|| > 1, hence the sqrt(3) radius bound
        CHECK(lhs <= std::sqrt(3.0) * (1.0 + kDefaultTol) + 1e-9);
        CHECK(radius(set, e2) <= std::sqrt(3.0) * (1.0 + kDefaultTol) + 1e-9);
      }
    }
  }
  CHECK(two_atom_sets > 100);  // the scenario actually occurs
}
