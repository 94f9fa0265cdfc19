#include <doctest.h>

#include "properties.hpp"

using namespace sureloss::testing;

namespace {

void expect(const PropertyResult& r) {
  INFO(r.instances << " instances, first failure: " << r.first_failure);
  CHECK(r.ok());
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("duality: greedy dual, Choquet value and brute force agree") {
  expect(check_duality(11, 1500));
  expect(check_duality(12, 300, 10));
}

TEST_CASE("upper natural extension is a coherent upper prevision") { expect(check_choquet_axioms(21, 800)); }

TEST_CASE("decomposition reconstructs the gamble and matches event bounds") {
  expect(check_decomposition(71, 500));
}

TEST_CASE("expectation sign matches implied probability") { expect(check_sign_equivalence(31, 800)); }

TEST_CASE("coupon strategies are certified and realize their gain") { expect(check_coupon_strategies(41, 60)); }

TEST_CASE("stakes for arbitrary gambles are certified") { expect(check_general_strategies(51, 600)); }

TEST_CASE("witnesses and market verdicts") { expect(check_witnesses(61, 300)); }
