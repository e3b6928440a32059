#include "doctest.h"
#include "support.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/invariants.hpp"

using namespace ttk;
using ttk::testing::P;

namespace {

DegreePrediction predict(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  const TtkParams k = validate(p, q, r, s);
  return predicted_degree(k, compute_modular_data(k));
}

}  // namespace

TEST_CASE("degree regimes") {
  const DegreePrediction a = predict(7, 4, 3, 2);
  CHECK(a.regime == DegreeRegime::PositiveS);
  CHECK(a.value == 30);
  const DegreePrediction b = predict(7, 4, 3, -1);
  CHECK(b.regime == DegreeRegime::SmallNegativeS);
  CHECK(b.value == 12);
  const DegreePrediction c = predict(7, 4, 3, -3);
  CHECK(c.regime == DegreeRegime::LargeNegativeS_mMax);
  CHECK(c.value == 4);
  const DegreePrediction z = predict(7, 4, 3, 0);
  CHECK(z.regime == DegreeRegime::NotCovered);
  CHECK_FALSE(z.value.has_value());
  CHECK(to_string(DegreeRegime::LargeNegativeS_mMid) == "LargeNegativeS_mMid");
}

TEST_CASE("property: predicted degree matches the polynomial for p <= 12, |s| <= 5") {
  std::map<DegreeRegime, int> seen;
  for (const TtkParams& k : ttk::testing::grid(12, 5)) {
    const DegreePrediction pred = predicted_degree(k, compute_modular_data(k));
    ++seen[pred.regime];
    if (pred.regime == DegreeRegime::NotCovered) {
      if (pred.value) FAIL_CHECK("NotCovered with a value at " << to_string(k));
      continue;
    }
    const Exponent actual = degree_span(alexander_closed_form(k));
    if (pred.value != actual)
      FAIL_CHECK(to_string(pred.regime) << " predicts " << *pred.value << ", actual " << actual << " at "
                                        << to_string(k));
  }
  for (auto regime : {DegreeRegime::PositiveS, DegreeRegime::SmallNegativeS, DegreeRegime::LargeNegativeS_m0,
                      DegreeRegime::LargeNegativeS_mMax, DegreeRegime::LargeNegativeS_mMid}) {
    CAPTURE(to_string(regime));
    CHECK(seen[regime] > 0);
  }
}

TEST_CASE("genus bounds") {
  const GenusBounds a = genus_bounds(validate(7, 4, 3, 2));
  CHECK(a.exact);
  CHECK(a.lower == 15);
  CHECK(a.upper == 15);

  const GenusBounds b = genus_bounds(validate(9, 8, 3, -1));
  CHECK_FALSE(b.exact);
  CHECK(b.lower == 25);
  CHECK(b.upper == 31);
  CHECK(degree_span(alexander_closed_form(validate(9, 8, 3, -1))) / 2 == 25);

  const GenusBounds c = genus_bounds(validate(7, 4, 3, -3));
  CHECK(c.lower == 2);
  CHECK_FALSE(c.upper.has_value());
  CHECK_FALSE(c.exact);
}

TEST_CASE("property: genus bounds are consistent") {
  for (const TtkParams& k : ttk::testing::grid(10, 4)) {
    const LaurentPoly delta = alexander_closed_form(k);
    const GenusBounds g = genus_bounds(k, delta);
    if (!g.lower) FAIL_CHECK("no lower bound at " << to_string(k));
    if (g.upper && *g.lower > *g.upper) FAIL_CHECK("lower > upper at " << to_string(k));
    if (g.exact && g.lower != g.upper) FAIL_CHECK("exact but open at " << to_string(k));
    if (k.s() > 0 && 2 * *g.lower != degree_span(delta)) FAIL_CHECK("2g != deg at " << to_string(k));
    if (k.s() < 0 && g.exact) FAIL_CHECK("claims exactness for s < 0 at " << to_string(k));
    if (*g.lower * 2 < degree_span(delta) - 1) FAIL_CHECK("below the Seifert bound at " << to_string(k));
  }
}

TEST_CASE("L-space coefficient test") {
  CHECK_FALSE(lspace_coefficient_test(alexander_closed_form(validate(9, 7, 3, 2))));
  CHECK(lspace_coefficient_test(P("1 - t + t^2 - t^3 + t^4")));
  CHECK(lspace_coefficient_test(torus_knot_polynomial(7, 5)));
  CHECK(lspace_alternating_test(torus_knot_polynomial(7, 5)));
  CHECK_FALSE(lspace_alternating_test(P("1 - 2*t + t^2")));
  for (const TtkParams& k : ttk::testing::grid(12, 0))
    if (!lspace_coefficient_test(alexander_closed_form(k))) FAIL_CHECK(to_string(k));
}

TEST_CASE("L-space family witness") {
  for (std::int64_t n = 0; n <= 3; ++n)
    for (std::int64_t s = 2; s <= 4; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      const LspaceWitness w = lspace_family_witness(n, s);
      CHECK(w.exponent == 31 + 15 * n + 2 * n * n);
      CHECK(abs(w.coefficient) == 2);
      CHECK_FALSE(lspace_coefficient_test(alexander_closed_form(validate(9 + 2 * n, 7 + 2 * n, 3, s))));
    }
  CHECK(lspace_family_witness(1, 2).exponent == 48);
  CHECK_THROWS_AS(lspace_family_witness(0, 1), std::invalid_argument);
}
