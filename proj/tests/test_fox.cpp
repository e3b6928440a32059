#include "doctest.h"
#include "support.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/fox.hpp"

using namespace ttk;
using ttk::testing::P;
using ttk::testing::random_word;
using ttk::testing::uniform;

namespace {

constexpr GeneratorId x = kGenX, y = kGenY, z = kGenZ, w = kGenW;

GroupRingElem elem(const FreeWord& word, long c = 1) { return GroupRingElem(word, c); }

LaurentPoly T(Exponent e) { return LaurentPoly::t_pow(e); }

KnotGroup group_of(const TtkParams& k) { return presentation_for_ttk(k, compute_modular_data(k)); }

}  // namespace

TEST_CASE("free words reduce") {
  FreeWord a{{x, 2}, {y, 1}};
  a *= FreeWord{{y, -1}, {x, -2}, {z, 3}};
  CHECK(a == FreeWord{{z, 3}});
  CHECK((a * a.inverse()).is_identity());
  CHECK(FreeWord::power(y, 0).is_identity());
  const std::vector<std::string> names{"x", "y", "z", "w"};
  CHECK(to_string(FreeWord{{x, 2}, {y, -1}, {z, 1}}, names) == "x^2 y^-1 z");
}

TEST_CASE("fox derivative examples") {
  CHECK(fox_derivative(FreeWord{{x, 1}}, x) == GroupRingElem::one());
  CHECK(fox_derivative(FreeWord{{y, 1}}, x).is_zero());
  CHECK(fox_derivative(FreeWord{{x, -1}}, x) == elem(FreeWord{{x, -1}}, -1));
  const GroupRingElem expected =
      elem(FreeWord{{x, 2}}) + elem(FreeWord{{x, 2}, {y, 1}}) + elem(FreeWord{{x, 2}, {y, 2}});
  CHECK(fox_derivative(FreeWord{{x, 2}, {y, 3}}, y) == expected);
}

TEST_CASE("property: fox derivative of a power is the geometric sum") {
  for (std::int64_t n = -10; n <= 10; ++n) {
    GroupRingElem expected;
    if (n > 0)
      for (std::int64_t k = 0; k < n; ++k) expected += elem(FreeWord::power(y, k));
    for (std::int64_t k = 1; k <= -n; ++k) expected -= elem(FreeWord::power(y, -k));
    CAPTURE(n);
    CHECK(fox_derivative(FreeWord::power(y, n), y) == expected);
    // and under t -> t^3 it is geometric_quotient(t^3, n)
    const AbelianizationMap ab{{0, 3}};
    CHECK(ab(fox_derivative(FreeWord::power(y, n), y)) == geometric_quotient(P("t^3"), n));
  }
}

TEST_CASE("property: fox product rule") {
  for (int i = 0; i < 300; ++i) {
    const FreeWord u = random_word(3), v = random_word(3);
    const auto g = static_cast<GeneratorId>(uniform(0, 2));
    CHECK(fox_derivative(u * v, g) == fox_derivative(u, g) + fox_derivative(v, g).left_multiplied(u));
  }
}

TEST_CASE("property: fox derivative is linear on the group ring") {
  for (int i = 0; i < 100; ++i) {
    const GroupRingElem a = elem(random_word(3), 2) - elem(random_word(3));
    const GroupRingElem b = elem(random_word(3), -5);
    CHECK(fox_derivative(a + b, y) == fox_derivative(a, y) + fox_derivative(b, y));
  }
}

TEST_CASE("property: abelianization is a ring homomorphism") {
  const AbelianizationMap ab{{7, 3, -4, -6}};
  for (int i = 0; i < 300; ++i) {
    const FreeWord u = random_word(4), v = random_word(4);
    CHECK(ab(u * v) == ab(u) * ab(v));
    const GroupRingElem a = elem(u, 3) + elem(v, -2);
    const GroupRingElem b = elem(random_word(4)) - elem(random_word(4), 4);
    CHECK(ab(a * b) == ab(a) * ab(b));
    CHECK(ab(a + b) == ab(a) + ab(b));
  }
}

TEST_CASE("presentation (3,2,2,1)") {
  const KnotGroup g = group_of(validate(3, 2, 2, 1));
  REQUIRE(g.presentation.relators.size() == 3);
  CHECK(g.presentation.is_well_formed());
  CHECK(g.presentation.relators[0] == FreeWord{{y, 1}, {z, 1}});
  CHECK(g.presentation.relators[1] == FreeWord{{y, 1}, {w, 1}});
  CHECK(g.presentation.relators[2] ==
        FreeWord{{x, 1}, {y, 1}, {x, 1}, {y, 1}, {w, 1}, {z, 1}, {w, 1}, {z, 2}});
  CHECK(g.abelianization.exponents == std::vector<Exponent>{3, 2, -2, -2});
}

TEST_CASE("presentation (7,4,3,2)") {
  const KnotGroup g = group_of(validate(7, 4, 3, 2));
  CHECK(g.presentation.relators[1] == FreeWord{{y, 2}, {w, 1}});
  CHECK(g.presentation.relators[2] == FreeWord{{x, 1}, {y, 2}, {x, 1}, {y, 2}, {x, 2}, {y, 2},
                                               {w, 1}, {z, 3}, {w, 1}, {z, 2}, {w, 1}, {z, 2}});
  CHECK(presentation_text(g.presentation).find("r2 = y^2 w") != std::string::npos);
}

TEST_CASE("r2 = y^s w for every s") {
  for (std::int64_t s = -4; s <= 4; ++s) {
    const KnotGroup g = group_of(validate(5, 2, 3, s));
    FreeWord expected = FreeWord::power(y, s);
    expected.append({w, 1});
    CHECK(g.presentation.relators[1] == expected);
  }
}

TEST_CASE("every relator maps to 1 under the abelianization") {
  for (const TtkParams& k : ttk::testing::grid(9, 2)) {
    const KnotGroup g = group_of(k);
    for (const FreeWord& rel : g.presentation.relators)
      if (g.abelianization.degree(rel) != 0) FAIL_CHECK(to_string(k));
  }
}

TEST_CASE("alexander matrix entries match the displayed images") {
  for (const TtkParams& k : ttk::testing::grid(10, 3)) {
    const ModularData d = compute_modular_data(k);
    const KnotGroup g = presentation_for_ttk(k, d);
    const PolyMatrix M = alexander_matrix(g.presentation, g.abelianization);
    const std::int64_t p = k.p(), q = k.q(), r = k.r(), rs = k.rs();
    const auto m = static_cast<std::size_t>(d.return_index);
    const std::int64_t kbp = d.return_cumulative, Qp = d.return_mark;
    const LaurentPoly u = one_minus_t_pow(rs);
    const LaurentPoly yq = geometric_quotient(T(r), k.s());  // (1 - t^rs) / (1 - t^r)

    LaurentPoly sum_k_m, sum_Q_m, sum_k_r1, sum_Q_r1, sum_k_r, sum_Q_shift;
    for (std::size_t i = 1; i <= m; ++i) {
      const auto j = static_cast<std::int64_t>(i);
      sum_k_m += T(d.cumulative(i) * p + (j - 1) * rs);
      sum_Q_m += T(d.marks[i] * q + (j - 1) * rs);
    }
    for (std::size_t i = 1; i <= static_cast<std::size_t>(r); ++i) {
      const auto j = static_cast<std::int64_t>(i);
      sum_k_r += T(d.cumulative(i) * p + (j - 1) * rs);
      sum_Q_shift += T(d.mark(i, p) * q + j * rs);
      if (j < r) {
        sum_k_r1 += T(d.cumulative(i) * p + (j - 1) * rs);
        sum_Q_r1 += T(d.marks[i] * q + (j - 1) * rs);
      }
    }
    const auto mm = static_cast<std::int64_t>(m);
    const LaurentPoly one = P("1");
    const LaurentPoly X = build_X(k, d), Xt = build_Xtilde(k, d);
    const LaurentPoly Y = build_Y(k, d), Yt = build_Ytilde(k, d);
    const LaurentPoly tail1 = T(kbp * p + mm * rs);
    const LaurentPoly top = T(p * q + r * rs);

    const std::string where = to_string(k);
    auto expect = [&](bool ok, const char* entry) {
      if (!ok) FAIL_CHECK(entry << " at " << where);
    };
    // r1
    expect(one_minus_t_pow(p) * M(0, 0) == one - u * sum_k_m - tail1, "r1/x");
    expect(one_minus_t_pow(p) * M(0, 0) == Xt, "r1/x via Xtilde");
    expect(M(0, 1) == yq * sum_k_m + tail1, "r1/y");
    expect(one_minus_t_pow(r) * (M(0, 1) - tail1) == one - Xt - tail1, "r1/y via Xtilde");
    expect(one_minus_t_pow(q) * M(0, 2) ==
               T(kbp * p + (1 - Qp) * q + r) * (one - u * sum_Q_m - T(Qp * q + mm * rs)),
           "r1/z");
    expect(one_minus_t_pow(q) * M(0, 2) == T(q) * Yt, "r1/z via Ytilde");
    expect(M(0, 3) == T(rs) * sum_Q_m, "r1/w");
    expect(u * M(0, 3) == T(rs) * (one - Yt - T(Qp * q + mm * rs)), "r1/w via Ytilde");
    // r2
    expect(M(1, 0).is_zero() && M(1, 2).is_zero(), "r2/x and r2/z");
    expect(M(1, 1) == yq, "r2/y");
    expect(M(1, 3) == T(rs), "r2/w");
    // r3
    expect(one_minus_t_pow(p) * M(2, 0) == one - u * sum_k_r1 - T(p * q + (r - 1) * rs), "r3/x");
    expect(one_minus_t_pow(p) * M(2, 0) == X, "r3/x via X");
    expect(M(2, 1) == yq * sum_k_r, "r3/y");
    expect(one_minus_t_pow(r) * M(2, 1) == one - X - top, "r3/y via X");
    expect(one_minus_t_pow(q) * M(2, 2) == T(q) * (one - u * sum_Q_r1 - T(p * q + (r - 1) * rs)),
           "r3/z");
    expect(one_minus_t_pow(q) * M(2, 2) == T(q) * Y, "r3/z via Y");
    expect(M(2, 3) == sum_Q_shift, "r3/w");
    expect(u * M(2, 3) == T(rs) * (one - Y - top), "r3/w via Y");
  }
}

TEST_CASE("minor relations") {
  for (const auto& k : {validate(3, 2, 2, 1), validate(7, 4, 3, 2), validate(9, 7, 3, -1)}) {
    const KnotGroup g = group_of(k);
    const AlexanderMinors mins =
        minors_and_relations(alexander_matrix(g.presentation, g.abelianization), g.abelianization);
    CHECK(mins.relations_ok);
  }
  for (const TtkParams& k : ttk::testing::grid(10, 3)) {
    const KnotGroup g = group_of(k);
    const AlexanderMinors mins =
        minors_and_relations(alexander_matrix(g.presentation, g.abelianization), g.abelianization);
    if (!mins.relations_ok) FAIL_CHECK(to_string(k));
  }
}

TEST_CASE("alexander_from_presentation examples") {
  CHECK(alexander_from_presentation(validate(3, 2, 2, 1)) == P("1 - t + t^2 - t^3 + t^4"));
  CHECK(alexander_from_presentation(validate(7, 4, 3, 2)) == alexander_closed_form(validate(7, 4, 3, 2)));
  CHECK(alexander_from_presentation(validate(5, 3, 4, 0)) == torus_knot_polynomial(5, 3));
  CHECK_THROWS_AS(alexander_from_minors(AlexanderMinors{}), DegenerateMatrix);
}
