#include "doctest.h"
#include "support.hpp"
#include "ttk/braid.hpp"
#include "ttk/closed_form.hpp"

using namespace ttk;
using ttk::testing::P;
using ttk::testing::uniform;

TEST_CASE("braid words") {
  const BraidWord b = ttk_braid_word(validate(3, 2, 2, 1));
  CHECK(b.strand_count() == 3);
  CHECK(b.letters() == std::vector<BraidLetter>{{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {1, 1}});
  CHECK(to_string(ttk_braid_word(validate(3, 2, 2, -1))) == "s1 s2 s1 s2 s1^-1 s1^-1");
  CHECK(ttk_braid_word(validate(7, 4, 3, 2)).letters().size() == 36);
  CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("reduced burau matrices") {
  CHECK(reduced_burau_matrix(BraidWord(3, {})) == PolyMatrix::identity(2));
  CHECK(reduced_burau_matrix(BraidWord(3, {{1, 1}, {1, -1}})) == PolyMatrix::identity(2));
  const PolyMatrix m = reduced_burau_matrix(BraidWord(2, {{1, 1}, {1, 1}, {1, 1}}));
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == P("-t^3"));
}

TEST_CASE("alexander from braids") {
  CHECK(alexander_from_braid_word(BraidWord(2, {{1, 1}, {1, 1}, {1, 1}})) == P("1 - t + t^2"));
  CHECK(alexander_from_braid(validate(3, 2, 2, 1)) == P("1 - t + t^2 - t^3 + t^4"));
  CHECK(alexander_from_braid(validate(4, 3, 2, -5)) == alexander_closed_form(validate(6, 5, 4, -2)));
}

TEST_CASE("property: a word times its inverse is the identity") {
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(uniform(2, 6));
    std::vector<BraidLetter> letters;
    const auto len = uniform(0, 12);
    for (std::int64_t j = 0; j < len; ++j)
      letters.push_back({static_cast<int>(uniform(1, n - 1)), uniform(0, 1) ? 1 : -1});
    std::vector<BraidLetter> both = letters;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) both.push_back({it->generator, -it->sign});
    CHECK(reduced_burau_matrix(BraidWord(n, both)) == PolyMatrix::identity(static_cast<std::size_t>(n - 1)));

    const LaurentPoly det = determinant(reduced_burau_matrix(BraidWord(n, letters)));
    CHECK(det.is_monomial());
    CHECK(abs(det.leading_coefficient()) == 1);
  }
}
