#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ttk/free_group.hpp"
#include "ttk/laurent.hpp"
#include "ttk/params.hpp"

namespace ttk::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Up to max_terms terms with exponents in [lo, hi] and coefficients in [-9, 9].
inline LaurentPoly random_poly(int max_terms = 6, Exponent lo = -5, Exponent hi = 8) {
  std::vector<LaurentPoly::Term> terms;
  const auto n = uniform(0, max_terms);
  for (std::int64_t i = 0; i < n; ++i) terms.push_back({uniform(lo, hi), Integer(uniform(-9, 9))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(int max_terms = 6) {
  for (;;) {
    LaurentPoly p = random_poly(max_terms);
    if (!p.is_zero()) return p;
  }
}

inline FreeWord random_word(GeneratorId generators, int max_syllables = 6) {
  FreeWord w;
  const auto n = uniform(0, max_syllables);
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t e = 0;
    while (e == 0) e = uniform(-4, 4);
    w.append({static_cast<GeneratorId>(uniform(0, generators - 1)), e});
  }
  return w;
}

/// Every valid (p, q, r, s) with p <= pmax and |s| <= smax.
inline std::vector<TtkParams> grid(std::int64_t pmax, std::int64_t smax) {
  std::vector<TtkParams> out;
  for (std::int64_t p = 3; p <= pmax; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      for (std::int64_t r = 2; r < p; ++r)
        for (std::int64_t s = -smax; s <= smax; ++s) {
          try {
            out.push_back(validate(p, q, r, s));
          } catch (const InvalidParams&) {
          }
        }
  return out;
}

inline LaurentPoly P(std::string_view text) { return parse_laurent(text); }

}  // namespace ttk::testing
