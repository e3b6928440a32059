#include "ttk/fox.hpp"

#include <sstream>

namespace ttk {

namespace {

// x^k1 y^s x^k2 y^s ... x^k_last y^s
void append_x_y_blocks(FreeWord& w, const ModularData& data, std::size_t last, std::int64_t s) {
  for (std::size_t i = 1; i <= last; ++i) {
    w.append({kGenX, data.count(i)});
    w.append({kGenY, s});
  }
}

// w z^d_first w z^d_(first-1) ... w z^d1
void append_w_z_blocks(FreeWord& w, const ModularData& data, std::size_t first) {
  for (std::size_t i = first; i >= 1; --i) {
    w.append({kGenW, 1});
    w.append({kGenZ, data.gap(i)});
  }
}

}  // namespace

KnotGroup presentation_for_ttk(const TtkParams& params, const ModularData& data) {
  const std::int64_t s = params.s();
  const auto r = static_cast<std::size_t>(params.r());
  const auto m = static_cast<std::size_t>(data.return_index);

  FreeWord r1;
  append_x_y_blocks(r1, data, m, s);
  r1.append({kGenX, data.return_count});
  r1.append({kGenY, 1});
  r1.append({kGenZ, data.return_gap});
  append_w_z_blocks(r1, data, m);

  FreeWord r2{{kGenY, s}, {kGenW, 1}};

  FreeWord r3;
  append_x_y_blocks(r3, data, r, s);
  append_w_z_blocks(r3, data, r);

  KnotGroup g;
  g.presentation.generators = {"x", "y", "z", "w"};
  g.presentation.relators = {std::move(r1), std::move(r2), std::move(r3)};
  g.abelianization.exponents = {params.p(), params.r(), -params.q(), -params.rs()};
  return g;
}

GroupRingElem fox_derivative(const FreeWord& word, GeneratorId g) {
  GroupRingElem out;
  FreeWord prefix;
  for (const auto& syl : word.syllables()) {
    if (syl.generator == g) {
      // prefix * (1 - g^n) / (1 - g)
      if (syl.exponent > 0) {
        for (std::int64_t i = 0; i < syl.exponent; ++i)
          out.add_term(prefix * FreeWord::power(g, i), 1);
      } else {
        for (std::int64_t i = syl.exponent; i <= -1; ++i)
          out.add_term(prefix * FreeWord::power(g, i), -1);
      }
    }
    prefix.append(syl);
  }
  return out;
}

GroupRingElem fox_derivative(const GroupRingElem& elem, GeneratorId g) {
  GroupRingElem out;
  for (const auto& [w, c] : elem.terms()) {
    const GroupRingElem d = fox_derivative(w, g);
    for (const auto& [dw, dc] : d.terms()) out.add_term(dw, c * dc);
  }
  return out;
}

PolyMatrix alexander_matrix(const Presentation& pres, const AbelianizationMap& ab) {
  const std::size_t rows = pres.relators.size();
  const std::size_t cols = pres.generators.size();
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::vector<LaurentPoly::Term>> acc(cols);
    Exponent prefix_degree = 0;
    for (const auto& syl : pres.relators[i].syllables()) {
      const Exponent base = ab.exponents.at(syl.generator);
      auto& terms = acc[syl.generator];
      if (syl.exponent > 0) {
        for (std::int64_t k = 0; k < syl.exponent; ++k) terms.push_back({prefix_degree + k * base, 1});
      } else {
        for (std::int64_t k = syl.exponent; k <= -1; ++k) terms.push_back({prefix_degree + k * base, -1});
      }
      prefix_degree += base * syl.exponent;
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = LaurentPoly::from_terms(std::move(acc[j]));
  }
  return m;
}

AlexanderMinors minors_and_relations(const PolyMatrix& a, const AbelianizationMap& ab) {
  if (a.rows() != 3 || a.cols() != 4 || ab.exponents.size() != 4)
    throw std::invalid_argument("minors_and_relations expects a 3x4 twisted torus knot matrix");

  const auto& r1x = a(0, 0); const auto& r1y = a(0, 1); const auto& r1z = a(0, 2); const auto& r1w = a(0, 3);
  const auto& r2y = a(1, 1); const auto& r2w = a(1, 3);
  const auto& r3x = a(2, 0); const auto& r3y = a(2, 1); const auto& r3z = a(2, 2); const auto& r3w = a(2, 3);

  const LaurentPoly xz = r1x * r3z - r1z * r3x;

  AlexanderMinors out;
  out.minors[0] = r1z * (r2y * r3w - r2w * r3y) + r3z * (r1y * r2w - r1w * r2y);
  out.minors[1] = r2w * xz;
  out.minors[2] = r2y * (r1x * r3w - r1w * r3x) - r2w * (r1x * r3y - r1y * r3x);
  out.minors[3] = r2y * xz;

  const Exponent p = ab.exponents[kGenX];
  const Exponent r = ab.exponents[kGenY];
  const Exponent q = -ab.exponents[kGenZ];
  const Exponent rs = -ab.exponents[kGenW];
  const LaurentPoly& m1 = out.minors[0];
  const LaurentPoly& m2 = out.minors[1];
  const LaurentPoly& m3 = out.minors[2];
  const LaurentPoly& m4 = out.minors[3];
  const LaurentPoly one_r = one_minus_t_pow(r);

  const bool first = one_r * m1 == -(one_minus_t_pow(p) * m2);
  const bool third = (one_r * m3).shifted(q) == -(one_minus_t_pow(q) * m2);
  const bool fourth = (one_r * m4).shifted(rs) == one_minus_t_pow(rs) * m2;
  out.relations_ok = first && third && fourth;
  return out;
}

LaurentPoly alexander_from_minors(const AlexanderMinors& minors) {
  LaurentPoly g;
  for (const auto& m : minors.minors) {
    if (m.is_zero()) continue;
    g = g.is_zero() ? normalize(primitive_part(m)) : gcd(g, m);
    if (g == LaurentPoly::constant(1)) break;
  }
  if (g.is_zero()) throw DegenerateMatrix("all maximal minors of the Alexander matrix vanish");
  return g;
}

LaurentPoly alexander_from_presentation(const TtkParams& params) {
  const ModularData data = compute_modular_data(params);
  const KnotGroup group = presentation_for_ttk(params, data);
  const PolyMatrix matrix = alexander_matrix(group.presentation, group.abelianization);
  return alexander_from_minors(minors_and_relations(matrix, group.abelianization));
}

std::string presentation_text(const Presentation& pres) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    os << 'r' << (i + 1) << " = " << to_string(pres.relators[i], pres.generators) << '\n';
  }
  return os.str();
}

}  // namespace ttk
