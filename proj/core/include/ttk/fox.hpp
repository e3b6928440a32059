#pragma once

#include <array>
#include <stdexcept>

#include "ttk/free_group.hpp"
#include "ttk/laurent.hpp"
#include "ttk/params.hpp"
#include "ttk/poly_matrix.hpp"

namespace ttk {

/// Raised when every maximal minor of an Alexander matrix vanishes.
class DegenerateMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator ids of the twisted torus knot group <x, y, z, w | r1, r2, r3>.
inline constexpr GeneratorId kGenX = 0;
inline constexpr GeneratorId kGenY = 1;
inline constexpr GeneratorId kGenZ = 2;
inline constexpr GeneratorId kGenW = 3;

struct KnotGroup {
  Presentation presentation;
  AbelianizationMap abelianization;
};

/*
 * Knot group of T(p,q;r,s) from its genus-two Heegaard splitting:
 *
 *   r1 = x^k1 y^s ... x^km y^s x^k' y . z^d' w z^dm w ... w z^d1
 *   r2 = y^s w
 *   r3 = x^k1 y^s ... x^kr y^s . w z^dr w z^d(r-1) ... w z^d1
 *
 * with abelianization x, y, z, w -> t^p, t^r, t^-q, t^-rs.
 */
KnotGroup presentation_for_ttk(const TtkParams& params, const ModularData& data);

/// Fox derivative of a word with respect to generator g, as an element of Z[F].
GroupRingElem fox_derivative(const FreeWord& word, GeneratorId g);

/// Extension of d/dg to Z[F] by linearity.
GroupRingElem fox_derivative(const GroupRingElem& elem, GeneratorId g);

/// Entry (i, j) is the abelianized Fox derivative of relator i by generator j.
/// The abelianization is applied syllable by syllable, so no group-ring
/// element is ever materialised.
PolyMatrix alexander_matrix(const Presentation& pres, const AbelianizationMap& ab);

/*
 * The four 3x3 minors of the 3x4 Alexander matrix, m_j dropping column j
 * (x, y, z, w in that order), each written with the sign convention under
 * which
 *
 *   (1 - t^r) m1 = -(1 - t^p) m2
 *   t^q (1 - t^r) m3 = -(1 - t^q) m2
 *   t^rs (1 - t^r) m4 = (1 - t^rs) m2
 *
 * hold; relations_ok records whether all three do.
 */
struct AlexanderMinors {
  std::array<LaurentPoly, 4> minors;
  bool relations_ok = false;
};

AlexanderMinors minors_and_relations(const PolyMatrix& matrix, const AbelianizationMap& ab);

/// gcd of the nonzero minors, canonical. Throws DegenerateMatrix.
LaurentPoly alexander_from_minors(const AlexanderMinors& minors);

/// Alexander polynomial through the presentation and Fox calculus.
LaurentPoly alexander_from_presentation(const TtkParams& params);

/// Relators rendered as "r1 = ...", one per line.
std::string presentation_text(const Presentation& pres);

}  // namespace ttk
