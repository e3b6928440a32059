#pragma once

#include "ttk/laurent.hpp"
#include "ttk/params.hpp"

namespace ttk {

// The four building blocks of the closed formula
//
//   Delta(t) = (1 - t) (Xt Y - X Yt) / ((1 - t^p)(1 - t^q)(1 - t^r))
//
// where Xt, Yt are the "tilde" companions of X, Y truncated at the return
// index m. All four may carry negative exponents when s < 0.

/// X = 1 - (1 - t^rs) sum_{i=1}^{r-1} t^(kbar_i p + (i-1) rs) - t^(pq + (r-1) rs)
LaurentPoly build_X(const TtkParams& params, const ModularData& data);

/// m = 0: 1 - t^(kbar' p); otherwise the X sum cut at i = m with tail t^(kbar' p + m rs).
LaurentPoly build_Xtilde(const TtkParams& params, const ModularData& data);

/// Y = 1 - (1 - t^rs) sum_{i=1}^{r-1} t^(Q_i q + (i-1) rs) - t^(pq + (r-1) rs)
LaurentPoly build_Y(const TtkParams& params, const ModularData& data);

/// m = 0: 1 - t^(Q' q); otherwise the Y sum cut at i = m with tail t^(Q' q + m rs).
LaurentPoly build_Ytilde(const TtkParams& params, const ModularData& data);

/// Xt Y - X Yt, before the (1 - t) factor and the division.
LaurentPoly closed_form_bracket(const TtkParams& params, const ModularData& data);

/// (1 - t) * bracket / ((1 - t^p)(1 - t^q)(1 - t^r)) without normalization.
/// The exponent frame is the one the formula produces, which is what the
/// coefficient-witness computations refer to.
LaurentPoly alexander_closed_form_raw(const TtkParams& params);

/// Canonical Alexander polynomial from the closed formula.
LaurentPoly alexander_closed_form(const TtkParams& params);

/// Canonical (1 - t)(1 - t^pq) / ((1 - t^p)(1 - t^q)) of the torus knot T(p, q).
LaurentPoly torus_knot_polynomial(std::int64_t p, std::int64_t q);

}  // namespace ttk
