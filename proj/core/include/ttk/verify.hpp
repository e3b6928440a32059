#pragma once

#include <string>

#include "ttk/laurent.hpp"
#include "ttk/params.hpp"

namespace ttk {

/// Every consistency check available for one knot: the three independent
/// Alexander polynomial routes plus the structural identities behind them.
struct VerificationReport {
  LaurentPoly closed_form;
  LaurentPoly fox;
  LaurentPoly burau;
  bool trace_matches = false;    // residue data == strand-trace data
  bool identity_lemma = false;   // Q_i q = kbar_i p + n_i, Q' q = kbar' p + r
  bool minor_relations = false;  // the three minor identities
  bool unit_at_one = false;      // Delta(1) = +-1
  bool palindromic = false;

  [[nodiscard]] bool ok() const;
  /// Empty when ok(); otherwise a short description of the first failure.
  [[nodiscard]] std::string first_mismatch() const;
};

VerificationReport verify_knot(const TtkParams& params);

}  // namespace ttk
