#include "ttk/verify.hpp"

#include "ttk/braid.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/fox.hpp"

namespace ttk {

bool VerificationReport::ok() const { return first_mismatch().empty(); }

std::string VerificationReport::first_mismatch() const {
  if (closed_form != fox)
    return "closed vs fox: " + to_string(closed_form) + " != " + to_string(fox);
  if (closed_form != burau)
    return "closed vs burau: " + to_string(closed_form) + " != " + to_string(burau);
  if (!trace_matches) return "modular data disagrees with the strand trace";
  if (!identity_lemma) return "residue identities Q_i q = kbar_i p + n_i fail";
  if (!minor_relations) return "Alexander matrix minor relations fail";
  if (!unit_at_one) return "Delta(1) != +-1";
  if (!palindromic) return "Delta is not palindromic";
  return {};
}

VerificationReport verify_knot(const TtkParams& params) {
  VerificationReport rep;
  const ModularData data = compute_modular_data(params);
  rep.trace_matches = data == derive_counts_by_trace(params);
  rep.identity_lemma = check_identity_lemma(data, params);

  rep.closed_form = alexander_closed_form(params);

  const KnotGroup group = presentation_for_ttk(params, data);
  const AlexanderMinors minors =
      minors_and_relations(alexander_matrix(group.presentation, group.abelianization), group.abelianization);
  rep.minor_relations = minors.relations_ok;
  rep.fox = alexander_from_minors(minors);

  rep.burau = alexander_from_braid(params);

  const Integer at_one = evaluate_at_one(rep.closed_form);
  rep.unit_at_one = at_one == 1 || at_one == -1;
  rep.palindromic = is_palindromic(rep.closed_form);
  return rep;
}

}  // namespace ttk
