#include "ttk/free_group.hpp"

#include <algorithm>
#include <sstream>

namespace ttk {

FreeWord::FreeWord(std::span<const Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const auto& s : syllables) append(s);
}

FreeWord::FreeWord(std::initializer_list<Syllable> syllables)
    : FreeWord(std::span<const Syllable>(syllables.begin(), syllables.size())) {}

FreeWord FreeWord::power(GeneratorId g, std::int64_t exponent) {
  FreeWord w;
  w.append({g, exponent});
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->generator, -it->exponent});
  return w;
}

FreeWord& FreeWord::append(Syllable s) {
  if (s.exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return *this;
  }
  syllables_.push_back(s);
  return *this;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  // Cancellation cascades through append() one syllable at a time.
  for (const auto& s : rhs.syllables_) append(s);
  return *this;
}

GroupRingElem::GroupRingElem(const FreeWord& w, const Integer& c) {
  if (c != 0) terms_.emplace(w, c);
}

void GroupRingElem::add_term(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElem GroupRingElem::left_multiplied(const FreeWord& w) const {
  GroupRingElem out;
  for (const auto& [word, c] : terms_) out.add_term(w * word, c);
  return out;
}

bool Presentation::is_well_formed() const {
  return std::all_of(relators.begin(), relators.end(), [&](const FreeWord& w) {
    return std::all_of(w.syllables().begin(), w.syllables().end(),
                       [&](const Syllable& s) { return s.generator < generators.size(); });
  });
}

Exponent AbelianizationMap::degree(const FreeWord& w) const {
  Exponent e = 0;
  for (const auto& s : w.syllables()) e += exponents.at(s.generator) * s.exponent;
  return e;
}

LaurentPoly AbelianizationMap::operator()(const FreeWord& w) const { return LaurentPoly::t_pow(degree(w)); }

LaurentPoly AbelianizationMap::operator()(const GroupRingElem& e) const {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) terms.push_back({degree(w), c});
  return LaurentPoly::from_terms(std::move(terms));
}

std::string to_string(const FreeWord& w, std::span<const std::string> names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    if (s.generator < names.size())
      os << names[s.generator];
    else
      os << 'g' << s.generator;
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

}  // namespace ttk
