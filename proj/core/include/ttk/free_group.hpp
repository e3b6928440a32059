#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ttk/laurent.hpp"

namespace ttk {

using GeneratorId = std::uint32_t;

/// g^exponent, exponent != 0.
struct Syllable {
  GeneratorId generator;
  std::int64_t exponent;

  auto operator<=>(const Syllable&) const = default;
};

/// Element of a free group in reduced syllable form: adjacent syllables
/// always have distinct generators. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces the input (merging equal neighbours, dropping zero powers).
  explicit FreeWord(std::span<const Syllable> syllables);
  FreeWord(std::initializer_list<Syllable> syllables);

  static FreeWord power(GeneratorId g, std::int64_t exponent);

  [[nodiscard]] bool is_identity() const noexcept { return syllables_.empty(); }
  [[nodiscard]] std::span<const Syllable> syllables() const noexcept { return syllables_; }

  [[nodiscard]] FreeWord inverse() const;

  /// Appends one syllable with free reduction at the junction.
  FreeWord& append(Syllable s);
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Element of the integral group ring Z[F]: a finite sum of words with
/// nonzero integer coefficients.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const FreeWord& w, const Integer& c = 1);

  static GroupRingElem one() { return GroupRingElem(FreeWord{}); }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const std::map<FreeWord, Integer>& terms() const noexcept { return terms_; }

  void add_term(const FreeWord& w, const Integer& c);

  GroupRingElem operator-() const;
  GroupRingElem& operator+=(const GroupRingElem& rhs);
  GroupRingElem& operator-=(const GroupRingElem& rhs);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);

  /// Left multiplication by a single word.
  [[nodiscard]] GroupRingElem left_multiplied(const FreeWord& w) const;

  bool operator==(const GroupRingElem&) const = default;

 private:
  std::map<FreeWord, Integer> terms_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  /// Each relator only mentions declared generators.
  [[nodiscard]] bool is_well_formed() const;
};

/// Group homomorphism F -> <t>, g_i |-> t^exponents[i], extended linearly to Z[F].
struct AbelianizationMap {
  std::vector<Exponent> exponents;

  [[nodiscard]] Exponent degree(const FreeWord& w) const;
  [[nodiscard]] LaurentPoly operator()(const FreeWord& w) const;
  [[nodiscard]] LaurentPoly operator()(const GroupRingElem& e) const;
};

/// "x^2 y^-1 z"; "1" for the identity.
std::string to_string(const FreeWord& w, std::span<const std::string> names);

}  // namespace ttk
