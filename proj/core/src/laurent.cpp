#include "ttk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace ttk {

namespace {

using Dense = std::vector<Integer>;

// Largest dense buffer mul() is willing to allocate before switching to
// sort-and-merge accumulation.
constexpr Exponent kDenseMulLimit = Exponent{1} << 24;

void sort_and_merge(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Exponent e = terms[i].exp;
    Integer c = terms[i].coeff;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exp == e; ++j) c += terms[j].coeff;
    if (c != 0) {
      terms[out].exp = e;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Dense coefficient vector of p * t^(-min_exponent); index = degree.
Dense to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const Exponent lo = p.min_exponent();
  Dense d(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& term : p.terms()) d[static_cast<std::size_t>(term.exp - lo)] = term.coeff;
  return d;
}

LaurentPoly from_dense(const Dense& d, Exponent shift) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.push_back({static_cast<Exponent>(i) + shift, d[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Integer dense_content(const Dense& d) {
  Integer g = 0;
  for (const auto& c : d) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& d) {
  Integer g = dense_content(d);
  if (g == 0 || g == 1) return;
  for (auto& c : d)
    if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Scalar multiple of the remainder of a modulo b over the rationals.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  Integer g, fa, fb;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), la.get_mpz_t(), g.get_mpz_t());
    if (fa != 1)
      for (auto& c : a)
        if (c != 0) c *= fa;
    for (std::size_t i = 0; i <= db; ++i)
      if (b[i] != 0) mpz_submul(a[i + shift].get_mpz_t(), fb.get_mpz_t(), b[i].get_mpz_t());
    trim(a);
    make_primitive(a);
  }
  return a;
}

void append_magnitude(std::ostringstream& os, const Integer& mag, Exponent e) {
  if (e == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << 't';
  if (e != 1) os << '^' << e;
}

}  // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  terms_.reserve(terms.size());
  for (const auto& [e, c] : terms) terms_.push_back({e, Integer(c)});
  sort_and_merge(terms_);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  sort_and_merge(p.terms_);
  return p;
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::t_pow(Exponent e) { return monomial(1, e); }

Exponent LaurentPoly::min_exponent() const {
  if (is_zero()) throw ZeroPolynomial("min_exponent of the zero polynomial");
  return terms_.front().exp;
}

Exponent LaurentPoly::max_exponent() const {
  if (is_zero()) throw ZeroPolynomial("max_exponent of the zero polynomial");
  return terms_.back().exp;
}

const Integer& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return terms_.back().coeff;
}

const Integer& LaurentPoly::trailing_coefficient() const {
  if (is_zero()) throw ZeroPolynomial("trailing coefficient of the zero polynomial");
  return terms_.front().coeff;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(Exponent k) const {
  if (k == 0) throw std::invalid_argument("substitute_power requires a nonzero power");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp *= k;
  if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.is_monomial())
    return rhs.scaled(lhs.terms_.front().coeff).shifted(lhs.terms_.front().exp);
  if (rhs.is_monomial())
    return lhs.scaled(rhs.terms_.front().coeff).shifted(rhs.terms_.front().exp);

  const Exponent lo = lhs.min_exponent() + rhs.min_exponent();
  const Exponent span = lhs.max_exponent() + rhs.max_exponent() - lo + 1;
  const auto pairs = static_cast<Exponent>(lhs.term_count() * rhs.term_count());

  if (span <= kDenseMulLimit && span <= 8 * pairs + 4096) {
    Dense acc(static_cast<std::size_t>(span));
    for (const auto& a : lhs.terms_)
      for (const auto& b : rhs.terms_)
        mpz_addmul(acc[static_cast<std::size_t>(a.exp + b.exp - lo)].get_mpz_t(),
                   a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    return from_dense(acc, lo);
  }

  std::vector<LaurentPoly::Term> products;
  products.reserve(static_cast<std::size_t>(pairs));
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) products.push_back({a.exp + b.exp, a.coeff * b.coeff});
  LaurentPoly out;
  out.terms_ = std::move(products);
  sort_and_merge(out.terms_);
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly one_minus_t_pow(Exponent n) { return LaurentPoly{{0, 1}, {n, -1}}; }

LaurentPoly geometric_quotient(const LaurentPoly& x, std::int64_t n) {
  if (n == 0) return {};
  if (n > 0) {
    LaurentPoly sum = LaurentPoly::constant(1);
    LaurentPoly power = LaurentPoly::constant(1);
    for (std::int64_t i = 1; i < n; ++i) {
      power *= x;
      sum += power;
    }
    return sum;
  }
  if (!x.is_monomial() || abs(x.terms().front().coeff) != 1)
    throw std::invalid_argument("geometric_quotient with n < 0 needs a unit base");
  // x^-1 of a unit c*t^e is c*t^-e since c = +-1.
  const LaurentPoly inverse = LaurentPoly::monomial(x.terms().front().coeff, -x.terms().front().exp);
  LaurentPoly sum;
  LaurentPoly power = LaurentPoly::constant(1);
  for (std::int64_t i = -1; i >= n; --i) {
    power *= inverse;
    sum -= power;
  }
  return sum;
}

bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quotient) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (num.is_zero()) {
    quotient = {};
    return true;
  }
  const Exponent shift = num.min_exponent() - den.min_exponent();

  if (den.is_monomial()) {
    const Integer& d = den.terms().front().coeff;
    std::vector<LaurentPoly::Term> out;
    out.reserve(num.term_count());
    for (const auto& t : num.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) return false;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
      out.push_back({t.exp - den.min_exponent(), std::move(c)});
    }
    quotient = LaurentPoly::from_terms(std::move(out));
    return true;
  }

  Dense rem = to_dense(num);
  const auto dn = static_cast<std::int64_t>(rem.size()) - 1;
  const Exponent dd = den.max_exponent() - den.min_exponent();
  if (dn < dd) return false;

  std::vector<std::pair<std::size_t, Integer>> divisor;  // relative exponent, coefficient
  for (const auto& t : den.terms())
    divisor.emplace_back(static_cast<std::size_t>(t.exp - den.min_exponent()), t.coeff);
  const Integer& lead = den.leading_coefficient();

  Dense q(static_cast<std::size_t>(dn - dd + 1));
  for (std::int64_t i = dn; i >= dd; --i) {
    Integer& c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return false;
    const auto qi = static_cast<std::size_t>(i - dd);
    mpz_divexact(q[qi].get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [e, dc] : divisor)
      mpz_submul(rem[qi + e].get_mpz_t(), q[qi].get_mpz_t(), dc.get_mpz_t());
  }
  for (std::int64_t i = 0; i < dd; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  quotient = from_dense(q, shift);
  return true;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  LaurentPoly q;
  if (!try_exact_div(num, den, q))
    throw NonExactDivision("(" + to_string(num) + ") is not divisible by (" + to_string(den) + ")");
  return q;
}

Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  const Integer g = content(p);
  if (g == 0 || g == 1) return p;
  std::vector<LaurentPoly::Term> terms(p.terms().begin(), p.terms().end());
  for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  if (b.is_zero()) return normalize(primitive_part(a));
  if (a.is_zero()) return normalize(primitive_part(b));

  Dense x = to_dense(a);
  Dense y = to_dense(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly::constant(1);
    Dense r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return normalize(from_dense(x, 0));
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
  LaurentPoly out = p.shifted(-p.min_exponent());
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

Exponent degree_span(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  return p.max_exponent() - p.min_exponent();
}

Integer evaluate_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff;
  return sum;
}

bool is_palindromic(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  const auto terms = p.terms();
  const Exponent lo = p.min_exponent();
  const Exponent hi = p.max_exponent();
  const std::size_t n = terms.size();
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const auto& lo_term = terms[i];
    const auto& hi_term = terms[n - 1 - i];
    if (lo_term.exp - lo != hi - hi_term.exp || lo_term.coeff != hi_term.coeff) return false;
  }
  return true;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    append_magnitude(os, abs(t.coeff), t.exp);
    first = false;
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("parse_laurent: ") + what + " in \"" +
                                std::string(text) + "\"");
  };
  auto read_digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    out.assign(text.substr(start, pos - start));
    return !out.empty();
  };

  std::vector<LaurentPoly::Term> terms;
  skip_ws();
  if (text.substr(pos) == "0") return {};
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    std::string digits;
    Integer coeff = 1;
    Exponent exp = 0;
    const bool has_coeff = read_digits(digits);
    if (has_coeff) coeff = Integer(digits);
    skip_ws();
    bool has_t = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_coeff) fail("dangling '*'");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 't') fail("expected 't' after '*'");
    }
    if (pos < text.size() && text[pos] == 't') {
      has_t = true;
      ++pos;
      exp = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        bool neg_exp = false;
        if (pos < text.size() && text[pos] == '-') {
          neg_exp = true;
          ++pos;
        }
        std::string exp_digits;
        if (!read_digits(exp_digits)) fail("missing exponent");
        exp = std::stoll(exp_digits);
        if (neg_exp) exp = -exp;
      }
    }
    if (!has_coeff && !has_t) fail("empty term");
    if (negative) coeff = -coeff;
    terms.push_back({exp, std::move(coeff)});
    first = false;
  }
  if (terms.empty()) fail("no terms");
  return LaurentPoly::from_terms(std::move(terms));
}

std::string to_json_text(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) arr.push_back({t.exp, t.coeff.get_str()});
  return arr.dump();
}

LaurentPoly laurent_from_json_text(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("polynomial JSON terms must be [exponent, coefficient] pairs");
    const auto& c = pair[1];
    Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>());
    terms.push_back({pair[0].get<Exponent>(), std::move(coeff)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace ttk
