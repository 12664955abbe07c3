#include "hyperq/algebra/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperq::algebra {

std::optional<Var> var_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == s) return static_cast<Var>(i);
  }
  return std::nullopt;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::canonical_part() const {
  Monomial out = *this;
  out.exp[index(Var::a)] = 0;
  out.exp[index(Var::m)] = 0;
  return out;
}

Monomial Monomial::parameter_part() const {
  Monomial out;
  out.exp[index(Var::a)] = exp[index(Var::a)];
  out.exp[index(Var::m)] = exp[index(Var::m)];
  return out;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    out.exp[i] = static_cast<std::uint16_t>(lhs.exp[i] + rhs.exp[i]);
  }
  return out;
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    out.exp[i] = static_cast<std::uint16_t>(lhs.exp[i] - rhs.exp[i]);
  }
  return out;
}

Monomial gcd(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    out.exp[i] = std::min(lhs.exp[i], rhs.exp[i]);
  }
  return out;
}

std::strong_ordering elimination_compare(const Monomial& lhs,
                                         const Monomial& rhs) {
  for (Var v : kEliminationOrder) {
    if (auto c = lhs[v] <=> rhs[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v) {
  return monomial(Monomial::of(v), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& c) {
  Polynomial p;
  p.add_term(mono, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max<unsigned>(d, mono[v]);
  return d;
}

bool Polynomial::depends_on_canonical() const {
  for (const auto& [mono, c] : terms_) {
    if (!mono.canonical_part().is_one()) return true;
  }
  return false;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<Polynomial> out(degree(v) + 1);
  for (const auto& [mono, c] : terms_) {
    Monomial rest = mono;
    rest.exp[index(v)] = 0;
    out[mono[v]].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(
    Var v, const std::vector<Polynomial>& coeffs) {
  Polynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [mono, c] : coeffs[k].terms_) {
      Monomial shifted = mono;
      shifted.exp[index(v)] = static_cast<std::uint16_t>(shifted.exp[index(v)] + k);
      out.add_term(shifted, c);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    const auto e = mono[v];
    if (e == 0) continue;
    Monomial lowered = mono;
    lowered.exp[index(v)] = static_cast<std::uint16_t>(e - 1);
    out.add_term(lowered, c * e);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial out = terms_.begin()->first;
  for (const auto& [mono, c] : terms_) out = gcd(out, mono);
  return out;
}

Rational Polynomial::rational_content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [mono, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

double Polynomial::evaluate(const std::array<double, kNumVars>& point) const {
  long double sum = 0.0L;
  for (const auto& [mono, c] : terms_) {
    long double t = c.get_d();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      for (unsigned k = 0; k < mono.exp[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return static_cast<double>(sum);
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= rhs;
  return *this;
}

std::string format_rational(const Rational& c) {
  return c.get_str();
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& mono,
                     bool& first_factor) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (mono.exp[i] == 0) continue;
    if (!first_factor) os << '*';
    first_factor = false;
    os << kVarNames[i];
    if (mono.exp[i] > 1) os << '^' << mono.exp[i];
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first_factor = true;
    if (mono.is_one() || mag != 1) {
      os << format_rational(mag);
      first_factor = false;
    }
    append_monomial(os, mono, first_factor);
  }
  return os.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& a,
                                       const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.constant_term());
  Polynomial quotient;
  Polynomial rest = a;
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_coeff = b.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& top = rest.leading_monomial();
    if (!lead.divides(top)) return std::nullopt;
    Polynomial step = Polynomial::monomial(top / lead,
                                           rest.leading_coefficient() / lead_coeff);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
  const unsigned db = b.degree(v);
  const Polynomial lead_b = b.coefficients_in(v).back();
  Polynomial rest = a;
  while (!rest.is_zero() && rest.degree(v) >= db) {
    const unsigned dr = rest.degree(v);
    const Polynomial lead_r = rest.coefficients_in(v).back();
    rest = lead_b * rest -
           lead_r * Polynomial::monomial(Monomial::of(v, static_cast<std::uint16_t>(dr - db)), 1) * b;
  }
  return rest;
}

namespace {

Polynomial divide_monomial(const Polynomial& p, const Monomial& mono) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m / mono, c);
  return out;
}

Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, Var v) {
  if (p.is_zero()) return p;
  auto q = exact_divide(p, content_in(p, v));
  if (!q) throw std::logic_error("content does not divide polynomial");
  return q->monic();
}

std::optional<Var> first_variable(const Polynomial& p) {
  std::optional<Var> best;
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (mono.exp[i] > 0 && (!best || i < index(*best))) {
        best = static_cast<Var>(i);
      }
    }
  }
  return best;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial()) {
    return Polynomial::monomial(gcd(a.leading_monomial(), b.monomial_content()), 1);
  }
  if (b.is_monomial()) {
    return Polynomial::monomial(gcd(b.leading_monomial(), a.monomial_content()), 1);
  }

  const Monomial shared = gcd(a.monomial_content(), b.monomial_content());
  const Polynomial ra = divide_monomial(a, a.monomial_content());
  const Polynomial rb = divide_monomial(b, b.monomial_content());
  const Polynomial mono_factor = Polynomial::monomial(shared, 1);

  if (ra.is_constant() || rb.is_constant()) return mono_factor;

  // Pick a main variable present in either operand.
  Var v = *first_variable(ra);
  if (auto vb = first_variable(rb); vb && index(*vb) < index(v)) v = *vb;

  if (!ra.depends_on(v)) return (mono_factor * gcd(ra, content_in(rb, v))).monic();
  if (!rb.depends_on(v)) return (mono_factor * gcd(content_in(ra, v), rb)).monic();

  const Polynomial ca = content_in(ra, v);
  const Polynomial cb = content_in(rb, v);
  const Polynomial content_gcd = gcd(ca, cb);

  Polynomial f = primitive_part_in(ra, v);
  Polynomial g = primitive_part_in(rb, v);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (true) {
    Polynomial r = pseudo_remainder(f, g, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      g = Polynomial(1);
      break;
    }
    f = std::move(g);
    g = primitive_part_in(r, v);
  }
  return (mono_factor * content_gcd * g).monic();
}

}  // namespace hyperq::algebra
