#include "apw/poly.hpp"

#include <cctype>
#include <sstream>

#include "apw/errors.hpp"

namespace apw {

Poly Poly::term(RingSide side, const Monomial& m, const Rational& c) {
  Poly p(side, m.num_vars());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(RingSide side, int num_vars, int var) {
  return term(side, Monomial::unit(num_vars, var), 1);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.num_vars() != num_vars_) throw input_error("term with wrong variable count");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.side_ != side_ || other.num_vars_ != num_vars_)
    throw input_error("adding polynomials from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.side_ != side_ || other.num_vars_ != num_vars_)
    throw input_error("subtracting polynomials from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r = *this;
  r += other;
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  Poly r = *this;
  r -= other;
  return r;
}

Poly Poly::operator-() const {
  Poly r(side_, num_vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  if (other.side_ != side_ || other.num_vars_ != num_vars_)
    throw input_error("multiplying polynomials from different rings");
  Poly r(side_, num_vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(side_, num_vars_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

bool proportional(const Poly& f, const Poly& g) {
  if (f.side() != g.side() || f.num_vars() != g.num_vars()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
  if (f.terms().size() != g.terms().size()) return false;
  const Rational ratio = g.terms().begin()->second / f.terms().begin()->second;
  auto itf = f.terms().begin();
  auto itg = g.terms().begin();
  for (; itf != f.terms().end(); ++itf, ++itg) {
    if (!(itf->first == itg->first)) return false;
    if (itf->second * ratio != itg->second) return false;
  }
  return true;
}

namespace {

// falling factorial prod_i b_i (b_i-1) ... (b_i-a_i+1); the coefficient of
// the monomial action d^a . x^b = a! C(b,a) x^{b-a}
Integer contraction_coefficient(const Monomial& a, const Monomial& b) {
  Integer r = 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    for (int k = 0; k < a.exps[i]; ++k) r *= (b.exps[i] - k);
  return r;
}

}  // namespace

Poly apolar_apply(const Poly& op, const Poly& f) {
  if (op.side() != RingSide::Operator || f.side() != RingSide::Point)
    throw input_error("apolar_apply wants an operator acting on a point-ring form");
  if (op.num_vars() != f.num_vars())
    throw input_error("apolar_apply: variable count mismatch");
  Poly out(RingSide::Point, f.num_vars());
  for (const auto& [a, ca] : op.terms())
    for (const auto& [b, cb] : f.terms()) {
      if (!a.divides(b)) continue;
      out.add_term(b.quotient(a), ca * cb * Rational(contraction_coefficient(a, b)));
    }
  return out;
}

Rational pairing(const Poly& f, const Poly& op) {
  if (f.is_zero() || op.is_zero()) return 0;
  if (!f.is_homogeneous() || !op.is_homogeneous() || f.degree() != op.degree())
    throw input_error("pairing: degree mismatch");
  Poly scalar = apolar_apply(op, f);
  if (scalar.is_zero()) return 0;
  return scalar.terms().begin()->second;
}

Matrix catalecticant(const Poly& f, int e) {
  if (f.is_zero() || !f.is_homogeneous())
    throw input_error("catalecticant of a non-homogeneous or zero form");
  if (f.side() != RingSide::Point)
    throw input_error("catalecticant wants a point-ring form");
  const int d = f.degree();
  if (e < 0 || e > d) throw input_error("catalecticant: degree out of range");
  const GradedBasis& from = graded_basis(f.num_vars(), e);
  const GradedBasis& to = graded_basis(f.num_vars(), d - e);
  Matrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    const Monomial& a = from.monomials[j];
    for (const auto& [b, cb] : f.terms()) {
      if (!a.divides(b)) continue;
      const std::size_t i = to.index_of(b.quotient(a));
      m.at(i, j) += cb * Rational(contraction_coefficient(a, b));
    }
  }
  return m;
}

LinearFormPoint::LinearFormPoint(std::vector<Rational> c) : coords(std::move(c)) {
  std::size_t lead = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) { lead = i; break; }
  if (lead == coords.size())
    throw input_error("point with all coordinates zero");
  if (coords[lead] != 1) {
    const Rational inv = Rational(1) / coords[lead];
    for (auto& x : coords) x *= inv;
  }
}

Poly power_of_linear_form(const LinearFormPoint& c, int d) {
  if (d < 1) throw input_error("power_of_linear_form: degree must be >= 1");
  const int nv = c.num_vars();
  Poly out(RingSide::Point, nv);
  const Integer dfact = factorial(d);
  for (const Monomial& m : graded_basis(nv, d).monomials) {
    Rational coef(dfact / multi_factorial(m));
    bool zero = false;
    for (int i = 0; i < nv && !zero; ++i) {
      for (int k = 0; k < m.exps[static_cast<std::size_t>(i)]; ++k) {
        if (sgn(c.coords[static_cast<std::size_t>(i)]) == 0) { zero = true; break; }
        coef *= c.coords[static_cast<std::size_t>(i)];
      }
    }
    if (!zero) out.add_term(m, coef);
  }
  return out;
}

Rational evaluate(const Poly& p, const LinearFormPoint& c) {
  if (p.num_vars() != c.num_vars())
    throw input_error("evaluate: variable count mismatch");
  Rational total = 0;
  for (const auto& [m, coef] : p.terms()) {
    Rational v = coef;
    for (int i = 0; i < p.num_vars(); ++i)
      for (int k = 0; k < m.exps[static_cast<std::size_t>(i)]; ++k)
        v *= c.coords[static_cast<std::size_t>(i)];
    total += v;
  }
  return total;
}

std::vector<Rational> coords_in(const Poly& p, const GradedBasis& basis) {
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.num_vars() != basis.num_vars || m.degree() != basis.degree)
      throw input_error("polynomial does not live in the given graded piece");
    v[basis.index_of(m)] = c;
  }
  return v;
}

Poly poly_from_coords(RingSide side, const GradedBasis& basis,
                      const std::vector<Rational>& coords) {
  check_internal(coords.size() == basis.size(), "coordinate length mismatch");
  Poly p(side, basis.num_vars);
  for (std::size_t i = 0; i < coords.size(); ++i)
    p.add_term(basis.monomials[i], coords[i]);
  return p;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    if (i >= s.size()) throw input_error("unexpected end of polynomial");
    return s[i++];
  }

  Integer integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw input_error("expected a number in polynomial at position " +
                                      std::to_string(start));
    return Integer(s.substr(start, i - start));
  }

  // coeff := int [ '/' int ]
  Rational coefficient() {
    Integer num = integer();
    skip_ws();
    if (peek() == '/') {
      take();
      Integer den = integer();
      if (sgn(den) == 0) throw input_error("zero denominator in coefficient");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  // varpow := ('x'|'d') digits ['^' digits]; returns (side, var, exponent)
  struct VarPow {
    RingSide side;
    int var;
    int exp;
  };
  VarPow varpow() {
    char c = take();
    RingSide side;
    if (c == 'x') side = RingSide::Point;
    else if (c == 'd') side = RingSide::Operator;
    else throw input_error(std::string("expected variable, got '") + c + "'");
    int var = static_cast<int>(integer().get_si());
    int exp = 1;
    if (peek() == '^') {
      take();
      exp = static_cast<int>(integer().get_si());
      if (exp < 0) throw input_error("negative exponent");
    }
    return {side, var, exp};
  }
};

}  // namespace

Poly parse_poly(const std::string& text, std::optional<int> num_vars) {
  Parser p(text);
  struct RawTerm {
    Rational coef;
    std::map<int, int> powers;
  };
  std::vector<RawTerm> raw;
  std::optional<RingSide> side;
  int max_var = -1;

  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      p.take();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      throw input_error("expected '+' or '-' between terms");
    }
    first = false;

    RawTerm t;
    t.coef = sign;
    bool saw_anything = false;
    c = p.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coef *= p.coefficient();
      saw_anything = true;
      if (p.peek() == '*') p.take();
      else {
        raw.push_back(std::move(t));  // bare constant
        continue;
      }
    }
    while (true) {
      c = p.peek();
      if (c != 'x' && c != 'd') break;
      Parser::VarPow v = p.varpow();
      if (side && *side != v.side)
        throw input_error("mixed x- and d-variables in one polynomial");
      side = v.side;
      t.powers[v.var] += v.exp;
      max_var = std::max(max_var, v.var);
      saw_anything = true;
      if (p.peek() == '*') {
        p.take();
        if (p.peek() != 'x' && p.peek() != 'd')
          throw input_error("expected a variable after '*'");
      } else {
        break;
      }
    }
    if (!saw_anything) throw input_error("empty term in polynomial");
    raw.push_back(std::move(t));
  }
  if (raw.empty()) throw input_error("empty polynomial");

  int nv = num_vars.value_or(max_var + 1);
  if (nv < 1) nv = 1;
  if (max_var >= nv) throw input_error("variable index exceeds declared count");
  Poly out(side.value_or(RingSide::Point), nv);
  for (const RawTerm& t : raw) {
    std::vector<int> exps(static_cast<std::size_t>(nv), 0);
    for (const auto& [var, e] : t.powers) exps[static_cast<std::size_t>(var)] = e;
    out.add_term(Monomial(std::move(exps)), t.coef);
  }
  return out;
}

namespace {

const char* variable_prefix(RingSide side) {
  switch (side) {
    case RingSide::Point: return "x";
    case RingSide::Operator: return "d";
    case RingSide::Cox: return "c";
  }
  return "?";
}

void print_monomial(std::ostringstream& os, const Monomial& m, const char* prefix) {
  bool firstv = true;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!firstv) os << "*";
    firstv = false;
    os << prefix << i;
    if (m.exps[i] > 1) os << "^" << m.exps[i];
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const char* prefix = variable_prefix(p.side());
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    const bool constant = m.degree() == 0;
    if (a != 1 || constant) {
      os << a.get_str();
      if (!constant) os << "*";
    }
    if (!constant) print_monomial(os, m, prefix);
  }
  return os.str();
}

std::string to_string(const LinearFormPoint& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) os << ":";
    os << p.coords[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace apw
