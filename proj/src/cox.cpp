#include "apw/cox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "apw/errors.hpp"
#include "apw/rowspan.hpp"

namespace apw {

CoxClass CoxClass::operator+(const CoxClass& other) const {
  check_internal(kind == other.kind && e == other.e, "mixing Cox gradings");
  return {kind, e, a + other.a, b + other.b};
}

CoxClass CoxClass::operator-(const CoxClass& other) const {
  check_internal(kind == other.kind && e == other.e, "mixing Cox gradings");
  return {kind, e, a - other.a, b - other.b};
}

CoxClass hirzebruch_class(int e, int a, int b) {
  if (e < 0) throw input_error("Hirzebruch parameter e must be >= 0");
  return {SurfaceKind::Hirzebruch, e, a, b};
}

CoxClass plane_class(int degree) {
  return {SurfaceKind::ProjectivePlane, 0, 0, degree};
}

std::size_t CoxBasis::index_of(const Monomial& m) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == m) return i;
  throw internal_error("monomial not a section of this Cox class");
}

CoxBasis cox_basis(const CoxClass& cls) {
  CoxBasis basis;
  basis.cls = cls;
  if (cls.kind == SurfaceKind::ProjectivePlane) {
    if (cls.b < 0) return basis;
    basis.monomials = graded_basis(3, cls.b).monomials;
    return basis;
  }
  if (cls.a < 0) throw input_error("cox_basis: negative C0-coefficient");
  // u^(a-k) v^k t^(b-ke): k ascending, t0-exponent descending
  for (int k = 0; k <= cls.a; ++k) {
    const int tdeg = cls.b - k * cls.e;
    if (tdeg < 0) continue;
    for (int t0 = tdeg; t0 >= 0; --t0)
      basis.monomials.emplace_back(std::vector<int>{cls.a - k, k, t0, tdeg - t0});
  }
  return basis;
}

CoxClass cox_class_of(SurfaceKind kind, int e, const Monomial& m) {
  if (kind == SurfaceKind::ProjectivePlane) {
    check_internal(m.num_vars() == 3, "plane Cox monomial needs 3 variables");
    return plane_class(m.degree());
  }
  check_internal(m.num_vars() == 4, "Hirzebruch Cox monomial needs 4 variables");
  const int u = m.exps[0], v = m.exps[1], t0 = m.exps[2], t1 = m.exps[3];
  return {SurfaceKind::Hirzebruch, e, u + v, v * e + t0 + t1};
}

long cox_section_count(const CoxClass& cls) {
  if (cls.kind == SurfaceKind::ProjectivePlane)
    return cls.b < 0 ? 0 : static_cast<long>(binomial(cls.b + 2, 2).get_si());
  if (cls.a < 0) return 0;
  long n = 0;
  for (int k = 0; k <= cls.a; ++k) n += std::max(0, cls.b - k * cls.e + 1);
  return n;
}

namespace {

RowSpan modulus_span(const Poly& g, const CoxBasis& target, SurfaceKind kind,
                     int e) {
  RowSpan span(target.size());
  if (g.is_zero()) return span;
  CoxClass gcls = cox_class_of(kind, e, g.terms().begin()->first);
  for (const auto& [m, c] : g.terms())
    if (!(cox_class_of(kind, e, m) == gcls))
      throw input_error("modulus is not homogeneous for the Cox grading");
  CoxClass comp = target.cls - gcls;
  if (comp.kind == SurfaceKind::Hirzebruch && comp.a < 0) return span;
  if (comp.kind == SurfaceKind::ProjectivePlane && comp.b < 0) return span;
  for (const Monomial& m : cox_basis(comp).monomials) {
    Poly prod = g * Poly::term(g.side(), m, 1);
    std::vector<Rational> v(target.size(), Rational(0));
    for (const auto& [pm, pc] : prod.terms()) v[target.index_of(pm)] = pc;
    span.insert(std::move(v));
  }
  return span;
}

}  // namespace

Matrix cox_reduce_columns(const std::vector<Monomial>& products,
                          const CoxBasis& target,
                          const std::optional<Poly>& modulus) {
  const SurfaceKind kind = target.cls.kind;
  const int e = target.cls.e;
  for (const Monomial& m : products)
    if (!(cox_class_of(kind, e, m) == target.cls))
      throw input_error("product lands outside the target Cox class");
  std::optional<RowSpan> red;
  if (modulus && !modulus->is_zero())
    red = modulus_span(*modulus, target, kind, e);
  Matrix out(target.size(), products.size());
  for (std::size_t j = 0; j < products.size(); ++j) {
    std::vector<Rational> col(target.size(), Rational(0));
    col[target.index_of(products[j])] = 1;
    if (red) col = red->residual(std::move(col));
    for (std::size_t i = 0; i < target.size(); ++i) out.at(i, j) = col[i];
  }
  return out;
}

Matrix cox_multiply_and_reduce(
    SurfaceKind kind, int e,
    const std::vector<std::pair<Monomial, Monomial>>& products,
    const std::optional<Poly>& modulus) {
  if (products.empty()) throw input_error("no products given");
  std::vector<Monomial> multiplied;
  multiplied.reserve(products.size());
  for (const auto& [m1, m2] : products) multiplied.push_back(m1 * m2);
  const CoxClass target_cls = cox_class_of(kind, e, multiplied.front());
  return cox_reduce_columns(multiplied, cox_basis(target_cls), modulus);
}

std::string cox_to_string(const Poly& p, SurfaceKind kind) {
  static const char* hirz[4] = {"u", "v", "t0", "t1"};
  static const char* plane[3] = {"y0", "y1", "y2"};
  if (p.is_zero()) return "0";
  std::ostringstream os;
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
    bool firstv = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << (kind == SurfaceKind::Hirzebruch ? hirz[i] : plane[i]);
      if (m.exps[i] > 1) os << "^" << m.exps[i];
    }
  }
  return os.str();
}

}  // namespace apw
