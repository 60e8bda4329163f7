#include "apw/surfaces.hpp"

#include "apw/errors.hpp"
#include "apw/matrix.hpp"

namespace apw {

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  if (e != other.e) throw input_error("divisor classes on different surfaces");
  return {e, a + other.a, b + other.b};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  if (e != other.e) throw input_error("divisor classes on different surfaces");
  return {e, a - other.a, b - other.b};
}

long intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.e != d2.e) throw input_error("intersecting classes on different surfaces");
  return static_cast<long>(d1.a) * d2.b + static_cast<long>(d2.a) * d1.b -
         static_cast<long>(d1.e) * d1.a * d2.a;
}

DivisorClass canonical_class(int e) {
  if (e < 0) throw input_error("Hirzebruch parameter must be >= 0");
  return {e, -2, -2 - e};
}

long adjunction_genus(const DivisorClass& d) {
  const long twice = intersect(d, d + canonical_class(d.e));
  check_internal(twice % 2 == 0, "adjunction degree is odd");
  return 1 + twice / 2;
}

DivisorClass subcanonical_class(int s, int a1, int a2) {
  if (s < 2) throw input_error("subcanonical level must be >= 2");
  if (!(a1 >= a2 && a2 >= 0)) throw input_error("requires a1 >= a2 >= 0");
  return {a1 - a2, s + 2, (s + 1) * a1 - a2 + 2};
}

CurveInvariants curve_invariants(int s, int a1, int a2) {
  CurveInvariants ci;
  ci.cls = subcanonical_class(s, a1, a2);
  ci.genus = static_cast<long>(s + 1) * (static_cast<long>(s) * (a1 + a2) + 2) / 2;
  ci.degree = static_cast<long>(s + 1) * (a1 + a2) + 2;
  ci.smooth_ok = (s + 1) * a2 + 2 >= a1;
  ci.very_ample_ok = ci.cls.a > 0 && ci.cls.b > ci.cls.a * ci.cls.e;
  ci.gonality_pencil_degree = s + 2;
  ci.ambient_dim = a1 + a2 + 1;
  check_internal(ci.genus == adjunction_genus(ci.cls),
                 "genus formula disagrees with adjunction");
  const DivisorClass hyperplane{ci.cls.e, 1, a1};
  check_internal(ci.degree == intersect(ci.cls, hyperplane),
                 "degree formula disagrees with the intersection form");
  return ci;
}

Cohomology line_bundle_cohomology(int e, const DivisorClass& d) {
  if (d.e != e) throw input_error("divisor class on a different surface");
  auto h0_of = [](const DivisorClass& c) -> long {
    if (c.a < 0) return 0;
    long n = 0;
    for (int k = 0; k <= c.a; ++k) n += std::max(0, c.b - k * c.e + 1);
    return n;
  };
  Cohomology h;
  h.h0 = h0_of(d);
  h.h2 = h0_of(canonical_class(e) - d);
  const long chi = 1 + intersect(d, d - canonical_class(e)) / 2;
  h.h1 = h.h0 + h.h2 - chi;
  check_internal(h.h1 >= 0, "negative h1: cohomology formulas are inconsistent");
  return h;
}

CoxClass SurfaceEmbedding::hyperplane_class(int j) const {
  if (kind == Kind::Scroll) return hirzebruch_class(e(), j, j * a1);
  return plane_class(j * m);
}

SurfaceEmbedding build_scroll(int a1, int a2) {
  if (!(a1 >= a2 && a2 >= 0) || a1 + a2 < 1)
    throw input_error("scroll requires a1 >= a2 >= 0 and a1 + a2 >= 1");
  SurfaceEmbedding s;
  s.kind = SurfaceEmbedding::Kind::Scroll;
  s.a1 = a1;
  s.a2 = a2;
  s.N = a1 + a2 + 1;
  s.basis = cox_basis(hirzebruch_class(a1 - a2, 1, a1));
  check_internal(static_cast<int>(s.basis.size()) == s.N + 1,
                 "scroll section count != N+1");
  return s;
}

SurfaceEmbedding build_veronese(int m) {
  if (m < 1) throw input_error("Veronese degree must be >= 1");
  SurfaceEmbedding s;
  s.kind = SurfaceEmbedding::Kind::Veronese;
  s.m = m;
  s.N = static_cast<int>(binomial(m + 2, 2).get_si()) - 1;
  s.basis = cox_basis(plane_class(m));
  check_internal(static_cast<int>(s.basis.size()) == s.N + 1,
                 "Veronese section count != N+1");
  return s;
}

Monomial ambient_to_cox(const SurfaceEmbedding& s, const Monomial& ambient) {
  check_internal(ambient.num_vars() == s.N + 1, "ambient monomial has wrong rank");
  std::vector<int> exps(static_cast<std::size_t>(s.basis.num_cox_vars()), 0);
  Monomial out(std::move(exps));
  for (int i = 0; i <= s.N; ++i) {
    const int k = ambient.exps[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    const Monomial& cox = s.basis.monomials[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < out.exps.size(); ++j)
      out.exps[j] += k * cox.exps[j];
  }
  return out;
}

std::vector<Poly> surface_ideal_piece(const SurfaceEmbedding& s, int j) {
  if (j < 1) throw input_error("surface_ideal_piece: degree must be >= 1");
  const GradedBasis& sym = graded_basis(s.N + 1, j);
  std::vector<Monomial> products;
  products.reserve(sym.size());
  for (const Monomial& m : sym.monomials) products.push_back(ambient_to_cox(s, m));
  const CoxBasis target = cox_basis(s.hyperplane_class(j));
  const Matrix restriction = cox_reduce_columns(products, target, std::nullopt);
  std::vector<Poly> out;
  for (const auto& v : kernel_basis(restriction))
    out.push_back(poly_from_coords(RingSide::Operator, sym, v));
  return out;
}

}  // namespace apw
