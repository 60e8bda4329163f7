#pragma once

#include <vector>

#include "apw/cox.hpp"
#include "apw/poly.hpp"

namespace apw {

/// Divisor class aC0 + bf on the Segre-Hirzebruch surface F_e. Classes on
/// different F_e never interoperate; mixing them is a hard error.
struct DivisorClass {
  int e = 0;
  int a = 0;
  int b = 0;

  bool operator==(const DivisorClass& other) const = default;
  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass scaled(int j) const { return {e, a * j, b * j}; }
};

/// Intersection form: C0·C0 = -e, f·f = 0, C0·f = 1.
long intersect(const DivisorClass& d1, const DivisorClass& d2);

/// K = -2C0 + (-2-e)f.
DivisorClass canonical_class(int e);

/// Adjunction: g = 1 + D·(D+K)/2.
long adjunction_genus(const DivisorClass& d);

/// Class of an s-subcanonical curve w.r.t. |C0 + a1 f| on F_{a1-a2}:
/// (s+2)C0 + ((s+1)a1 - a2 + 2)f.
DivisorClass subcanonical_class(int s, int a1, int a2);

struct CurveInvariants {
  DivisorClass cls;
  long genus = 0;
  long degree = 0;
  bool smooth_ok = false;       // (s+1)a2 + 2 >= a1
  bool very_ample_ok = false;   // a > 0 and b > a e
  int gonality_pencil_degree = 0;  // C·f = s+2
  int ambient_dim = 0;             // N = a1 + a2 + 1
};

/// Genus and degree of the subcanonical curve by the closed formulas, with
/// the genus cross-checked against adjunction.
CurveInvariants curve_invariants(int s, int a1, int a2);

struct Cohomology {
  long h0 = 0;
  long h1 = 0;
  long h2 = 0;
};

/// h0 by the section-count formula, h2 by Serre duality, h1 from
/// Riemann-Roch; every value asserted non-negative.
Cohomology line_bundle_cohomology(int e, const DivisorClass& d);

/// A rational normal scroll S_{a1,a2} or a Veronese surface, with the Cox
/// monomial parametrisation of its embedding. The N+1 basis monomials are
/// the ambient coordinates.
struct SurfaceEmbedding {
  enum class Kind { Scroll, Veronese };
  Kind kind = Kind::Scroll;
  int a1 = 0, a2 = 0;  // scroll parameters (a1 >= a2)
  int m = 0;           // Veronese degree
  int N = 0;           // ambient projective dimension
  CoxBasis basis;      // sections of the embedding class

  int e() const { return kind == Kind::Scroll ? a1 - a2 : 0; }
  long surface_degree() const {
    return kind == Kind::Scroll ? a1 + a2 : static_cast<long>(m) * m;
  }
  SurfaceKind cox_kind() const {
    return kind == Kind::Scroll ? SurfaceKind::Hirzebruch
                                : SurfaceKind::ProjectivePlane;
  }
  /// Class of the degree-j ambient piece restricted to the surface.
  CoxClass hyperplane_class(int j = 1) const;
};

SurfaceEmbedding build_scroll(int a1, int a2);
SurfaceEmbedding build_veronese(int m);

/// Cox monomial behind a degree-j monomial in the ambient coordinates.
Monomial ambient_to_cox(const SurfaceEmbedding& s, const Monomial& ambient);

/// Basis of I(S)_j: kernel of Sym^j(ambient coordinates) -> sections of the
/// j-th multiple of the embedding class. Returned in the operator ring of
/// the ambient space (N+1 variables).
std::vector<Poly> surface_ideal_piece(const SurfaceEmbedding& s, int j);

}  // namespace apw
