#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apw/matrix.hpp"
#include "apw/poly.hpp"

namespace apw {

enum class SurfaceKind { Hirzebruch, ProjectivePlane };

/// Divisor class a Cox monomial can have: aC0 + bf on a Hirzebruch surface
/// (grading deg t0 = deg t1 = f, deg u = C0, deg v = C0 + e·f), or a plain
/// degree on the plane (stored in b, with a = 0).
struct CoxClass {
  SurfaceKind kind = SurfaceKind::Hirzebruch;
  int e = 0;
  int a = 0;
  int b = 0;

  bool operator==(const CoxClass& other) const = default;
  CoxClass operator+(const CoxClass& other) const;
  CoxClass operator-(const CoxClass& other) const;
  CoxClass scaled(int j) const { return {kind, e, a * j, b * j}; }
};

CoxClass hirzebruch_class(int e, int a, int b);
CoxClass plane_class(int degree);

/// Monomial basis of the space of sections of a Cox class. Hirzebruch
/// variables are ordered (u, v, t0, t1); the plane uses (y0, y1, y2).
/// Listing: for aC0+bf, k = v-exponent ascending, t0-exponent descending
/// within each k; the plane lists by the graded basis order.
struct CoxBasis {
  CoxClass cls;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  std::size_t index_of(const Monomial& m) const;  // throws if absent
  int num_cox_vars() const {
    return cls.kind == SurfaceKind::Hirzebruch ? 4 : 3;
  }
};

CoxBasis cox_basis(const CoxClass& cls);

/// Class of a single Cox monomial under the grading above.
CoxClass cox_class_of(SurfaceKind kind, int e, const Monomial& m);

/// Columns are the products m1*m2 of the input pairs written in the basis of
/// their (common) target class, reduced modulo g·(sections of the complement
/// class) when a modulus g is supplied. Pairs landing in different classes
/// are an input error.
Matrix cox_multiply_and_reduce(
    SurfaceKind kind, int e,
    const std::vector<std::pair<Monomial, Monomial>>& products,
    const std::optional<Poly>& modulus);

/// Shared core: given already-multiplied Cox monomials in `target`'s class,
/// produce the (reduced) coordinate columns. The matrix has one row per
/// basis monomial of the target class.
Matrix cox_reduce_columns(const std::vector<Monomial>& products,
                          const CoxBasis& target,
                          const std::optional<Poly>& modulus);

/// Section count of a Cox class; matches the basis size by construction.
long cox_section_count(const CoxClass& cls);

/// Printing with the surface's variable names (u, v, t0, t1 or y0, y1, y2).
std::string cox_to_string(const Poly& p, SurfaceKind kind);

}  // namespace apw
