#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apw/matrix.hpp"
#include "apw/monomial.hpp"
#include "apw/rational.hpp"

namespace apw {

/// Which polynomial ring a Poly lives in. Point is the ring S of forms in
/// x0..xN, Operator the ring T of differential operators d0..dN acting on S.
/// Cox covers section rings of surfaces (variables u,v,t0,t1 or y0,y1,y2).
enum class RingSide { Point, Operator, Cox };

/// Sparse multivariate polynomial: monomial -> nonzero coefficient.
/// Terms iterate in the fixed monomial order, so printing and coordinate
/// extraction are deterministic.
class Poly {
 public:
  Poly(RingSide side, int num_vars) : side_(side), num_vars_(num_vars) {}

  static Poly zero(RingSide side, int num_vars) { return Poly(side, num_vars); }
  static Poly term(RingSide side, const Monomial& m, const Rational& c);
  static Poly variable(RingSide side, int num_vars, int var);

  RingSide side() const { return side_; }
  int num_vars() const { return num_vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous polynomial; -1 for zero.
  int degree() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;

  bool operator==(const Poly& other) const = default;

 private:
  RingSide side_;
  int num_vars_;
  std::map<Monomial, Rational> terms_;
};

/// True when f and g span the same line (g = c·f for some nonzero c).
bool proportional(const Poly& f, const Poly& g);

/// The contraction action of T on S: d^a . x^b = (prod_i b_i!/(b_i-a_i)!) x^{b-a}
/// when a <= b, zero otherwise, extended bilinearly. Iterated differentiation,
/// with the multinomial bookkeeping exact.
Poly apolar_apply(const Poly& op, const Poly& f);

/// Perfect pairing S_d x T_d -> Q; the Gram matrix on monomial bases is
/// diagonal with entries a!.
Rational pairing(const Poly& f, const Poly& op);

/// Matrix of D |-> D.f from T_e (columns) to S_{d-e} (rows) in the graded
/// monomial bases. Its right kernel is the degree-e piece of the apolar ideal.
Matrix catalecticant(const Poly& f, int e);

/// Point of the dual projective space, stored with the first nonzero
/// coordinate normalised to 1.
struct LinearFormPoint {
  std::vector<Rational> coords;
  explicit LinearFormPoint(std::vector<Rational> c);
  int num_vars() const { return static_cast<int>(coords.size()); }
  bool operator==(const LinearFormPoint& other) const = default;
};

/// (c0 x0 + ... + cN xN)^d expanded by the multinomial theorem.
Poly power_of_linear_form(const LinearFormPoint& c, int d);

/// Plain evaluation of the polynomial at the point's coordinates.
Rational evaluate(const Poly& p, const LinearFormPoint& c);

/// Coordinates of a homogeneous polynomial in the listing order of `basis`.
std::vector<Rational> coords_in(const Poly& p, const GradedBasis& basis);
Poly poly_from_coords(RingSide side, const GradedBasis& basis,
                      const std::vector<Rational>& coords);

/// Text grammar: terms `coeff*mono` joined by '+'/'-'; coeff an integer or
/// p/q; mono like `x0^2*x1` (point ring) or `d0^2*d1` (operator ring).
/// Whitespace insignificant. Round-trips with to_string below.
Poly parse_poly(const std::string& text, std::optional<int> num_vars = {});
std::string to_string(const Poly& p);
std::string to_string(const LinearFormPoint& p);

}  // namespace apw
