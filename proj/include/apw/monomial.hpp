#pragma once

#include <cstddef>
#include <vector>

#include "apw/rational.hpp"

namespace apw {

/// Exponent vector, one entry per variable. The total order is graded
/// lexicographic: lower degree first, and inside a degree the x0-dominant
/// monomial comes first (so x0^d is the least element of its degree block).
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial unit(int num_vars, int var, int power = 1);

  int degree() const;
  int num_vars() const { return static_cast<int>(exps.size()); }

  bool divides(const Monomial& other) const;              // this | other
  Monomial operator*(const Monomial& other) const;        // exponent sum
  Monomial quotient(const Monomial& divisor) const;       // exponent diff

  bool operator==(const Monomial& other) const = default;
};

bool operator<(const Monomial& a, const Monomial& b);

/// Ordered monomial basis of the full degree-d piece of a polynomial ring.
/// Listing order agrees with the Monomial order above.
struct GradedBasis {
  int num_vars = 0;
  int degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  std::size_t index_of(const Monomial& m) const;  // throws if absent
};

/// Cached; references stay valid for the program lifetime. Thread-safe.
const GradedBasis& graded_basis(int num_vars, int degree);

/// Index map for multiplication by one variable:
/// graded_basis(nv, deg)[i] * x_var  ->  graded_basis(nv, deg+1)[table[i]].
const std::vector<std::size_t>& variable_mul_table(int num_vars, int degree,
                                                   int var);

Integer binomial(long n, long k);
Integer factorial(long n);
Integer multi_factorial(const Monomial& m);  // prod over i of exps[i]!

}  // namespace apw
