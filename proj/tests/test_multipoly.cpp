#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apw/cox.hpp"
#include "apw/poly.hpp"
#include "apw/rng.hpp"
#include "support/oracles.hpp"

using namespace apw;

namespace {

Poly op(const std::string& text, int nv) { return parse_poly(text, nv); }
Poly pt(const std::string& text, int nv) { return parse_poly(text, nv); }

}  // namespace

TEST_CASE("monomial order lists x0-dominant first") {
  const GradedBasis& b = graded_basis(2, 4);
  REQUIRE(b.size() == 5);
  CHECK(b.monomials.front().exps == std::vector<int>{4, 0});
  CHECK(b.monomials.back().exps == std::vector<int>{0, 4});
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    CHECK(b.monomials[i] < b.monomials[i + 1]);
  CHECK(graded_basis(3, 5).size() == 21);
}

TEST_CASE("apolar action on monomials") {
  CHECK(apolar_apply(op("d0", 1), pt("x0^3", 1)) == pt("3*x0^2", 1));
  CHECK(apolar_apply(op("d0*d1", 2), pt("x0^4+x1^4", 2)).is_zero());
  // a! C(b,a) with a = b = (1,1)
  Poly r = apolar_apply(op("d0*d1", 2), pt("x0*x1", 2));
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->second == 1);
  CHECK(r.terms().begin()->first.degree() == 0);

  CHECK_THROWS_AS(apolar_apply(op("d0", 1), pt("x0*x1", 2)), input_error);
}

TEST_CASE("apolar action against the differentiation oracle") {
  SplitMix64 rng(5);
  for (int it = 0; it < 30; ++it) {
    const int nv = 1 + static_cast<int>(rng.next() % 3);
    const int d = 2 + static_cast<int>(rng.next() % 3);
    const int e = 1 + static_cast<int>(rng.next() % d);
    Poly f = oracle::random_form(rng, nv, d);
    const GradedBasis& te = graded_basis(nv, e);
    const Monomial& a = te.monomials[rng.next() % te.size()];
    Poly result = apolar_apply(Poly::term(RingSide::Operator, a, 1), f);
    oracle::DenseTerms expected =
        oracle::apply_operator_monomial(oracle::to_dense(f), a.exps);
    CHECK(oracle::to_dense(result) == expected);
  }
}

TEST_CASE("module structure: D1.(D2.f) = (D1 D2).f") {
  SplitMix64 rng(9);
  for (int it = 0; it < 25; ++it) {
    const int nv = 1 + static_cast<int>(rng.next() % 3);
    Poly f = oracle::random_form(rng, nv, 4);
    Poly d1(RingSide::Operator, nv), d2(RingSide::Operator, nv);
    for (const auto& m : graded_basis(nv, 1).monomials)
      d1.add_term(m, Rational(rng.range(-3, 3)));
    for (const auto& m : graded_basis(nv, 2).monomials)
      d2.add_term(m, Rational(rng.range(-3, 3)));
    if (d1.is_zero() || d2.is_zero()) continue;
    CHECK(apolar_apply(d1, apolar_apply(d2, f)) == apolar_apply(d1 * d2, f));
  }
}

TEST_CASE("pairing") {
  CHECK(pairing(pt("x0^2", 2), op("d0^2", 2)) == 2);
  CHECK(pairing(pt("x0*x1", 2), op("d0^2", 2)) == 0);
  CHECK_THROWS_AS(pairing(pt("x0^2", 2), op("d0", 2)), input_error);

  // f_c^b pairs to zero against D of the same degree iff D(c) = 0
  LinearFormPoint c({Rational(1), Rational(1), Rational(1)});
  Poly fc2 = power_of_linear_form(c, 2);
  Poly d = op("d0^2-d1^2", 3);  // (d0-d1)(d0+d1); vanishes at c
  CHECK(pairing(fc2, d) == 0);
  Poly dn = op("d0^2", 3);
  CHECK(pairing(fc2, dn) != 0);
}

TEST_CASE("pairing Gram matrix is diagonal with entries a!") {
  const int nv = 3, d = 3;
  const GradedBasis& b = graded_basis(nv, d);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Rational g = pairing(Poly::term(RingSide::Point, b.monomials[i], 1),
                                 Poly::term(RingSide::Operator, b.monomials[j], 1));
      if (i == j)
        CHECK(g == Rational(multi_factorial(b.monomials[i])));
      else
        CHECK(g == 0);
    }
}

TEST_CASE("catalecticant ranks") {
  Poly f = pt("x0^4+x1^4", 2);
  Matrix c2 = catalecticant(f, 2);
  CHECK(c2.rows() == 3);
  CHECK(c2.cols() == 3);
  CHECK(rank(c2) == 2);

  CHECK(rank(catalecticant(pt("x0^5", 2), 2)) == 1);
  CHECK(rank(catalecticant(pt("x0^3*x1", 2), 1)) == 2);

  CHECK_THROWS_AS(catalecticant(f, 5), input_error);
}

TEST_CASE("catalecticant rank symmetry (Gorenstein)") {
  SplitMix64 rng(13);
  for (int it = 0; it < 20; ++it) {
    const int nv = 1 + static_cast<int>(rng.next() % 3);
    const int d = 2 + static_cast<int>(rng.next() % 4);
    Poly f = oracle::random_form(rng, nv, d);
    for (int e = 0; e <= d; ++e)
      CHECK(rank(catalecticant(f, e)) == rank(catalecticant(f, d - e)));
  }
}

TEST_CASE("powers of linear forms") {
  CHECK(power_of_linear_form(LinearFormPoint({Rational(1), Rational(0)}), 4) ==
        pt("x0^4", 2));
  CHECK(power_of_linear_form(LinearFormPoint({Rational(1), Rational(1)}), 2) ==
        pt("x0^2+2*x0*x1+x1^2", 2));
  CHECK(power_of_linear_form(LinearFormPoint({Rational(1), Rational(-1)}), 3) ==
        pt("x0^3-3*x0^2*x1+3*x0*x1^2-x1^3", 2));
  CHECK_THROWS_AS(power_of_linear_form(LinearFormPoint({Rational(1)}), 0),
                  input_error);
}

TEST_CASE("power of a linear form pairs to d! times evaluation") {
  SplitMix64 rng(17);
  for (int it = 0; it < 20; ++it) {
    const int nv = 2 + static_cast<int>(rng.next() % 2);
    const int d = 2 + static_cast<int>(rng.next() % 3);
    std::vector<Rational> coords(static_cast<std::size_t>(nv));
    for (auto& x : coords) x = Rational(rng.range(-4, 4));
    bool all_zero = true;
    for (const auto& x : coords) all_zero = all_zero && sgn(x) == 0;
    if (all_zero) coords[0] = 1;
    LinearFormPoint c(coords);
    Poly power = power_of_linear_form(c, d);
    Poly d_op(RingSide::Operator, nv);
    for (const auto& m : graded_basis(nv, d).monomials)
      d_op.add_term(m, Rational(rng.range(-3, 3)));
    if (d_op.is_zero()) continue;
    CHECK(pairing(power, d_op) == Rational(factorial(d)) * evaluate(d_op, c));
  }
}

TEST_CASE("polynomial text grammar round-trips") {
  const char* inputs[] = {
      "x0^4+x1^4", "d0^2*d1", "3*x0^2*x1 - 1/2*x1^3", "-x0+x1",
      "7", "x0^3*x1", "2/3*d0*d1^2 + d2^3",
  };
  for (const char* text : inputs) {
    Poly p = parse_poly(text);
    Poly again = parse_poly(to_string(p), p.num_vars());
    CHECK(again == p);
  }
  CHECK(to_string(Poly::zero(RingSide::Point, 2)) == "0");
  CHECK(parse_poly("x0 + x0") == parse_poly("2*x0"));

  CHECK_THROWS_AS(parse_poly("x0 + y1"), input_error);
  CHECK_THROWS_AS(parse_poly("x0 * + x1"), input_error);
  CHECK_THROWS_AS(parse_poly("x0+d1"), input_error);
  CHECK_THROWS_AS(parse_poly(""), input_error);
  CHECK_THROWS_AS(parse_poly("1/0"), input_error);
}

TEST_CASE("printer emits terms in basis order") {
  Poly p = parse_poly("x1^2 + x0^2 - 2*x0*x1");
  CHECK(to_string(p) == "x0^2 - 2*x0*x1 + x1^2");
  CHECK(to_string(parse_poly("-3/2*x0")) == "-3/2*x0");
}

TEST_CASE("cox bases") {
  // F_1, class C0 + 2f: sections u t0^2, u t0 t1, u t1^2, v t0, v t1
  CoxBasis b = cox_basis(hirzebruch_class(1, 1, 2));
  REQUIRE(b.size() == 5);
  CHECK(b.monomials[0].exps == std::vector<int>{1, 0, 2, 0});
  CHECK(b.monomials[1].exps == std::vector<int>{1, 0, 1, 1});
  CHECK(b.monomials[2].exps == std::vector<int>{1, 0, 0, 2});
  CHECK(b.monomials[3].exps == std::vector<int>{0, 1, 1, 0});
  CHECK(b.monomials[4].exps == std::vector<int>{0, 1, 0, 1});

  CHECK(cox_basis(hirzebruch_class(0, 1, 1)).size() == 4);  // Segre quadric
  CHECK(cox_basis(plane_class(2)).size() == 6);

  CHECK_THROWS_AS(cox_basis(hirzebruch_class(1, -1, 2)), input_error);
}

TEST_CASE("cox basis sizes match the section-count formula") {
  for (int e = 0; e <= 3; ++e)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 8; ++b) {
        const CoxClass cls = hirzebruch_class(e, a, b);
        CHECK(static_cast<long>(cox_basis(cls).size()) == cox_section_count(cls));
      }
  // |C0 + a1 f| on F_{a1-a2} has a1 + a2 + 2 sections
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2)
      CHECK(cox_basis(hirzebruch_class(a1 - a2, 1, a1)).size() ==
            static_cast<std::size_t>(a1 + a2 + 2));
}

TEST_CASE("cox multiplication and reduction") {
  // (u t0)(u t1) on F_0 in class 2C0+2f: the unit column of u^2 t0 t1
  Monomial ut0(std::vector<int>{1, 0, 1, 0});
  Monomial ut1(std::vector<int>{1, 0, 0, 1});
  Matrix m = cox_multiply_and_reduce(SurfaceKind::Hirzebruch, 0, {{ut0, ut1}},
                                     std::nullopt);
  const CoxBasis target = cox_basis(hirzebruch_class(0, 2, 2));
  REQUIRE(m.rows() == target.size());
  REQUIRE(m.cols() == 1);
  Monomial uutt(std::vector<int>{2, 0, 1, 1});
  for (std::size_t i = 0; i < m.rows(); ++i)
    CHECK(m.at(i, 0) == (i == target.index_of(uutt) ? Rational(1) : Rational(0)));

  // a modulus whose multiples span the whole target piece reduces everything
  // to zero; the constant 1 does exactly that
  Poly one(RingSide::Cox, 4);
  one.add_term(Monomial(std::vector<int>{0, 0, 0, 0}), 1);
  Matrix z = cox_multiply_and_reduce(SurfaceKind::Hirzebruch, 0, {{ut0, ut1}},
                                     std::optional<Poly>(one));
  for (std::size_t i = 0; i < z.rows(); ++i) CHECK(z.at(i, 0) == 0);

  // pairwise products of the 5 sections of C0+2f on F_1 span a rank-12 space
  CoxBasis b = cox_basis(hirzebruch_class(1, 1, 2));
  std::vector<std::pair<Monomial, Monomial>> pairs;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      pairs.emplace_back(b.monomials[i], b.monomials[j]);
  Matrix prod = cox_multiply_and_reduce(SurfaceKind::Hirzebruch, 1, pairs,
                                        std::nullopt);
  CHECK(prod.rows() == cox_basis(hirzebruch_class(1, 2, 4)).size());
  CHECK(rank(prod) == 12);

  // mismatched classes are rejected
  Monomial vt0(std::vector<int>{0, 1, 1, 0});
  CHECK_THROWS_AS(cox_multiply_and_reduce(SurfaceKind::Hirzebruch, 1,
                                          {{ut0, ut1}, {ut0, vt0}},
                                          std::nullopt),
                  input_error);
}
