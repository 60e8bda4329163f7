#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apw/surfaces.hpp"

using namespace apw;

TEST_CASE("intersection form") {
  for (int e = 0; e <= 4; ++e) {
    DivisorClass c0{e, 1, 0}, f{e, 0, 1};
    CHECK(intersect(c0, c0) == -e);
    CHECK(intersect(f, f) == 0);
    CHECK(intersect(c0, f) == 1);
  }
  // hyperplane self-intersection = degree of the scroll
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2) {
      DivisorClass h{a1 - a2, 1, a1};
      CHECK(intersect(h, h) == a1 + a2);
    }
  CHECK_THROWS_AS(intersect(DivisorClass{0, 1, 0}, DivisorClass{1, 1, 0}),
                  input_error);
}

TEST_CASE("intersection is symmetric and bilinear") {
  for (int e = 0; e <= 3; ++e)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        DivisorClass d1{e, a, b}, d2{e, b - 1, a + 2}, d3{e, 1 - a, b};
        CHECK(intersect(d1, d2) == intersect(d2, d1));
        CHECK(intersect(d1 + d3, d2) == intersect(d1, d2) + intersect(d3, d2));
      }
}

TEST_CASE("canonical class and adjunction") {
  CHECK(canonical_class(0) == DivisorClass{0, -2, -2});
  CHECK(canonical_class(1) == DivisorClass{1, -2, -3});
  for (int e = 0; e <= 6; ++e) {
    const DivisorClass k = canonical_class(e);
    CHECK(intersect(k, k) == 8);
    CHECK(adjunction_genus(DivisorClass{e, 1, 0}) == 0);   // C0
    CHECK(adjunction_genus(DivisorClass{e, 0, 1}) == 0);   // fibre
  }
}

TEST_CASE("adjunction on multiples of the hyperplane class") {
  // (i+2)(C0 + a1 f) has genus C(i+2,2)·deg(S) - (i+1)
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= a1; ++a2)
      for (int i = 0; i <= 3; ++i) {
        const DivisorClass h{a1 - a2, 1, a1};
        const long deg = a1 + a2;
        const long expected =
            binomial(i + 2, 2).get_si() * deg - (i + 1);
        CHECK(adjunction_genus(h.scaled(i + 2)) == expected);
      }
}

TEST_CASE("subcanonical classes") {
  CHECK(subcanonical_class(2, 1, 1) == DivisorClass{0, 4, 4});
  CHECK(subcanonical_class(2, 2, 1) == DivisorClass{1, 4, 7});
  CHECK(subcanonical_class(3, 1, 1) == DivisorClass{0, 5, 5});
  CHECK_THROWS_AS(subcanonical_class(1, 1, 1), input_error);
  CHECK_THROWS_AS(subcanonical_class(2, 1, 2), input_error);
}

TEST_CASE("curve invariants") {
  CurveInvariants ci = curve_invariants(2, 1, 1);
  CHECK(ci.genus == 9);
  CHECK(ci.degree == 8);
  CHECK(ci.smooth_ok);
  CHECK(ci.gonality_pencil_degree == 4);
  CHECK(ci.ambient_dim == 3);

  ci = curve_invariants(2, 2, 1);
  CHECK(ci.genus == 12);
  CHECK(ci.degree == 11);
  CHECK(ci.smooth_ok);

  ci = curve_invariants(2, 6, 1);
  CHECK_FALSE(ci.smooth_ok);  // 3a2 + 2 = 5 < a1 = 6

  ci = curve_invariants(3, 1, 1);
  CHECK(ci.genus == 16);
  CHECK(ci.degree == 10);
}

TEST_CASE("the two genus formulas agree on the whole window") {
  for (int s = 2; s <= 5; ++s)
    for (int a1 = 1; a1 <= 5; ++a1)
      for (int a2 = 1; a2 <= a1; ++a2) {
        if (a1 > (s + 1) * a2 + 2) continue;
        const CurveInvariants ci = curve_invariants(s, a1, a2);
        CHECK(ci.genus == adjunction_genus(subcanonical_class(s, a1, a2)));
        CHECK(ci.gonality_pencil_degree ==
              intersect(ci.cls, DivisorClass{ci.cls.e, 0, 1}));
      }
}

TEST_CASE("line bundle cohomology") {
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2) {
      const int e = a1 - a2;
      Cohomology h = line_bundle_cohomology(e, DivisorClass{e, 1, a1});
      CHECK(h.h0 == a1 + a2 + 2);
      CHECK(h.h1 == 0);
    }
  for (int e = 0; e <= 3; ++e) {
    Cohomology hk = line_bundle_cohomology(e, canonical_class(e));
    CHECK(hk.h0 == 0);
    CHECK(hk.h1 == 0);
    CHECK(hk.h2 == 1);
    Cohomology ho = line_bundle_cohomology(e, DivisorClass{e, 0, 0});
    CHECK(ho.h0 == 1);
    CHECK(ho.h1 == 0);
    CHECK(ho.h2 == 0);
  }
}

TEST_CASE("Serre duality and Riemann-Roch on a grid") {
  for (int e = 0; e <= 4; ++e)
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) {
        const DivisorClass d{e, a, b};
        const DivisorClass kd = canonical_class(e) - d;
        const Cohomology hd = line_bundle_cohomology(e, d);
        const Cohomology hkd = line_bundle_cohomology(e, kd);
        CHECK(hd.h0 == hkd.h2);
        CHECK(hd.h2 == hkd.h0);
        CHECK(hd.h1 == hkd.h1);
        CHECK(hd.h1 >= 0);
        const long chi = 1 + intersect(d, d - canonical_class(e)) / 2;
        CHECK(hd.h0 - hd.h1 + hd.h2 == chi);
      }
}

TEST_CASE("embeddings") {
  SurfaceEmbedding quadric = build_scroll(1, 1);
  CHECK(quadric.N == 3);
  CHECK(quadric.surface_degree() == 2);

  SurfaceEmbedding cubic = build_scroll(2, 1);
  CHECK(cubic.N == 4);
  CHECK(cubic.surface_degree() == 3);

  SurfaceEmbedding veronese = build_veronese(2);
  CHECK(veronese.N == 5);
  CHECK(veronese.surface_degree() == 4);

  CHECK_THROWS_AS(build_scroll(0, 0), input_error);
  CHECK_THROWS_AS(build_scroll(1, 2), input_error);
  CHECK_THROWS_AS(build_veronese(0), input_error);
}

TEST_CASE("scrolls have minimal degree") {
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2) {
      SurfaceEmbedding s = build_scroll(a1, a2);
      CHECK(s.surface_degree() == s.N - 1);
      const DivisorClass h{s.e(), 1, a1};
      CHECK(intersect(h, h) == s.N - 1);
    }
}

TEST_CASE("surface ideal pieces") {
  CHECK(surface_ideal_piece(build_scroll(1, 1), 2).size() == 1);
  CHECK(surface_ideal_piece(build_scroll(2, 1), 1).empty());
  CHECK(surface_ideal_piece(build_scroll(2, 1), 2).size() == 3);
  CHECK(surface_ideal_piece(build_veronese(2), 2).size() == 6);

  // the quadrics actually vanish on the parametrisation: check by
  // substituting the Cox monomials into each quadric symbolically
  SurfaceEmbedding s = build_scroll(2, 1);
  for (const Poly& q : surface_ideal_piece(s, 2)) {
    Poly pullback(RingSide::Cox, 4);
    for (const auto& [mono, c] : q.terms()) {
      Poly prod(RingSide::Cox, 4);
      prod.add_term(Monomial(std::vector<int>{0, 0, 0, 0}), c);
      for (int var = 0; var <= s.N; ++var)
        for (int k = 0; k < mono.exps[static_cast<std::size_t>(var)]; ++k)
          prod = prod * Poly::term(RingSide::Cox,
                                   s.basis.monomials[static_cast<std::size_t>(var)], 1);
      pullback += prod;
    }
    CHECK(pullback.is_zero());
  }
}

TEST_CASE("very-ampleness fails exactly on the window boundary") {
  // a1 = (s+1)a2 + 2: still smooth, but b = a·e
  const CurveInvariants boundary = curve_invariants(2, 8, 2);
  CHECK(boundary.smooth_ok);
  CHECK_FALSE(boundary.very_ample_ok);
  const CurveInvariants inside = curve_invariants(2, 7, 2);
  CHECK(inside.smooth_ok);
  CHECK(inside.very_ample_ok);
}
