#include "apw/apolar.hpp"

#include <algorithm>
#include <set>

#include "apw/errors.hpp"
#include "apw/matrix.hpp"
#include "apw/rng.hpp"

namespace apw {

std::size_t ApolarIdeal::dim(int e) const {
  if (e < 1) return 0;
  if (e <= socle_degree) return pieces[static_cast<std::size_t>(e - 1)].dim();
  return graded_basis(num_vars, e).size();  // everything past the socle
}

std::vector<Poly> ApolarIdeal::basis(int e) const {
  std::vector<Poly> out;
  if (e < 1 || e > socle_degree) throw input_error("ideal piece out of stored range");
  const GradedBasis& gb = graded_basis(num_vars, e);
  for (const auto& row : pieces[static_cast<std::size_t>(e - 1)].rows())
    out.push_back(poly_from_coords(RingSide::Operator, gb, row));
  return out;
}

bool ApolarIdeal::degreewise_equal(const ApolarIdeal& other) const {
  if (num_vars != other.num_vars || socle_degree != other.socle_degree)
    return false;
  return pieces == other.pieces;  // RREF bases are canonical per subspace
}

ApolarIdeal perp(const Poly& f) {
  if (f.is_zero()) throw input_error("perp of the zero polynomial");
  if (!f.is_homogeneous() || f.degree() < 1 || f.side() != RingSide::Point)
    throw input_error("perp wants a nonzero homogeneous point-ring form");
  const int d = f.degree();
  ApolarIdeal ideal;
  ideal.num_vars = f.num_vars();
  ideal.socle_degree = d;
  for (int e = 1; e <= d; ++e) {
    RowSpan span(graded_basis(f.num_vars(), e).size());
    for (auto& v : kernel_basis(catalecticant(f, e))) span.insert(std::move(v));
    ideal.pieces.push_back(std::move(span));
  }
  check_internal(ideal.dim(d) + 1 == graded_basis(f.num_vars(), d).size(),
                 "apolar ideal socle is not one-dimensional");
  return ideal;
}

std::vector<int> hilbert_function(const ApolarIdeal& ideal) {
  std::vector<int> hf(static_cast<std::size_t>(ideal.socle_degree) + 1);
  hf[0] = 1;
  for (int e = 1; e <= ideal.socle_degree; ++e)
    hf[static_cast<std::size_t>(e)] =
        static_cast<int>(graded_basis(ideal.num_vars, e).size() - ideal.dim(e));
  return hf;
}

std::vector<int> hilbert_function(const Poly& f) {
  return hilbert_function(perp(f));
}

std::vector<RowSpan> expand_ideal(const std::vector<Poly>& generators,
                                  int num_vars, int cap) {
  if (cap < 1) throw input_error("expand_ideal: cap must be >= 1");
  std::vector<std::vector<const Poly*>> by_degree(static_cast<std::size_t>(cap) + 1);
  for (const Poly& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous() || g.num_vars() != num_vars)
      throw input_error("expand_ideal: generators must be homogeneous, same ring");
    const int dg = g.degree();
    if (dg <= cap) by_degree[static_cast<std::size_t>(dg)].push_back(&g);
  }
  std::vector<RowSpan> pieces;
  pieces.reserve(static_cast<std::size_t>(cap));
  for (int e = 1; e <= cap; ++e) {
    const GradedBasis& gb = graded_basis(num_vars, e);
    RowSpan span(gb.size());
    if (e >= 2) {
      const RowSpan& prev = pieces[static_cast<std::size_t>(e - 2)];
      for (int var = 0; var < num_vars; ++var) {
        const auto& table = variable_mul_table(num_vars, e - 1, var);
        for (const auto& row : prev.rows()) {
          std::vector<Rational> v(gb.size(), Rational(0));
          for (std::size_t i = 0; i < row.size(); ++i)
            if (sgn(row[i]) != 0) v[table[i]] = row[i];
          span.insert(std::move(v));
        }
      }
    }
    for (const Poly* g : by_degree[static_cast<std::size_t>(e)])
      span.insert(coords_in(*g, gb));
    pieces.push_back(std::move(span));
  }
  return pieces;
}

std::map<int, std::vector<Poly>> minimal_generators(const ApolarIdeal& ideal) {
  std::map<int, std::vector<Poly>> gens;
  const int d = ideal.socle_degree;
  const int nv = ideal.num_vars;
  for (int e = 1; e <= d + 1; ++e) {
    const GradedBasis& gb = graded_basis(nv, e);
    RowSpan grown(gb.size());
    if (e >= 2) {
      const RowSpan& prev = ideal.pieces[static_cast<std::size_t>(e - 2)];
      for (int var = 0; var < nv; ++var) {
        const auto& table = variable_mul_table(nv, e - 1, var);
        for (const auto& row : prev.rows()) {
          std::vector<Rational> v(gb.size(), Rational(0));
          for (std::size_t i = 0; i < row.size(); ++i)
            if (sgn(row[i]) != 0) v[table[i]] = row[i];
          grown.insert(std::move(v));
        }
      }
    }
    std::vector<Poly> new_gens;
    if (e <= d) {
      for (const auto& row : ideal.pieces[static_cast<std::size_t>(e - 1)].rows())
        if (grown.insert(row))
          new_gens.push_back(poly_from_coords(RingSide::Operator, gb, row));
    } else {
      // past the socle the ideal is everything
      for (std::size_t i = 0; i < gb.size(); ++i) {
        std::vector<Rational> v(gb.size(), Rational(0));
        v[i] = 1;
        if (grown.insert(v))
          new_gens.push_back(Poly::term(RingSide::Operator, gb.monomials[i], 1));
      }
    }
    if (!new_gens.empty()) gens.emplace(e, std::move(new_gens));
  }
  return gens;
}

ApolarIdeal fermat_perp(int r, int d) {
  if (r < 1) throw input_error("fermat_perp: need at least one variable");
  if (d < 2) throw input_error("fermat_perp: degree must be >= 2");
  std::vector<Poly> gens;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      gens.push_back(
          Poly::term(RingSide::Operator,
                     Monomial::unit(r, i) * Monomial::unit(r, j), 1));
      Poly diff = Poly::term(RingSide::Operator, Monomial::unit(r, i, d), 1);
      diff.add_term(Monomial::unit(r, j, d), -1);
      gens.push_back(std::move(diff));
    }
  ApolarIdeal ideal;
  ideal.num_vars = r;
  ideal.socle_degree = d;
  ideal.pieces = expand_ideal(gens, r, d);
  return ideal;
}

ArtinianGorenstein ArtinianGorenstein::from_ideal(int num_vars, int socle_degree,
                                                  std::vector<RowSpan> pieces) {
  check_internal(static_cast<int>(pieces.size()) == socle_degree,
                 "ideal pieces must cover degrees 1..socle_degree");
  ArtinianGorenstein a;
  a.num_vars = num_vars;
  a.socle_degree = socle_degree;
  a.pieces = std::move(pieces);
  a.hilbert.assign(static_cast<std::size_t>(socle_degree) + 1, 0);
  a.hilbert[0] = 1;
  for (int e = 1; e <= socle_degree; ++e)
    a.hilbert[static_cast<std::size_t>(e)] = static_cast<int>(
        graded_basis(num_vars, e).size() -
        a.pieces[static_cast<std::size_t>(e - 1)].dim());
  if (a.hilbert[static_cast<std::size_t>(socle_degree)] != 1)
    throw structural_error("socle dimension is not one");
  for (int e = 0; e <= socle_degree; ++e)
    if (a.hilbert[static_cast<std::size_t>(e)] !=
        a.hilbert[static_cast<std::size_t>(socle_degree - e)])
      throw structural_error("Hilbert function is not symmetric");
  // socle functional: the kernel of the top ideal piece viewed as row matrix
  const RowSpan& top = a.pieces[static_cast<std::size_t>(socle_degree - 1)];
  Matrix rows = Matrix::from_rows(top.rows());
  if (rows.rows() == 0)
    rows = Matrix(0, graded_basis(num_vars, socle_degree).size());
  std::vector<std::vector<Rational>> kernel;
  if (rows.rows() == 0) {
    check_internal(graded_basis(num_vars, socle_degree).size() == 1,
                   "empty top piece with socle dimension one");
    kernel.push_back({Rational(1)});
  } else {
    kernel = kernel_basis(rows);
  }
  check_internal(kernel.size() == 1, "socle functional is not unique");
  a.socle_functional = std::move(kernel[0]);
  return a;
}

ArtinianGorenstein quotient_by(const ApolarIdeal& ideal) {
  return ArtinianGorenstein::from_ideal(ideal.num_vars, ideal.socle_degree,
                                        ideal.pieces);
}

Poly dual_socle_generator(const ArtinianGorenstein& algebra) {
  const int d = algebra.socle_degree;
  const GradedBasis& gb = graded_basis(algebra.num_vars, d);
  check_internal(algebra.socle_functional.size() == gb.size(),
                 "socle functional has wrong length");
  Poly f(RingSide::Point, algebra.num_vars);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Rational& phi = algebra.socle_functional[i];
    if (sgn(phi) == 0) continue;
    f.add_term(gb.monomials[i], phi / Rational(multi_factorial(gb.monomials[i])));
  }
  check_internal(!f.is_zero(), "dual socle generator vanished");
  const Rational lead = f.terms().begin()->second;
  return f * (Rational(1) / lead);
}

std::vector<Poly> ideal_of_points(const std::vector<LinearFormPoint>& points,
                                  int e) {
  if (points.empty()) throw input_error("ideal_of_points: no points");
  if (e < 0) throw input_error("ideal_of_points: negative degree");
  const int nv = points[0].num_vars();
  for (const auto& p : points)
    if (p.num_vars() != nv) throw input_error("points in different spaces");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw input_error("duplicate points (up to scale)");
  const GradedBasis& gb = graded_basis(nv, e);
  Matrix eval(points.size(), gb.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < gb.size(); ++j) {
      Rational v = 1;
      const Monomial& m = gb.monomials[j];
      for (int var = 0; var < nv; ++var)
        for (int k = 0; k < m.exps[static_cast<std::size_t>(var)]; ++k)
          v *= points[i].coords[static_cast<std::size_t>(var)];
      eval.at(i, j) = v;
    }
  std::vector<Poly> out;
  for (const auto& v : kernel_basis(eval))
    out.push_back(poly_from_coords(RingSide::Operator, gb, v));
  return out;
}

ApolarCertificate is_apolar_scheme(const std::vector<LinearFormPoint>& points,
                                   const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw input_error("is_apolar_scheme wants a nonzero homogeneous form");
  for (int e = 1; e <= f.degree(); ++e)
    for (const Poly& op : ideal_of_points(points, e))
      if (!apolar_apply(op, f).is_zero()) return {false, e};
  return {true, -1};
}

std::optional<std::vector<Rational>> waring_from_points(
    const std::vector<LinearFormPoint>& points, const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw input_error("waring_from_points wants a nonzero homogeneous form");
  if (points.empty()) throw input_error("waring_from_points: no points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw input_error("duplicate points (up to scale)");
  const int d = f.degree();
  const GradedBasis& gb = graded_basis(f.num_vars(), d);
  Matrix powers(gb.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].num_vars() != f.num_vars())
      throw input_error("point dimension mismatch");
    std::vector<Rational> col = coords_in(power_of_linear_form(points[j], d), gb);
    for (std::size_t i = 0; i < gb.size(); ++i) powers.at(i, j) = col[i];
  }
  return solve(powers, coords_in(f, gb));
}

int waring_rank_lower_bound(const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw input_error("waring_rank_lower_bound wants a nonzero homogeneous form");
  int best = 0;
  for (int e = 0; e <= f.degree(); ++e)
    best = std::max(best, static_cast<int>(rank(catalecticant(f, e))));
  return best;
}

// ---------------------------------------------------------------------------
// univariate helpers for the reducedness test

namespace {

using UniPoly = std::vector<Rational>;  // low to high; invariant: no trailing zeros

void strip(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(p[k] * Rational(static_cast<long>(k)));
  strip(d);
  return d;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  check_internal(!b.empty(), "division by zero polynomial");
  while (uni_degree(a) >= uni_degree(b)) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rational inv = Rational(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k];
  return v;
}

// exact division by (t - root); remainder must vanish
UniPoly uni_deflate(const UniPoly& p, const Rational& root) {
  UniPoly q(p.size() - 1);
  Rational carry = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = p[k] + carry * root;
  }
  check_internal(sgn(carry) == 0, "deflation by a non-root");
  return q;
}

// Divisors of |n| from trial division. When the unfactored cofactor exceeds
// the bound it is treated as prime; a missed divisor can only hide a rational
// root, which downgrades the verdict payload, never flips it.
std::vector<Integer> divisors_of(Integer n, bool& complete) {
  complete = true;
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  if (n > 1) {
    Integer p = 2;
    const long kTrialBound = 1 << 20;
    while (p * p <= n && p <= kTrialBound) {
      if (n % p == 0) {
        int mult = 0;
        while (n % p == 0) { n /= p; ++mult; }
        factors.emplace_back(p, mult);
      }
      p += (p == 2) ? 1 : 2;
    }
    if (n > 1) {
      if (n > kTrialBound * static_cast<long>(kTrialBound)) complete = false;
      factors.emplace_back(n, 1);
    }
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= mult; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 8192) { complete = false; break; }
  }
  return divs;
}

// All rational roots (with deflation, so multiplicities are found too).
// `complete` is false when divisor enumeration may have missed candidates.
std::vector<Rational> rational_roots(UniPoly p, bool& complete) {
  complete = true;
  strip(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  while (sgn(p.front()) == 0) {
    roots.push_back(0);
    p.erase(p.begin());
    if (p.size() <= 1) return roots;
  }
  Integer l = 1;
  for (const Rational& c : p) {
    Integer d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> ip;
  for (const Rational& c : p) ip.push_back(Integer(c * Rational(l)));
  bool c0 = true, c1 = true;
  std::vector<Integer> nums = divisors_of(ip.front(), c0);
  std::vector<Integer> dens = divisors_of(ip.back(), c1);
  complete = c0 && c1;
  std::set<Rational> candidates;
  for (const Integer& u : nums)
    for (const Integer& v : dens) {
      Rational q(u, v);
      q.canonicalize();
      candidates.insert(q);
      candidates.insert(-q);
    }
  bool progress = true;
  while (progress && uni_degree(p) >= 1) {
    progress = false;
    for (const Rational& cand : candidates) {
      if (sgn(uni_eval(p, cand)) == 0) {
        roots.push_back(cand);
        p = uni_deflate(p, cand);
        progress = true;
        break;
      }
    }
  }
  return roots;
}

// smallest monic p with p(M) = 0, via the first linear dependency among
// flattened powers of M
UniPoly minimal_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  check_internal(n == m.cols(), "minimal polynomial of a non-square matrix");
  auto flatten = [n](const Matrix& a) {
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
    return v;
  };
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a.at(i, k)) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(b.at(k, j)) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  };
  std::vector<Matrix> powers{Matrix::identity(n)};
  RowSpan span(n * n);
  span.insert(flatten(powers[0]));
  for (;;) {
    Matrix next = mul(powers.back(), m);
    if (!span.insert(flatten(next))) {
      // next = sum c_k powers[k]; min poly = t^K - sum c_k t^k
      Matrix cols(n * n, powers.size());
      for (std::size_t k = 0; k < powers.size(); ++k) {
        std::vector<Rational> fk = flatten(powers[k]);
        for (std::size_t i = 0; i < fk.size(); ++i) cols.at(i, k) = fk[i];
      }
      auto c = solve(cols, flatten(next));
      check_internal(c.has_value(), "dependent power had no representation");
      UniPoly p(powers.size() + 1, Rational(0));
      for (std::size_t k = 0; k < powers.size(); ++k) p[k] = -(*c)[k];
      p.back() = 1;
      return p;
    }
    powers.push_back(std::move(next));
    check_internal(powers.size() <= n + 1, "minimal polynomial search ran away");
  }
}

}  // namespace

std::string to_string(FermatVerdict::Tag tag) {
  switch (tag) {
    case FermatVerdict::Tag::CertifiedFermat: return "CertifiedFermat";
    case FermatVerdict::Tag::CertifiedNot: return "CertifiedNot";
    case FermatVerdict::Tag::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(FermatVerdict::Witness witness) {
  switch (witness) {
    case FermatVerdict::Witness::None: return "none";
    case FermatVerdict::Witness::DegenerateVariables: return "failed conciseness";
    case FermatVerdict::Witness::QuadricCount: return "wrong quadric count";
    case FermatVerdict::Witness::QuadricLocusLength:
      return "wrong quadric-locus length";
    case FermatVerdict::Witness::NonReduced: return "non-reduced quadric locus";
  }
  return "?";
}

FermatVerdict detect_fermat(const Poly& f, std::uint64_t seed, int max_attempts) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 3 ||
      f.side() != RingSide::Point)
    throw input_error("detect_fermat wants a homogeneous form of degree >= 3");
  const int r = f.num_vars();
  const int d = f.degree();
  FermatVerdict v;

  // (0) conciseness
  if (!kernel_basis(catalecticant(f, 1)).empty()) {
    v.tag = FermatVerdict::Tag::CertifiedNot;
    v.witness = FermatVerdict::Witness::DegenerateVariables;
    return v;
  }

  // (1) quadrics of the apolar ideal
  const GradedBasis& t2 = graded_basis(r, 2);
  std::vector<Poly> quadrics;
  for (auto& k : kernel_basis(catalecticant(f, 2)))
    quadrics.push_back(poly_from_coords(RingSide::Operator, t2, k));
  if (static_cast<long>(quadrics.size()) != binomial(r, 2).get_si()) {
    v.tag = FermatVerdict::Tag::CertifiedNot;
    v.witness = FermatVerdict::Witness::QuadricCount;
    return v;
  }

  // (2) quadric locus has Hilbert function constantly r through degree d+1
  std::vector<RowSpan> locus = expand_ideal(quadrics, r, d + 1);
  for (int e = 1; e <= d + 1; ++e) {
    const long hf = static_cast<long>(graded_basis(r, e).size()) -
                    static_cast<long>(locus[static_cast<std::size_t>(e - 1)].dim());
    if (hf != r) {
      v.tag = FermatVerdict::Tag::CertifiedNot;
      v.witness = FermatVerdict::Witness::QuadricLocusLength;
      return v;
    }
  }

  // (3) reducedness via the minimal polynomial of M = M_{l'}^{-1} M_l
  //     acting on B_1 -> B_2, B = T/(quadrics)
  const RowSpan& j2 = locus[1];
  const std::vector<std::size_t> comp = j2.complement();
  check_internal(static_cast<int>(comp.size()) == r, "quadric locus basis size");
  SplitMix64 rng(seed);
  auto mult_matrix = [&](const std::vector<Rational>& ell) {
    Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int var = 0; var < r; ++var) {
      std::vector<Rational> prod(t2.size(), Rational(0));
      for (int j = 0; j < r; ++j) {
        if (sgn(ell[static_cast<std::size_t>(j)]) == 0) continue;
        const Monomial mono = Monomial::unit(r, var) * Monomial::unit(r, j);
        prod[t2.index_of(mono)] += ell[static_cast<std::size_t>(j)];
      }
      prod = j2.residual(std::move(prod));
      for (int i = 0; i < r; ++i)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(var)) =
            prod[comp[static_cast<std::size_t>(i)]];
    }
    return m;
  };

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Rational> ell(static_cast<std::size_t>(r)),
        ellp(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      ell[static_cast<std::size_t>(i)] = Rational(rng.range(-4, 4));
      ellp[static_cast<std::size_t>(i)] = Rational(rng.range(-4, 4));
    }
    const Matrix ml = mult_matrix(ell);
    const Matrix mlp = mult_matrix(ellp);
    if (rank(mlp) != static_cast<std::size_t>(r) ||
        rank(ml) != static_cast<std::size_t>(r))
      continue;
    Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int col = 0; col < r; ++col) {
      std::vector<Rational> b(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i)
        b[static_cast<std::size_t>(i)] =
            ml.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col));
      auto x = solve(mlp, b);
      check_internal(x.has_value(), "invertible operator failed to solve");
      for (int i = 0; i < r; ++i)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col)) =
            (*x)[static_cast<std::size_t>(i)];
    }
    UniPoly minp = minimal_polynomial(m);
    UniPoly g = uni_gcd(minp, uni_derivative(minp));
    if (uni_degree(g) >= 1) {
      v.tag = FermatVerdict::Tag::CertifiedNot;
      v.witness = FermatVerdict::Witness::NonReduced;
      return v;
    }
    if (uni_degree(minp) < r) continue;  // eigenvalue collision; retry

    v.minimal_polynomial = minp;
    bool complete = true;
    std::vector<Rational> roots = rational_roots(minp, complete);
    if (static_cast<int>(roots.size()) == r) {
      // (4) all eigenvalues rational: left eigenvectors are the points
      Matrix mt = m.transposed();
      std::vector<LinearFormPoint> points;
      bool clean = true;
      for (const Rational& root : roots) {
        Matrix shifted = mt;
        for (int i = 0; i < r; ++i)
          shifted.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) -= root;
        auto kern = kernel_basis(shifted);
        if (kern.size() != 1) { clean = false; break; }
        points.emplace_back(std::move(kern[0]));
      }
      if (clean) {
        auto lambdas = waring_from_points(points, f);
        check_internal(lambdas.has_value(),
                       "reduced rational quadric locus is not apolar");
        for (const Rational& l : *lambdas)
          check_internal(sgn(l) != 0, "vanishing Waring coefficient on a concise form");
        v.tag = FermatVerdict::Tag::CertifiedFermat;
        v.points = std::move(points);
        v.lambdas = std::move(*lambdas);
        return v;
      }
      continue;  // repeated eigenvector space; try fresh forms
    }
    // (5) squarefree of full degree with irrational eigenvalues: the locus is
    // reduced of length r, which certifies the decomposition over Q-bar
    v.tag = FermatVerdict::Tag::CertifiedFermat;
    v.irrational = true;
    return v;
  }
  v.tag = FermatVerdict::Tag::Undetermined;
  v.reason = "genericity failure: no invertible multiplication pair within "
             "the retry budget";
  return v;
}

}  // namespace apw
