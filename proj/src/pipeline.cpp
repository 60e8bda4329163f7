#include "apw/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "apw/errors.hpp"
#include "apw/matrix.hpp"
#include "apw/rng.hpp"

namespace apw {

// ---------------------------------------------------------------------------
// QuotientProjector

namespace {

std::vector<Rational> linear_coords(const Poly& eta, int ambient_vars) {
  if (eta.side() != RingSide::Operator || eta.num_vars() != ambient_vars ||
      eta.is_zero() || !eta.is_homogeneous() || eta.degree() != 1)
    throw input_error("eta must be a nonzero ambient linear form");
  return coords_in(eta, graded_basis(ambient_vars, 1));
}

}  // namespace

QuotientProjector::QuotientProjector(int ambient_vars, const Poly& eta1,
                                     const Poly& eta2)
    : ambient_(ambient_vars), small_(ambient_vars - 2) {
  if (ambient_ < 3) throw input_error("quotient needs at least three variables");
  const std::vector<Rational> e1 = linear_coords(eta1, ambient_);
  const std::vector<Rational> e2 = linear_coords(eta2, ambient_);
  RowSpan span(static_cast<std::size_t>(ambient_));
  span.insert(e1);
  if (!span.insert(e2)) throw input_error("eta1, eta2 are not independent");
  for (int i = 0; i < ambient_ && static_cast<int>(kept_.size()) < small_; ++i) {
    std::vector<Rational> unit(static_cast<std::size_t>(ambient_), Rational(0));
    unit[static_cast<std::size_t>(i)] = 1;
    if (span.insert(std::move(unit))) kept_.push_back(i);
  }
  check_internal(static_cast<int>(kept_.size()) == small_,
                 "could not complete eta to a coordinate basis");

  // change of basis: columns are the kept coordinate forms, then eta1, eta2
  Matrix basis(static_cast<std::size_t>(ambient_), static_cast<std::size_t>(ambient_));
  for (int j = 0; j < small_; ++j)
    basis.at(static_cast<std::size_t>(kept_[static_cast<std::size_t>(j)]),
             static_cast<std::size_t>(j)) = 1;
  for (int i = 0; i < ambient_; ++i) {
    basis.at(static_cast<std::size_t>(i), static_cast<std::size_t>(small_)) =
        e1[static_cast<std::size_t>(i)];
    basis.at(static_cast<std::size_t>(i), static_cast<std::size_t>(small_ + 1)) =
        e2[static_cast<std::size_t>(i)];
  }
  var_images_.resize(static_cast<std::size_t>(ambient_));
  for (int i = 0; i < ambient_; ++i) {
    std::vector<Rational> unit(static_cast<std::size_t>(ambient_), Rational(0));
    unit[static_cast<std::size_t>(i)] = 1;
    auto rep = solve(basis, unit);
    check_internal(rep.has_value(), "coordinate basis is singular");
    var_images_[static_cast<std::size_t>(i)] =
        std::vector<Rational>(rep->begin(), rep->begin() + small_);
  }
  tables_.resize(2);  // degree 0 unused; degree 1 filled below
  tables_[1] = var_images_;
}

const std::vector<std::vector<Rational>>& QuotientProjector::table(int degree) {
  check_internal(degree >= 1, "projection table for degree < 1");
  if (static_cast<std::size_t>(degree) < tables_.size() &&
      !tables_[static_cast<std::size_t>(degree)].empty())
    return tables_[static_cast<std::size_t>(degree)];
  if (static_cast<std::size_t>(degree) >= tables_.size())
    tables_.resize(static_cast<std::size_t>(degree) + 1);
  const auto& prev = table(degree - 1);
  const GradedBasis& amb = graded_basis(ambient_, degree);
  const std::size_t small_dim = graded_basis(small_, degree).size();
  auto& cur = tables_[static_cast<std::size_t>(degree)];
  cur.assign(amb.size(), std::vector<Rational>(small_dim, Rational(0)));
  const GradedBasis& amb_prev = graded_basis(ambient_, degree - 1);
  for (std::size_t idx = 0; idx < amb.size(); ++idx) {
    const Monomial& mono = amb.monomials[idx];
    int var = 0;
    while (mono.exps[static_cast<std::size_t>(var)] == 0) ++var;
    Monomial rest = mono;
    rest.exps[static_cast<std::size_t>(var)] -= 1;
    const auto& base = prev[amb_prev.index_of(rest)];
    const auto& image = var_images_[static_cast<std::size_t>(var)];
    auto& out = cur[idx];
    for (int w = 0; w < small_; ++w) {
      const Rational& c = image[static_cast<std::size_t>(w)];
      if (sgn(c) == 0) continue;
      const auto& mul = variable_mul_table(small_, degree - 1, w);
      for (std::size_t k = 0; k < base.size(); ++k)
        if (sgn(base[k]) != 0) out[mul[k]] += c * base[k];
    }
  }
  return cur;
}

std::vector<Rational> QuotientProjector::project_coords(
    int degree, const std::vector<Rational>& coords) {
  const auto& tab = table(degree);
  check_internal(coords.size() == tab.size(), "coordinate length mismatch");
  std::vector<Rational> out(graded_basis(small_, degree).size(), Rational(0));
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (sgn(coords[idx]) == 0) continue;
    const auto& img = tab[idx];
    for (std::size_t k = 0; k < out.size(); ++k)
      if (sgn(img[k]) != 0) out[k] += coords[idx] * img[k];
  }
  return out;
}

Poly QuotientProjector::project(const Poly& ambient) {
  if (ambient.is_zero()) return Poly(ambient.side(), small_);
  check_internal(ambient.is_homogeneous(), "projecting a non-homogeneous form");
  const int d = ambient.degree();
  if (d == 0) {
    Poly c(ambient.side(), small_);
    c.add_term(Monomial(std::vector<int>(static_cast<std::size_t>(small_), 0)),
               ambient.terms().begin()->second);
    return c;
  }
  const GradedBasis& amb = graded_basis(ambient_, d);
  return poly_from_coords(ambient.side(), graded_basis(small_, d),
                          project_coords(d, coords_in(ambient, amb)));
}

LinearFormPoint QuotientProjector::project_point(const LinearFormPoint& p) const {
  check_internal(p.num_vars() == ambient_, "point has wrong ambient dimension");
  std::vector<Rational> small(static_cast<std::size_t>(small_));
  for (int j = 0; j < small_; ++j)
    small[static_cast<std::size_t>(j)] =
        p.coords[static_cast<std::size_t>(kept_[static_cast<std::size_t>(j)])];
  return LinearFormPoint(std::move(small));
}

// ---------------------------------------------------------------------------
// curves

namespace {

void validate_scroll_window(int s, int a1, int a2) {
  if (s < 2) throw input_error("requires s >= 2");
  if (a2 < 0) throw input_error("requires a2 >= 0");
  if (a2 > a1) throw input_error("requires a2 <= a1");
  if (a1 > (s + 1) * a2 + 2) throw input_error("requires a1 <= (s+1)a2+2");
}

Poly sample_cox_equation(const CoxBasis& basis, RingSide side,
                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  Poly g(side, basis.num_cox_vars());
  for (const Monomial& mono : basis.monomials)
    g.add_term(mono, Rational(rng.nonzero(-9, 9)));
  return g;
}

void validate_equation_class(const EmbeddedCurve& curve, const CoxClass& cls) {
  const Poly& g = curve.equation;
  if (g.is_zero()) throw input_error("curve equation is zero");
  if (g.num_vars() != curve.surface.basis.num_cox_vars())
    throw input_error("curve equation has the wrong Cox variables");
  for (const auto& [mono, c] : g.terms())
    if (!(cox_class_of(curve.surface.cox_kind(), curve.surface.e(), mono) == cls))
      throw input_error("curve equation is not of the subcanonical class");
}

}  // namespace

EmbeddedCurve curve_on_scroll(int s, int a1, int a2, std::uint64_t seed) {
  validate_scroll_window(s, a1, a2);
  const DivisorClass cls = subcanonical_class(s, a1, a2);
  EmbeddedCurve curve;
  curve.surface = build_scroll(a1, a2);
  curve.equation = sample_cox_equation(
      cox_basis(hirzebruch_class(cls.e, cls.a, cls.b)), RingSide::Cox, seed);
  curve.s = s;
  const CurveInvariants ci = curve_invariants(s, a1, a2);
  curve.genus = ci.genus;
  curve.degree = ci.degree;
  curve.N = ci.ambient_dim;
  return curve;
}

EmbeddedCurve curve_on_scroll(int s, int a1, int a2, const Poly& equation) {
  EmbeddedCurve curve = curve_on_scroll(s, a1, a2, 0);
  curve.equation = equation;
  const DivisorClass cls = subcanonical_class(s, a1, a2);
  validate_equation_class(curve, hirzebruch_class(cls.e, cls.a, cls.b));
  return curve;
}

EmbeddedCurve plane_curve(int m, int s, std::uint64_t seed) {
  if (m < 1) throw input_error("requires m >= 1");
  if (s < 2) throw input_error("requires s >= 2");
  const int plane_degree = s * m + 3;
  EmbeddedCurve curve;
  curve.surface = build_veronese(m);
  curve.equation =
      sample_cox_equation(cox_basis(plane_class(plane_degree)), RingSide::Cox, seed);
  curve.s = s;
  curve.genus = static_cast<long>(plane_degree - 1) * (plane_degree - 2) / 2;
  curve.degree = static_cast<long>(plane_degree) * m;
  curve.N = curve.surface.N;
  return curve;
}

EmbeddedCurve plane_curve(int m, int s, const Poly& equation) {
  EmbeddedCurve curve = plane_curve(m, s, 0);
  curve.equation = equation;
  validate_equation_class(curve, plane_class(s * m + 3));
  return curve;
}

namespace {

// kernel of Sym^j -> sections(jH) / g·sections(jH - C), as coordinate rows
std::vector<std::vector<Rational>> curve_ideal_coords(const EmbeddedCurve& curve,
                                                      int j) {
  const SurfaceEmbedding& s = curve.surface;
  const GradedBasis& sym = graded_basis(s.N + 1, j);
  std::vector<Monomial> products;
  products.reserve(sym.size());
  for (const Monomial& mono : sym.monomials)
    products.push_back(ambient_to_cox(s, mono));
  const Matrix restricted =
      cox_reduce_columns(products, cox_basis(s.hyperplane_class(j)),
                         std::optional<Poly>(curve.equation));
  return kernel_basis(restricted);
}

long expected_curve_h0(const EmbeddedCurve& curve, int j) {
  const SurfaceEmbedding& s = curve.surface;
  if (s.kind == SurfaceEmbedding::Kind::Scroll) {
    const int e = s.e();
    const DivisorClass hyper{e, j, j * s.a1};
    const DivisorClass diff = hyper - subcanonical_class(curve.s, s.a1, s.a2);
    const Cohomology top = line_bundle_cohomology(e, hyper);
    const Cohomology low = line_bundle_cohomology(e, diff);
    return top.h0 - low.h0 + low.h1 - top.h1;
  }
  auto plane_h0 = [](int k) -> long {
    return k < 0 ? 0 : binomial(k + 2, 2).get_si();
  };
  const int plane_degree = curve.s * s.m + 3;
  return plane_h0(j * s.m) - plane_h0(j * s.m - plane_degree);
}

}  // namespace

std::vector<Poly> curve_ideal_piece(const EmbeddedCurve& curve, int j) {
  if (j < 1 || j > curve.s + 3)
    throw input_error("curve_ideal_piece: degree out of range");
  const GradedBasis& sym = graded_basis(curve.surface.N + 1, j);
  std::vector<Poly> out;
  for (auto& v : curve_ideal_coords(curve, j))
    out.push_back(poly_from_coords(RingSide::Operator, sym, v));
  return out;
}

bool normality_check(const EmbeddedCurve& curve, int j) {
  if (j < 1) throw input_error("normality_check: degree must be >= 1");
  const long sym_dim =
      static_cast<long>(graded_basis(curve.surface.N + 1, j).size());
  const long ideal_dim = static_cast<long>(curve_ideal_coords(curve, j).size());
  return sym_dim - ideal_dim == expected_curve_h0(curve, j);
}

// ---------------------------------------------------------------------------
// Artinian reduction and the dual form

ArtinianReduction artinian_reduction(const EmbeddedCurve& curve,
                                     const Poly& eta1, const Poly& eta2) {
  const int N = curve.N;
  const int s = curve.s;
  const int cap = s + 3;
  QuotientProjector projector(N + 1, eta1, eta2);
  ArtinianReduction red(eta1, eta2, std::move(projector));

  red.hilbert.assign(static_cast<std::size_t>(s + 3), 0);
  red.hilbert[0] = 1;
  red.normality.assign(static_cast<std::size_t>(cap), false);
  const int small = red.projector.small_vars();

  std::vector<int> hf(static_cast<std::size_t>(cap) + 1, 0);
  hf[0] = 1;
  for (int j = 1; j <= cap; ++j) {
    const long sym_dim = static_cast<long>(graded_basis(N + 1, j).size());
    const auto ideal = curve_ideal_coords(curve, j);
    red.normality[static_cast<std::size_t>(j - 1)] =
        (sym_dim - static_cast<long>(ideal.size()) == expected_curve_h0(curve, j));
    RowSpan piece(graded_basis(small, j).size());
    for (const auto& v : ideal)
      piece.insert(red.projector.project_coords(j, v));
    hf[static_cast<std::size_t>(j)] =
        static_cast<int>(graded_basis(small, j).size() - piece.dim());
    if (j <= s + 2) red.pieces.push_back(std::move(piece));
  }
  for (int j = 1; j <= s + 2; ++j)
    if (!red.normality[static_cast<std::size_t>(j - 1)])
      throw structural_error("curve is not " + std::to_string(j) +
                             "-normal; sample is degenerate");
  if (hf[static_cast<std::size_t>(s + 2)] != 1)
    throw structural_error("reduction socle is not one-dimensional");
  if (hf[static_cast<std::size_t>(s + 3)] != 0)
    throw structural_error("reduction does not vanish past the socle degree");
  for (int j = 0; j <= s + 2; ++j)
    if (hf[static_cast<std::size_t>(j)] != hf[static_cast<std::size_t>(s + 2 - j)])
      throw structural_error("reduction Hilbert function is not symmetric");
  if (hf[1] != N - 1)
    throw structural_error("reduction is not concise in N-1 variables");
  if (s == 2 && hf[2] != curve.genus - 2 * N - 1)
    throw structural_error("half-canonical middle value differs from g-2N-1");
  red.hilbert.assign(hf.begin(), hf.begin() + s + 3);
  return red;
}

AlphaResult alpha_map(const EmbeddedCurve& curve, ArtinianReduction& reduction) {
  AlphaResult out;
  out.algebra = ArtinianGorenstein::from_ideal(
      reduction.projector.small_vars(), curve.s + 2, reduction.pieces);
  out.dual_form = dual_socle_generator(out.algebra);
  const ApolarIdeal round_trip = perp(out.dual_form);
  check_internal(round_trip.pieces == reduction.pieces,
                 "perp of the dual form differs from the reduction ideal");
  return out;
}

// ---------------------------------------------------------------------------
// Gamma

GammaReport gamma_cut(const SurfaceEmbedding& surface, const Poly& eta1,
                      const Poly& eta2, int degree_cap) {
  if (degree_cap < 2) throw input_error("gamma_cut: degree cap must be >= 2");
  QuotientProjector projector(surface.N + 1, eta1, eta2);
  const int small = projector.small_vars();
  GammaReport report;
  for (int e = 1; e <= degree_cap; ++e) {
    RowSpan piece(graded_basis(small, e).size());
    if (e >= 2) {
      // the surface ideal starts in degree 2; degree 1 is empty
      const GradedBasis& sym = graded_basis(surface.N + 1, e);
      std::vector<Monomial> products;
      products.reserve(sym.size());
      for (const Monomial& mono : sym.monomials)
        products.push_back(ambient_to_cox(surface, mono));
      const Matrix restricted = cox_reduce_columns(
          products, cox_basis(surface.hyperplane_class(e)), std::nullopt);
      for (const auto& v : kernel_basis(restricted))
        piece.insert(projector.project_coords(e, v));
    }
    report.hilbert.push_back(
        static_cast<int>(graded_basis(small, e).size() - piece.dim()));
    report.pieces.push_back(std::move(piece));
  }
  const int last = report.hilbert[static_cast<std::size_t>(degree_cap - 1)];
  const int prev = report.hilbert[static_cast<std::size_t>(degree_cap - 2)];
  if (last != prev)
    throw structural_error("gamma Hilbert function did not stabilise");
  if (last != surface.surface_degree())
    throw structural_error("gamma length differs from the surface degree");
  report.length = last;
  return report;
}

RationalCut rational_cut(const SurfaceEmbedding& surface, std::uint64_t seed,
                         int max_attempts) {
  if (surface.surface_degree() != surface.N - 1)
    throw input_error("rational_cut needs a surface of minimal degree");
  const int count = surface.N - 1;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<LinearFormPoint> points;
    std::set<std::vector<Rational>> seen;
    bool degenerate = false;
    for (int i = 0; i < count && !degenerate; ++i) {
      for (int tries = 0;; ++tries) {
        if (tries > 32) { degenerate = true; break; }
        std::vector<Rational> cox_values;
        if (surface.kind == SurfaceEmbedding::Kind::Scroll) {
          // (u, v, t0, t1) = (1, mu, 1, tau)
          cox_values = {Rational(1), Rational(rng.range(-6, 6)), Rational(1),
                        Rational(rng.range(-6, 6))};
        } else {
          cox_values = {Rational(1), Rational(rng.range(-6, 6)),
                        Rational(rng.range(-6, 6))};
        }
        std::vector<Rational> ambient(surface.basis.size());
        for (std::size_t k = 0; k < surface.basis.size(); ++k) {
          Rational v = 1;
          const Monomial& mono = surface.basis.monomials[k];
          for (std::size_t var = 0; var < mono.exps.size(); ++var)
            for (int p = 0; p < mono.exps[var]; ++p) v *= cox_values[var];
          ambient[k] = v;
        }
        LinearFormPoint pt(std::move(ambient));
        if (seen.insert(pt.coords).second) {
          points.push_back(std::move(pt));
          break;
        }
      }
    }
    if (degenerate) continue;
    Matrix eval(points.size(), surface.basis.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = 0; j < surface.basis.size(); ++j)
        eval.at(i, j) = points[i].coords[j];
    auto kern = kernel_basis(eval);
    if (kern.size() != 2) continue;  // points in special position
    const GradedBasis& lin = graded_basis(surface.N + 1, 1);
    RationalCut cut;
    cut.eta1 = poly_from_coords(RingSide::Operator, lin, kern[0]);
    cut.eta2 = poly_from_coords(RingSide::Operator, lin, kern[1]);
    cut.points = std::move(points);
    try {
      gamma_cut(surface, cut.eta1, cut.eta2, 4);
    } catch (const structural_error&) {
      continue;  // excess intersection; resample
    }
    return cut;
  }
  throw undetermined_error("rational_cut: retry budget exhausted");
}

// ---------------------------------------------------------------------------
// end-to-end verification

std::string to_string(VerifyKind kind) {
  return kind == VerifyKind::ScrollFermat ? "scroll-fermat" : "plane-waring";
}

std::string to_string(EtaRegime regime) {
  return regime == EtaRegime::Rational ? "rational" : "generic";
}

namespace {

long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
      .count();
}

std::pair<Poly, Poly> sample_generic_etas(int ambient_vars, SplitMix64& rng) {
  const GradedBasis& lin = graded_basis(ambient_vars, 1);
  for (;;) {
    std::vector<Rational> c1(lin.size()), c2(lin.size());
    for (std::size_t i = 0; i < lin.size(); ++i) {
      c1[i] = Rational(rng.range(-9, 9));
      c2[i] = Rational(rng.range(-9, 9));
    }
    RowSpan span(lin.size());
    if (!span.insert(c1)) continue;
    if (!span.insert(c2)) continue;
    return {poly_from_coords(RingSide::Operator, lin, c1),
            poly_from_coords(RingSide::Operator, lin, c2)};
  }
}

// containment of the projected Gamma ideal in perp(F), checked by direct
// annihilation
bool gamma_apolar_to(const GammaReport& gamma, const Poly& dual_form,
                     int small_vars) {
  const int d = dual_form.degree();
  for (int e = 1; e <= d && e <= static_cast<int>(gamma.pieces.size()); ++e) {
    const GradedBasis& gb = graded_basis(small_vars, e);
    for (const auto& row : gamma.pieces[static_cast<std::size_t>(e - 1)].rows()) {
      const Poly op = poly_from_coords(RingSide::Operator, gb, row);
      if (!apolar_apply(op, dual_form).is_zero()) return false;
    }
  }
  return true;
}

PipelineReport run_trial(const VerifyParams& params, int trial,
                         EtaRegime regime) {
  PipelineReport rep;
  rep.kind = params.kind;
  rep.s = params.s;
  rep.a1 = params.a1;
  rep.a2 = params.a2;
  rep.m = params.m;
  rep.regime = regime;
  rep.seed = params.seed;
  rep.trial = trial;
  const long t_start = now_ms();

  const std::uint64_t trial_seed = derive_seed(
      derive_seed(params.seed, static_cast<std::uint64_t>(trial)),
      regime == EtaRegime::Rational ? 0u : 1u);
  const int cap = params.degree_cap > 0 ? params.degree_cap : params.s + 3;

  std::string last_error;
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    const std::uint64_t aseed =
        derive_seed(trial_seed, static_cast<std::uint64_t>(attempt));
    try {
      long t0 = now_ms();
      EmbeddedCurve curve =
          params.kind == VerifyKind::ScrollFermat
              ? curve_on_scroll(params.s, params.a1, params.a2,
                                derive_seed(aseed, 0))
              : plane_curve(params.m, params.s, derive_seed(aseed, 0));
      const SurfaceEmbedding& surface = curve.surface;

      Poly eta1(RingSide::Operator, curve.N + 1);
      Poly eta2 = eta1;
      std::vector<LinearFormPoint> ambient_points;
      if (regime == EtaRegime::Rational) {
        RationalCut cut =
            rational_cut(surface, derive_seed(aseed, 1), params.max_attempts);
        eta1 = cut.eta1;
        eta2 = cut.eta2;
        ambient_points = std::move(cut.points);
      } else {
        SplitMix64 rng(derive_seed(aseed, 1));
        auto etas = sample_generic_etas(curve.N + 1, rng);
        eta1 = std::move(etas.first);
        eta2 = std::move(etas.second);
      }
      rep.timings.build_ms = now_ms() - t0;

      t0 = now_ms();
      ArtinianReduction red = artinian_reduction(curve, eta1, eta2);
      rep.timings.reduction_ms = now_ms() - t0;

      t0 = now_ms();
      AlphaResult alpha = alpha_map(curve, red);
      rep.timings.dual_ms = now_ms() - t0;

      t0 = now_ms();
      rep.verdict = detect_fermat(alpha.dual_form, derive_seed(aseed, 2),
                                  params.max_attempts);
      rep.timings.fermat_ms = now_ms() - t0;

      t0 = now_ms();
      GammaReport gamma = gamma_cut(surface, eta1, eta2, cap);
      rep.gamma_length = gamma.length;
      rep.gamma_apolar = gamma_apolar_to(gamma, alpha.dual_form,
                                         red.projector.small_vars());
      rep.timings.gamma_ms = now_ms() - t0;

      rep.normality = red.normality;
      rep.hilbert = red.hilbert;
      rep.dual_form = to_string(alpha.dual_form);

      if (regime == EtaRegime::Rational) {
        for (const auto& p : ambient_points)
          rep.gamma_points.push_back(red.projector.project_point(p));
        const ApolarCertificate cert =
            is_apolar_scheme(rep.gamma_points, alpha.dual_form);
        check_internal(cert.apolar, "rational cut is not apolar to the dual form");
        auto lambdas = waring_from_points(rep.gamma_points, alpha.dual_form);
        check_internal(lambdas.has_value(),
                       "rational cut gives no Waring decomposition");
        if (rep.verdict.tag == FermatVerdict::Tag::CertifiedFermat &&
            rep.verdict.points.empty()) {
          rep.verdict.points = rep.gamma_points;
          rep.verdict.lambdas = *lambdas;
          rep.verdict.irrational = false;
        }
      }

      bool ok = true;
      for (bool n : rep.normality) ok = ok && n;
      ok = ok && rep.gamma_apolar &&
           rep.gamma_length == surface.surface_degree();
      if (params.kind == VerifyKind::ScrollFermat) {
        ok = ok && rep.verdict.tag == FermatVerdict::Tag::CertifiedFermat;
        if (regime == EtaRegime::Rational)
          ok = ok && !rep.verdict.points.empty();
      } else if (params.m == 1) {
        // Waring number 1: the dual form is a pure power
        for (std::size_t j = 1; j < rep.hilbert.size(); ++j)
          ok = ok && rep.hilbert[j] <= 1;
      }
      rep.ok = ok;
      rep.error.clear();
      rep.timings.total_ms = now_ms() - t_start;
      return rep;
    } catch (const structural_error& err) {
      last_error = err.what();
    } catch (const undetermined_error& err) {
      last_error = err.what();
    }
  }
  rep.ok = false;
  rep.error = "trial exhausted " + std::to_string(params.max_attempts) +
              " attempts; last: " + last_error;
  rep.verdict.tag = FermatVerdict::Tag::Undetermined;
  rep.verdict.reason = rep.error;
  rep.timings.total_ms = now_ms() - t_start;
  return rep;
}

}  // namespace

std::vector<PipelineReport> verify_theorem(const VerifyParams& params) {
  if (params.trials < 1) throw input_error("requires trials >= 1");
  if (params.kind == VerifyKind::ScrollFermat)
    validate_scroll_window(params.s, params.a1, params.a2);
  else {
    if (params.m < 1) throw input_error("requires m >= 1");
    if (params.s < 2) throw input_error("requires s >= 2");
  }
  std::vector<PipelineReport> reports;
  for (int trial = 0; trial < params.trials; ++trial)
    for (EtaRegime regime : params.regimes)
      reports.push_back(run_trial(params, trial, regime));
  return reports;
}

// ---------------------------------------------------------------------------
// serialisation

std::string report_to_json(const PipelineReport& report, int indent) {
  using json = nlohmann::ordered_json;
  json params;
  params["kind"] = to_string(report.kind);
  params["s"] = report.s;
  if (report.kind == VerifyKind::ScrollFermat) {
    params["a1"] = report.a1;
    params["a2"] = report.a2;
  } else {
    params["m"] = report.m;
  }
  params["regime"] = to_string(report.regime);

  json verdict;
  verdict["tag"] = to_string(report.verdict.tag);
  switch (report.verdict.tag) {
    case FermatVerdict::Tag::CertifiedFermat: {
      if (!report.verdict.points.empty()) {
        json pts = json::array();
        for (const auto& p : report.verdict.points) {
          json coords = json::array();
          for (const auto& c : p.coords) coords.push_back(c.get_str());
          pts.push_back(coords);
        }
        verdict["points"] = pts;
        json ls = json::array();
        for (const auto& l : report.verdict.lambdas) ls.push_back(l.get_str());
        verdict["lambdas"] = ls;
      }
      if (report.verdict.irrational) {
        verdict["irrational"] = true;
        json mp = json::array();
        for (const auto& c : report.verdict.minimal_polynomial)
          mp.push_back(c.get_str());
        verdict["minimal_polynomial"] = mp;
      }
      break;
    }
    case FermatVerdict::Tag::CertifiedNot:
      verdict["witness"] = to_string(report.verdict.witness);
      break;
    case FermatVerdict::Tag::Undetermined:
      verdict["reason"] = report.verdict.reason;
      break;
  }

  json gamma;
  gamma["length"] = report.gamma_length;
  if (!report.gamma_points.empty()) {
    json pts = json::array();
    for (const auto& p : report.gamma_points) {
      json coords = json::array();
      for (const auto& c : p.coords) coords.push_back(c.get_str());
      pts.push_back(coords);
    }
    gamma["points"] = pts;
  }
  gamma["apolar"] = report.gamma_apolar;

  json timings;
  timings["build"] = report.timings.build_ms;
  timings["reduction"] = report.timings.reduction_ms;
  timings["dual"] = report.timings.dual_ms;
  timings["fermat"] = report.timings.fermat_ms;
  timings["gamma"] = report.timings.gamma_ms;
  timings["total"] = report.timings.total_ms;

  json doc;
  doc["params"] = params;
  doc["seed"] = report.seed;
  doc["trial"] = report.trial;
  if (!report.error.empty()) doc["error"] = report.error;
  doc["normality"] = report.normality;
  doc["hilbert_function"] = report.hilbert;
  doc["dual_form"] = report.dual_form;
  doc["fermat_verdict"] = verdict;
  doc["gamma"] = gamma;
  doc["timings_ms"] = timings;
  return indent >= 0 ? doc.dump(indent) : doc.dump();
}

}  // namespace apw
