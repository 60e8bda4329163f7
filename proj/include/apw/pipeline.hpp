#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apw/apolar.hpp"
#include "apw/surfaces.hpp"

namespace apw {

/// Linear substitution realising T(ambient)/(eta1, eta2) as a polynomial ring
/// in ambient-2 variables. The retained variables are chosen greedily (lowest
/// index first, keeping the change of basis invertible), so the coordinates
/// are deterministic functions of (eta1, eta2).
class QuotientProjector {
 public:
  QuotientProjector(int ambient_vars, const Poly& eta1, const Poly& eta2);

  int ambient_vars() const { return ambient_; }
  int small_vars() const { return small_; }
  const std::vector<int>& kept() const { return kept_; }

  /// Image of a homogeneous ambient polynomial; degree is preserved.
  Poly project(const Poly& ambient);
  std::vector<Rational> project_coords(int degree,
                                       const std::vector<Rational>& coords);
  /// A point of V(eta1, eta2) in the quotient coordinates.
  LinearFormPoint project_point(const LinearFormPoint& p) const;

 private:
  const std::vector<std::vector<Rational>>& table(int degree);

  int ambient_ = 0;
  int small_ = 0;
  std::vector<int> kept_;
  std::vector<std::vector<Rational>> var_images_;
  std::vector<std::vector<std::vector<Rational>>> tables_;  // per degree
};

/// A subcanonical curve given by a Cox equation on a parametrised surface.
struct EmbeddedCurve {
  SurfaceEmbedding surface;
  Poly equation;  // Cox polynomial of the subcanonical class
  int s = 0;
  long genus = 0;
  long degree = 0;
  int N = 0;

  EmbeddedCurve() : equation(RingSide::Cox, 1) {}
};

/// Curve of class (s+2)C0 + ((s+1)a1 - a2 + 2)f on the scroll S_{a1,a2},
/// sampled with nonzero integer coefficients in [-9, 9] from the seed.
EmbeddedCurve curve_on_scroll(int s, int a1, int a2, std::uint64_t seed);
EmbeddedCurve curve_on_scroll(int s, int a1, int a2, const Poly& equation);

/// Plane curve of degree s·m + 3 viewed on the Veronese surface of degree m.
EmbeddedCurve plane_curve(int m, int s, std::uint64_t seed);
EmbeddedCurve plane_curve(int m, int s, const Poly& equation);

/// Basis of I(X)_j in the ambient operator ring: the kernel of
/// Sym^j(coordinates) -> sections of jH modulo g · sections of jH - C.
std::vector<Poly> curve_ideal_piece(const EmbeddedCurve& curve, int j);

/// j-normality: the restriction Sym^j -> H0(O_C(j)) is surjective, decided by
/// comparing dim Sym^j - dim I(X)_j with the sheaf-theoretic h0.
bool normality_check(const EmbeddedCurve& curve, int j);

/// The Artinian reduction A = Sym / (I(X) + (eta1, eta2)) presented in the
/// quotient coordinates, with its Hilbert function and normality witnesses.
struct ArtinianReduction {
  Poly eta1, eta2;
  QuotientProjector projector;
  std::vector<int> hilbert;       // 0 .. s+2 (degree s+3 checked to vanish)
  std::vector<RowSpan> pieces;    // ideal pieces in the small ring, 1..s+2
  std::vector<bool> normality;    // j = 1 .. s+3

  ArtinianReduction(Poly e1, Poly e2, QuotientProjector pr)
      : eta1(std::move(e1)), eta2(std::move(e2)), projector(std::move(pr)) {}
};

ArtinianReduction artinian_reduction(const EmbeddedCurve& curve,
                                     const Poly& eta1, const Poly& eta2);

struct AlphaResult {
  Poly dual_form;             // F of degree s+2 in N-1 variables
  ArtinianGorenstein algebra;

  AlphaResult() : dual_form(RingSide::Point, 1) {}
};

/// Macaulay dual of the reduction; perp(dual_form) is checked against the
/// reduction's ideal degreewise before returning.
AlphaResult alpha_map(const EmbeddedCurve& curve, ArtinianReduction& reduction);

/// Hilbert function of (surface ideal + eta1 + eta2) and its stabilised
/// value, the length of the cut Gamma = S ∩ V(eta1, eta2).
struct GammaReport {
  long length = 0;
  std::vector<int> hilbert;     // degrees 1..cap
  std::vector<RowSpan> pieces;  // small-ring image of I(S), degrees 1..cap
};

GammaReport gamma_cut(const SurfaceEmbedding& surface, const Poly& eta1,
                      const Poly& eta2, int degree_cap);

/// Linear forms cutting the surface in an explicit rational point set of
/// length deg S = N-1, sampled from the Cox parametrisation.
struct RationalCut {
  Poly eta1, eta2;
  std::vector<LinearFormPoint> points;  // ambient coordinates

  RationalCut() : eta1(RingSide::Operator, 1), eta2(RingSide::Operator, 1) {}
};

RationalCut rational_cut(const SurfaceEmbedding& surface, std::uint64_t seed,
                         int max_attempts = 8);

enum class VerifyKind { ScrollFermat, PlaneWaring };
enum class EtaRegime { Rational, Generic };

std::string to_string(VerifyKind kind);
std::string to_string(EtaRegime regime);

struct VerifyParams {
  VerifyKind kind = VerifyKind::ScrollFermat;
  int s = 2;
  int a1 = 1, a2 = 1;  // scroll parameters
  int m = 1;           // Veronese degree (plane kind)
  int trials = 1;
  std::uint64_t seed = 0;
  std::vector<EtaRegime> regimes = {EtaRegime::Rational, EtaRegime::Generic};
  int max_attempts = 8;
  int degree_cap = 0;  // 0: default s+3
};

struct PipelineTimings {
  long build_ms = 0;
  long reduction_ms = 0;
  long dual_ms = 0;
  long fermat_ms = 0;
  long gamma_ms = 0;
  long total_ms = 0;
};

/// One fibre evaluation of the dual-form construction, with everything a
/// verifier needs to re-check the claims.
struct PipelineReport {
  VerifyKind kind = VerifyKind::ScrollFermat;
  int s = 0, a1 = 0, a2 = 0, m = 0;
  EtaRegime regime = EtaRegime::Rational;
  std::uint64_t seed = 0;
  int trial = 0;

  bool ok = false;
  std::string error;  // nonempty when the trial could not complete
  std::vector<bool> normality;
  std::vector<int> hilbert;
  std::string dual_form;
  FermatVerdict verdict;
  long gamma_length = 0;
  bool gamma_apolar = false;
  std::vector<LinearFormPoint> gamma_points;  // quotient coordinates
  PipelineTimings timings;
};

std::vector<PipelineReport> verify_theorem(const VerifyParams& params);

/// JSON form of a report; field names and their order are stable.
std::string report_to_json(const PipelineReport& report, int indent = -1);

}  // namespace apw
