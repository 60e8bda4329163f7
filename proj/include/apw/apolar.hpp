#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apw/poly.hpp"
#include "apw/rowspan.hpp"

namespace apw {

/// Degreewise description of a homogeneous ideal I in the operator ring T,
/// truncated at the socle degree d: pieces for 1 <= e <= d, and everything
/// in degrees > d (which is where an apolar ideal always saturates).
struct ApolarIdeal {
  int num_vars = 0;
  int socle_degree = 0;
  std::vector<RowSpan> pieces;  // pieces[e-1] in coordinates of T_e

  std::size_t dim(int e) const;
  std::vector<Poly> basis(int e) const;
  bool degreewise_equal(const ApolarIdeal& other) const;
};

/// F^perp = { D in T : D.f = 0 }, computed as catalecticant kernels.
ApolarIdeal perp(const Poly& f);

/// Hilbert function of T / F^perp (resp. of the given ideal's quotient),
/// indexed 0..socle_degree.
std::vector<int> hilbert_function(const Poly& f);
std::vector<int> hilbert_function(const ApolarIdeal& ideal);

/// Minimal generators degree by degree: in degree e a basis of a complement
/// of T_1·I_{e-1} inside I_e, computed through degree d+1 (where I is all
/// of T). Degrees without generators are omitted.
std::map<int, std::vector<Poly>> minimal_generators(const ApolarIdeal& ideal);

/// Degreewise expansion of the ideal ( d_i d_j, d_i^d - d_j^d ) for i < j
/// in r variables; the apolar ideal of the Fermat form x0^d + ... + x_{r-1}^d.
ApolarIdeal fermat_perp(int r, int d);

/// Degreewise expansion of an arbitrary generator set up to degree `cap`;
/// result[e-1] spans the degree-e piece.
std::vector<RowSpan> expand_ideal(const std::vector<Poly>& generators,
                                  int num_vars, int cap);

/// Graded Artinian Gorenstein quotient T/I presented by its ideal pieces,
/// Hilbert function and socle functional (the linear functional on T_d
/// vanishing on I_d, unique up to scale).
struct ArtinianGorenstein {
  int num_vars = 0;
  int socle_degree = 0;
  std::vector<int> hilbert;            // 0..socle_degree
  std::vector<RowSpan> pieces;         // ideal pieces, degrees 1..socle_degree
  std::vector<Rational> socle_functional;  // on the monomial basis of T_d

  /// Validates socle dimension one and Hilbert symmetry; throws
  /// structural_error otherwise.
  static ArtinianGorenstein from_ideal(int num_vars, int socle_degree,
                                       std::vector<RowSpan> pieces);
};

ArtinianGorenstein quotient_by(const ApolarIdeal& ideal);

/// Macaulay inverse: the degree-d form F with perp(F) = the defining ideal,
/// F = sum over |m| = d of phi(d^m)/m! · x^m, first nonzero coefficient
/// normalised to 1.
Poly dual_socle_generator(const ArtinianGorenstein& algebra);

/// Basis of I(Gamma)_e for a finite reduced point set: kernel of the
/// evaluation map T_e -> Q^s. Duplicate points (up to scale) are an error.
std::vector<Poly> ideal_of_points(const std::vector<LinearFormPoint>& points,
                                  int e);

struct ApolarCertificate {
  bool apolar = false;
  int first_failure_degree = -1;  // set when apolar is false
};

/// Containment I(Gamma)_e ⊆ (F^perp)_e for all 1 <= e <= deg f (higher
/// degrees are automatic).
ApolarCertificate is_apolar_scheme(const std::vector<LinearFormPoint>& points,
                                   const Poly& f);

/// Exact solve of f = sum_i lambda_i l_i^d; nullopt when inconsistent.
std::optional<std::vector<Rational>> waring_from_points(
    const std::vector<LinearFormPoint>& points, const Poly& f);

struct FermatVerdict {
  enum class Tag { CertifiedFermat, CertifiedNot, Undetermined };
  enum class Witness {
    None,
    DegenerateVariables,  // (F^perp)_1 != 0
    QuadricCount,         // dim (F^perp)_2 != C(r,2)
    QuadricLocusLength,   // HF of T/((F^perp)_2) not constantly r
    NonReduced,           // multiplication operator with non-squarefree min poly
  };

  Tag tag = Tag::Undetermined;
  Witness witness = Witness::None;
  std::vector<LinearFormPoint> points;  // CertifiedFermat with rational locus
  std::vector<Rational> lambdas;
  bool irrational = false;                  // decomposition exists over Q-bar
  std::vector<Rational> minimal_polynomial; // low to high; certificate for the
                                            // irrational branch
  std::string reason;                       // Undetermined only
};

std::string to_string(FermatVerdict::Tag tag);
std::string to_string(FermatVerdict::Witness witness);

/// Exact decision procedure for "f is a sum of num_vars independent d-th
/// powers with nonzero coefficients": conciseness, quadric count, quadric
/// locus length, reducedness via the minimal polynomial of a multiplication
/// operator, then point recovery when the eigenvalues are rational.
FermatVerdict detect_fermat(const Poly& f, std::uint64_t seed = 0,
                            int max_attempts = 8);

/// max_e rank of the degree-e catalecticant: a lower bound for the Waring
/// number of f.
int waring_rank_lower_bound(const Poly& f);

}  // namespace apw
