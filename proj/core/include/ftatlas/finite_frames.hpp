#pragma once

// Frames of translates on finite groups. Inner products are linear in the
// first argument: <f, g> = sum f(x) conj(g(x)).

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ftatlas/finite_group.hpp"

namespace ftatlas {

using GroupVector = Eigen::VectorXcd;

struct UnitaryRep {
  std::size_t dimension = 0;
  std::vector<Eigen::MatrixXcd> matrices;
};

/// Permutation matrices (lambda(x) f)(y) = f(x^-1 y).
UnitaryRep regular_rep(const FiniteGroup& g);
/// Max of the unitarity and homomorphism defects over all pairs.
double rep_residual(const FiniteGroup& g, const UnitaryRep& pi);

GroupVector delta(const FiniteGroup& g, Element x);
GroupVector translate(const FiniteGroup& g, Element x, const GroupVector& f);
/// (f * phi)(x) = sum_y f(y) phi(y^-1 x).
GroupVector convolve(const FiniteGroup& g, const GroupVector& f, const GroupVector& phi);
/// phi*(x) = conj(phi(x^-1)).
GroupVector involute(const FiniteGroup& g, const GroupVector& phi);

struct FrameReport {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool is_frame = false;
  bool is_parseval = false;
  bool is_riesz = false;
  bool is_onb = false;
  /// Ascending eigenvalues of the frame operator.
  std::vector<double> spectrum;
  /// Ascending eigenvalues of the Gram matrix of the family.
  std::vector<double> gram_spectrum;
  std::size_t family_size = 0;
  std::size_t space_dimension = 0;
  /// max |S - (f -> f * phi* * phi)| when the shifts cover the group, else -1.
  double convolution_residual = -1.0;
};

/// Report for the columns of `family` as vectors of C^rows.
/// is_frame: lambda_min > tol * lambda_max; Parseval: spectrum within tol of 1;
/// Riesz: frame with invertible Gram matrix; ONB: Riesz and Parseval.
FrameReport family_report(const Eigen::MatrixXcd& family, double tol = 1e-9);

/// Translates (lambda(x) phi) for x in shifts (repetitions allowed).
/// Throws kEmptyShiftSet, kSizeMismatch, kBadParams (shift out of range).
FrameReport frame_report(const FiniteGroup& g, const GroupVector& phi, const std::vector<Element>& shifts,
                         double tol = 1e-9);
std::vector<Element> all_elements(const FiniteGroup& g);

/// eta = S^-1/2 phi for the full translate system. Throws kNotAFrame.
GroupVector canonical_tight_generator(const FiniteGroup& g, const GroupVector& phi, double tol = 1e-9);

struct RieszCheck {
  bool is_frame = false;
  bool shifts_cover_group = false;
  bool gram_invertible = false;
  /// is_frame implies (shifts cover the group and Gram invertible).
  bool dichotomy_holds = false;
  FrameReport report;
};

RieszCheck riesz_theorem_check(const FiniteGroup& g, const GroupVector& phi, const std::vector<Element>& shifts,
                               double tol = 1e-9);

/// V_eta u (x) = <u, pi(x) eta>, indexed by group element. Throws kSizeMismatch.
GroupVector wavelet_transform(const UnitaryRep& pi, const GroupVector& eta, const GroupVector& u);
/// True when V_eta is isometric, checked as V* V = I within tol.
bool is_admissible(const UnitaryRep& pi, const GroupVector& eta, double tol = 1e-9);

/// Orthogonal projections onto the isotypic components of the left regular
/// representation, from the spectral decomposition of a generic Hermitian
/// combination of class-sum operators. Ordered by that operator's eigenvalues.
std::vector<Eigen::MatrixXcd> isotypic_projections(const FiniteGroup& g, std::uint64_t seed = 0);

struct SamplingTransfer {
  /// psi = P delta_e; V_psi restricted to ran P is isometric.
  GroupVector psi;
  bool psi_admissible = false;
  /// eta = P phi.
  GroupVector eta;
  /// Report of (lambda(x) eta) for x in the shifts, on ran P.
  FrameReport report;
  FrameReport original;
  std::size_t subspace_dimension = 0;
};

/// Throws kNotAProjection, kNotCommuting, kNotAFrame.
SamplingTransfer universal_sampling_transfer(const FiniteGroup& g, const GroupVector& phi,
                                             const std::vector<Element>& shifts, const Eigen::MatrixXcd& projection,
                                             double tol = 1e-9);

struct RestrictionDecomposition {
  Subgroup subgroup;
  /// Minimal element index of each right coset H c, ascending.
  std::vector<Element> representatives;
  std::size_t multiplicity = 0;
  /// W e_{h c} = e_h (x) e_c with the H index major.
  Eigen::MatrixXd unitary;
  double unitarity_residual = 0.0;
  /// max over h of |W lambda_G(h) W* - lambda_H(h) (x) I|.
  double intertwining_residual = 0.0;
};

/// Throws kNotASubgroup.
RestrictionDecomposition restriction_decomposition(const FiniteGroup& g, const std::vector<Element>& subgroup);

struct TransportReport {
  FrameReport on_subgroup;
  /// H-translates of W*(phi_H (x) e_0) on W*(l2(H) (x) e_0).
  FrameReport on_subspace;
  std::size_t subspace_dimension = 0;
  std::size_t ambient_dimension = 0;
  /// Largest bound difference between the two reports.
  double bound_gap = 0.0;
  std::string note;
};

/// phi_h is indexed by the subgroup's local order; shifts are parent
/// indices inside H. Throws kNotAFrameOnH, kNotASubgroup, kBadParams.
TransportReport transport_frame(const FiniteGroup& g, const std::vector<Element>& subgroup,
                                const GroupVector& phi_h, const std::vector<Element>& shifts, double tol = 1e-9);

}  // namespace ftatlas
