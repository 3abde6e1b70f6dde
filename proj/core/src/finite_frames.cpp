#include "ftatlas/finite_frames.hpp"

#include <algorithm>
#include <random>

#include "ftatlas/error.hpp"

namespace ftatlas {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

Index idx(std::size_t i) { return static_cast<Index>(i); }

void require_size(const FiniteGroup& g, const GroupVector& v, const char* what) {
  if (static_cast<std::size_t>(v.size()) != g.order())
    throw Error(ErrorCode::kSizeMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                              ", group order is " + std::to_string(g.order()));
}

MatrixXd permutation_matrix(const FiniteGroup& g, Element x) {
  const std::size_t n = g.order();
  MatrixXd m = MatrixXd::Zero(idx(n), idx(n));
  for (Element y = 0; y < n; ++y) m(idx(g.mul(x, y)), idx(y)) = 1.0;
  return m;
}

std::vector<double> ascending(const Eigen::VectorXd& values) {
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

MatrixXcd translates(const FiniteGroup& g, const GroupVector& phi, const std::vector<Element>& shifts) {
  MatrixXcd t(idx(g.order()), idx(shifts.size()));
  for (std::size_t k = 0; k < shifts.size(); ++k) t.col(idx(k)) = translate(g, shifts[k], phi);
  return t;
}

bool covers_group_once(const FiniteGroup& g, const std::vector<Element>& shifts) {
  if (shifts.size() != g.order()) return false;
  std::vector<char> seen(g.order());
  for (Element x : shifts) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void check_shifts(const FiniteGroup& g, const std::vector<Element>& shifts) {
  if (shifts.empty()) throw Error(ErrorCode::kEmptyShiftSet, "shift set is empty");
  for (Element x : shifts)
    if (x >= g.order()) throw Error(ErrorCode::kBadParams, "shift " + std::to_string(x) + " is not a group element");
}

}  // namespace

UnitaryRep regular_rep(const FiniteGroup& g) {
  UnitaryRep rep;
  rep.dimension = g.order();
  rep.matrices.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) rep.matrices.push_back(permutation_matrix(g, x).cast<std::complex<double>>());
  return rep;
}

double rep_residual(const FiniteGroup& g, const UnitaryRep& pi) {
  if (pi.matrices.size() != g.order()) throw Error(ErrorCode::kSizeMismatch, "one matrix per group element expected");
  const auto eye = MatrixXcd::Identity(idx(pi.dimension), idx(pi.dimension));
  double r = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    r = std::max(r, (pi.matrices[x].adjoint() * pi.matrices[x] - eye).cwiseAbs().maxCoeff());
    for (Element y = 0; y < g.order(); ++y)
      r = std::max(r, (pi.matrices[g.mul(x, y)] - pi.matrices[x] * pi.matrices[y]).cwiseAbs().maxCoeff());
  }
  return r;
}

GroupVector delta(const FiniteGroup& g, Element x) {
  GroupVector v = GroupVector::Zero(idx(g.order()));
  v(idx(x)) = 1.0;
  return v;
}

GroupVector translate(const FiniteGroup& g, Element x, const GroupVector& f) {
  require_size(g, f, "vector");
  GroupVector out(f.size());
  for (Element y = 0; y < g.order(); ++y) out(idx(g.mul(x, y))) = f(idx(y));
  return out;
}

GroupVector convolve(const FiniteGroup& g, const GroupVector& f, const GroupVector& phi) {
  require_size(g, f, "f");
  require_size(g, phi, "phi");
  GroupVector out = GroupVector::Zero(f.size());
  for (Element y = 0; y < g.order(); ++y) {
    const auto fy = f(idx(y));
    if (fy == 0.0) continue;
    const Element yinv = g.inverse(y);
    for (Element x = 0; x < g.order(); ++x) out(idx(x)) += fy * phi(idx(g.mul(yinv, x)));
  }
  return out;
}

GroupVector involute(const FiniteGroup& g, const GroupVector& phi) {
  require_size(g, phi, "phi");
  GroupVector out(phi.size());
  for (Element x = 0; x < g.order(); ++x) out(idx(x)) = std::conj(phi(idx(g.inverse(x))));
  return out;
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = x;
  return out;
}

FrameReport family_report(const MatrixXcd& family, double tol) {
  FrameReport r;
  r.space_dimension = static_cast<std::size_t>(family.rows());
  r.family_size = static_cast<std::size_t>(family.cols());
  const MatrixXcd s = family * family.adjoint();
  const MatrixXcd gram = family.adjoint() * family;
  r.spectrum = ascending(Eigen::SelfAdjointEigenSolver<MatrixXcd>(s, Eigen::EigenvaluesOnly).eigenvalues());
  r.gram_spectrum = ascending(Eigen::SelfAdjointEigenSolver<MatrixXcd>(gram, Eigen::EigenvaluesOnly).eigenvalues());
  if (r.spectrum.empty()) return r;
  r.lower_bound = std::max(0.0, r.spectrum.front());
  r.upper_bound = std::max(r.lower_bound, r.spectrum.back());
  r.is_frame = r.lower_bound > tol * r.upper_bound && r.upper_bound > 0.0;
  r.is_parseval = std::all_of(r.spectrum.begin(), r.spectrum.end(), [&](double v) { return std::abs(v - 1.0) <= tol; });
  const double gmin = r.gram_spectrum.front(), gmax = r.gram_spectrum.back();
  r.is_riesz = r.is_frame && gmin > tol * gmax;
  r.is_onb = r.is_riesz && r.is_parseval;
  return r;
}

FrameReport frame_report(const FiniteGroup& g, const GroupVector& phi, const std::vector<Element>& shifts,
                         double tol) {
  require_size(g, phi, "phi");
  check_shifts(g, shifts);
  const MatrixXcd t = translates(g, phi, shifts);
  FrameReport r = family_report(t, tol);
  if (covers_group_once(g, shifts)) {
    const MatrixXcd s = t * t.adjoint();
    const GroupVector kernel = convolve(g, involute(g, phi), phi);
    double res = 0.0;
    for (Element y = 0; y < g.order(); ++y)
      res = std::max(res, (s.col(idx(y)) - convolve(g, delta(g, y), kernel)).cwiseAbs().maxCoeff());
    r.convolution_residual = res;
  }
  return r;
}

GroupVector canonical_tight_generator(const FiniteGroup& g, const GroupVector& phi, double tol) {
  const std::vector<Element> shifts = all_elements(g);
  const FrameReport report = frame_report(g, phi, shifts, tol);
  if (!report.is_frame) throw Error(ErrorCode::kNotAFrame, "translates of phi do not form a frame");
  const MatrixXcd t = translates(g, phi, shifts);
  const Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(t * t.adjoint());
  const Eigen::VectorXd inv_sqrt = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  return eig.eigenvectors() * (inv_sqrt.cast<std::complex<double>>().asDiagonal() * (eig.eigenvectors().adjoint() * phi));
}

RieszCheck riesz_theorem_check(const FiniteGroup& g, const GroupVector& phi, const std::vector<Element>& shifts,
                               double tol) {
  RieszCheck c;
  c.report = frame_report(g, phi, shifts, tol);
  c.is_frame = c.report.is_frame;
  c.shifts_cover_group = covers_group_once(g, shifts);
  const auto& gs = c.report.gram_spectrum;
  c.gram_invertible = gs.front() > tol * gs.back();
  c.dichotomy_holds = !c.is_frame || (c.shifts_cover_group && c.gram_invertible);
  return c;
}

GroupVector wavelet_transform(const UnitaryRep& pi, const GroupVector& eta, const GroupVector& u) {
  const auto d = idx(pi.dimension);
  if (eta.size() != d || u.size() != d) throw Error(ErrorCode::kSizeMismatch, "vector does not match the representation");
  GroupVector out(idx(pi.matrices.size()));
  for (std::size_t x = 0; x < pi.matrices.size(); ++x) out(idx(x)) = (pi.matrices[x] * eta).dot(u);
  return out;
}

bool is_admissible(const UnitaryRep& pi, const GroupVector& eta, double tol) {
  const auto d = idx(pi.dimension);
  if (eta.size() != d) throw Error(ErrorCode::kSizeMismatch, "vector does not match the representation");
  MatrixXcd v(idx(pi.matrices.size()), d);
  for (std::size_t x = 0; x < pi.matrices.size(); ++x) v.row(idx(x)) = (pi.matrices[x] * eta).adjoint();
  return (v.adjoint() * v - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

std::vector<MatrixXcd> isotypic_projections(const FiniteGroup& g, std::uint64_t seed) {
  const auto n = idx(g.order());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(1.0, 2.0);
  MatrixXcd h = MatrixXcd::Zero(n, n);
  const std::complex<double> i(0.0, 1.0);
  for (const auto& cls : g.conjugacy_classes()) {
    MatrixXd sum = MatrixXd::Zero(n, n);
    for (Element x : cls) sum += permutation_matrix(g, x);
    const MatrixXd herm = sum + sum.transpose();
    const MatrixXd skew = sum - sum.transpose();
    h += coeff(rng) * herm.cast<std::complex<double>>();
    h += coeff(rng) * i * skew.cast<std::complex<double>>();
  }
  const Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(h);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const double gap = 1e-6 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::vector<MatrixXcd> out;
  Index start = 0;
  for (Index k = 1; k <= n; ++k) {
    if (k < n && vals(k) - vals(k - 1) <= gap) continue;
    const auto block = eig.eigenvectors().middleCols(start, k - start);
    out.push_back(block * block.adjoint());
    start = k;
  }
  return out;
}

SamplingTransfer universal_sampling_transfer(const FiniteGroup& g, const GroupVector& phi,
                                             const std::vector<Element>& shifts, const MatrixXcd& p, double tol) {
  const auto n = idx(g.order());
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::kSizeMismatch, "projection size differs from the group order");
  const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
  const double idem = (p * p - p).cwiseAbs().maxCoeff();
  const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  if (idem > tol * scale || herm > tol * scale)
    throw Error(ErrorCode::kNotAProjection, "P is not an orthogonal projection (defects " + std::to_string(idem) +
                                                ", " + std::to_string(herm) + ")");
  for (Element x = 0; x < g.order(); ++x) {
    const MatrixXd lx = permutation_matrix(g, x);
    const double c = (p * lx - lx * p).cwiseAbs().maxCoeff();
    if (c > tol * scale)
      throw Error(ErrorCode::kNotCommuting, "P does not commute with lambda(" + std::to_string(x) + ")");
  }
  SamplingTransfer out;
  out.original = frame_report(g, phi, shifts, tol);
  if (!out.original.is_frame) throw Error(ErrorCode::kNotAFrame, "translates of phi do not form a frame");

  const Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(0.5 * (p + p.adjoint()));
  std::vector<Index> range_cols;
  for (Index k = 0; k < n; ++k)
    if (eig.eigenvalues()(k) > 0.5) range_cols.push_back(k);
  if (range_cols.empty()) throw Error(ErrorCode::kNotAProjection, "P is the zero projection");
  MatrixXcd q(n, idx(range_cols.size()));
  for (std::size_t k = 0; k < range_cols.size(); ++k) q.col(idx(k)) = eig.eigenvectors().col(range_cols[k]);
  out.subspace_dimension = range_cols.size();

  out.eta = p * phi;
  out.psi = p * delta(g, g.identity());
  out.report = family_report(q.adjoint() * translates(g, out.eta, shifts), tol);

  UnitaryRep sub;
  sub.dimension = out.subspace_dimension;
  for (Element x = 0; x < g.order(); ++x) sub.matrices.push_back(q.adjoint() * permutation_matrix(g, x) * q);
  out.psi_admissible = is_admissible(sub, q.adjoint() * out.psi, std::max(tol, 1e-9));
  return out;
}

RestrictionDecomposition restriction_decomposition(const FiniteGroup& g, const std::vector<Element>& subgroup) {
  RestrictionDecomposition d{make_subgroup(g, subgroup), {}, 0, {}, 0.0, 0.0};
  const std::size_t n = g.order();
  const std::size_t m = d.subgroup.elements.size();
  std::vector<char> assigned(n);
  for (Element c = 0; c < n; ++c) {
    if (assigned[c]) continue;
    d.representatives.push_back(c);
    for (Element h : d.subgroup.elements) assigned[g.mul(h, c)] = 1;
  }
  const std::size_t kappa = d.representatives.size();
  d.multiplicity = kappa;
  d.unitary = MatrixXd::Zero(idx(n), idx(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < kappa; ++j)
      d.unitary(idx(a * kappa + j), idx(g.mul(d.subgroup.elements[a], d.representatives[j]))) = 1.0;
  d.unitarity_residual = (d.unitary * d.unitary.transpose() - MatrixXd::Identity(idx(n), idx(n))).cwiseAbs().maxCoeff();

  for (std::size_t a = 0; a < m; ++a) {
    const MatrixXd lg = permutation_matrix(g, d.subgroup.elements[a]);
    const MatrixXd lh = permutation_matrix(d.subgroup.group, a);
    MatrixXd kron = MatrixXd::Zero(idx(n), idx(n));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        if (lh(idx(r), idx(s)) != 0.0)
          for (std::size_t j = 0; j < kappa; ++j) kron(idx(r * kappa + j), idx(s * kappa + j)) = lh(idx(r), idx(s));
    d.intertwining_residual =
        std::max(d.intertwining_residual, (d.unitary * lg * d.unitary.transpose() - kron).cwiseAbs().maxCoeff());
  }
  return d;
}

TransportReport transport_frame(const FiniteGroup& g, const std::vector<Element>& subgroup, const GroupVector& phi_h,
                                const std::vector<Element>& shifts, double tol) {
  const RestrictionDecomposition d = restriction_decomposition(g, subgroup);
  const Subgroup& h = d.subgroup;
  if (shifts.empty()) throw Error(ErrorCode::kEmptyShiftSet, "shift set is empty");
  std::vector<Element> local;
  for (Element x : shifts) {
    const std::size_t a = h.local_index(x);
    if (a == h.elements.size()) throw Error(ErrorCode::kBadParams, "shift " + std::to_string(x) + " is not in H");
    local.push_back(a);
  }
  TransportReport t;
  t.on_subgroup = frame_report(h.group, phi_h, local, tol);
  if (!t.on_subgroup.is_frame) throw Error(ErrorCode::kNotAFrameOnH, "translates of phi_H do not form a frame of l2(H)");

  const std::size_t m = h.elements.size();
  const Element c0 = d.representatives.front();
  GroupVector phi = GroupVector::Zero(idx(g.order()));
  for (std::size_t a = 0; a < m; ++a) phi(idx(g.mul(h.elements[a], c0))) = phi_h(idx(a));
  MatrixXcd coords(idx(m), idx(shifts.size()));
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    const GroupVector moved = translate(g, shifts[k], phi);
    for (std::size_t a = 0; a < m; ++a) coords(idx(a), idx(k)) = moved(idx(g.mul(h.elements[a], c0)));
  }
  t.on_subspace = family_report(coords, tol);
  t.subspace_dimension = m;
  t.ambient_dimension = g.order();
  t.bound_gap = std::max(std::abs(t.on_subspace.lower_bound - t.on_subgroup.lower_bound),
                         std::abs(t.on_subspace.upper_bound - t.on_subgroup.upper_bound));
  t.note = "frame property transported to a " + std::to_string(m) + "-dimensional lambda_G|H-invariant subspace of l2(G) (dimension " +
           std::to_string(g.order()) + "); multiplicity " + std::to_string(d.multiplicity) +
           " is finite, so the transfer to all of l2(G) is not realizable here";
  return t;
}

}  // namespace ftatlas
