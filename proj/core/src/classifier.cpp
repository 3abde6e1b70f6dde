#include "ftatlas/classifier.hpp"

#include "ftatlas/error.hpp"

namespace ftatlas {

std::string_view ft_status_name(FtStatus status) noexcept {
  switch (status) {
    case FtStatus::kFT: return "FT";
    case FtStatus::kNotFT: return "NOT_FT";
    case FtStatus::kOpen: return "OPEN";
    case FtStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

namespace cite {
constexpr const char* kDiscrete =
    "discrete groups are FT: the translates of the point mass at the identity form an orthonormal basis of l2(G)";
constexpr const char* kRieszConjecture =
    "conjectured: a group has a Riesz basis of translates if and only if it is discrete (not used as a rule)";
constexpr const char* kCompact = "a compact group is FT if and only if it is finite";
constexpr const char* kInGroup = "nondiscrete [IN]-groups are not FT";
constexpr const char* kIwasawa =
    "Iwasawa: a connected group is an [IN]-group if and only if its topological commutator is compact";
constexpr const char* kEuclidean = "R^d is not an FT group; abelian groups are [IN]-groups";
constexpr const char* kEigenSubalgebra =
    "an algebra not of type R contains an ax+b or Grelaud subalgebra (read off a non-imaginary eigenvalue of ad X)";
constexpr const char* kClosedTypeI =
    "exponential solvable and not nilpotent: the witness subgroup is simply connected, closed, type I and "
    "nonunimodular";
constexpr const char* kNonunimodular = "type I nonunimodular groups are FT";
constexpr const char* kSubgroup =
    "a group containing a closed FT subgroup H whose regular representation has infinite multiplicity is FT";
constexpr const char* kExponential = "exponential solvable Lie groups which are not nilpotent are FT";
constexpr const char* kNilpotentOpen =
    "nonabelian simply connected connected nilpotent Lie groups: FT status is open";
constexpr const char* kNilpotentReduction =
    "every such group is FT iff the Heisenberg group is; none is FT iff no T(n,R), n >= 3, is FT";
constexpr const char* kInverseNotSeparated =
    "such groups contain a separated set whose inverse is not relatively separated";
constexpr const char* kNoRule = "no implemented criterion decides this group";
}  // namespace cite

void add(FtVerdict& v, std::string rule, std::string citation) {
  v.chain.push_back({std::move(rule), std::move(citation)});
}

void validate(const GroupDescriptor& d) {
  const auto& f = d.flags;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kInconsistentFlags, d.name.empty() ? why : d.name + ": " + why);
  };
  if (f.finite && !f.compact) fail("finite groups are compact");
  if (f.finite && !f.discrete) fail("finite groups are discrete");
  if (f.simply_connected && !f.connected) fail("simply connected groups are connected");
  if (d.algebra.has_value() != f.connected) fail("an algebra is given exactly for connected Lie groups");
  if (d.algebra) {
    if (d.algebra->is_abelian() != f.abelian) fail("abelian flag disagrees with the brackets");
    if (f.discrete) fail("a connected Lie group of positive dimension is not discrete");
    if (f.in_group == false && f.compact) fail("compact groups are [IN]-groups");
  }
  if (f.abelian && f.in_group == false) fail("abelian groups are [IN]-groups");
}

void apply_known_witness(const GroupDescriptor& d, FtVerdict& v) {
  const auto& known = *d.known_subgroup;
  const auto report =
      verify_subalgebra_template(*d.algebra, known.witness.generators, known.witness.kind, known.witness.beta);
  v.witness = known.witness;
  v.witness->residual = report.residual;
  if (!known.justification.empty()) add(v, "explicit_subgroup", known.justification);
}

}  // namespace

FtVerdict classify(const GroupDescriptor& d, const ClassifyOptions& options) {
  validate(d);
  const auto& f = d.flags;
  FtVerdict v;

  if (f.discrete) {
    v.status = FtStatus::kFT;
    add(v, "discrete", cite::kDiscrete);
    v.notes.push_back(cite::kRieszConjecture);
    return v;
  }
  if (f.compact) {
    v.status = FtStatus::kNotFT;
    add(v, "compact_nondiscrete", cite::kCompact);
    return v;
  }
  if (f.in_group == true) {
    v.status = FtStatus::kNotFT;
    add(v, "in_group_nondiscrete", cite::kInGroup);
    add(v, "iwasawa", cite::kIwasawa);
    return v;
  }
  if (f.abelian) {
    v.status = FtStatus::kNotFT;
    add(v, "abelian_nondiscrete", cite::kEuclidean);
    add(v, "in_group_nondiscrete", cite::kInGroup);
    return v;
  }
  if (!d.algebra) {
    v.status = FtStatus::kUnknown;
    add(v, "no_rule", cite::kNoRule);
    return v;
  }

  const LieAlgebra& g = *d.algebra;
  const bool solvable = is_solvable(g);
  const bool nilpotent = solvable && is_nilpotent(g);
  const SearchOptions search{options.seed, options.trials};

  if (solvable && !nilpotent) {
    const RootSystem roots = complexified_roots(g, RootOptions{options.seed, options.root_retries});
    if (is_exponential(g, roots).exponential) {
      try {
        v.witness = find_ax_b_or_grelaud(g, search);
        v.status = FtStatus::kFT;
        add(v, "eigen_subalgebra", cite::kEigenSubalgebra);
        add(v, "closed_type_i_subgroup", cite::kClosedTypeI);
        add(v, "nonunimodular_type_i", cite::kNonunimodular);
        add(v, "ft_subgroup", cite::kSubgroup);
        add(v, "exponential_not_nilpotent", cite::kExponential);
        return v;
      } catch (const Error& e) {
        v.notes.push_back(std::string("witness search failed on an exponential algebra: ") + e.what());
      }
    } else {
      v.notes.push_back("solvable but not exponential: a root takes nonzero purely imaginary values");
    }
  }

  if (nilpotent && !g.is_abelian() && f.simply_connected && f.connected) {
    v.status = FtStatus::kOpen;
    add(v, "nilpotent_open", cite::kNilpotentOpen);
    v.notes.push_back(cite::kNilpotentReduction);
    v.notes.push_back(cite::kInverseNotSeparated);
    if (d.known_subgroup) apply_known_witness(d, v);
    return v;
  }

  if (!solvable) {
    if (d.known_subgroup) {
      apply_known_witness(d, v);
      if (!d.known_subgroup->closed) v.assumptions.push_back("witness subgroup closed in G");
    } else {
      try {
        v.witness = find_ax_b_or_grelaud(g, search);
        v.assumptions.push_back("witness subgroup closed in G");
      } catch (const Error& e) {
        v.notes.push_back(std::string("no ax+b or Grelaud subalgebra found: ") + e.what());
      }
    }
    if (v.witness) {
      v.status = FtStatus::kFT;
      add(v, "eigen_subalgebra", cite::kEigenSubalgebra);
      add(v, "nonunimodular_type_i", cite::kNonunimodular);
      add(v, "ft_subgroup", cite::kSubgroup);
      return v;
    }
  }

  v.status = FtStatus::kUnknown;
  v.witness.reset();
  add(v, "no_rule", cite::kNoRule);
  return v;
}

GroupDescriptor simply_connected_descriptor(std::string name, LieAlgebra algebra) {
  GroupDescriptor d;
  d.name = std::move(name);
  d.flags.connected = true;
  d.flags.simply_connected = true;
  d.flags.abelian = algebra.is_abelian();
  d.algebra = std::move(algebra);
  return d;
}

GroupDescriptor finite_group_descriptor(std::string name, bool abelian) {
  GroupDescriptor d;
  d.name = std::move(name);
  d.flags.finite = true;
  d.flags.compact = true;
  d.flags.discrete = true;
  d.flags.abelian = abelian;
  return d;
}

FtVerdict classify_matrix_example(const std::string& name, const BuiltinParams& params,
                                  const ClassifyOptions& options) {
  GroupDescriptor d;
  d.flags.connected = true;
  auto explicit_witness = [](const std::vector<MatrixLieElement>& basis, const RationalMatrix& first,
                             const RationalMatrix& second, std::string justification) {
    KnownSubgroup known;
    known.witness.kind = WitnessKind::kAxB;
    known.witness.generators = {matrix_coordinates(basis, first), matrix_coordinates(basis, second)};
    known.closed = true;
    known.justification = std::move(justification);
    return known;
  };

  if (name == "sl2") {
    const auto basis = sl2_basis();
    d.name = "SL(2,R)";
    d.algebra = span_to_lie_algebra(basis);
    d.known_subgroup = explicit_witness(
        basis, Rational(1, 2) * basis[0].matrix, basis[1].matrix,
        "closed subgroup {[[a, b], [0, 1/a]] : a > 0} of SL(2,R) is isomorphic to the ax+b group; "
        "witness (H/2, E)");
  } else if (name == "so_p1" || name == "so_pq") {
    const int p = params.p;
    const int q = name == "so_p1" ? 1 : params.q;
    if (p < 2 || q < 1 || p + q <= 2) throw Error(ErrorCode::kBadParams, "needs p >= 2, q >= 1, p + q > 2");
    const auto basis = so_pq_basis(p, q);
    const auto [b, y] = so_pq_pair(p, q);
    d.name = "SO_0(" + std::to_string(p) + "," + std::to_string(q) + ")";
    d.algebra = span_to_lie_algebra(basis);
    d.known_subgroup = explicit_witness(
        basis, b.matrix, y.matrix,
        "exp(R " + y.name + ") exp(R " + b.name + ") is a closed ax+b subgroup of SO(p,q) with [" + b.name +
            ", " + y.name + "] = " + y.name);
  } else if (name == "shearlet_H") {
    d.name = "shearlet dilation group H (identity component)";
    d.algebra = span_to_lie_algebra(shearlet_basis());
    d.flags.simply_connected = true;
  } else if (name == "T_n") {
    if (params.n < 3) throw Error(ErrorCode::kBadParams, "T(n) needs n >= 3");
    const auto basis = strictly_upper_basis(params.n);
    d.name = "T(" + std::to_string(params.n) + ",R)";
    d.algebra = span_to_lie_algebra(basis);
    d.flags.simply_connected = true;
    const auto size = static_cast<std::size_t>(params.n);
    RationalMatrix e12(size, size), e2n(size, size), e1n(size, size);
    e12(0, 1) = 1;
    e2n(1, size - 1) = 1;
    e1n(0, size - 1) = 1;
    KnownSubgroup known;
    known.witness.kind = WitnessKind::kHeisenberg;
    known.witness.generators = {matrix_coordinates(basis, e12), matrix_coordinates(basis, e2n),
                                matrix_coordinates(basis, e1n)};
    known.closed = true;
    known.justification = "Heisenberg triple (E1_2, E2_n, E1_n) spans a closed Heisenberg subgroup";
    d.known_subgroup = std::move(known);
  } else {
    throw Error(ErrorCode::kUnknownName, "unknown matrix example '" + name + "'");
  }
  d.flags.abelian = d.algebra->is_abelian();
  FtVerdict v = classify(d, options);
  if (name == "shearlet_H")
    v.notes.push_back("H is the union of its identity component and its negative; the identity component "
                      "is isomorphic to the ax+b group after rescaling D to 2D");
  if (name == "so_p1" || name == "so_pq" || name == "sl2")
    v.notes.push_back("classified through the identity component, which contains the explicit ax+b subgroup");
  return v;
}

}  // namespace ftatlas
