#pragma once

// JSON input and output. Keys are emitted in sorted order, so equal values
// give byte-identical text.

#include <json.hpp>
#include <string>

#include "ftatlas/amalgam.hpp"
#include "ftatlas/classifier.hpp"
#include "ftatlas/finite_frames.hpp"
#include "ftatlas/finite_group.hpp"
#include "ftatlas/lie_algebra.hpp"
#include "ftatlas/matrix_groups.hpp"
#include "ftatlas/pointset.hpp"
#include "ftatlas/subalgebra.hpp"

namespace ftatlas {

using Json = nlohmann::json;

/// Parses text, reporting failures as kParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");

/// {"basis": [...], "brackets": [{"left", "right", "result": {name: coef}}],
///  "scalars": "exact" | "float"}. Coefficients are numbers or strings
/// such as "1/3". Throws kParseError, kUnknownName and validation errors.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& g);

/// {"order": n, "table": [[...]]} or {"family": name, "n": k} ("p" for
/// heisenberg_mod).
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// Array of numbers or [re, im] pairs.
GroupVector vector_from_json(const Json& j);
Json vector_to_json(const GroupVector& v);

/// {"space": "euclidean", "dimension": d, "points": [[...]]} or
/// {"space": "heisenberg", "points": [[x1, x2, x3], ...]}.
PointSet pointset_from_json(const Json& j);
Json pointset_to_json(const PointSet& s);

Json to_json(const SeriesChain& chain);
Json to_json(const Root& root);
Json to_json(const SubalgebraWitness& w);
Json to_json(const TemplateReport& r);
Json to_json(const FtVerdict& v);
Json to_json(const FrameReport& r);
Json to_json(const RieszCheck& r);
Json to_json(const SamplingTransfer& t);
Json to_json(const RestrictionDecomposition& d);
Json to_json(const TransportReport& t);
Json to_json(const SeparationReport& r);
Json to_json(const Partition& p);
Json to_json(const EstimateDemo& d);
Json to_json(const RationalMatrix& m);
Json to_json(const MatrixLieElement& e);

}  // namespace ftatlas
