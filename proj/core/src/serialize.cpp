#include "ftatlas/serialize.hpp"

#include <cmath>

#include "ftatlas/error.hpp"

namespace ftatlas {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::kParseError, why); }

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

Rational coefficient(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number_float()) {
    if (!std::isfinite(j.get<double>())) bad("non-finite coefficient");
    return parse_rational(j.dump());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("coefficient must be a number or a rational string, got " + j.dump());
}

std::size_t count_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(where) + "." + key + " must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

double finite_number(const Json& j, const char* where) {
  if (!j.is_number()) bad(std::string(where) + " must be a number");
  return j.get<double>();
}

Json spectrum_json(const std::vector<double>& v) { return Json(v); }

Json coords_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    bad(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json& basis = field(j, "basis", "algebra");
  if (!basis.is_array() || basis.empty()) bad("algebra.basis must be a nonempty array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) bad("algebra.basis entries must be strings");
    names.push_back(b.get<std::string>());
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (names[a] == names[b]) bad("basis name '" + names[a] + "' repeats");
  auto lookup = [&](const Json& v, const char* what) -> std::size_t {
    if (!v.is_string()) bad(std::string("bracket ") + what + " must be a basis name");
    const std::string s = v.get<std::string>();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == s) return k;
    throw Error(ErrorCode::kUnknownName, "unknown basis name '" + s + "'");
  };

  ScalarMode mode = ScalarMode::kExact;
  if (const auto it = j.find("scalars"); it != j.end()) {
    if (*it == "float")
      mode = ScalarMode::kFloat;
    else if (*it != "exact")
      bad("algebra.scalars must be \"exact\" or \"float\"");
  }
  double tolerance = kDefaultTolerance;
  if (const auto it = j.find("tolerance"); it != j.end()) tolerance = finite_number(*it, "algebra.tolerance");

  std::vector<BracketRule> rules;
  if (const auto it = j.find("brackets"); it != j.end()) {
    if (!it->is_array()) bad("algebra.brackets must be an array");
    for (const auto& b : *it) {
      BracketRule rule;
      rule.left = lookup(field(b, "left", "bracket"), "left");
      rule.right = lookup(field(b, "right", "bracket"), "right");
      const Json& result = field(b, "result", "bracket");
      if (!result.is_object()) bad("bracket.result must map basis names to coefficients");
      for (const auto& [name, coef] : result.items()) {
        const Rational c = coefficient(coef);
        if (c != 0) rule.result.emplace_back(lookup(Json(name), "result"), c);
      }
      rules.push_back(std::move(rule));
    }
  }
  return LieAlgebra::from_brackets(std::move(names), rules, mode, tolerance);
}

Json algebra_to_json(const LieAlgebra& g) {
  const auto& names = g.basis_names();
  const bool exact = g.mode() == ScalarMode::kExact;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      Json result = Json::object();
      if (exact) {
        const SparseVector v = g.exact_bracket(i, k);
        for (const auto& [idx, c] : v.entries()) result[names[idx]] = to_string(c);
      } else {
        for (std::size_t m = 0; m < g.dim(); ++m)
          if (const double c = g.structure(i, k, m); c != 0.0) result[names[m]] = c;
      }
      if (!result.empty()) brackets.push_back({{"left", names[i]}, {"right", names[k]}, {"result", result}});
    }
  return {{"basis", names}, {"brackets", brackets}, {"scalars", exact ? "exact" : "float"}};
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) bad("group must be a JSON object");
  if (j.contains("family")) {
    const Json& fam = j["family"];
    if (!fam.is_string()) bad("group.family must be a string");
    const std::string name = fam.get<std::string>();
    const char* key = name == "heisenberg_mod" ? "p" : "n";
    return group_family(name, count_field(j, key, "group"));
  }
  const std::size_t order = count_field(j, "order", "group");
  const Json& table = field(j, "table", "group");
  if (!table.is_array() || table.size() != order) bad("group.table must have `order` rows");
  std::vector<std::vector<Element>> t;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != order) bad("group.table rows must have `order` entries");
    std::vector<Element> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) bad("group.table entries must be element indices");
      r.push_back(static_cast<Element>(v.get<long long>()));
    }
    t.push_back(std::move(r));
  }
  return FiniteGroup::from_table(std::move(t));
}

Json group_to_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}};
}

GroupVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  GroupVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (e.is_number()) {
      v(static_cast<Eigen::Index>(i)) = e.get<double>();
    } else if (e.is_string()) {
      v(static_cast<Eigen::Index>(i)) = to_double(parse_rational(e.get<std::string>()));
    } else if (e.is_array() && e.size() == 2) {
      v(static_cast<Eigen::Index>(i)) = {finite_number(e[0], "vector entry"), finite_number(e[1], "vector entry")};
    } else {
      bad("vector entries must be numbers or [re, im] pairs");
    }
  }
  return v;
}

Json vector_to_json(const GroupVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
  return a;
}

PointSet pointset_from_json(const Json& j) {
  const Json& space = field(j, "space", "point set");
  const Json& points = field(j, "points", "point set");
  if (!points.is_array()) bad("point set.points must be an array");
  std::vector<Point> pts;
  for (const auto& p : points) {
    if (!p.is_array()) bad("each point must be an array of coordinates");
    Point q;
    for (const auto& c : p) q.push_back(finite_number(c, "coordinate"));
    pts.push_back(std::move(q));
  }
  if (space == "heisenberg") {
    std::vector<HeisPoint> h;
    for (const auto& p : pts) h.push_back(to_heis(p));
    return PointSet::heisenberg(h);
  }
  if (space == "euclidean") {
    const std::size_t d = j.contains("dimension") ? count_field(j, "dimension", "point set")
                                                  : (pts.empty() ? 1 : pts.front().size());
    return PointSet::euclidean(d, std::move(pts));
  }
  bad("point set.space must be \"euclidean\" or \"heisenberg\"");
}

Json pointset_to_json(const PointSet& s) {
  Json j{{"space", s.space() == Space::kHeisenberg ? "heisenberg" : "euclidean"}, {"points", s.points()}};
  if (s.space() == Space::kEuclidean) j["dimension"] = s.dimension();
  return j;
}

Json to_json(const SeriesChain& chain) {
  return {{"kind", chain.kind == SeriesKind::kDerived ? "derived" : "lower_central"}, {"dims", chain.dims}};
}

Json to_json(const Root& root) {
  return {{"real_part", coords_json(root.real_part)}, {"imag_part", coords_json(root.imag_part)}};
}

Json to_json(const SubalgebraWitness& w) {
  Json gens = Json::array();
  for (const auto& g : w.generators) gens.push_back(coords_json(g.coords));
  Json j{{"kind", std::string(witness_kind_name(w.kind))},
         {"generators", gens},
         {"residual", w.residual},
         {"seed", w.seed},
         {"trial_index", w.trial_index}};
  if (w.kind == WitnessKind::kGrelaud) j["beta"] = w.beta;
  return j;
}

Json to_json(const TemplateReport& r) {
  return {{"closure_residual", r.closure_residual}, {"template_residual", r.template_residual}, {"residual", r.residual}};
}

Json to_json(const FtVerdict& v) {
  Json chain = Json::array();
  for (const auto& c : v.chain) chain.push_back({{"rule", c.rule}, {"citation", c.citation}});
  Json j{{"status", std::string(ft_status_name(v.status))},
         {"chain", chain},
         {"assumptions", v.assumptions},
         {"notes", v.notes}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const FrameReport& r) {
  Json j{{"lower_bound", r.lower_bound},
         {"upper_bound", r.upper_bound},
         {"is_frame", r.is_frame},
         {"is_parseval", r.is_parseval},
         {"is_riesz", r.is_riesz},
         {"is_onb", r.is_onb},
         {"spectrum", spectrum_json(r.spectrum)},
         {"gram_spectrum", spectrum_json(r.gram_spectrum)},
         {"family_size", r.family_size},
         {"space_dimension", r.space_dimension}};
  if (r.convolution_residual >= 0.0) j["convolution_residual"] = r.convolution_residual;
  return j;
}

Json to_json(const RieszCheck& r) {
  return {{"is_frame", r.is_frame},
          {"shifts_cover_group", r.shifts_cover_group},
          {"gram_invertible", r.gram_invertible},
          {"dichotomy_holds", r.dichotomy_holds},
          {"report", to_json(r.report)}};
}

Json to_json(const SamplingTransfer& t) {
  return {{"psi", vector_to_json(t.psi)},
          {"psi_admissible", t.psi_admissible},
          {"eta", vector_to_json(t.eta)},
          {"report", to_json(t.report)},
          {"original", to_json(t.original)},
          {"subspace_dimension", t.subspace_dimension}};
}

Json to_json(const RestrictionDecomposition& d) {
  return {{"subgroup", d.subgroup.elements},
          {"representatives", d.representatives},
          {"multiplicity", d.multiplicity},
          {"unitarity_residual", d.unitarity_residual},
          {"intertwining_residual", d.intertwining_residual}};
}

Json to_json(const TransportReport& t) {
  return {{"on_subgroup", to_json(t.on_subgroup)},
          {"on_subspace", to_json(t.on_subspace)},
          {"subspace_dimension", t.subspace_dimension},
          {"ambient_dimension", t.ambient_dimension},
          {"bound_gap", t.bound_gap},
          {"note", t.note}};
}

Json to_json(const SeparationReport& r) {
  Json queries = Json::array();
  for (const auto& [s, ok] : r.separated_at) queries.push_back({{"s", s}, {"separated", ok}});
  return {{"radius", r.radius},
          {"max_ball_occupancy", r.max_ball_occupancy},
          {"witness_center", r.witness_center},
          {"witness_index", r.witness_index},
          {"separated_at", queries}};
}

Json to_json(const Partition& p) {
  return {{"parts", p.parts}, {"part_count", p.parts.size()}, {"packing_constant", p.packing_constant},
          {"bound_holds", p.bound_holds}};
}

Json to_json(const EstimateDemo& d) {
  Json rows = Json::array();
  for (const auto& r : d.rows)
    rows.push_back({{"width", r.width},
                    {"step", r.step},
                    {"l2", r.l2},
                    {"l1", r.l1},
                    {"ratio", r.ratio},
                    {"expected", r.expected},
                    {"relative_error", r.relative_error}});
  return {{"rows", rows}, {"increasing_as_width_shrinks", d.increasing_as_width_shrinks}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& v = m(i, k);
      if (v.get_den() == 1 && v.get_num().fits_slong_p())
        row.push_back(v.get_num().get_si());
      else
        row.push_back(to_string(v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MatrixLieElement& e) { return {{"name", e.name}, {"matrix", to_json(e.matrix)}}; }

}  // namespace ftatlas
