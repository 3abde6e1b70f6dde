#include "ftatlas_cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <ftatlas/error.hpp>

namespace ftatlas::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

double scalar(const std::string& token) { return to_double(parse_rational(token)); }

GroupVector parse_inline_vector(const std::string& text) {
  const auto tokens = split(text, ',');
  GroupVector v(static_cast<Eigen::Index>(tokens.size()));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto colon = tokens[i].find(':');
    if (colon == std::string::npos)
      v(static_cast<Eigen::Index>(i)) = scalar(tokens[i]);
    else
      v(static_cast<Eigen::Index>(i)) = {scalar(tokens[i].substr(0, colon)), scalar(tokens[i].substr(colon + 1))};
  }
  return v;
}

std::vector<Element> parse_shifts(const std::string& text, const FiniteGroup& g) {
  if (text == "all") return all_elements(g);
  std::vector<Element> out;
  for (const auto& t : split(text, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.front() == '-') throw Error(ErrorCode::kParseError, "bad shift '" + t + "'");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

Json error_json(const Error& e) {
  return {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
}

Json roots_json(const RootSystem& rs) {
  Json a = Json::array();
  for (const auto& r : rs.roots) a.push_back(to_json(r));
  return a;
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

Json cmd_analyze(const AnalyzeInput& input, const RunConfig& config) {
  if (input.file.has_value() == input.builtin.has_value())
    throw Error(ErrorCode::kBadParams, "analyze needs exactly one of an algebra file or --builtin");
  std::string name;
  std::optional<LieAlgebra> algebra;
  Json report = Json::object();
  if (input.file) {
    Json j = parse_json(read_file(*input.file), *input.file);
    if (j.is_object() && !j.contains("tolerance")) j["tolerance"] = config.tolerance;
    algebra = algebra_from_json(j);
    name = *input.file;
  } else {
    BuiltinAlgebra b = builtin_algebra(*input.builtin, input.params);
    algebra = std::move(b.algebra);
    name = *input.builtin;
    if (!b.note.empty()) report["note"] = b.note;
  }
  const LieAlgebra& g = *algebra;
  report["name"] = name;
  report["dim"] = g.dim();
  report["basis"] = g.basis_names();
  report["scalars"] = g.mode() == ScalarMode::kExact ? "exact" : "float";
  report["lower_central"] = to_json(lower_central_series(g));
  report["derived"] = to_json(derived_series(g));
  const bool solvable = is_solvable(g);
  report["nilpotent"] = is_nilpotent(g);
  report["solvable"] = solvable;
  report["engel_spot_check"] = engel_spot_check(g, 16, config.seed);
  if (solvable) {
    const RootSystem rs = complexified_roots(g, RootOptions{config.seed, 32});
    const ExponentialTest e = is_exponential(g, rs);
    report["roots"] = roots_json(rs);
    report["exponential"] = e.exponential;
    if (e.offending_root) report["offending_root"] = to_json(*e.offending_root);
    report["type_R"] = is_type_R(g, rs);
  } else {
    report["roots"] = nullptr;
    report["exponential"] = nullptr;
    report["type_R"] = nullptr;
  }
  try {
    report["witness"] = to_json(find_ax_b_or_grelaud(g, SearchOptions{config.seed, 64}));
  } catch (const Error& e) {
    report["witness"] = error_json(e);
  }
  GroupDescriptor d = simply_connected_descriptor(name, g);
  d.flags.simply_connected = input.simply_connected;
  d.flags.in_group = input.in_group;
  report["verdict"] = to_json(classify(d, ClassifyOptions{config.seed, 64, 32}));
  return report;
}

Json cmd_frame(const FrameInput& input, const RunConfig& config) {
  if (input.group_file.has_value() == input.family.has_value())
    throw Error(ErrorCode::kBadParams, "frame needs exactly one of --group or --family");
  if (input.family) {
    const std::size_t order_bound = *input.family == "dihedral" ? 2 * input.family_parameter : input.family_parameter;
    if (order_bound > kMaxGroupOrder)
      throw Error(ErrorCode::kCapExceeded, "group order above " + std::to_string(kMaxGroupOrder));
  }
  const FiniteGroup g = input.family ? group_family(*input.family, input.family_parameter)
                                     : group_from_json(parse_json(read_file(*input.group_file), *input.group_file));
  if (g.order() > kMaxGroupOrder)
    throw Error(ErrorCode::kCapExceeded, "group order " + std::to_string(g.order()) + " above " +
                                             std::to_string(kMaxGroupOrder));
  if (input.vector_file.has_value() == input.vector_inline.has_value())
    throw Error(ErrorCode::kBadParams, "frame needs exactly one of --vector or --phi");
  const GroupVector phi = input.vector_file
                              ? vector_from_json(parse_json(read_file(*input.vector_file), *input.vector_file))
                              : parse_inline_vector(*input.vector_inline);
  const std::vector<Element> shifts = parse_shifts(input.shifts, g);
  const RieszCheck check = riesz_theorem_check(g, phi, shifts, config.tolerance);
  return {{"group", {{"name", g.name()}, {"order", g.order()}}},
          {"shifts", shifts},
          {"report", to_json(check.report)},
          {"riesz_check",
           {{"shifts_cover_group", check.shifts_cover_group},
            {"gram_invertible", check.gram_invertible},
            {"dichotomy_holds", check.dichotomy_holds}}}};
}

Json cmd_heisenberg_demo(std::int64_t n, const RunConfig& config) {
  (void)config;
  if (n < 1) throw Error(ErrorCode::kBadParams, "N must be at least 1");
  if (n > kMaxNMax) throw Error(ErrorCode::kCapExceeded, "N above " + std::to_string(kMaxNMax));
  const PointSet gamma = counterexample_set(n);
  const PointSet inverse = inverse_set(gamma);
  const HeisPoint center = heis_u(n);
  const double radius = 1.0 / static_cast<double>(n);
  const SeparationReport scan = separation_scan(inverse, radius, std::vector<Point>{from_heis(center)});
  double formula_error = 0.0;
  for (std::int64_t l = 1; l <= n; ++l)
    formula_error = std::max(formula_error, std::abs(quasi_distance(center, heis_v(n, l)) -
                                                     static_cast<double>(l) / static_cast<double>(n * n)));
  Json out{{"n", n},
           {"points", gamma.size()},
           {"inverse_ball", to_json(scan)},
           {"occupancy_at_least_n", scan.max_ball_occupancy >= static_cast<std::size_t>(n)},
           {"distance_formula_max_error", formula_error}};
  if (gamma.size() >= 2) {
    const MinDistance md = min_pairwise_distance(gamma);
    out["gamma_min_distance"] = md.distance;
    out["gamma_min_pair"] = {md.first, md.second};
  } else {
    out["gamma_min_distance"] = nullptr;
  }
  return out;
}

Json cmd_partition(const std::string& points_file, double s, const RunConfig& config) {
  (void)config;
  const PointSet set = pointset_from_json(parse_json(read_file(points_file), points_file));
  const Partition p = greedy_partition(set, s);
  bool separated = true;
  for (const auto& part : p.parts) separated = separated && is_separated(set.subset(part), s);
  Json out = to_json(p);
  out["s"] = s;
  out["size"] = set.size();
  out["all_parts_separated"] = separated;
  return out;
}

Json cmd_amalgam_demo(const std::vector<double>& widths, std::optional<double> step, const RunConfig& config) {
  (void)config;
  return to_json(estimate_violation_demo(widths, step));
}

Json cmd_sopq(int p, int q, const RunConfig& config) {
  const auto [b, y] = so_pq_pair(p, q);
  const IndefiniteForm form = IndefiniteForm::make(p, q);
  auto pair_json = [&](const MatrixLieElement& first, const MatrixLieElement& second) {
    const MembershipReport m1 = so_pq_membership(first.matrix, form);
    const MembershipReport m2 = so_pq_membership(second.matrix, form);
    return Json{{"first", to_json(first)},
                {"second", to_json(second)},
                {"bracket_exact", (commutator(first.matrix, second.matrix) - second.matrix).is_zero()},
                {"members", m1.member && m2.member && m1.block_member && m2.block_member}};
  };
  Json out{{"p", p}, {"q", q}, {"by_pair", pair_json(b, y)}};
  if (q == 1) {
    const auto [a, x] = so_p1_pair(p);
    out["ax_pair"] = pair_json(a, x);
  }
  BuiltinParams params;
  params.p = p;
  params.q = q;
  out["verdict"] = to_json(classify_matrix_example("so_pq", params, ClassifyOptions{config.seed, 64, 32}));
  return out;
}

Json cmd_classify_example(const std::string& name, const BuiltinParams& params, const RunConfig& config) {
  return {{"example", name},
          {"verdict", to_json(classify_matrix_example(name, params, ClassifyOptions{config.seed, 64, 32}))}};
}

std::string render(const Json& report, Format format) {
  if (format == Format::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  if (format == Format::kCsv && report.is_object() && report.contains("rows") && report["rows"].is_array() &&
      !report["rows"].empty() && report["rows"].front().is_object()) {
    const Json& rows = report["rows"];
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(keys[i]);
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const Json& v = row.at(keys[i]);
        out << (i ? "," : "") << csv_cell(v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (format == Format::kCsv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_cell(k) << "," << csv_cell(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ft-atlas: frames of translates, Lie algebra classification and Heisenberg geometry"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  std::string out_path;
  app.add_option("--seed", config.seed, "Seed for randomized searches");
  app.add_option("--tol", config.tolerance, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string beta_text = "1";
  BuiltinParams params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--beta", beta_text, "Grelaud parameter (rational)");
    sub->add_option("--p", params.p, "p for so(p,q)");
    sub->add_option("--q", params.q, "q for so(p,q)");
    sub->add_option("--n", params.n, "n for T_n and abelian");
  };

  AnalyzeInput analyze;
  std::string analyze_file, in_group;
  bool not_simply_connected = false;
  auto* a = app.add_subcommand("analyze", "Structural report and FT verdict for a Lie algebra");
  a->add_option("file", analyze_file, "Algebra JSON file");
  a->add_option("--builtin", analyze.builtin, "Bundled algebra name");
  a->add_option("--in-group", in_group, "Whether the group is an [IN]-group")->check(CLI::IsMember({"true", "false"}));
  a->add_flag("--not-simply-connected", not_simply_connected, "Describe a connected but not simply connected group");
  add_params(a);

  FrameInput frame;
  auto* f = app.add_subcommand("frame", "Frame report for translates on a finite group");
  f->add_option("--group", frame.group_file, "Group JSON file");
  f->add_option("--family", frame.family, "cyclic, dihedral, symmetric or heisenberg_mod");
  f->add_option("--param", frame.family_parameter, "Family parameter (n or p)");
  f->add_option("--vector", frame.vector_file, "Generator JSON file");
  f->add_option("--phi", frame.vector_inline, "Generator inline: comma-separated values, re:im for complex");
  f->add_option("--shifts", frame.shifts, "\"all\" or comma-separated element indices");

  std::int64_t demo_n = 10;
  auto* h = app.add_subcommand("heisenberg-demo", "Separated set whose inverse is not relatively separated");
  h->add_option("--n", demo_n, "N (at most 200)");

  std::string points_file;
  double sep = 0.5;
  auto* pt = app.add_subcommand("partition", "Greedy partition into separated subsets");
  pt->add_option("points", points_file, "Point set JSON file")->required();
  pt->add_option("--s", sep, "Separation radius")->required();

  std::vector<double> widths{1.0, 0.1, 0.01, 0.0001};
  std::optional<double> step;
  auto* am = app.add_subcommand("amalgam-demo", "Ratio ||f||_2 / ||f||_1 for shrinking indicators");
  am->add_option("--widths", widths, "Indicator widths")->delimiter(',');
  am->add_option("--step", step, "Grid step (default w/100)");

  int sp = 2, sq = 1;
  auto* so = app.add_subcommand("sopq", "Explicit so(p,q) ax+b pairs and the resulting verdict");
  so->add_option("--p", sp, "p >= 2");
  so->add_option("--q", sq, "q >= 1");

  std::string example;
  auto* ce = app.add_subcommand("classify-example", "Classify a matrix group example");
  ce->add_option("name", example, "sl2, so_p1, so_pq, shearlet_H or T_n")->required();
  add_params(ce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  config.format = format == "csv" ? Format::kCsv : format == "text" ? Format::kText : Format::kJson;
  try {
    params.beta = parse_rational(beta_text);
    Json report;
    if (a->parsed()) {
      if (!analyze_file.empty()) analyze.file = analyze_file;
      analyze.params = params;
      if (!in_group.empty()) analyze.in_group = in_group == "true";
      analyze.simply_connected = !not_simply_connected;
      report = cmd_analyze(analyze, config);
    } else if (f->parsed()) {
      report = cmd_frame(frame, config);
    } else if (h->parsed()) {
      report = cmd_heisenberg_demo(demo_n, config);
    } else if (pt->parsed()) {
      report = cmd_partition(points_file, sep, config);
    } else if (am->parsed()) {
      report = cmd_amalgam_demo(widths, step, config);
    } else if (so->parsed()) {
      report = cmd_sopq(sp, sq, config);
    } else {
      report = cmd_classify_example(example, params, config);
    }
    const std::string text = render(report, config.format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) throw Error(ErrorCode::kParseError, "cannot write '" + out_path + "'");
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: PARSE_ERROR: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ftatlas::cli
