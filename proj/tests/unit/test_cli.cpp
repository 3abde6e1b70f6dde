#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <ftatlas_cli/commands.hpp>

using namespace ftatlas;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ft-atlas");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FTATLAS_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("analyze") {
  const auto r = invoke({"analyze", data("grelaud_beta1.json")});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["verdict"]["status"] == "FT");
  CHECK(invoke({"analyze", data("grelaud_beta1.json")}).out == r.out);
  CHECK(invoke({"--seed", "7", "analyze", "--builtin", "sl2"}).out ==
        invoke({"--seed", "7", "analyze", "--builtin", "sl2"}).out);
  const auto heis = invoke({"--format", "text", "analyze", data("heisenberg.json")});
  CHECK(heis.out.find("verdict.status: OPEN") != std::string::npos);
  const auto torus = invoke({"analyze", "--builtin", "abelian", "--n", "2", "--not-simply-connected"});
  CHECK(torus.code == 0);
}

TEST_CASE("library errors exit with code 2") {
  const auto bad = invoke({"analyze", data("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("PARSE_ERROR") != std::string::npos);
  const auto missing = invoke({"analyze", data("does_not_exist.json")});
  CHECK(missing.code == 2);
  CHECK(invoke({"heisenberg-demo", "--n", "201"}).code == 2);
  CHECK(invoke({"sopq", "--p", "1", "--q", "1"}).err.find("BAD_PARAMS") != std::string::npos);
  CHECK(invoke({"frame", "--family", "cyclic", "--param", "2", "--phi", "1,1", "--shifts", ""}).err.find(
            "EMPTY_SHIFT_SET") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(invoke({"no-such-command"}).code == 1);
  CHECK(invoke({"--format", "xml", "analyze", "--builtin", "sl2"}).code == 1);
}

TEST_CASE("frame") {
  const auto r = invoke({"frame", "--group", data("z2.json"), "--vector", data("phi_z2.json")});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["report"]["lower_bound"].get<double>() == doctest::Approx(0.25));
  const auto inline_phi = invoke({"frame", "--family", "cyclic", "--param", "2", "--phi", "1,1/2"});
  CHECK(parse_json(inline_phi.out)["report"] == j["report"]);
}

TEST_CASE("demos and formats") {
  const auto csv = invoke({"--format", "csv", "amalgam-demo", "--widths", "1,0.1"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("expected,l1,l2,ratio,relative_error,step,width\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

  const auto part = invoke({"partition", data("line_points.json"), "--s", "0.35"});
  CHECK(part.code == 0);
  CHECK(parse_json(part.out)["bound_holds"] == true);

  CHECK(invoke({"sopq", "--p", "3", "--q", "2"}).code == 0);
  CHECK(invoke({"classify-example", "shearlet_H"}).code == 0);
}

TEST_CASE("--out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "ftatlas_cli_out.json";
  std::filesystem::remove(path);
  const auto r = invoke({"--out", path.string(), "heisenberg-demo", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_json(buf.str()).contains("occupancy_at_least_n"));
  std::filesystem::remove(path);
}
