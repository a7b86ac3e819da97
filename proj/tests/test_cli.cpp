// End-to-end checks through the installed command-line binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string stdout_text;
  std::string stderr_text;
};

CliResult run_cli(const std::string& args) {
  static const std::string binary = VNEMBED_CLI_PATH;
  fs::path out = fs::temp_directory_path() / "vnembed_cli_out.txt";
  fs::path err = fs::temp_directory_path() / "vnembed_cli_err.txt";
  std::string command = binary + " " + args + " >" + out.string() + " 2>" + err.string();
  int raw = std::system(command.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

fs::path sandbox() {
  fs::path dir = fs::temp_directory_path() / "vnembed_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("solve then validate on its own output passes") {
  fs::path dir = sandbox();
  fs::path inst = dir / "inst.json";
  fs::path map = dir / "map.json";
  CHECK(run_cli("gen fat-tree --ports 4 --seed 3 --out " + inst.string()).exit_code == 0);
  CHECK(run_cli("gen request --nodes 4 --prob 0.7 --seed 5 --into " + inst.string() + " --out " +
                inst.string())
            .exit_code == 0);
  CliResult solved = run_cli("solve --instance " + inst.string() + " --out " + map.string() +
                             " --quiet --stats " + (dir / "stats.csv").string());
  CHECK(solved.exit_code == 0);
  CliResult validated =
      run_cli("validate --instance " + inst.string() + " --mapping " + map.string());
  CHECK(validated.exit_code == 0);
  CHECK(validated.stdout_text.find("ok, cost") != std::string::npos);

  // Stats CSV got a header and a row.
  std::ifstream stats(dir / "stats.csv");
  std::string header, row;
  std::getline(stats, header);
  std::getline(stats, row);
  CHECK(header.rfind("instance,", 0) == 0);
  CHECK(row.find("Optimal") != std::string::npos);

  // Oracle agrees through the CLI as well.
  CliResult oracled =
      run_cli("oracle --instance " + inst.string() + " --out " + (dir / "omap.json").string() +
              " --quiet");
  CHECK(oracled.exit_code == 0);
}

TEST_CASE("validate exit codes distinguish invalid and infeasible") {
  fs::path dir = sandbox();
  fs::path inst = dir / "vi.json";
  write(inst, R"({
    "tau": 1,
    "substrate": {"nodes": [{"id": "a", "capacity": ["3"], "cost": ["1"]}], "edges": []},
    "request": {"nodes": [{"id": "u", "demand": ["2"]}, {"id": "w", "demand": ["2"]}],
                "edges": []}
  })");
  fs::path both_on_a = dir / "map_sum.json";
  write(both_on_a, R"({"cost": "4", "node_map": {"u": "a", "w": "a"}, "edge_map": {}})");
  CHECK(run_cli("validate --instance " + inst.string() + " --mapping " + both_on_a.string())
            .exit_code == 3);

  fs::path too_big = dir / "vi2.json";
  write(too_big, R"({
    "tau": 1,
    "substrate": {"nodes": [{"id": "a", "capacity": ["1"], "cost": ["1"]}], "edges": []},
    "request": {"nodes": [{"id": "u", "demand": ["2"]}], "edges": []}
  })");
  fs::path on_a = dir / "map_pe.json";
  write(on_a, R"({"cost": "2", "node_map": {"u": "a"}, "edge_map": {}})");
  CliResult invalid =
      run_cli("validate --instance " + too_big.string() + " --mapping " + on_a.string());
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.stdout_text.find("PerElementCapacity") != std::string::npos);

  CliResult json_mode = run_cli("validate --json --instance " + too_big.string() + " --mapping " +
                                on_a.string());
  CHECK(json_mode.exit_code == 2);
  CHECK(json_mode.stdout_text.find("\"valid\": false") != std::string::npos);
}

TEST_CASE("infeasible instances exit with the documented code") {
  fs::path dir = sandbox();
  fs::path inst = dir / "infeasible.json";
  write(inst, R"({
    "tau": 1,
    "substrate": {"nodes": [{"id": "a", "capacity": ["1"], "cost": ["1"]}], "edges": []},
    "request": {"nodes": [{"id": "u", "demand": ["5"]}], "edges": []}
  })");
  CHECK(run_cli("solve --instance " + inst.string()).exit_code == 4);
  CHECK(run_cli("oracle --instance " + inst.string()).exit_code == 4);
}

TEST_CASE("errors are one-line diagnostics with nonzero exit") {
  CliResult missing = run_cli("solve --instance /nonexistent.json");
  CHECK(missing.exit_code == 1);
  CHECK(missing.stderr_text.rfind("error:", 0) == 0);
  CHECK(missing.stderr_text.find('\n') == missing.stderr_text.size() - 1);

  CliResult as_json = run_cli("--json-errors solve --instance /nonexistent.json");
  CHECK(as_json.exit_code == 1);
  CHECK(as_json.stderr_text.rfind("{\"error\"", 0) == 0);
}

TEST_CASE("transform emits a transformed instance plus trace") {
  fs::path dir = sandbox();
  fs::path inst = dir / "t.json";
  CHECK(run_cli("gen partition --set 2,3,5 --out " + inst.string()).exit_code == 0);
  CliResult transformed =
      run_cli("transform --instance " + inst.string() + " --out " + (dir / "tt.json").string() +
              " --trace " + (dir / "trace.json").string());
  CHECK(transformed.exit_code == 0);
  std::ifstream trace(dir / "trace.json");
  std::ostringstream ss;
  ss << trace.rdbuf();
  CHECK(ss.str().find("leaf_added") != std::string::npos);
}

TEST_CASE("export-lp writes an LP document") {
  fs::path dir = sandbox();
  fs::path inst = dir / "lp_inst.json";
  CHECK(run_cli("gen partition --set 1,1 --out " + inst.string()).exit_code == 0);
  CliResult exported = run_cli("export-lp --instance " + inst.string());
  CHECK(exported.exit_code == 0);
  CHECK(exported.stdout_text.rfind("\\ vnembed", 0) == 0);
  CHECK(exported.stdout_text.find("Minimize") != std::string::npos);
  CHECK(exported.stdout_text.find("Binary") != std::string::npos);
}

TEST_CASE("bench runs the grid deterministically") {
  fs::path dir = sandbox();
  fs::path config = dir / "bench.json";
  write(config, R"({"grid": [{"f": 4, "r": 3, "p": 0.5, "seeds": [1, 2, 3]}],
                    "timeout_ms": 60000, "parallelism": 2})");
  CliResult first = run_cli("bench --config " + config.string());
  CliResult second = run_cli("bench --config " + config.string());
  CHECK(first.exit_code == 0);

  // Everything except the wall-clock column must be reproducible.
  auto strip_timing = [](const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("f,", 0) == 0) continue;
      std::vector<std::string> fields;
      std::stringstream fs(line);
      std::string field;
      while (std::getline(fs, field, ',')) fields.push_back(field);
      REQUIRE(fields.size() == 9);
      fields[6] = "-";  // solve_ms
      std::string joined;
      for (const std::string& f : fields) joined += f + ",";
      rows.push_back(joined);
    }
    return rows;
  };
  std::vector<std::string> rows = strip_timing(first.stdout_text);
  CHECK(rows == strip_timing(second.stdout_text));
  CHECK(rows.size() == 3);
}
