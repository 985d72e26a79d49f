#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "glc/instance.hpp"
#include "json.hpp"

using namespace glc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string command = std::string(GLC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
  std::vector<nlohmann::json> records;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] == '{') records.push_back(nlohmann::json::parse(line));
  return records;
}

std::string corpus(const std::string& name) { return std::string(GLC_CORPUS_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("glc-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

const char* line_module = R"([ring]
vars = x, y
field = F(101)
[ideal]
generators = x, y
[M]
quotient = x
[N]
quotient = x
)";

template <class Fn>
void expect_parse_error(const std::string& text, std::size_t line, Fn&& check_message) {
  try {
    parse_instance(text, "bad");
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() >= 1);
    check_message(std::string(e.what()));
  }
}

}  // namespace

TEST_CASE("parse the line module") {
  auto any = load_instance(corpus("line_m.inst"));
  const auto& inst = std::get<Instance<PrimeField>>(any);
  CHECK(inst.id == "line_m");
  CHECK(inst.d() == 2);
  CHECK(inst.ring->nvars() == 2);
  CHECK(inst.M.hilbert_function(3) == 1);
  CHECK(inst.a.generators.size() == 2);
}

TEST_CASE("rational field and hypersurface") {
  auto any = parse_instance(R"([ring]
vars = x, y, z
field = QQ
hypersurface = x*y - z^2
[ideal]
generators = x, y, z
[M]
quotient =
[N]
quotient =
)");
  const auto& inst = std::get<Instance<RationalField>>(any);
  CHECK(inst.d() == 2);
  CHECK(inst.ring->has_hypersurface());
}

TEST_CASE("empty module section is the zero module") {
  std::string text = line_module;
  text.replace(text.find("[N]\nquotient = x\n"), 17, "[N]\n");
  auto inst = std::get<Instance<PrimeField>>(parse_instance(text));
  CHECK(inst.N.is_zero());
  CHECK_FALSE(inst.M.is_zero());
}

TEST_CASE("direct sums and explicit presentations") {
  std::string text = line_module;
  text.replace(text.find("[N]\nquotient = x\n"), 17, "[N]\ndirectsum = x | x, y\n");
  auto sum = std::get<Instance<PrimeField>>(parse_instance(text));
  CHECK(sum.N.generators().rank() == 2);
  CHECK(sum.N.hilbert_function(0) == 2);
  CHECK(sum.N.hilbert_function(4) == 1);

  std::string explicit_text = line_module;
  explicit_text.replace(explicit_text.find("[M]\nquotient = x\n"), 17,
                        "[M]\ndegrees = 0, 1\nrelation = x, 0\nrelation = 0, y\n");
  auto e = std::get<Instance<PrimeField>>(parse_instance(explicit_text));
  CHECK(e.M.generators().degrees == std::vector<int>{0, 1});
  for (int j = 0; j <= 5; ++j) CHECK(e.M.hilbert_function(j) == (j == 0 ? 1 : 2));
}

TEST_CASE("print and parse round trip on the corpus") {
  for (const auto& entry : fs::directory_iterator(GLC_CORPUS_DIR)) {
    if (entry.path().extension() != ".inst") continue;
    CAPTURE(entry.path().filename().string());
    auto first = load_instance(entry.path());
    auto text = print_instance(first);
    auto second = parse_instance(text, instance_id(first));
    CHECK(print_instance(second) == text);
    std::visit(
        [&](const auto& a) {
          using I = std::decay_t<decltype(a)>;
          const auto& b = std::get<I>(second);
          CHECK(same_ideal(a.a, b.a));
          for (int j = -1; j <= 6; ++j) {
            CHECK(a.M.hilbert_function(j) == b.M.hilbert_function(j));
            CHECK(a.N.hilbert_function(j) == b.N.hilbert_function(j));
          }
        },
        first);
  }
}

TEST_CASE("parse errors carry line and column") {
  std::string composite = line_module;
  composite.replace(composite.find("F(101)"), 6, "F(6)");
  expect_parse_error(composite, 3, [](const std::string& m) { CHECK(m.find("not a prime") != std::string::npos); });
  expect_parse_error("[ring]\nvars = x, y\nfield = F(7)\n", 4,
                     [](const std::string& m) { CHECK(m.find("[ideal]") != std::string::npos); });

  std::string inhomogeneous = line_module;
  inhomogeneous.replace(inhomogeneous.find("quotient = x\n[N]"), 12, "quotient = x + 1");
  try {
    parse_instance(inhomogeneous);
    FAIL("accepted an inhomogeneous relation");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
  } catch (const InstanceError&) {
  }

  std::string unknown = line_module;
  unknown.replace(unknown.find("generators = x, y"), 17, "generators = x, w");
  expect_parse_error(unknown, 5, [](const std::string&) {});

  std::string linear = line_module;
  linear.replace(linear.find("field = F(101)\n"), 15, "field = F(101)\nhypersurface = x\n");
  CHECK_THROWS(parse_instance(linear));

  expect_parse_error("[ring]\nvars = x\n[bogus]\n", 3, [](const std::string&) {});
  CHECK_THROWS_AS(parse_instance("[ideal]\ngenerators = x\n"), ParseError);
}

TEST_CASE("CLI verify on the line module") {
  auto r = cli("verify --no-timing --format jsonl " + corpus("line_m.inst"));
  CHECK(r.code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 1);
  const auto& rec = records[0];
  CHECK(rec["id"] == "line_m");
  CHECK(rec["status"] == "ok");
  CHECK(rec["d"] == 2);
  CHECK(rec["predictor"]["verdict"] == "nonvanishes");
  CHECK(rec["predictor"]["witnesses"] == nlohmann::json::array({"(x)"}));
  CHECK(rec["oracle"]["verdict"] == "nonzero");
  CHECK(rec["agreement"] == "agree");
  CHECK(rec["hard_failure"] == false);
  CHECK_FALSE(rec.contains("timing"));
}

TEST_CASE("CLI output is deterministic and ordered under parallel jobs") {
  auto dir = std::string(GLC_CORPUS_DIR);
  auto one = cli("report --no-timing --format jsonl " + dir);
  auto again = cli("report --no-timing --format jsonl " + dir);
  auto parallel = cli("report --no-timing --format jsonl --jobs 4 " + dir);
  CHECK(one.code == 0);
  CHECK(one.out == again.out);
  CHECK(one.out == parallel.out);
  CHECK(json_lines(one.out).size() >= 30);
}

TEST_CASE("CLI batch with a malformed file") {
  TempDir tmp;
  std::string vanishing = line_module;
  vanishing.replace(vanishing.find("generators = x, y"), 17, "generators = x");
  tmp.write("a_top.inst", line_module);
  tmp.write("b_low.inst", vanishing);
  tmp.write("c_broken.inst", "[ring]\nvars = x, y\nfield = F(6)\n");
  auto r = cli("report --no-timing " + tmp.path.string());
  CHECK(r.code == 2);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 3);
  CHECK(records[0]["status"] == "ok");
  CHECK(records[0]["predictor"]["verdict"] == "nonvanishes");
  CHECK(records[1]["status"] == "ok");
  CHECK(records[1]["predictor"]["verdict"] == "vanishes");
  CHECK(records[2]["id"] == "c_broken");
  CHECK(records[2]["status"] == "error");
  CHECK(records[2]["error"]["kind"] == "parse");
  CHECK(r.out.find("agreement") != std::string::npos);
}

TEST_CASE("CLI commands and usage errors") {
  auto predict = cli("predict --format jsonl " + corpus("line_x.inst"));
  CHECK(predict.code == 0);
  auto p = json_lines(predict.out);
  REQUIRE(p.size() == 1);
  CHECK(p[0]["predictor"]["verdict"] == "vanishes");
  CHECK(p[0]["timing"].contains("duration_ms"));
  CHECK_FALSE(p[0].contains("oracle"));

  auto b = cli("bounds --format jsonl --no-timing " + corpus("free_m.inst"));
  CHECK(b.code == 0);
  auto bj = json_lines(b.out);
  REQUIRE(bj.size() == 1);
  CHECK(bj[0]["bounds"]["gradeT"] == 2);
  CHECK(bj[0]["bounds"]["vanishing_bound"] == 2);

  auto table = cli("verify --format table --no-timing " + corpus("line_m.inst"));
  CHECK(json_lines(table.out).empty());
  CHECK(table.out.find("predictor") != std::string::npos);

  CHECK(cli("").code == 2);
  CHECK(cli("verify").code == 2);
  CHECK(cli("verify --format xml " + corpus("line_m.inst")).code == 2);
  CHECK(cli("verify --nmax 2 --window 2 " + corpus("line_m.inst")).code == 2);
  CHECK(cli("verify /nonexistent/file.inst").code == 2);
  CHECK(cli("selftest").code == 0);
}
