#include <doctest.h>

#include <fstream>

#include "fixtures.hpp"
#include "tate/io.hpp"
#include "tate/p1_families.hpp"
#include "tate/report.hpp"
#include "tate/voc_omega.hpp"

using namespace tate;
using Q = Rational;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(TATE_SOURCE_DIR) + "/" + rel);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string error_of(const std::string& text, ErrorCode* code = nullptr) {
  try {
    parse_module_file<Q>(text);
  } catch (const Error& e) {
    if (code) *code = e.code();
    return e.what();
  }
  return "";
}

template <class F>
void check_roundtrip(const ModulePresentation<F>& M) {
  auto back = parse_module_file<F>(print_module_file(M));
  CHECK(same_presentation(back, M));
}

/// Integer rows of an aligned table: label -> entries ('.' is 0).
std::map<std::string, std::vector<long long>> table_rows(const std::string& text) {
  std::map<std::string, std::vector<long long>> out;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string label, cell;
    ls >> label;
    if (label == "certificate:") break;
    auto& row = out[label];
    while (ls >> cell) row.push_back(cell == "." ? 0 : std::stoll(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("the shipped EX1 file is the Example 1 presentation") {
  auto text = slurp("fixtures/ex1.mod");
  CHECK(module_file_field(text) == "Q");
  CHECK(same_presentation(parse_module_file<Q>(text), fixtures::ex1<Q>()));
}

TEST_CASE("module files round trip") {
  check_roundtrip(fixtures::ex1<Q>());
  check_roundtrip(fixtures::caviglia_special<Q>());
  check_roundtrip(fixtures::cyclic<Q>(Ring::projective(2), {"x0^2 - 3/2*x1*x2", "x1^3"}));
  check_roundtrip(universal_extension<Q>(6, 3));
  for (int p = 0; p <= 2; ++p) check_roundtrip(omega_module<Q>(Ring::projective(2), p));
  check_roundtrip(free_module<Q>(Ring::projective(1), {}));
  for (const char* f : {"fixtures/p2.mod", "fixtures/empty.mod", "fixtures/ext42.mod", "fixtures/caviglia_special.mod"}) {
    CAPTURE(f);
    check_roundtrip(parse_module_file<Q>(slurp(f)));
  }
}

TEST_CASE("the (4,2) fixture file is the universal extension") {
  auto M = parse_module_file<Q>(slurp("fixtures/ext42.mod"));
  auto U = universal_extension<Q>(4, 2);
  CHECK(M.gens == U.gens);
  CHECK(M.relations == U.relations);
}

TEST_CASE("empty generator list is the zero module") {
  auto M = parse_module_file<Q>("vars x y\ngens\n");
  CHECK(M.num_gens() == 0);
  CHECK(M.num_relations() == 0);
  auto M2 = parse_module_file<Q>("n 2\ngens\nrelations\n");
  CHECK(M2.ring.nx() == 3);
  CHECK(M2.num_gens() == 0);
}

TEST_CASE("inhomogeneous entries are located") {
  ErrorCode code{};
  auto msg = error_of("vars x y\ngens\n  g 1 0\nrelations\n  x^2+y\n", &code);
  CHECK(code == ErrorCode::InhomogeneousEntry);
  CHECK(msg.find("line 5, col 3") != std::string::npos);
  msg = error_of("vars x y\ngens\n  g 0 0\n  h 1 0\nrelations\n  x^2, x\n  x, y^2\n", &code);
  CHECK(code == ErrorCode::InhomogeneousEntry);
  CHECK(msg.find("line 7, col 6") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  ErrorCode code{};
  CHECK(error_of("vars x y\nweights 3\ngens\n", &code).find("line 2, col 1") != std::string::npos);
  CHECK(code == ErrorCode::ParseError);
  CHECK(error_of("vars x y\ngens\n  g one 0\n", &code).find("line 3, col 5") != std::string::npos);
  CHECK(error_of("vars x y\ngens\n  g 0 1\n", &code).find("line 3, col 7") != std::string::npos);
  CHECK(error_of("vars x y\ngens\n  g 0 0\n  h 0 0\nrelations\n  x\n").find("2 generators") != std::string::npos);
  CHECK(error_of("vars x y\ngens\n  g 0 0\nrelations\n  x, y\n  x\n").find("line 6") != std::string::npos);
  CHECK(error_of("vars x y\ngens\n  g 0 0\nrelations\n  x*z\n", &code).find("line 5, col 5") != std::string::npos);
  CHECK(code == ErrorCode::UnknownSymbol);
  CHECK(error_of("vars x y\ngens\n  g 0 0\nrelations\n  x,\n").find("empty entry") != std::string::npos);
  CHECK(error_of("gens\n").find("declared before") != std::string::npos);
  CHECK(error_of("vars x x\ngens\n").find("duplicate") != std::string::npos);
  CHECK(error_of("# nothing\n").find("missing") != std::string::npos);
}

TEST_CASE("golden text and JSON carry the same numbers") {
  {
    auto rows = table_rows(slurp("tests/golden/ex1_betti.txt"));
    auto j = json::parse(slurp("tests/golden/ex1_betti.json"));
    REQUIRE(rows.size() == j["rows"].size());
    for (const auto& r : j["rows"]) CHECK(rows.at(std::to_string(r["row"].get<int>())) == r["entries"].get<std::vector<long long>>());
    CHECK(rows.at("1") == std::vector<long long>{6, 4, 2, 1, 0, 0});
    CHECK(rows.at("0") == std::vector<long long>{0, 0, 1, 2, 4, 6});
    CHECK(j["minColumn"] == -2);
  }
  {
    auto rows = table_rows(slurp("tests/golden/p2_cohomology.txt"));
    auto j = json::parse(slurp("tests/golden/p2_cohomology.json"));
    for (const auto& r : j["rows"])
      CHECK(rows.at("h^" + std::to_string(r["q"].get<int>())) == r["entries"].get<std::vector<long long>>());
  }
  {
    auto text = slurp("tests/golden/ex1_pushforward.txt");
    auto j = json::parse(slurp("tests/golden/ex1_pushforward.json"));
    std::string terms, degs = " generator param degrees:";
    for (const auto& t : j["terms"]) {
      auto g = t["generatorParamDegrees"].get<std::vector<int>>();
      degs += " [" + std::to_string(t["degree"].get<int>()) + "]";
      for (int x : g) degs += " " + std::to_string(x);
      terms += "A^" + std::to_string(g.size()) + "[" + std::to_string(t["degree"].get<int>()) + "]";
    }
    CHECK(text.find("0 -> A^1[0] --(a)--> A^1[1] -> 0") != std::string::npos);
    CHECK(j["differentials"][0]["matrix"] == json::parse(R"([["a"]])"));
    CHECK(text.find(degs.substr(1)) != std::string::npos);
    CHECK(terms == "A^1[0]A^1[1]");
  }
  {
    auto text = slurp("tests/golden/strata_f3.txt");
    auto j = json::parse(slurp("tests/golden/strata_f3.json"));
    CHECK(text.find("points " + std::to_string(j["points"].get<long long>())) != std::string::npos);
    for (const auto& [t, c] : j["counts"].items())
      CHECK(text.find("  " + t + " " + std::to_string(c.get<long long>()) + "\n") != std::string::npos);
    CHECK(text.find("minors identity counterexamples " + std::to_string(j["minorsCounterexamples"].get<int>())) != std::string::npos);
    CHECK(j["points"] == 59049);
    CHECK(j["minorsCounterexamples"] == 0);
    CHECK(j["tableCounterexamples"] == 0);
  }
}
