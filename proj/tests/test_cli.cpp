#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "schema_validator.hpp"

using nlohmann::json;

namespace {

json load_schema() {
  const char* path = std::getenv("PERMKIT_SCHEMA");
  REQUIRE(path != nullptr);
  std::ifstream in(path);
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

void check_against_schema(const std::string& payload) {
  static const json schema = load_schema();
  std::string err;
  const bool ok = schema_check::validate_output(schema, json::parse(payload), err);
  INFO(err);
  CHECK(ok);
}

}  // namespace

TEST_CASE("construct golden output", "[cli]") {
  const auto r = cli::run("construct --n 11 --sequence pow2 --format cycles");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(1,3)(5,11)(6,10)(7,9)\n");

  const auto r2 = cli::run("construct --n 9 --sequence fib --format oneline");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "[1 3 2 9 8 7 6 5 4]\n");
}

TEST_CASE("count b-file output", "[cli]") {
  const auto r = cli::run("count --kind fib --n-max 12 --bfile");
  CHECK(r.exit_code == 0);
  REQUIRE(!r.output.empty());
  CHECK(r.output.back() == '\n');
  const auto pos = r.output.rfind("12 20\n");
  CHECK(pos == r.output.size() - 6);

  const auto chen = cli::run("count --kind chen-even --n-max 11 --bfile");
  CHECK(chen.output.substr(chen.output.size() - 7) == "11 226\n");
}

TEST_CASE("permanent JSON output", "[cli]") {
  const auto r = cli::run("permanent --kind power --n 4 --mod 25");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["residue"] == 10);
  CHECK(out["modulus"] == 25);
  CHECK(out["n"] == 4);
  check_against_schema(r.output);

  const auto exact = cli::run("permanent --kind power --n 4");
  CHECK(json::parse(exact.output)["value"] == "6160");
  check_against_schema(exact.output);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(cli::run("construct --n 0 --sequence pow2").exit_code == 2);   // bad degree
  CHECK(cli::run("construct --sequence pow2").exit_code == 2);         // missing flag
  CHECK(cli::run("nonsense").exit_code == 2);
  CHECK(cli::run("count --kind bogus --n-max 3").exit_code == 2);

  // Budget exhaustion surfaces as exit 3.
  const auto unknown =
      cli::run("search --problem conj46-odd --n 14 --budget-nodes 5");
  CHECK(unknown.exit_code == 3);

  // An empty verdict is still a verdict.
  const auto empty = cli::run("search --problem conj44b --n 7");
  CHECK(empty.exit_code == 0);
  CHECK(json::parse(empty.output)["verdict"] == "empty");
}

TEST_CASE("search output validates against the schema", "[cli]") {
  for (const std::string args : {
           "search --problem conj43a --n 10",
           "search --problem conj46-even --n 8",
           "search --problem s18a --n 5",
           "search --problem eq46 --n 8",
           "search --problem prime-circle --n 8",
           "search --problem conj49 --n 6",
           "search --problem conj49ii --n 6",
           "search --problem eq411 --n 4",
       }) {
    const auto r = cli::run(args);
    CAPTURE(args);
    CHECK(r.exit_code == 0);
    check_against_schema(r.output);
  }
}

TEST_CASE("verify output validates against the schema", "[cli]") {
  for (const std::string args : {
           "verify --conjecture 41 --m 7 --n 4",
           "verify --conjecture 13i --m 7",
           "verify --conjecture 14i --elements 2,1",
           "verify --conjecture 14ii --m 11 --elements 3,9,5",
           "verify --conjecture 410 --elements 1,2,3 --n 2",
           "verify --conjecture 410 --m 13 --elements 1,2,5 --n 2",
       }) {
    const auto r = cli::run(args);
    CAPTURE(args, r.output);
    CHECK(r.exit_code == 0);
    check_against_schema(r.output);
  }
}

TEST_CASE("construct and count JSON validate against the schema", "[cli]") {
  check_against_schema(cli::run("construct --n 6 --sequence pow2 --format json").output);
  check_against_schema(cli::run("count --kind chen-even --n-max 6 --format json").output);
  check_against_schema(cli::run("count --kind fib --n-max 8 --format json").output);
}

TEST_CASE("identical argv gives byte-identical output, any thread count", "[cli]") {
  const auto a = cli::run("search --problem eq45 --n 9");
  const auto b = cli::run("search --problem eq45 --n 9");
  // elapsed_seconds varies; compare everything else field by field.
  json ja = json::parse(a.output), jb = json::parse(b.output);
  ja.erase("elapsed_seconds");
  jb.erase("elapsed_seconds");
  CHECK(ja == jb);

  const auto t1 = cli::run("permanent --kind power --n 11 --threads 1");
  const auto t4 = cli::run("permanent --kind power --n 11 --threads 4");
  CHECK(t1.output == t4.output);
  CHECK(!t1.output.empty());

  // The opt-in environment override behaves like the flag.
  const auto te = cli::run_with_env("PERMKIT_THREADS=3", "permanent --kind power --n 11");
  CHECK(te.output == t1.output);
}
