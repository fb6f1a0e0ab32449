#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "wrank/triplet.hpp"

using namespace wrank;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wrank");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wrank_test_" + name);
}

}  // namespace

TEST_CASE("rank command") {
  const auto r = run_cli({"rank", "--m", "9", "--n", "3", "--char", "3", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["computed_rank"] == 27);
  CHECK(j["predicted_rank"] == 27);
  CHECK(j["verdict"] == "match");

  const auto text = run_cli({"rank", "--m", "6", "--n", "3", "--char", "0"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("computed 10") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"rank", "--m", "8", "--n", "3", "--char", "0", "--layers", "--format", "json"},
           {"layers", "--m", "8", "--n", "2", "--char", "5", "--format", "json"},
           {"coeff", "--m", "12", "--n", "4", "--k", "3", "--i", "3", "--j", "2", "--format", "json"},
           {"snf", "--m", "5", "--n", "2", "--format", "json"},
           {"diag-compare", "--m", "6", "--n", "2", "--format", "json"},
           {"column", "--m", "4", "--n", "2", "--set", "1,2", "--format", "json"},
           {"predict", "--m", "9", "--n", "3", "--char", "3", "--format", "json"}}) {
    const auto r = run_cli(args);
    REQUIRE(r.code == cli::kOk);
    REQUIRE(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("deterministic output for a fixed seed") {
  const std::vector<std::string> args{"rank", "--m", "7", "--n", "2", "--char", "0", "--seed", "99", "--format", "json"};
  auto a = nlohmann::json::parse(run_cli(args).out);
  auto b = nlohmann::json::parse(run_cli(args).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
  CHECK(a["probe_prime"] == random_probe_prime(99));
}

TEST_CASE("coeff, snf, layers, column and predict text output") {
  CHECK(run_cli({"coeff", "--m", "12", "--n", "4", "--k", "3", "--i", "3", "--j", "2"}).out == "2\n");
  const auto snf = run_cli({"snf", "--m", "5", "--n", "2"});
  std::istringstream in(snf.out);
  int odd = 0;
  for (long long d; in >> d;) odd += d % 2 != 0;
  CHECK(odd == 4);
  const auto col = run_cli({"column", "--m", "4", "--n", "2", "--set", "1,2"});
  CHECK(col.out == "{1,3}\n{2,3}\n{1,4}\n{2,4}\n");
  CHECK(run_cli({"predict", "--m", "8", "--n", "4", "--char", "2"}).out.rfind("6 ", 0) == 0);
  const auto layers = run_cli({"layers", "--m", "10", "--n", "5", "--char", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(layers.out)["layers"] == nlohmann::json::array({1, 0, 35}));
}

TEST_CASE("sweep command") {
  const auto path = scratch("sweep.csv");
  const auto r = run_cli({"sweep", "--max-m", "4", "--primes", "2", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == cli::kSweepHeader);
  CHECK(row.rfind("4,2,2,2,2,", 0) == 0);
  CHECK(row.substr(row.rfind(',') + 1) == "match");
  CHECK_FALSE(std::getline(in, extra));
  std::filesystem::remove(path);

  const auto rows = cli::run_sweep({7, {2, 3}, true, kDefaultSeed}, 3);
  REQUIRE(rows.size() == 18);  // six (m, n) pairs for m = 4..7, three characteristics each
  for (std::size_t t = 1; t < rows.size(); ++t) {
    const auto key = [](const cli::SweepRow& s) { return std::tuple(s.m, s.n); };
    REQUIRE(key(rows[t - 1]) <= key(rows[t]));
  }
  for (const auto& row : rows) REQUIRE(row.match);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"rank", "--m", "5", "--n", "2", "--char", "4"}).code == cli::kUsage);
  CHECK(run_cli({"rank", "--m", "5", "--n", "7"}).code == cli::kUsage);
  CHECK(run_cli({"rank", "--n", "2"}).code == cli::kUsage);
  CHECK(run_cli({"bogus"}).code == cli::kUsage);
  CHECK(run_cli({"layers", "--m", "13", "--n", "3"}).code == cli::kSizeCap);
  CHECK(run_cli({"snf", "--m", "12", "--n", "3", "--cap", "100"}).code == cli::kSizeCap);
  CHECK(run_cli({"sweep", "--max-m", "5", "--out", "/nonexistent/dir/x.csv"}).code == cli::kIoError);
  CHECK(run_cli({"snf", "--input", "/nonexistent/m.txt"}).code == cli::kIoError);
}

TEST_CASE("export writes the requested matrix as triplets") {
  const auto path = scratch("export.txt");
  REQUIRE(run_cli({"rank", "--m", "6", "--n", "2", "--char", "0", "--export", path.string()}).code == cli::kOk);
  std::ifstream in(path);
  const auto t = read_triplets(in);
  const auto w = oracle::incidence(6, 2, 2, 1);
  const auto dense = to_dense(t);
  REQUIRE(dense.rows() == w.size());
  REQUIRE(dense.cols() == w[0].size());
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t c = 0; c < w[0].size(); ++c) REQUIRE(dense(r, c) == w[r][c]);
  }
  const auto snf = run_cli({"snf", "--input", path.string()});
  CHECK(snf.out == run_cli({"snf", "--m", "6", "--n", "2"}).out);
  std::filesystem::remove(path);
}
