#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "brute.hpp"
#include "compdnf/cli.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/io.hpp"

using namespace compdnf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "compdnf");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "compdnf_unit";
  fs::create_directories(dir);
  return dir / name;
}

const std::string data = COMPDNF_TEST_DATA;

}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const std::size_t k = 1 + rng() % 9;
    const auto m = brute::random_matrix(rng, k, n);
    REQUIRE(parse_matrix(format_matrix(m)) == m);
  }
}

TEST_CASE("dnf text round trip") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Dnf d;
    const std::size_t n = 1 + rng() % 12;
    for (std::size_t i = 0; i < rng() % 8; ++i) d.add(brute::random_term(rng, n));
    REQUIRE(parse_dnf(format_dnf(d)) == d);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse_error);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message([] { parse_matrix("2 3\n010\n01\n"); }).find("line 3") != std::string::npos);
  CHECK(message([] { parse_matrix("2 3\n010\n010\n"); }) != "no error");
  CHECK(message([] { parse_matrix("# only a comment\n"); }) != "no error");
  CHECK(message([] { parse_matrix("2 2\n01\n"); }) != "no error");
  CHECK(message([] { parse_matrix("1 2\n0a\n"); }).find("line 2") != std::string::npos);
  CHECK(message([] { parse_dnf("1 -1\n"); }).find("line 1") != std::string::npos);
  CHECK(message([] { parse_dnf("1 2\n\n3 x\n"); }).find("line 3") != std::string::npos);
  CHECK(message([] { parse_dnf("0\n"); }) != "no error");
}

TEST_CASE("comments and blank lines are skipped") {
  const auto m = parse_matrix("# header\n\n2 2\n# row\n01\n\n10\n");
  CHECK(m == ZeroMatrix::from_strings({"01", "10"}));
  const auto d = parse_dnf("# t\n3 -5\n\n+1\n");
  CHECK(d.length() == 2);
  CHECK(Term(d[0]) == Term{pos(3), neg(5)});
  CHECK(format_dnf(d) == "3 -5\n1\n");
}

TEST_CASE("chi named literals") {
  Dnf raw{Term{pos(1), pos(32)}, Term{neg(62)}};
  const auto d = normalize_chi_named(raw, 6);
  CHECK(Term(d[0]) == Term{pos(1), neg(31)});
  CHECK(Term(d[1]) == Term{pos(1)});
  CHECK_THROWS_AS(normalize_chi_named(Dnf{Term{pos(63)}}, 6), Error);
}

TEST_CASE("reduction map json") {
  const auto m = parse_matrix(read_text(data + "/phi.txt"));
  const auto [r, map] = reduce(m);
  const auto j = to_json(map);
  CHECK(j["format_version"] == kReportFormatVersion);
  const auto back = reduction_map_from_json(j);
  CHECK(back.sp == map.sp);
  CHECK(back.groups == map.groups);
  CHECK(back.representatives == map.representatives);
  CHECK_THROWS_AS(reduction_map_from_json(nlohmann::json::object()), Error);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("complete") {
  const auto f = run({"complete", "--k", "4", "--variant", "F"});
  CHECK(f.code == cli::kOk);
  CHECK(f.out == read_text(data + "/f4.txt"));
  const auto g = run({"complete", "--k", "2", "--variant", "G"});
  CHECK(g.code == cli::kOk);
  CHECK(parse_matrix(g.out).n() == 1);
  CHECK(run({"complete", "--k", "30"}).code == cli::kArgumentError);
  CHECK(run({"complete", "--k", "4", "--variant", "H"}).code == cli::kArgumentError);
  CHECK(run({}).code == cli::kArgumentError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("synth and verify round trip") {
  const auto matrix = scratch("g8.txt");
  const auto dnf = scratch("g8.dnf");
  const auto report = scratch("g8.json");
  write_text(matrix, format_matrix(make_G(8)));
  const auto s = run({"synth", "--input", matrix.string(), "--out", dnf.string(), "--report",
                      report.string()});
  CHECK(s.code == cli::kOk);
  CHECK(s.out.find("realizes=yes conforms=yes") != std::string::npos);
  const auto j = nlohmann::json::parse(read_text(report));
  CHECK(j["format_version"] == kReportFormatVersion);
  CHECK(j["bounds"]["conforms"]["all"] == true);
  CHECK(j["bounds"]["conforms"]["rank_below_upper"] == true);
  CHECK(j["synthesis"]["rank"] == 714);
  const auto v = run({"verify", "--matrix", matrix.string(), "--dnf", dnf.string()});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.rfind("realizes=yes", 0) == 0);

  write_text(dnf, "1\n");
  CHECK(run({"verify", "--matrix", matrix.string(), "--dnf", dnf.string()}).code ==
        cli::kDomainError);
  CHECK(run({"synth", "--input", matrix.string(), "--lambda", "x"}).code ==
        cli::kArgumentError);
  CHECK(run({"synth", "--input", matrix.string(), "--lambda", "1"}).code == cli::kDomainError);
}

TEST_CASE("synth rejects a constant column") {
  const auto matrix = scratch("const.txt");
  write_text(matrix, "3 3\n010\n110\n011\n");
  const auto s = run({"synth", "--input", matrix.string()});
  CHECK(s.code == cli::kDomainError);
  CHECK(s.err.find("ConstantColumn") != std::string::npos);
}

TEST_CASE("parse failures exit with 1") {
  const auto matrix = scratch("bad.txt");
  write_text(matrix, "2 2\n01\n");
  CHECK(run({"synth", "--input", matrix.string()}).code == cli::kParseError);
  CHECK(run({"synth", "--input", scratch("missing.txt").string()}).code == cli::kParseError);
}

TEST_CASE("reduce") {
  const auto map = scratch("phi_map.json");
  const auto r = run({"reduce", "--matrix", data + "/phi.txt", "--map", map.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("reduced_n=7 complete=yes") != std::string::npos);
  CHECK(r.out.find("{1,2}") != std::string::npos);
  CHECK(r.out.find("{3,4,5}") != std::string::npos);
  CHECK(r.out.find("{6,7}") != std::string::npos);
  CHECK(r.out.find("{8,11}") != std::string::npos);
  const auto j = nlohmann::json::parse(read_text(map));
  CHECK(j["groups"].size() == 7);
}

TEST_CASE("chains, oracle and sample") {
  const auto c = run({"chains", "--k", "4"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out.find("chains=6") != std::string::npos);
  CHECK(run({"chains", "--k", "4", "--lo", "3", "--hi", "2"}).code == cli::kArgumentError);

  const auto o = run({"oracle", "--matrix", data + "/f4.txt", "--measure", "rank"});
  CHECK(o.code == cli::kOk);
  CHECK(o.out.rfind("rank: rank=", 0) == 0);

  const auto a = run({"sample", "--k", "4", "--n", "64", "--trials", "1000", "--seed", "42"});
  const auto b = run({"sample", "--k", "4", "--n", "64", "--trials", "1000", "--seed", "42"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  const auto js = run({"sample", "--k", "4", "--n", "32", "--trials", "50", "--json"});
  CHECK(nlohmann::json::parse(js.out)["trials"] == 50);
}

}  // TEST_SUITE
