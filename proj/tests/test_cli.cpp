#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nsenum/cli.hpp"
#include "nsenum/normal.hpp"
#include "nsenum/constructions.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = nsenum::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nsenum_cli_" + name);
}

}  // namespace

TEST_CASE("build output feeds enumerate") {
  const Outcome built = run({"build", "x-k", "-k", "2"});
  REQUIRE(built.status == 0);
  const Outcome e = run({"enumerate", "-"}, built.out);
  CHECK(e.status == 0);
  CHECK(first_line(e.out) == "sigma 291");
  std::size_t lines = 0;
  for (char c : e.out) lines += c == '\n';
  CHECK(lines == 292);
}

TEST_CASE("every construction round-trips") {
  for (std::string name : {"pillow", "four-block", "x-k", "s2xs1"}) {
    const Outcome built = run({"build", name});
    REQUIRE(built.status == 0);
    CHECK_NOTHROW(nsenum::parse_triangulation(built.out));
    CHECK(run({"enumerate", "-"}, built.out).status == 0);
  }
  CHECK(run({"build", "four-block"}).out == nsenum::to_text(nsenum::four_block()));
}

TEST_CASE("build json") {
  const Outcome o = run({"--json", "build", "s2xs1"});
  REQUIRE(o.status == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["size"] == 2);
  CHECK(j["isosig"] == nsenum::iso_signature(nsenum::s2xs1()));
}

TEST_CASE("enumerate annotations and extras") {
  const std::string block = run({"build", "four-block"}).out;
  const Outcome plain = run({"enumerate", "-"}, block);
  CHECK(first_line(plain.out) == "sigma 17");
  const Outcome ann = run({"enumerate", "-", "--annotate"}, block);
  CHECK(ann.out.find("chi 2") != std::string::npos);
  CHECK(ann.out.find("boundary") != std::string::npos);

  // Extra rows from a file: the two boundary equalizers.
  const auto path = temp_path("extra.txt");
  {
    std::ofstream f(path);
    for (const auto& row : nsenum::equalize_boundary_equations(nsenum::four_block()).rows) {
      for (std::size_t i = 0; i < row.size(); ++i) f << (i ? " " : "") << row[i];
      f << '\n';
    }
  }
  const Outcome ex = run({"enumerate", "-", "--extra", path.string()}, block);
  CHECK(first_line(ex.out) == "sigma 18");
  std::filesystem::remove(path);

  const Outcome js = run({"--json", "enumerate", "-", "--annotate"}, block);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["sigma"] == 17);
  CHECK(j["surfaces"].size() == 17);
  CHECK(j["surfaces"][0].contains("euler_char"));
  CHECK(j["surfaces"][0]["boundary"].size() == 3);
}

TEST_CASE("bounds command") {
  const Outcome o = run({"bounds", "1"});
  CHECK(o.status == 0);
  CHECK(o.out.find("fib_bound   21") != std::string::npos);
  CHECK(o.out.find("hass_bound  128") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"--json", "bounds", "4"}).out);
  CHECK(j["worst_case"] == "18");
}

TEST_CASE("census command") {
  const Outcome o = run({"census", "1", "--stats", "-"});
  CHECK(o.status == 0);
  CHECK(o.out.find("count   4") != std::string::npos);
  CHECK(o.out.find("mean    2.00") != std::string::npos);

  const auto csv = temp_path("census.csv");
  const Outcome c = run({"--json", "census", "2", "--csv", csv.string(), "--stats", "-"});
  CHECK(c.status == 0);
  CHECK(nlohmann::json::parse(c.out)["count"] == 17);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "n,index,isosig,sigma");
  std::filesystem::remove(csv);

  const Outcome big = run({"census", "6"});
  CHECK(big.status == 2);
  CHECK(big.err.find("limit") != std::string::npos);
}

TEST_CASE("verify command") {
  const Outcome o = run({"verify", "table1"});
  CHECK(o.status == 0);
  CHECK(o.out.find("[PASS] 1.") != std::string::npos);
  CHECK(o.out.find("[PASS] 2.") != std::string::npos);
  const Outcome bad = run({"verify", "nope"});
  CHECK(bad.status == 2);
}

TEST_CASE("usage and input errors") {
  auto one_line = [](const std::string& s) {
    return !s.empty() && s.find('\n') == s.size() - 1;
  };
  const Outcome none = run({});
  CHECK(none.status == 2);
  CHECK(one_line(none.err));
  const Outcome unknown = run({"frobnicate"});
  CHECK(unknown.status == 2);
  CHECK(one_line(unknown.err));
  const Outcome name = run({"build", "dodecahedron"});
  CHECK(name.status == 2);
  CHECK(one_line(name.err));
  const Outcome malformed = run({"enumerate", "-"}, "tri 1\nb b\n");
  CHECK(malformed.status == 2);
  CHECK(one_line(malformed.err));
  const Outcome missing = run({"enumerate", "/nonexistent/file.tri"});
  CHECK(missing.status == 2);
  const Outcome guard = run({"enumerate", "-", "--max-rays", "5"}, run({"build", "x-k"}).out);
  CHECK(guard.status == 2);
  CHECK(guard.err.find("resource limit") != std::string::npos);
  CHECK(run({"build", "x-k", "-k", "0"}).status == 2);
}

TEST_CASE("help exits cleanly") {
  const Outcome h = run({"--help"});
  CHECK(h.status == 0);
  CHECK(h.out.find("enumerate") != std::string::npos);
}
