#include "nsenum/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsenum/bounds.hpp"
#include "nsenum/census.hpp"
#include "nsenum/constructions.hpp"
#include "nsenum/verify.hpp"

namespace nsenum::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad input (files, names, resource guards), reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
};

std::string read_all(const std::string& path, const Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

// Output target: "-" is the caller's stream, anything else a fresh file.
class Sink {
 public:
  Sink(const std::string& path, const Streams& io) {
    if (path == "-") {
      stream_ = &io.out;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

json integer_json(const Integer& x) {
  if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
    return static_cast<long long>(x);
  return x.str();
}

json tri_json(const std::string& name, const Triangulation& t) {
  json g = json::array();
  for (int i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (int f = 0; f < 4; ++f) {
      const auto& e = t.gluing(i, f);
      row.push_back(e ? json::array({e->tet, e->face, e->perm.str()}) : json(nullptr));
    }
    g.push_back(row);
  }
  json j;
  j["name"] = name;
  j["size"] = t.size();
  j["isosig"] = iso_signature(t);
  j["gluings"] = g;
  return j;
}

Triangulation build_named(const std::string& name, int k) {
  if (name == "pillow") return pillow();
  if (name == "four-block") return four_block();
  if (name == "x-k") return x_k(k);
  if (name == "s2xs1") return s2xs1();
  throw UsageError("unknown construction '" + name + "'");
}

std::string profile_text(const BoundaryProfile& p) {
  std::ostringstream s;
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    const auto& e = p.entries[i];
    s << (i ? "," : "") << 'v' << e.vertex_class << ':';
    if (e.consistent)
      s << e.multiplicity;
    else
      s << '?';
  }
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out};
  CLI::App app{"Vertex normal surface enumeration for 3-manifold triangulations", "nsenum"};
  app.require_subcommand(1);
  unsigned threads = 0;
  bool as_json = false;
  app.add_option("--threads", threads, "Worker threads (0: available parallelism)")
      ->capture_default_str();
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string build_name;
  int build_k = 1;
  std::string build_out = "-";
  auto* build = app.add_subcommand("build", "Emit a named construction");
  build->add_option("name", build_name, "pillow, four-block, x-k or s2xs1")->required();
  build->add_option("-k", build_k, "Number of blocks for x-k")->check(CLI::PositiveNumber);
  build->add_option("-o,--output", build_out, "Output path");

  std::string enum_in, enum_extra;
  bool annotate = false;
  std::size_t max_rays = 0;
  auto* enumer = app.add_subcommand("enumerate", "Vertex normal surfaces of a triangulation");
  enumer->add_option("file", enum_in, "Triangulation file or - for stdin")->required();
  enumer->add_option("--extra", enum_extra, "Extra equations, one row per line");
  enumer->add_flag("--annotate", annotate, "Add Euler characteristic and boundary profile");
  enumer->add_option("--max-rays", max_rays, "Abort above this intermediate ray count");

  int census_n = 0;
  int census_limit = kDefaultCensusLimit;
  std::string census_csv, census_stats_path;
  auto* census = app.add_subcommand("census", "Closed census with sigma statistics");
  census->add_option("n", census_n, "Number of tetrahedra")->required()->check(CLI::PositiveNumber);
  census->add_option("--csv", census_csv, "Per-triangulation CSV output");
  census->add_option("--stats", census_stats_path, "Summary statistics output");
  census->add_option("--limit", census_limit, "Largest size allowed")->capture_default_str();

  int bounds_n = 0;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on sigma");
  bounds->add_option("n", bounds_n, "Number of tetrahedra")->required()->check(CLI::PositiveNumber);

  std::string suite;
  bool stretch = false;
  auto* verify = app.add_subcommand("verify", "Run acceptance checks");
  verify->add_option("suite", suite, "table1, xk, table2, bounds, oracle, determinism or all")
      ->required();
  verify->add_flag("--stretch", stretch, "Include the n = 5 census");

  // CLI11 parses a reversed argument vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "nsenum: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build) {
      const Triangulation t = build_named(build_name, build_k);
      Sink sink(build_out, io);
      if (as_json)
        *sink << tri_json(build_name, t).dump() << '\n';
      else
        write_triangulation(*sink, t);
      return kExitOk;
    }

    if (*enumer) {
      const Triangulation t = parse_triangulation(read_all(enum_in, io));
      MatchingSystem extra;
      const bool has_extra = !enum_extra.empty();
      if (has_extra) extra = parse_equations(read_all(enum_extra, io), kCoordsPerTet * t.size());
      EnumerationOptions eo;
      eo.threads = threads;
      eo.max_rays = max_rays;
      const auto res = enumerate(t, has_extra ? &extra : nullptr, eo);
      const Skeleton skel = skeleton(t);
      const bool bounded = !t.is_closed();
      if (as_json) {
        json j;
        j["sigma"] = res.sigma;
        json surfaces = json::array();
        for (const auto& r : res.surfaces) {
          json s;
          json coords = json::array();
          for (const auto& x : r.vector.coords) coords.push_back(integer_json(x));
          s["coords"] = coords;
          if (annotate) {
            s["euler_char"] = integer_json(euler_char(r.vector, t, skel));
            if (bounded) {
              json b = json::array();
              for (const auto& e : boundary_profile(r.vector, t).entries)
                b.push_back({{"vertex_class", e.vertex_class},
                             {"consistent", e.consistent},
                             {"multiplicity", e.consistent ? integer_json(e.multiplicity)
                                                           : json(nullptr)}});
              s["boundary"] = b;
            }
          }
          surfaces.push_back(s);
        }
        j["surfaces"] = surfaces;
        j["stats"] = {{"hyperplanes", res.stats.hyperplanes},
                      {"peak_rays", res.stats.peak_rays},
                      {"elapsed_seconds", res.stats.elapsed_seconds}};
        out << j.dump() << '\n';
      } else {
        out << "sigma " << res.sigma << '\n';
        for (const auto& r : res.surfaces) {
          out << to_string(r.vector);
          if (annotate) {
            out << "  chi " << euler_char(r.vector, t, skel);
            if (bounded) out << "  boundary " << profile_text(boundary_profile(r.vector, t));
          }
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (*census) {
      CensusOptions co;
      co.threads = threads;
      co.size_limit = census_limit;
      const Census c = run_census(census_n, co);
      const CensusStats s = census_stats(c.records, census_n);
      if (!census_csv.empty()) {
        Sink sink(census_csv, io);
        write_census_csv(*sink, c.records);
      }
      if (!census_stats_path.empty() || census_csv.empty()) {
        Sink sink(census_stats_path.empty() ? "-" : census_stats_path, io);
        if (as_json)
          write_stats_json(*sink, s);
        else
          write_stats_text(*sink, s);
      }
      return kExitOk;
    }

    if (*bounds) {
      const BoundReport r = bound_report(bounds_n);
      out << (as_json ? to_json(r) + "\n" : to_text(r));
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions vo;
      vo.threads = threads;
      vo.stretch = stretch;
      Verifier v(vo);
      const auto results = v.run_suite(suite);
      bool ok = true;
      json arr = json::array();
      for (const auto& r : results) {
        ok = ok && r.passed;
        if (as_json)
          arr.push_back({{"criterion", r.criterion},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        else
          out << format_check(r) << '\n';
      }
      if (as_json) out << arr.dump() << '\n';
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const ResourceLimitExceeded& e) {
    err << "nsenum: resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "nsenum: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace nsenum::cli
