#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsenum/bounds.hpp"
#include "nsenum/census.hpp"
#include "nsenum/constructions.hpp"
#include "nsenum/enumerate.hpp"
#include "nsenum/normal.hpp"
#include "nsenum/verify.hpp"

namespace py = pybind11;
using namespace nsenum;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

NormalVector from_py(const py::sequence& coords) {
  std::vector<Integer> c;
  c.reserve(coords.size());
  for (const auto& x : coords) c.emplace_back(py::str(x).cast<std::string>());
  return NormalVector(std::move(c));
}

MatchingSystem extra_rows(const std::vector<std::vector<std::int64_t>>& rows, int columns) {
  MatchingSystem m;
  m.columns = columns;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != columns)
      throw std::invalid_argument("extra row has " + std::to_string(r.size()) +
                                  " entries, expected " + std::to_string(columns));
    m.add_row(r, {});
  }
  return m;
}

py::dict result_dict(const EnumerationResult& r) {
  py::list surfaces;
  for (const auto& ray : r.surfaces) surfaces.append(to_py(ray.vector.coords));
  py::dict d;
  d["sigma"] = r.sigma;
  d["surfaces"] = surfaces;
  d["hyperplanes"] = r.stats.hyperplanes;
  d["peak_rays"] = r.stats.peak_rays;
  d["seconds"] = r.stats.elapsed_seconds;
  return d;
}

py::dict stats_dict(const CensusStats& s) {
  py::dict d;
  d["n"] = s.n;
  d["count"] = s.count;
  d["mean"] = s.mean();
  d["stddev"] = s.stddev();
  d["min"] = s.min;
  d["max"] = s.max;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nsenum, m) {
  m.doc() = "Normal surface enumeration and census tools";

  py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TriangulationError>(m, "TriangulationError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<InconsistentVector>(m, "InconsistentVector", PyExc_ValueError);

  py::class_<Triangulation>(m, "Triangulation")
      .def_static("from_text", &parse_triangulation, py::arg("text"))
      .def("to_text", [](const Triangulation& t) { return to_text(t); })
      .def_property_readonly("size", &Triangulation::size)
      .def("is_closed", &Triangulation::is_closed)
      .def("is_valid", [](const Triangulation& t) { return is_valid_3manifold(t); })
      .def("is_connected", [](const Triangulation& t) { return is_connected(t); })
      .def("isosig", [](const Triangulation& t) { return iso_signature(t); })
      .def("euler_characteristic", [](const Triangulation& t) { return euler_characteristic(t); })
      .def("vertex_count",
           [](const Triangulation& t) { return skeleton(t).vertices.size(); })
      .def("homology",
           [](const Triangulation& t) {
             const HomologyGroup h = homology_h1(t);
             return py::make_tuple(h.rank, to_py(h.torsion));
           },
           "First homology as (rank, torsion coefficients).")
      .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; })
      .def("__len__", &Triangulation::size)
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation size=" + std::to_string(t.size()) + ">";
      });

  m.def("pillow", &pillow);
  m.def("four_block", &four_block);
  m.def("x_k", &x_k, py::arg("k"));
  m.def("s2xs1", &s2xs1);

  m.def(
      "enumerate",
      [](const Triangulation& t, const std::vector<std::vector<std::int64_t>>& extra,
         unsigned threads, std::size_t max_rays) {
        EnumerationOptions o;
        o.threads = threads;
        o.max_rays = max_rays;
        const MatchingSystem e = extra_rows(extra, 7 * t.size());
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate(t, extra.empty() ? nullptr : &e, o);
        }
        return result_dict(r);
      },
      py::arg("tri"), py::arg("extra") = std::vector<std::vector<std::int64_t>>{},
      py::arg("threads") = 1, py::arg("max_rays") = 0,
      "Admissible vertex normal surfaces in standard coordinates.");
  m.def(
      "sigma",
      [](const Triangulation& t, unsigned threads) {
        EnumerationOptions o;
        o.threads = threads;
        py::gil_scoped_release release;
        return sigma(t, o);
      },
      py::arg("tri"), py::arg("threads") = 1);
  m.def("boundary_equalizers", [](const Triangulation& t) {
    return equalize_boundary_equations(t).rows;
  });
  m.def(
      "euler_char",
      [](const py::sequence& v, const Triangulation& t) { return to_py(euler_char(from_py(v), t)); },
      py::arg("vector"), py::arg("tri"));
  m.def(
      "is_admissible", [](const py::sequence& v) { return is_admissible(from_py(v)); },
      py::arg("vector"));

  m.def(
      "generate_closed",
      [](int n, unsigned threads) {
        CensusOptions o;
        o.threads = threads;
        py::gil_scoped_release release;
        return generate_closed(n, o);
      },
      py::arg("n"), py::arg("threads") = 1);
  m.def(
      "census",
      [](int n, unsigned threads) {
        CensusOptions o;
        o.threads = threads;
        Census c;
        {
          py::gil_scoped_release release;
          c = run_census(n, o);
        }
        py::list rows;
        for (const auto& r : c.records) rows.append(py::make_tuple(r.index, r.isosig, r.sigma));
        return rows;
      },
      py::arg("n"), py::arg("threads") = 1,
      "Rows (index, isosig, sigma) for every closed census triangulation of size n.");
  m.def(
      "census_stats",
      [](int n, unsigned threads) {
        CensusOptions o;
        o.threads = threads;
        CensusStats s;
        {
          py::gil_scoped_release release;
          s = census_stats(n, o);
        }
        return stats_dict(s);
      },
      py::arg("n"), py::arg("threads") = 1);

  m.def("fibonacci", [](int k) { return to_py(fibonacci(k)); }, py::arg("k"));
  m.def("theorem_bound", [](int n) { return to_py(theorem_bound(n)); }, py::arg("n"));
  m.def("hass_bound", [](int n) { return to_py(hass_bound(n)); }, py::arg("n"));
  m.def(
      "worst_case_sigma",
      [](int n) -> py::object {
        const auto w = worst_case_sigma(n);
        if (!w) return py::none();
        return to_py(*w);
      },
      py::arg("n"));

  m.def(
      "verify",
      [](int criterion, bool stretch) {
        VerifyOptions o;
        o.stretch = stretch;
        CheckResult r;
        {
          py::gil_scoped_release release;
          r = Verifier(o).run(criterion);
        }
        return py::make_tuple(r.passed, r.name, r.detail);
      },
      py::arg("criterion"), py::arg("stretch") = false,
      "Runs one acceptance criterion; returns (passed, name, detail).");
}
