#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "akh/checks.hpp"
#include "akh/cli.hpp"
#include "akh/diagram.hpp"
#include "akh/generators.hpp"
#include "akh/invariants.hpp"
#include "akh/pd_format.hpp"
#include "akh/planar.hpp"

namespace py = pybind11;
using namespace akh;

namespace {

using Input = std::variant<std::string, AnnularDiagram>;

AnnularDiagram diagram_of(const Input& in) {
  if (const auto* s = std::get_if<std::string>(&in)) return parse_braid_word(*s);
  return std::get<AnnularDiagram>(in);
}

SkeinOptions options(bool reduced, bool meridians, bool mirror, bool shifted, int cap) {
  SkeinOptions o;
  o.reduced = reduced;
  o.meridians = meridians;
  o.mirror = mirror;
  o.shifted = shifted;
  o.cap = cap;
  return o;
}

py::dict trigraded(const f2::RankTable& t) {
  py::dict out;
  for (const auto& [k, r] : t)
    if (r) out[py::make_tuple(k[0], k[1], k[2])] = r;
  return out;
}

py::dict bigraded_dict(const Bigraded& t) {
  py::dict out;
  for (const auto& [k, r] : t)
    if (r) out[py::make_tuple(k.first, k.second)] = r;
  return out;
}

py::dict laurent_dict(const Laurent& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e[0], e[1], e[2])] = c;
  return out;
}

py::list checks_list(const std::vector<Check>& checks) {
  py::list out;
  for (const auto& c : checks) out.append(py::make_tuple(c.name, c.pass, c.detail));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Annular Khovanov skein homology over F2";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<AnnularDiagram>(m, "Diagram")
      .def_property_readonly("crossing_count", &AnnularDiagram::crossing_count)
      .def_property_readonly("arc_count", &AnnularDiagram::arc_count)
      .def_property_readonly("n_plus", &AnnularDiagram::n_plus)
      .def_property_readonly("n_minus", &AnnularDiagram::n_minus)
      .def_property_readonly("writhe", &AnnularDiagram::writhe)
      .def_property_readonly("ray_total", &AnnularDiagram::ray_total)
      .def_property_readonly("component_count", &AnnularDiagram::component_count)
      .def_property_readonly("odd_linking", &AnnularDiagram::odd_linking)
      .def_property_readonly("meridians", &AnnularDiagram::meridians)
      .def("to_pd", &to_annular_pd, "Annular PD document as JSON text")
      .def("resolution", [](const AnnularDiagram& d, Resolution r) {
        const auto cfg = resolve(d, r);
        py::list windings;
        for (const auto& c : cfg.circles) windings.append(c.winding);
        return py::make_tuple(cfg.l, cfg.m, windings);
      }, py::arg("bits"), "(essential, trivial, windings) of one complete resolution")
      .def("__eq__", [](const AnnularDiagram& a, const AnnularDiagram& b) { return a == b; })
      .def("__repr__", [](const AnnularDiagram& d) {
        std::ostringstream s;
        s << "<Diagram crossings=" << d.crossing_count() << " n+=" << d.n_plus() << " n-=" << d.n_minus()
          << " ray=" << d.ray_total() << ">";
        return s.str();
      });

  m.def("braid", &parse_braid_word, py::arg("text"), "Annular closure of a braid word \"n: w1 w2 ...\"");
  m.def("annular_pd", &parse_annular_pd, py::arg("document"), py::arg("cap") = kDefaultCap);
  m.def("mirror", [](const Input& d) { return mirror(diagram_of(d)); });
  m.def("add_split_meridians", [](const Input& d) { return add_split_meridians(diagram_of(d)); });

  m.def(
      "skein_homology",
      [](const Input& d, bool reduced, bool meridians, bool mirror, bool shifted, int cap) {
        return trigraded(skein_homology(diagram_of(d), options(reduced, meridians, mirror, shifted, cap)).ranks);
      },
      py::arg("diagram"), py::kw_only(), py::arg("reduced") = false, py::arg("meridians") = false,
      py::arg("mirror") = false, py::arg("shifted") = true, py::arg("cap") = kDefaultCap,
      "Ranks keyed (i, j, k)");
  m.def(
      "khovanov_homology",
      [](const Input& d, bool reduced, bool mirror, int cap) {
        const auto kh = khovanov_homology(diagram_of(d), options(reduced, false, mirror, true, cap));
        py::dict out;
        out["ranks"] = bigraded_dict(kh.ranks);
        out["e2"] = bigraded_dict(kh.e2);
        out["collapse"] = kh.collapse;
        out["consistent"] = kh.consistent();
        return out;
      },
      py::arg("diagram"), py::kw_only(), py::arg("reduced") = false, py::arg("mirror") = false,
      py::arg("cap") = kDefaultCap);
  m.def(
      "pages",
      [](const Input& d, int r_max, bool reduced, bool meridians, int cap) {
        SkeinOptions o = options(reduced, meridians, false, true, cap);
        o.mode = Mode::khovanov;
        const auto ss = f2::spectral_pages(build(diagram_of(d), o).complex(), r_max, f2::Axis::f, 2);
        py::list out;
        for (const auto& p : ss.pages) out.append(trigraded(p.ranks));
        return out;
      },
      py::arg("diagram"), py::kw_only(), py::arg("r_max") = 3, py::arg("reduced") = false,
      py::arg("meridians") = false, py::arg("cap") = kDefaultCap,
      "Pages E^0, E^1, ... of the k filtration of the Khovanov complex");
  m.def(
      "euler_statesum",
      [](const Input& d, bool reduced, bool meridians) {
        return laurent_dict(euler_statesum(diagram_of(d), options(reduced, meridians, false, true, kDefaultCap)));
      },
      py::arg("diagram"), py::kw_only(), py::arg("reduced") = false, py::arg("meridians") = false,
      "Chain-level state sum as {(t, q, x): coefficient}");
  m.def("signature", [](const Input& d) { return goeritz(diagram_of(d)).signature; });
  m.def("determinant", [](const Input& d) { return goeritz(diagram_of(d)).determinant; });
  m.def("m_number", [](const Input& d) { return checkerboard_and_M(diagram_of(d)).M; });
  m.def("unknot_t_values", [](const Input& d) {
    const auto t = unknot_t_values(diagram_of(d));
    return py::make_tuple(t.plus, t.minus);
  }, "(T(u+), T(u-)) for a diagram of the unknot");
  m.def("plamenevskaya", [](const Input& d) {
    const auto rep = plamenevskaya(diagram_of(d));
    py::dict out;
    out["strands"] = rep.strands;
    out["grading"] = py::make_tuple(rep.grading.degree, rep.grading.q, rep.grading.f);
    out["checks"] = checks_list(rep.checks);
    return out;
  });
  m.def("spanning_leaves", [](const Input& d) { return spanning_leaves(diagram_of(d)).leaves.size(); });

  m.def("suites", &checks::suite_names);
  m.def(
      "check",
      [](const std::string& suite, int count, std::uint64_t seed, int max_crossings) {
        if (!checks::is_suite(suite)) throw ParseError("unknown suite: " + suite);
        gen::Rng rng(seed);
        std::vector<Check> all;
        for (int n = 0; n < count; ++n)
          for (auto& c : checks::on_random(suite, rng, max_crossings)) all.push_back(std::move(c));
        return checks_list(all);
      },
      py::arg("suite"), py::kw_only(), py::arg("count") = 10, py::arg("seed") = 1, py::arg("max_crossings") = 6,
      "Runs a property suite on seeded random instances; returns (name, passed, detail) triples");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv_s{"akh"};
        argv_s.insert(argv_s.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_s) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in process; returns (exit code, stdout, stderr)");
}
