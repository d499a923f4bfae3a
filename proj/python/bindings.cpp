#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neighborly/constructions.hpp"
#include "neighborly/enumeration.hpp"
#include "neighborly/io.hpp"

namespace py = pybind11;
using namespace neighborly;

namespace {

py::dict classification(const Chirotope& chi) {
  const Classification c = classify(chi);
  py::dict d;
  d["acyclic"] = c.acyclic;
  d["neighborly"] = c.neighborly;
  d["balanced"] = c.balanced;
  d["discrepancy"] = c.discrepancy;
  return d;
}

std::vector<std::vector<int>> facet_lists(const Chirotope& chi) {
  std::vector<std::vector<int>> out;
  for (ElementSet f : facets(chi).facets) out.push_back(elements_of(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact oriented matroid tools for neighborly polytopes";

  py::class_<Chirotope>(m, "Chirotope")
      .def(py::init([](int n, int rank, std::vector<int> signs) {
             return Chirotope(n, rank, std::vector<Sign>(signs.begin(), signs.end()));
           }),
           py::arg("n"), py::arg("rank"), py::arg("signs"))
      .def_static("parse", [](const std::string& text) { return parse_chirotope(text); })
      .def_property_readonly("n", &Chirotope::size)
      .def_property_readonly("rank", &Chirotope::rank)
      .def_property_readonly("signs", [](const Chirotope& c) { return std::vector<int>(c.signs().begin(), c.signs().end()); })
      .def("sign_string", &Chirotope::sign_string)
      .def("text", [](const Chirotope& c) { return format_chirotope(c); })
      .def("eval", [](const Chirotope& c, std::vector<int> t) { return static_cast<int>(c.eval(t)); })
      .def("same_oriented_matroid", &Chirotope::same_oriented_matroid)
      .def("__eq__", [](const Chirotope& a, const Chirotope& b) { return a == b; })
      .def("__repr__", [](const Chirotope& c) {
        return "<Chirotope n=" + std::to_string(c.size()) + " rank=" + std::to_string(c.rank()) + ">";
      });

  m.def("cyclic_polytope", &cyclic_polytope, py::arg("n"), py::arg("d"));
  m.def("stc", &stc, py::arg("r"));
  m.def("dual", &dual);
  m.def("is_valid", [](const Chirotope& c) { return validate(c).ok; });
  m.def("deletion", [](const Chirotope& c, std::vector<int> e) { return deletion(c, make_set(e)); });
  m.def("contraction", [](const Chirotope& c, std::vector<int> e) { return contraction(c, make_set(e)); });
  m.def("lex_extend", [](const Chirotope& c, const std::string& sig) {
    return lex_extend_chirotope(c, LexSignature::parse(sig));
  }, py::arg("chi"), py::arg("signature"));
  m.def("sew", [](const Chirotope& c, const std::string& flag) { return sew(c, Flag::parse(flag)).extended; },
        py::arg("chi"), py::arg("flag"));
  m.def("gale_sew", [](const Chirotope& c, const std::string& sig) {
    return gale_sew(c, GaleStep{LexSignature::parse(sig)});
  }, py::arg("chi"), py::arg("signature"));
  m.def("classify", &classification);
  m.def("facets", &facet_lists);
  m.def("universal_flags", [](const Chirotope& c) {
    std::vector<std::string> out;
    for (const Flag& f : universal_flags(c)) out.push_back(f.to_string());
    return out;
  });
  m.def("canonical_form", [](const Chirotope& c) { return canonical_type(facets(c)).text(); });

  m.def("enumerate_family", [](const std::string& family, int d, int n, int budget, int jobs, bool stop_at_g) {
    py::gil_scoped_release release;
    const FamilyResult r = enumerate_family(FamilySpec{parse_family(family), d, n, budget, jobs, stop_at_g});
    py::gil_scoped_acquire acquire;
    py::dict out;
    std::vector<std::string> types;
    for (const CombType& t : r.types) types.push_back(t.text());
    out["count"] = r.types.size();
    out["types"] = types;
    out["verified"] = r.verified;
    out["note"] = r.note;
    return out;
  }, py::arg("family"), py::arg("d"), py::arg("n"), py::arg("budget") = 2, py::arg("jobs") = 1,
     py::arg("stop_at_g") = false);

  m.def("bounds", [](int n, int d) {
    const BoundReport rep = eval_bounds(n, d);
    py::dict out;
    for (const BoundValue& v : rep.values) {
      py::dict entry;
      entry["log"] = static_cast<double>(v.log_value);
      if (v.exact) entry["exact"] = py::int_(py::str(v.exact->str()));
      out[py::str(v.id)] = entry;
    }
    out["consistent"] = rep.consistent;
    out["text"] = rep.text();
    return out;
  }, py::arg("n"), py::arg("d"));
  m.def("labeled_corank3_count", &labeled_corank3_count);
  m.def("brute_lex_extension_count", &brute_lex_extension_count);
}
