#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lagrangian/biflats.hpp"
#include "lagrangian/collapse.hpp"
#include "lagrangian/homology.hpp"
#include "lagrangian/matroid.hpp"
#include "lagrangian/shelling.hpp"
#include "lagrangian/simplicial_complex.hpp"

namespace py = pybind11;
using namespace lagrangian;

namespace {

eset to_eset(const std::vector<int>& elems) {
  eset s;
  for (int e : elems) {
    if (e < 1 || e > 64) throw error("element out of range: " + std::to_string(e));
    s = s.with(e);
  }
  return s;
}

std::vector<std::vector<std::string>> facet_labels(const simplicial_complex& c) {
  std::vector<std::vector<std::string>> out;
  for (const face& f : c.facets())
    if (!f.empty()) out.push_back(c.face_labels(f));
  return out;
}

collapse_sequence sequence_from_pairs(
    const std::string& source, const std::string& target,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        pairs) {
  collapse_sequence seq{source, target, {}};
  for (const auto& [tau, sigma] : pairs) seq.pairs.push_back({tau, sigma});
  return seq;
}

std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
pairs_from_sequence(const collapse_sequence& seq) {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
  for (const auto& p : seq.pairs) out.emplace_back(p.tau, p.sigma);
  return out;
}

}  // namespace

PYBIND11_MODULE(_lagrangian, m) {
  m.doc() = "biflats, conormal and unmixed complexes of matroids, with "
            "certified elementary-collapse sequences";

  py::register_exception<error>(m, "LagrangianError");

  py::class_<matroid>(m, "Matroid")
      .def(py::init([](int n, const std::vector<std::vector<int>>& flats) {
             std::vector<eset> fs;
             for (const auto& f : flats) fs.push_back(to_eset(f));
             return matroid(n, std::move(fs));
           }),
           py::arg("n"), py::arg("flats"))
      .def_property_readonly("ground_size", &matroid::ground_size)
      .def_property_readonly("rank", [](const matroid& m_) { return m_.rank(); })
      .def("flats",
           [](const matroid& m_) {
             std::vector<std::vector<int>> out;
             for (eset f : m_.flats()) out.push_back(f.elements());
             return out;
           })
      .def("closure",
           [](const matroid& m_, const std::vector<int>& s) {
             return m_.closure(to_eset(s)).elements();
           })
      .def("rank_of",
           [](const matroid& m_, const std::vector<int>& s) {
             return m_.rank(to_eset(s));
           })
      .def("dual", &matroid::dual)
      .def("is_uniform", [](const matroid& m_) { return is_uniform(m_); })
      .def("__eq__", [](const matroid& a, const matroid& b) { return a == b; })
      .def("__repr__", [](const matroid& m_) {
        return "<Matroid n=" + std::to_string(m_.ground_size()) +
               " rank=" + std::to_string(m_.rank()) + ">";
      });

  py::class_<simplicial_complex>(m, "Complex")
      .def_property_readonly("vertices", &simplicial_complex::vertex_labels)
      .def_property_readonly("face_count", &simplicial_complex::face_count)
      .def("facets", &facet_labels)
      .def("f_vector", &simplicial_complex::f_vector)
      .def("dimension", &simplicial_complex::dimension)
      .def("max_facet_cardinality", &simplicial_complex::max_facet_cardinality)
      .def("is_pure", &simplicial_complex::is_pure)
      .def("is_flag", &simplicial_complex::is_flag)
      .def("has_face", &simplicial_complex::has_face_labels)
      .def("minimal_nonfaces",
           [](const simplicial_complex& c) {
             std::vector<std::vector<std::string>> out;
             for (const face& f : c.minimal_nonfaces()) out.push_back(c.face_labels(f));
             return out;
           })
      .def("export_text", [](const simplicial_complex& c) { return export_complex(c); })
      .def("__eq__", [](const simplicial_complex& a, const simplicial_complex& b) {
        return a == b;
      })
      .def("__repr__", [](const simplicial_complex& c) {
        return "<Complex vertices=" + std::to_string(c.vertex_count()) +
               " faces=" + std::to_string(c.face_count()) + ">";
      });

  m.def("parse_matroid", &parse_matroid, py::arg("text"));
  m.def("parse_graph_matroid",
        [](const std::string& text) { return from_graph(parse_graph(text)); },
        py::arg("text"));
  m.def("parse_input", &parse_matroid_or_graph, py::arg("text"));
  m.def("uniform_matroid", &uniform, py::arg("rank"), py::arg("n"));
  m.def("matroid_text", &to_matroid_file, py::arg("matroid"));

  m.def("biflats", [](const matroid& m_) {
    std::vector<std::string> out;
    for (const biflat& b : enumerate_biflats(m_)) out.push_back(biflat_label(b));
    return out;
  });

  m.def("biflats_complex", &biflats_complex);
  m.def("unmixed_complex", &unmixed_complex);
  m.def("conormal_complex", &conormal_complex);
  m.def("bergman_complex", &bergman_complex);
  m.def("join_of_bergman_complexes",
        [](const matroid& m_) { return unmixed_join_isomorphism(m_).join_complex; });
  m.def("unmixed_join_vertex_map",
        [](const matroid& m_) { return unmixed_join_isomorphism(m_).vertex_map; });
  m.def("parse_complex", &parse_complex, py::arg("text"));

  m.def("theorem1_sequence",
        [](const matroid& m_) { return pairs_from_sequence(theorem1_sequence(m_)); });
  m.def("theorem2_sequence",
        [](const matroid& m_) { return pairs_from_sequence(theorem2_sequence(m_)); });
  m.def("apply_sequence",
        [](const simplicial_complex& c,
           const std::vector<std::pair<std::vector<std::string>,
                                       std::vector<std::string>>>& pairs) {
          return apply_sequence(c, sequence_from_pairs("source", "target", pairs));
        },
        py::arg("complex"), py::arg("pairs"));
  m.def("minimal_bichains", [](const matroid& m_) {
    std::vector<std::vector<std::string>> out;
    for (const bichain& c : minimal_bichains(m_)) {
      std::vector<std::string> labels;
      for (const biflat& b : c) labels.push_back(biflat_label(b));
      out.push_back(std::move(labels));
    }
    return out;
  });

  m.def("betti", &betti_gf2, py::arg("complex"));
  m.def("reduced_euler", &reduced_euler, py::arg("complex"));

  m.def("is_shellable",
        [](const simplicial_complex& c, std::uint64_t budget) {
          shelling_certificate cert = is_shellable(c, budget);
          return py::make_tuple(to_string(cert.status), cert.order, cert.nodes_used);
        },
        py::arg("complex"), py::arg("budget") = 200000);
  m.def("verify_shelling", &verify_shelling, py::arg("complex"), py::arg("order"));
}
