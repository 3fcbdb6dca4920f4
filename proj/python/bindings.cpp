#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treepoisson/boundary.hpp"
#include "treepoisson/hoelder.hpp"
#include "treepoisson/io.hpp"
#include "treepoisson/poisson.hpp"

namespace py = pybind11;
using namespace treepoisson;

namespace {

std::vector<Complex> as_vector(std::span<const Complex> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Poisson transforms on truncated trees of bounded degree";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericRegimeError>(m, "NumericRegimeError", PyExc_ArithmeticError);

    py::class_<Tree>(m, "Tree")
        .def_static("regular", &Tree::regular, py::arg("q"), py::arg("depth"),
                    py::arg("vertex_limit") = Tree::kDefaultVertexLimit)
        .def_static(
            "from_parents",
            [](const std::vector<std::pair<int, int>>& edges) { return Tree::from_parents(edges); },
            py::arg("edges"))
        .def_property_readonly("vertex_count", &Tree::vertex_count)
        .def_property_readonly("depth_cap", &Tree::depth_cap)
        .def_property_readonly("q_max", &Tree::q_max)
        .def_property_readonly("is_regular", &Tree::is_regular)
        .def("regular_q", &Tree::regular_q)
        .def("parent", &Tree::parent, py::arg("v"))
        .def("children", &Tree::children, py::arg("v"))
        .def("depth", &Tree::depth, py::arg("v"))
        .def("degree", &Tree::degree, py::arg("v"))
        .def("branching", &Tree::branching, py::arg("v"))
        .def("is_leaf", &Tree::is_leaf, py::arg("v"))
        .def("is_interior", &Tree::is_interior, py::arg("v"))
        .def("leaves", [](const Tree& t) { return t.leaves(); })
        .def("vertices_at_depth", &Tree::vertices_at_depth, py::arg("n"))
        .def("is_ancestor_or_equal", &Tree::is_ancestor_or_equal, py::arg("a"), py::arg("v"))
        .def("ancestor_at_depth", &Tree::ancestor_at_depth, py::arg("v"), py::arg("n"))
        .def("meet", &Tree::meet, py::arg("x"), py::arg("y"))
        .def("distance", &Tree::distance, py::arg("x"), py::arg("y"))
        .def("horocycle_bracket", &Tree::horocycle_bracket, py::arg("x"), py::arg("leaf"))
        .def("sphere", &Tree::sphere, py::arg("x"), py::arg("k"))
        .def("__len__", &Tree::vertex_count);

    py::class_<ClopenSet>(m, "ClopenSet")
        .def(py::init<const Tree&, std::vector<int>>(), py::arg("tree"), py::arg("vertices"),
             py::keep_alive<1, 2>())
        .def_static("whole", &ClopenSet::whole, py::arg("tree"), py::keep_alive<0, 1>())
        .def_static("empty_set", &ClopenSet::empty_set, py::arg("tree"), py::keep_alive<0, 1>())
        .def_property_readonly("antichain", &ClopenSet::antichain)
        .def_property_readonly("is_empty", &ClopenSet::is_empty);

    py::class_<CylinderFunction>(m, "CylinderFunction")
        .def(py::init<const Tree&, int, std::vector<Complex>>(), py::arg("tree"),
             py::arg("level"), py::arg("values"), py::keep_alive<1, 2>())
        .def_static("constant", &CylinderFunction::constant, py::arg("tree"), py::arg("level"),
                    py::arg("value"), py::keep_alive<0, 1>())
        .def_static("indicator", &CylinderFunction::indicator, py::arg("clopen"),
                    py::arg("level"), py::keep_alive<0, 1>())
        .def_property_readonly("level", &CylinderFunction::level)
        .def("value_at_vertex", &CylinderFunction::value_at_vertex, py::arg("v"))
        .def("value_at_leaf", &CylinderFunction::value_at_leaf, py::arg("leaf"))
        .def("values", [](const CylinderFunction& p) { return as_vector(p.values()); });

    py::class_<BoundaryMeasure>(m, "BoundaryMeasure")
        .def_static("from_leaf_masses", &BoundaryMeasure::from_leaf_masses, py::arg("tree"),
                    py::arg("masses"), py::keep_alive<0, 1>())
        .def_static("from_leaf_values", &BoundaryMeasure::from_leaf_values, py::arg("tree"),
                    py::arg("by_leaf"), py::keep_alive<0, 1>())
        .def_static("dirac", &BoundaryMeasure::dirac, py::arg("tree"), py::arg("leaf"),
                    py::keep_alive<0, 1>())
        .def_static("rotation_invariant", &BoundaryMeasure::rotation_invariant, py::arg("tree"),
                    py::arg("center"), py::keep_alive<0, 1>())
        .def_static("random_uniform", &BoundaryMeasure::random_uniform, py::arg("tree"),
                    py::arg("seed"), py::keep_alive<0, 1>())
        .def("mass", &BoundaryMeasure::mass, py::arg("leaf"))
        .def("cylinder", &BoundaryMeasure::cylinder, py::arg("v"))
        .def_property_readonly("total", &BoundaryMeasure::total)
        .def("cylinders", [](const BoundaryMeasure& mu) { return as_vector(mu.cylinders()); })
        .def(
            "edge_flow",
            [](const BoundaryMeasure& mu, int from, int to) {
                return mu.edge_flow({from, to});
            },
            py::arg("from_vertex"), py::arg("to_vertex"))
        .def("evaluate", &BoundaryMeasure::evaluate, py::arg("clopen"))
        .def("pair", &BoundaryMeasure::pair, py::arg("p"));

    py::class_<VertexFunction>(m, "VertexFunction")
        .def(py::init<const Tree&, std::vector<Complex>>(), py::arg("tree"), py::arg("values"),
             py::keep_alive<1, 2>())
        .def_static("zero", &VertexFunction::zero, py::arg("tree"), py::keep_alive<0, 1>())
        .def("__getitem__", [](const VertexFunction& f, int v) { return f[v]; })
        .def("__len__", &VertexFunction::size)
        .def("values", [](const VertexFunction& f) { return as_vector(f.values()); })
        .def("max_abs", &VertexFunction::max_abs);

    py::class_<EdgeCoefficients>(m, "EdgeCoefficients")
        .def(py::init<const Tree&, std::vector<Complex>>(), py::arg("tree"),
             py::arg("by_child"), py::keep_alive<1, 2>())
        .def_static("zero", &EdgeCoefficients::zero, py::arg("tree"), py::keep_alive<0, 1>())
        .def_static("from_measure", &EdgeCoefficients::from_measure, py::arg("mu"),
                    py::keep_alive<0, 1>())
        .def("at_child", &EdgeCoefficients::at_child, py::arg("v"))
        .def("values", [](const EdgeCoefficients& c) { return as_vector(c.values()); });

    py::class_<EigenCharacterization>(m, "EigenCharacterization")
        .def_readonly("max_compat_violation", &EigenCharacterization::max_compat_violation)
        .def_readonly("root_condition_gap", &EigenCharacterization::root_condition_gap);

    py::class_<GrowthEnvelope>(m, "GrowthEnvelope")
        .def_readonly("coeff", &GrowthEnvelope::coeff)
        .def_readonly("base", &GrowthEnvelope::base)
        .def("__repr__", [](const GrowthEnvelope& e) {
            return "GrowthEnvelope(coeff=" + format_double(e.coeff) +
                   ", base=" + format_double(e.base) + ")";
        });

    py::class_<SectionMap>(m, "SectionMap")
        .def(py::init<const Tree&, std::vector<int>>(), py::arg("tree"),
             py::arg("leaf_per_vertex"), py::keep_alive<1, 2>())
        .def_static("leftmost", &SectionMap::leftmost, py::arg("tree"), py::keep_alive<0, 1>())
        .def_static("random", &SectionMap::random, py::arg("tree"), py::arg("seed"),
                    py::keep_alive<0, 1>())
        .def("leaf_for", &SectionMap::leaf_for, py::arg("v"));

    py::class_<MuWSequence>(m, "MuWSequence")
        .def_readonly("values", &MuWSequence::values)
        .def_readonly("within_convergent_regime", &MuWSequence::within_convergent_regime);

    py::class_<GrowthCrossReport>(m, "GrowthCrossReport")
        .def_readonly("function_envelope", &GrowthCrossReport::function_envelope)
        .def_readonly("boundary_envelope", &GrowthCrossReport::boundary_envelope)
        .def_readonly("implied_boundary", &GrowthCrossReport::implied_boundary)
        .def_readonly("implied_function", &GrowthCrossReport::implied_function)
        .def_readonly("rate_diagnostic", &GrowthCrossReport::rate_diagnostic)
        .def_readonly("max_compat_violation", &GrowthCrossReport::max_compat_violation)
        .def_readonly("root_condition_gap", &GrowthCrossReport::root_condition_gap);

    m.def("potential", &potential, py::arg("tree"), py::arg("z"), py::keep_alive<0, 1>());
    m.def("laplacian", &laplacian, py::arg("f"), py::keep_alive<0, 1>());
    m.def("poisson_transform", &poisson_transform, py::arg("z"), py::arg("mu"),
          py::keep_alive<0, 2>());
    m.def("eigen_residual", &eigen_residual, py::arg("f"), py::arg("z"), py::keep_alive<0, 1>());
    m.def("max_relative_eigen_residual", &max_relative_eigen_residual, py::arg("f"),
          py::arg("z"));

    m.def("beta", &beta, py::arg("z"), py::arg("f"), py::keep_alive<0, 2>());
    m.def("check_eigen_characterization", &check_eigen_characterization, py::arg("z"),
          py::arg("f"));
    m.def("roundtrip_measure", &roundtrip_measure, py::arg("z"), py::arg("mu"));
    m.def("reconstruct_function", &reconstruct_function, py::arg("z"), py::arg("flow"),
          py::arg("value_at_root"), py::keep_alive<0, 2>());
    m.def(
        "chain_formula_residual",
        [](Complex z, const BoundaryMeasure& mu, const std::vector<int>& chain) {
            return chain_formula_residual(z, mu, chain);
        },
        py::arg("z"), py::arg("mu"), py::arg("chain"));
    m.def("limit_recover_vertex", &limit_recover_vertex, py::arg("z"), py::arg("f"),
          py::arg("x"), py::arg("k_max"));
    m.def("limit_recover_clopen", &limit_recover_clopen, py::arg("z"), py::arg("f"),
          py::arg("u"), py::arg("n_max"));

    m.def("boundary_distance", &boundary_distance, py::arg("tree"), py::arg("theta"),
          py::arg("leaf1"), py::arg("leaf2"));
    m.def("lipschitz_seminorm", &lipschitz_seminorm, py::arg("theta"), py::arg("p"));
    m.def("hoelder_norm", &hoelder_norm, py::arg("theta"), py::arg("p"));
    m.def("measure_growth_envelope", &measure_growth_envelope, py::arg("mu"));
    m.def("function_growth_envelope", &function_growth_envelope, py::arg("f"));
    m.def("envelope_holds_measure", &envelope_holds_measure, py::arg("mu"), py::arg("env"));
    m.def("envelope_holds_function", &envelope_holds_function, py::arg("f"), py::arg("env"));
    m.def("mu_w_extension", &mu_w_extension, py::arg("mu"), py::arg("theta"), py::arg("w"),
          py::arg("p"), py::arg("n_max"));
    m.def("mod_growth_crosscheck", &mod_growth_crosscheck, py::arg("z"), py::arg("f"),
          py::arg("eigen_tol") = 1e-8);

    m.def("read_tree_file", &read_tree_file, py::arg("path"));
    m.def("write_tree_file", &write_tree_file, py::arg("path"), py::arg("tree"));
    m.def("read_measure_file", &read_measure_file, py::arg("path"), py::arg("tree"),
          py::keep_alive<0, 2>());
    m.def("write_measure_file", &write_measure_file, py::arg("path"), py::arg("mu"));
    m.def("read_vertex_function_file", &read_vertex_function_file, py::arg("path"),
          py::arg("tree"), py::keep_alive<0, 2>());
    m.def("write_vertex_function_file", &write_vertex_function_file, py::arg("path"),
          py::arg("f"));
}
