#include <stablehit/cliques.hpp>
#include <stablehit/errors.hpp>
#include <stablehit/generators.hpp>
#include <stablehit/hitting.hpp>
#include <stablehit/io.hpp>
#include <stablehit/isr.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stablehit;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Vertex ids are 0-based throughout.";
    m.attr("__version__") = "0.1.0";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input_error = py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", input_error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge> & edges) { return Graph(n, edges); }),
                py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::size)
        .def("__len__", &Graph::size)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("neighbours", [](const Graph & g, Vertex v) {
            return std::vector<Vertex>(g.neighbours(v).begin(), g.neighbours(v).end());
        })
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("is_stable", [](const Graph & g, const VertexSet & s) { return g.is_stable(s); })
        .def("is_clique", [](const Graph & g, const VertexSet & s) { return g.is_clique(s); })
        .def("to_dimacs", &emit_dimacs)
        .def_static("from_dimacs", [](const std::string & text) { return parse_dimacs(text); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph & g) {
            return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<PartitionedGraph>(m, "PartitionedGraph")
        .def(py::init<Graph, std::vector<VertexSet>>(), py::arg("graph"), py::arg("blocks"))
        .def_property_readonly("graph", &PartitionedGraph::graph)
        .def_property_readonly("blocks", &PartitionedGraph::blocks)
        .def("block_of", &PartitionedGraph::block_of)
        .def("cross_degree", &PartitionedGraph::cross_degree)
        .def("to_dimacs", &emit_dimacs_with_blocks);

    m.def("gen_blown_up_cycle", &gen_blown_up_cycle, py::arg("cycle_len") = 5, py::arg("k"));
    m.def("gen_haxell_gadget", &gen_haxell_gadget);
    m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_linked_cliques", &gen_linked_cliques, py::arg("q"), py::arg("t"), py::arg("matching") = true);
    m.def("gen_random_lopsided", &gen_random_lopsided, py::arg("r"), py::arg("k"), py::arg("max_block"),
            py::arg("p"), py::arg("seed"));

    py::class_<CliqueSet>(m, "CliqueSet")
        .def_readonly("cliques", &CliqueSet::cliques)
        .def_readonly("omega", &CliqueSet::omega);
    py::class_<CliqueComponent>(m, "CliqueComponent")
        .def_readonly("clique_indices", &CliqueComponent::clique_indices)
        .def_readonly("d_set", &CliqueComponent::d_set)
        .def_readonly("f_set", &CliqueComponent::f_set);
    py::class_<HajnalReport>(m, "HajnalReport")
        .def_readonly("lhs", &HajnalReport::lhs)
        .def_readonly("rhs", &HajnalReport::rhs)
        .def_readonly("holds", &HajnalReport::holds);
    py::class_<KostochkaReport>(m, "KostochkaReport")
        .def_readonly("component", &KostochkaReport::component)
        .def_readonly("f_size", &KostochkaReport::f_size)
        .def_readonly("bound", &KostochkaReport::bound)
        .def_readonly("holds", &KostochkaReport::holds)
        .def_readonly("hypothesis_met", &KostochkaReport::hypothesis_met);

    m.def("maximum_cliques", &maximum_cliques, py::arg("g"), py::arg("budget") = default_clique_node_budget);
    m.def("components", py::overload_cast<const CliqueSet &>(&components), py::arg("cliques"));
    m.def("check_hajnal", [](const CliqueSet & cs, const std::vector<int> & indices) {
        return check_hajnal(std::span<const int>(indices), cs);
    }, py::arg("cliques"), py::arg("clique_indices"));
    m.def("check_kostochka", [](const Graph & g, const CliqueSet & cs) {
        auto comps = components(cs);
        return check_kostochka(g, cs, comps);
    }, py::arg("g"), py::arg("cliques"));
    m.def("hypothesis_met", [](int omega, int delta) { return hypothesis_met(omega, delta); });

    py::class_<LopsidedViolation>(m, "LopsidedViolation")
        .def_readonly("vertex", &LopsidedViolation::vertex)
        .def_readonly("out_degree", &LopsidedViolation::out_degree)
        .def_readonly("cap", &LopsidedViolation::cap);
    py::class_<LopsidedReport>(m, "LopsidedReport")
        .def_readonly("holds", &LopsidedReport::holds)
        .def_readonly("violations", &LopsidedReport::violations);
    m.def("lopsided_check", &lopsided_check, py::arg("pg"), py::arg("k"));

    m.def("find_isr_exact", [](const PartitionedGraph & pg, std::optional<Vertex> pinned, long long budget) {
        auto isr = find_isr_exact(pg, pinned, budget);
        return isr ? std::optional(isr->picks) : std::nullopt;
    }, py::arg("pg"), py::arg("pinned") = py::none(), py::arg("budget") = default_isr_node_budget);
    m.def("is_isr", [](const PartitionedGraph & pg, const std::vector<Vertex> & picks) {
        return is_isr(pg, Isr{picks});
    });

    py::class_<DominationCertificate>(m, "DominationCertificate")
        .def(py::init<std::vector<int>, VertexSet, VertexSet, Vertex>(),
                py::arg("j_set"), py::arg("x_set"), py::arg("y_set"), py::arg("pinned"))
        .def_readonly("j_set", &DominationCertificate::j_set)
        .def_readonly("x_set", &DominationCertificate::x_set)
        .def_readonly("y_set", &DominationCertificate::y_set)
        .def_readonly("pinned", &DominationCertificate::pinned);
    py::class_<CertificateCheck>(m, "CertificateCheck")
        .def_readonly("in_scope", &CertificateCheck::in_scope)
        .def_readonly("disjoint_stable_sets", &CertificateCheck::disjoint_stable_sets)
        .def_readonly("y_partial_isr", &CertificateCheck::y_partial_isr)
        .def_readonly("y_unique_x_neighbour", &CertificateCheck::y_unique_x_neighbour)
        .def_readonly("pinned_in_x", &CertificateCheck::pinned_in_x)
        .def_readonly("total_domination", &CertificateCheck::total_domination)
        .def_readonly("undominated", &CertificateCheck::undominated)
        .def_property_readonly("valid", &CertificateCheck::valid);
    m.def("verify_certificate", &verify_certificate, py::arg("pg"), py::arg("certificate"));
    m.def("find_certificate_exact", &find_certificate_exact, py::arg("pg"), py::arg("pinned"),
            py::arg("budget") = default_isr_node_budget);

    py::class_<AugmentResult>(m, "AugmentResult")
        .def_property_readonly("kind", [](const AugmentResult & r) { return to_string(r.kind); })
        .def_property_readonly("isr", [](const AugmentResult & r) {
            return r.isr ? std::optional(r.isr->picks) : std::nullopt;
        })
        .def_readonly("certificate", &AugmentResult::certificate)
        .def_readonly("steps", &AugmentResult::steps)
        .def_property_readonly("rounds", [](const AugmentResult & r) { return r.state.x_list.size(); });
    m.def("find_isr_augmenting", [](const PartitionedGraph & pg, Vertex pinned, long long budget, bool lazy) {
        return find_isr_augmenting(pg, pinned, budget, lazy ? Minimization::lazy : Minimization::exact);
    }, py::arg("pg"), py::arg("pinned"), py::arg("budget") = 1'000'000, py::arg("lazy") = false);

    py::class_<ProofStepCheck>(m, "ProofStepCheck")
        .def_readonly("component", &ProofStepCheck::component)
        .def_readonly("f_size", &ProofStepCheck::f_size)
        .def_readonly("d_size", &ProofStepCheck::d_size)
        .def_readonly("max_cross_degree", &ProofStepCheck::max_cross_degree)
        .def_property_readonly("all_hold", &ProofStepCheck::all_hold);
    py::class_<HittingReport>(m, "HittingReport")
        .def_readonly("n", &HittingReport::n)
        .def_readonly("omega", &HittingReport::omega)
        .def_readonly("delta", &HittingReport::delta)
        .def_readonly("hypothesis_met", &HittingReport::hypothesis_met)
        .def_readonly("clique_count", &HittingReport::clique_count)
        .def_readonly("components", &HittingReport::components)
        .def_readonly("proof_checks", &HittingReport::proof_checks)
        .def_readonly("chosen_k", &HittingReport::chosen_k)
        .def_readonly("stable_set", &HittingReport::stable_set)
        .def_property_readonly("status", [](const HittingReport & r) { return to_string(r.status); })
        .def_readonly("route", &HittingReport::route)
        .def_readonly("budget_exhausted", &HittingReport::budget_exhausted)
        .def_readonly("note", &HittingReport::note);
    m.def("hitting_stable_set", [](const Graph & g, int brute_force_limit) {
        HittingOptions options;
        options.brute_force_limit = brute_force_limit;
        return hitting_stable_set(g, options);
    }, py::arg("g"), py::arg("brute_force_limit") = 20);
    m.def("verify_hitting", [](const Graph & g, const VertexSet & s) { return verify_hitting(g, s).holds; });
    m.def("brute_force_hitting", [](const Graph & g, int limit) {
        return brute_force_hitting(g, limit);
    }, py::arg("g"), py::arg("limit") = 20);
}
