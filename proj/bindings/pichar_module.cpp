#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pichar/gltype.hpp"
#include "pichar/piclass.hpp"
#include "pichar/symdeg.hpp"
#include "pichar/verify.hpp"

namespace py = pybind11;
using namespace pichar;

namespace {

Partition to_partition(const std::string& text) { return Partition::parse(text); }

py::int_ to_py_int(const BigInt& value) {
    // exact: python ints are arbitrary precision, hand over the decimal string
    return py::cast<py::int_>(py::int_(py::str(to_decimal(value))));
}

py::dict graph_dict(const PrimeGraph& graph) {
    py::dict d;
    d["vertices"] = graph.vertices;
    d["edges"] = graph.edges;
    d["missing"] = graph.missing_edges();
    return d;
}

PrimePair to_pair(int p, int q) { return PrimePair(p, q); }

}  // namespace

PYBIND11_MODULE(_pichar, m) {
    m.doc() = "exact character-degree combinatorics for symmetric, alternating,"
              " nilpotent and general linear groups";

    // partitions
    m.def("partitions", [](int n) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_partitions(n)) out.push_back(p.to_string());
        return out;
    }, py::arg("n"), "partitions of n in reverse-lexicographic order, as text labels");
    m.def("conjugate", [](const std::string& lambda) {
        return to_partition(lambda).conjugate().to_string();
    }, py::arg("lambda_"));
    m.def("hook_lengths", [](const std::string& lambda) {
        return hook_multiset(to_partition(lambda));
    }, py::arg("lambda_"), "all hook lengths, row-major");
    m.def("e_core", [](const std::string& lambda, int e) {
        return pichar::e_core(to_partition(lambda), e).to_string();
    }, py::arg("lambda_"), py::arg("e"));
    m.def("e_weight", [](const std::string& lambda, int e) {
        return pichar::e_weight(to_partition(lambda), e);
    }, py::arg("lambda_"), py::arg("e"));
    m.def("e_quotient", [](const std::string& lambda, int e) {
        std::vector<std::string> out;
        for (const auto& component : pichar::e_quotient(to_partition(lambda), e))
            out.push_back(component.to_string());
        return out;
    }, py::arg("lambda_"), py::arg("e"));
    m.def("core_tower_sizes", [](const std::string& lambda, int e) {
        return core_tower(to_partition(lambda), e).layer_sizes();
    }, py::arg("lambda_"), py::arg("e"));

    // degrees
    m.def("degree", [](const std::string& lambda) {
        return to_py_int(degree_hook_formula(to_partition(lambda)));
    }, py::arg("lambda_"), "character degree of the symmetric group at lambda");
    m.def("nu_p_degree", [](const std::string& lambda, int p) {
        return nu_p_from_tower(to_partition(lambda), p);
    }, py::arg("lambda_"), py::arg("p"), "exponent of p in the degree");
    m.def("is_p_prime_degree", [](const std::string& lambda, int p) {
        return pichar::is_p_prime_degree(to_partition(lambda), p);
    }, py::arg("lambda_"), py::arg("p"));
    m.def("sym_degrees", [](int n) {
        py::list out;
        for (const auto& r : pichar::sym_degrees(n)) {
            py::dict d;
            d["label"] = r.label.to_string();
            d["degree"] = to_py_int(r.degree);
            d["mult"] = r.mult;
            d["split"] = false;
            out.append(d);
        }
        return out;
    }, py::arg("n"));
    m.def("alt_degrees", [](int n) {
        py::list out;
        for (const auto& r : pichar::alt_degrees(n)) {
            py::dict d;
            d["label"] = r.label.to_string();
            d["degree"] = to_py_int(r.degree);
            d["mult"] = r.mult;
            d["split"] = r.label.split;
            out.append(d);
        }
        return out;
    }, py::arg("n"));

    // classification and witnesses
    m.def("irr_pi_prime_sym", [](int n, int p, int q) {
        std::vector<std::string> out;
        for (const auto& lambda : pichar::irr_pi_prime_sym(n, to_pair(p, q)))
            out.push_back(lambda.to_string());
        return out;
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("sym_only_linear", [](int n, int p, int q) {
        return pichar::sym_only_linear(n, to_pair(p, q));
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("sym_witness", [](int n, int p, int q) {
        const auto report = pichar::sym_witness(n, to_pair(p, q));
        py::dict d;
        if (report.kind == WitnessReport::Kind::only_linear) {
            d["classification"] = "ONLY_LINEAR";
        } else {
            d["classification"] = "WITNESS";
            d["witness"] = report.witness->to_string();
            d["degree"] = to_py_int(*report.degree);
        }
        return d;
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("alt_witness", [](int n, int p, int q) {
        const auto w = pichar::alt_witness(n, to_pair(p, q));
        py::dict d;
        d["label"] = w.label.to_string();
        d["split"] = w.label.split;
        d["degree"] = to_py_int(w.degree);
        return d;
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("alt_extendible_exists", [](int n, int p, int q) {
        return pichar::alt_extendible_exists(n, to_pair(p, q));
    }, py::arg("n"), py::arg("p"), py::arg("q"));

    // graphs
    m.def("gamma_prime_sym", [](int n) { return graph_dict(pichar::gamma_prime_sym(n)); },
          py::arg("n"));
    m.def("gamma_prime_alt", [](int n) { return graph_dict(pichar::gamma_prime_alt(n)); },
          py::arg("n"));
    m.def("gamma_prime_nilpotent", [](const std::vector<std::pair<int, bool>>& sylows) {
        std::vector<SylowSpec> specs;
        specs.reserve(sylows.size());
        for (const auto& [p, abelian] : sylows) specs.push_back({p, abelian});
        return graph_dict(pichar::gamma_prime_nilpotent(specs));
    }, py::arg("sylows"), "entries are (prime, abelian) pairs");

    // general linear / unitary groups
    m.def("gl_order", [](int n, long long q) { return to_py_int(pichar::gl_order(n, BigInt(q))); },
          py::arg("n"), py::arg("q"));
    m.def("unipotent_degree", [](const std::string& lambda, long long q) {
        return to_py_int(pichar::unipotent_degree(to_partition(lambda), BigInt(q)));
    }, py::arg("lambda_"), py::arg("q"));
    m.def("gl_character_degrees", [](int n, long long q) {
        py::list out;
        for (const auto& [degree, count] : pichar::gl_character_degrees(n, q).entries)
            out.append(py::make_tuple(to_py_int(degree), to_py_int(count)));
        return out;
    }, py::arg("n"), py::arg("q"), "list of (degree, count), degree ascending");
    m.def("gl_only_linear", [](int n, int r, int p, int q, int a, int eps) {
        return pichar::gl_only_linear(GLParams{n, r, a, eps}, to_pair(p, q));
    }, py::arg("n"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("a") = 1,
          py::arg("eps") = 1);
    m.def("gamma_prime_gl", [](int n, int r, int a, int eps) {
        const auto result = pichar::gamma_prime_gl(GLParams{n, r, a, eps});
        py::dict d = graph_dict(result.graph);
        d["notes"] = result.notes;
        return d;
    }, py::arg("n"), py::arg("r"), py::arg("a") = 1, py::arg("eps") = 1);

    // verification suites
    m.def("verify", [](const std::string& suite, int max_n, int jobs) {
        py::list out;
        for (const auto& r : verify::run(suite, max_n, jobs)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("max_n") = 0, py::arg("jobs") = 1);
}
