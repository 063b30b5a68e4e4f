// Python bindings for the main operations: everything speaks JSON strings on
// the same schemas the CLI uses, plus a few direct polynomial helpers.

#include "plrk/freeprelie.hpp"
#include "plrk/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace plrk;

namespace {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("JSON parse error: ") + e.what());
    }
}

std::string verify_str(const std::string& text) {
    Json j = parse_json(text);
    std::string kind = file_kind(j);
    Report r;
    if (kind == "prelie_rinehart")
        r = verify_prelie_rinehart(prelie_structure_from_json(j));
    else if (kind == "lie_rinehart")
        r = verify_lie_rinehart(lie_structure_from_json(j));
    else if (kind == "representation")
        r = check_representation(representation_from_json(j));
    else if (kind == "extension")
        r = check_extension_conditions(extension_from_json(j));
    else if (kind == "crossed_module")
        r = verify_crossed_module(crossed_module_from_json(j));
    else if (kind == "crossed_extension")
        r = check_crossed_extension(crossed_extension_from_json(j));
    else if (kind == "two_algebra")
        r = verify_prelie2(twoalg_from_json(j));
    else if (kind == "cochain") {
        auto [rep, c] = cochain_with_rep_from_json(j);
        r = cocycle_check(rep, c);
    } else
        throw error("unknown kind '" + kind + "'");
    return report_to_json(r).dump(2);
}

std::string rmatrix_pipeline(const std::string& text) {
    RMatrixInput in = rmatrix_input_from_json(parse_json(text));
    Wedge3 res = cybe_residual(in.r);
    PoissonData poisson = induced_poisson(in.r, in.action);
    PreLieRinehartData om = omega1_prelie(in.r, in.action);
    Json out;
    out["cybe_zero"] = res.is_zero();
    Json table = Json::array();
    for (size_t i = 0; i < poisson.ring->nvars(); ++i)
        for (size_t j = i + 1; j < poisson.ring->nvars(); ++j)
            if (!poisson.table[i][j].is_zero()) table.push_back(Json::array({i, j, poisson.table[i][j].str()}));
    out["poisson"] = table;
    out["omega1"] = structure_to_json(om);
    out["report"] = report_to_json(verify_prelie_rinehart(om));
    return out.dump(2);
}

std::string delta_str(const std::string& text) {
    auto [rep, c] = cochain_with_rep_from_json(parse_json(text));
    return cochain_with_rep_to_json(rep, prelie_coboundary(rep, c)).dump(2);
}

std::vector<size_t> cohomology_dims_str(const std::string& text, int max_degree) {
    Representation rep = representation_from_json(parse_json(text));
    Report chk = check_representation(rep);
    if (!chk.ok()) throw error("representation fails its checks: " + chk.first_failure()->id);
    return cohomology_dims_field(rep, max_degree);
}

std::string sub_adjacent_str(const std::string& text) {
    PreLieRinehartData d = prelie_structure_from_json(parse_json(text));
    return structure_to_json(sub_adjacent(d)).dump(2);
}

std::string extend_str(const std::string& text) {
    ExtensionData x = extension_from_json(parse_json(text));
    SplitExtension s = build_extension(x);
    Json out;
    out["total"] = structure_to_json(s.total);
    Report full = check_extension_conditions(x);
    full.merge(verify_prelie_rinehart(s.total), "total.");
    out["report"] = report_to_json(full);
    return out.dump(2);
}

std::string crossed_to_strict_str(const std::string& text) {
    CrossedModuleData cm = crossed_module_from_json(parse_json(text));
    return twoalg_to_json(crossed_to_strict(cm)).dump(2);
}

std::string strict_to_crossed_str(const std::string& text) {
    PreLie2Data x = twoalg_from_json(parse_json(text));
    return crossed_module_to_json(strict_to_crossed(x)).dump(2);
}

std::string poly_mul(const std::string& vars_csv, const std::string& a, const std::string& b) {
    std::vector<std::string> vars;
    std::string cur;
    for (char ch : vars_csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch)))
            cur.push_back(ch);
    }
    RingPtr ring = make_ring(vars);
    return (Poly::parse(ring, a) * Poly::parse(ring, b)).str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symbolic kernel for (pre-)Lie-Rinehart algebras";

    py::register_exception<plrk::error>(m, "PlrkError");

    m.def("verify", &verify_str, py::arg("structure_json"),
          "Verify a structure file (any supported kind); returns the report as JSON.");
    m.def("rmatrix", &rmatrix_pipeline, py::arg("rmatrix_input_json"),
          "CYBE residual, induced Poisson bracket and the Omega^1 structure.");
    m.def("delta", &delta_str, py::arg("cochain_json"), "Coboundary of a cochain (with its representation).");
    m.def("cohomology_dims", &cohomology_dims_str, py::arg("representation_json"), py::arg("max_degree") = 2,
          "Exact cohomology dimensions over Q (field case).");
    m.def("sub_adjacent", &sub_adjacent_str, py::arg("structure_json"),
          "The sub-adjacent Lie-Rinehart algebra of a pre-Lie-Rinehart structure.");
    m.def("extend", &extend_str, py::arg("extension_json"), "Build an abelian extension from a 2-cocycle.");
    m.def("crossed_to_strict", &crossed_to_strict_str, py::arg("crossed_module_json"));
    m.def("strict_to_crossed", &strict_to_crossed_str, py::arg("two_algebra_json"));
    m.def("tree_basis_count", &basis_count, py::arg("generators"), py::arg("nodes"),
          "Number of labelled rooted trees (free pre-Lie basis elements).");
    m.def("poly_mul", &poly_mul, py::arg("vars_csv"), py::arg("a"), py::arg("b"),
          "Multiply two polynomials in the canonical text form.");
}
