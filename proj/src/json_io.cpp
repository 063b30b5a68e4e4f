#include "plrk/json_io.hpp"

#include <fstream>

namespace plrk {

namespace {

// translate nlohmann exceptions (missing fields, wrong types) into plrk errors
template <typename F>
auto schema(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string(what) + ": " + e.what());
    }
}

Json poly_list(const std::vector<Poly>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

std::vector<Poly> poly_list_from(const RingPtr& ring, const Json& j, size_t expect, const char* where) {
    if (!j.is_array() || j.size() != expect) throw error(std::string(where) + ": expected an array of " + std::to_string(expect) + " polynomials");
    std::vector<Poly> out;
    for (const auto& s : j) out.push_back(Poly::parse(ring, s.get<std::string>()));
    return out;
}

} // namespace

Json ring_to_json(const RingPtr& ring) {
    Json j;
    j["vars"] = ring->vars;
    j["laurent"] = ring->laurent;
    return j;
}

RingPtr ring_from_json(const Json& j) {
    if (!j.contains("vars")) throw error("ring: missing 'vars'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    bool laurent = j.value("laurent", false);
    return make_ring(std::move(vars), laurent);
}

Json element_to_json(const Element& e) { return poly_list(e.coeffs); }

Element element_from_json(const ModulePtr& mod, const Json& j) {
    return Element(mod, poly_list_from(mod->ring, j, mod->rank(), "element"));
}

Json vf_to_json(const VectorField& v) { return poly_list(v.components); }

VectorField vf_from_json(const RingPtr& ring, const Json& j) {
    return VectorField(ring, poly_list_from(ring, j, ring->nvars(), "vectorfield"));
}

Json matrix_to_json(const LinearMap& m) {
    Json rows = Json::array();
    for (const auto& row : m.m) rows.push_back(poly_list(row));
    return rows;
}

LinearMap matrix_from_json(const ModulePtr& dom, const ModulePtr& cod, const Json& j) {
    if (!j.is_array() || j.size() != cod->rank()) throw error("matrix: row count mismatch");
    LinearMap m(dom, cod);
    for (size_t r = 0; r < cod->rank(); ++r) m.m[r] = poly_list_from(dom->ring, j.at(r), dom->rank(), "matrix row");
    return m;
}

namespace {

Json table_to_json(const std::vector<std::vector<Element>>& table) {
    Json a = Json::array();
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = 0; j < table[i].size(); ++j) {
            if (table[i][j].is_zero()) continue;
            a.push_back(Json::array({i, j, element_to_json(table[i][j])}));
        }
    return a;
}

void table_from_json(std::vector<std::vector<Element>>& table, const ModulePtr& value_mod, const Json& j,
                     const char* where) {
    for (const auto& ent : j) {
        if (!ent.is_array() || ent.size() != 3) throw error(std::string(where) + ": entries must be [i, j, element]");
        size_t a = ent.at(0).get<size_t>();
        size_t b = ent.at(1).get<size_t>();
        if (a >= table.size() || b >= table[a].size()) throw error(std::string(where) + ": index out of range");
        table[a][b] = element_from_json(value_mod, ent.at(2));
    }
}

} // namespace

Json structure_to_json(const PreLieRinehartData& d) {
    Json j;
    j["kind"] = "prelie_rinehart";
    j["ring"] = ring_to_json(d.module->ring);
    j["basis"] = d.module->basis;
    j["product"] = table_to_json(d.product);
    Json anchors = Json::array();
    for (const auto& v : d.anchor) anchors.push_back(vf_to_json(v));
    j["anchor"] = anchors;
    return j;
}

Json structure_to_json(const LieRinehartData& d) {
    Json j;
    j["kind"] = "lie_rinehart";
    j["ring"] = ring_to_json(d.module->ring);
    j["basis"] = d.module->basis;
    j["product"] = table_to_json(d.bracket);
    Json anchors = Json::array();
    for (const auto& v : d.anchor) anchors.push_back(vf_to_json(v));
    j["anchor"] = anchors;
    return j;
}

namespace {

void structure_parts_from_json(const Json& j, ModulePtr& mod, std::vector<std::vector<Element>>& table,
                               std::vector<VectorField>& anchor) {
    RingPtr ring = ring_from_json(j.at("ring"));
    mod = make_module(ring, j.at("basis").get<std::vector<std::string>>());
    size_t n = mod->rank();
    table.assign(n, std::vector<Element>(n, Element::zero(mod)));
    table_from_json(table, mod, j.at("product"), "product");
    anchor.clear();
    const Json& anc = j.at("anchor");
    if (anc.size() != n) throw error("anchor: expected one vector field per basis element");
    for (const auto& v : anc) anchor.push_back(vf_from_json(ring, v));
}

} // namespace

PreLieRinehartData prelie_structure_from_json(const Json& j) {
    return schema("prelie_rinehart", [&] {
        if (j.value("kind", "prelie_rinehart") != std::string("prelie_rinehart")) throw error("expected kind=prelie_rinehart");
        PreLieRinehartData d;
        structure_parts_from_json(j, d.module, d.product, d.anchor);
        return d;
    });
}

LieRinehartData lie_structure_from_json(const Json& j) {
    return schema("lie_rinehart", [&] {
        if (j.value("kind", "lie_rinehart") != std::string("lie_rinehart")) throw error("expected kind=lie_rinehart");
        LieRinehartData d;
        structure_parts_from_json(j, d.module, d.bracket, d.anchor);
        return d;
    });
}

namespace {

Json rep_core_to_json(const Representation& rep) {
    Json j;
    Json rho = Json::array();
    for (const auto& d : rep.rho) {
        Json e;
        e["matrix"] = matrix_to_json(d.linear);
        e["symbol"] = vf_to_json(d.symbol);
        rho.push_back(e);
    }
    j["rho"] = rho;
    Json mu = Json::array();
    for (const auto& m : rep.mu) mu.push_back(matrix_to_json(m));
    j["mu"] = mu;
    return j;
}

void rep_core_from_json(Representation& rep, const Json& j) {
    size_t n = rep.algebra.module->rank();
    const Json& rho = j.at("rho");
    const Json& mu = j.at("mu");
    if (rho.size() != n || mu.size() != n) throw error("representation: rho/mu must have one entry per basis element");
    for (const auto& e : rho)
        rep.rho.emplace_back(matrix_from_json(rep.target, rep.target, e.at("matrix")),
                             vf_from_json(rep.target->ring, e.at("symbol")));
    for (const auto& m : mu) rep.mu.push_back(matrix_from_json(rep.target, rep.target, m));
}

} // namespace

Json representation_to_json(const Representation& rep) {
    Json j;
    j["kind"] = "representation";
    j["algebra"] = structure_to_json(rep.algebra);
    j["target"] = Json{{"basis", rep.target->basis}};
    Json core = rep_core_to_json(rep);
    j["rho"] = core["rho"];
    j["mu"] = core["mu"];
    return j;
}

Representation representation_from_json(const Json& j) {
    return schema("representation", [&] {
        Representation rep;
        rep.algebra = prelie_structure_from_json(j.at("algebra"));
        rep.target = make_module(rep.algebra.module->ring, j.at("target").at("basis").get<std::vector<std::string>>());
        rep_core_from_json(rep, j);
        return rep;
    });
}

Json cochain_to_json(const Cochain& c) {
    Json j;
    j["cochain_kind"] = c.kind == CochainKind::prelie ? "prelie" : "lie";
    j["degree"] = c.degree;
    Json vals = Json::array();
    for (const auto& [k, v] : c.values) {
        if (v.is_zero()) continue;
        vals.push_back(Json::array({Json(k), element_to_json(v)}));
    }
    j["values"] = vals;
    return j;
}

Json cochain_with_rep_to_json(const Representation& rep, const Cochain& c) {
    Json j;
    j["kind"] = "cochain";
    j["rep"] = representation_to_json(rep);
    Json core = cochain_to_json(c);
    j["cochain_kind"] = core["cochain_kind"];
    j["degree"] = core["degree"];
    j["values"] = core["values"];
    return j;
}

std::pair<Representation, Cochain> cochain_with_rep_from_json(const Json& j) {
    return schema("cochain", [&] {
        if (j.value("kind", "cochain") != std::string("cochain")) throw error("expected kind=cochain");
        Representation rep = representation_from_json(j.at("rep"));
        std::string ck = j.at("cochain_kind").get<std::string>();
        if (ck != "prelie") throw error("cochain files carry prelie cochains; lie cochains arise internally");
        int degree = j.at("degree").get<int>();
        Cochain c = Cochain::zero(CochainKind::prelie, degree, rep.algebra.module, rep.target);
        for (const auto& ent : j.at("values")) {
            std::vector<int> key = ent.at(0).get<std::vector<int>>();
            c.set(key, element_from_json(rep.target, ent.at(1)));
        }
        return std::make_pair(std::move(rep), std::move(c));
    });
}

Json extension_to_json(const ExtensionData& x) {
    Json j;
    j["kind"] = "extension";
    j["quotient"] = structure_to_json(x.quotient);
    j["kernel"] = structure_to_json(x.kernel);
    Json core = rep_core_to_json(x.rep);
    j["rho"] = core["rho"];
    j["mu"] = core["mu"];
    j["cocycle"] = cochain_to_json(x.omega)["values"];
    return j;
}

ExtensionData extension_from_json(const Json& j) {
    return schema("extension", [&] {
        if (j.value("kind", "extension") != std::string("extension")) throw error("expected kind=extension");
        ExtensionData x;
        x.quotient = prelie_structure_from_json(j.at("quotient"));
        x.kernel = prelie_structure_from_json(j.at("kernel"));
        if (!same_ring(x.quotient.module->ring, x.kernel.module->ring)) throw error("extension: ring mismatch");
        x.rep.algebra = x.quotient;
        x.rep.target = x.kernel.module;
        rep_core_from_json(x.rep, j);
        x.omega = Cochain::zero(CochainKind::prelie, 2, x.quotient.module, x.kernel.module);
        for (const auto& ent : j.at("cocycle")) {
            std::vector<int> key = ent.at(0).get<std::vector<int>>();
            x.omega.set(key, element_from_json(x.kernel.module, ent.at(1)));
        }
        return x;
    });
}

Json crossed_module_to_json(const CrossedModuleData& cm) {
    Json j;
    j["kind"] = "crossed_module";
    j["base"] = structure_to_json(cm.base);
    j["top_basis"] = cm.top->basis;
    j["top_product"] = table_to_json(cm.top_product);
    j["boundary"] = matrix_to_json(cm.boundary);
    Json core = rep_core_to_json(cm.rep);
    j["rep"] = Json{{"rho", core["rho"]}, {"mu", core["mu"]}};
    return j;
}

CrossedModuleData crossed_module_from_json(const Json& j) {
    return schema("crossed_module", [&] {
        if (j.value("kind", "crossed_module") != std::string("crossed_module")) throw error("expected kind=crossed_module");
        CrossedModuleData cm;
        cm.base = prelie_structure_from_json(j.at("base"));
        cm.top = make_module(cm.base.module->ring, j.at("top_basis").get<std::vector<std::string>>());
        size_t nt = cm.top->rank();
        cm.top_product.assign(nt, std::vector<Element>(nt, Element::zero(cm.top)));
        table_from_json(cm.top_product, cm.top, j.at("top_product"), "top_product");
        cm.boundary = matrix_from_json(cm.top, cm.base.module, j.at("boundary"));
        cm.rep.algebra = cm.base;
        cm.rep.target = cm.top;
        rep_core_from_json(cm.rep, j.at("rep"));
        return cm;
    });
}

Json crossed_extension_to_json(const CrossedExtensionData& xd) {
    Json j = crossed_module_to_json(xd.cm);
    j["kind"] = "crossed_extension";
    j["quotient"] = structure_to_json(xd.quotient);
    j["kernel_basis"] = xd.kernel_module->basis;
    j["iota"] = matrix_to_json(xd.iota);
    j["p"] = matrix_to_json(xd.p);
    j["s"] = matrix_to_json(xd.s);
    j["image_indices"] = xd.image_indices;
    j["sigma"] = matrix_to_json(xd.sigma);
    return j;
}

CrossedExtensionData crossed_extension_from_json(const Json& j) {
    return schema("crossed_extension", [&] {
        if (j.value("kind", "crossed_extension") != std::string("crossed_extension"))
            throw error("expected kind=crossed_extension");
        CrossedExtensionData xd;
        Json cmj = j;
        cmj["kind"] = "crossed_module";
        xd.cm = crossed_module_from_json(cmj);
        xd.quotient = prelie_structure_from_json(j.at("quotient"));
        xd.kernel_module = make_module(xd.cm.base.module->ring, j.at("kernel_basis").get<std::vector<std::string>>());
        xd.iota = matrix_from_json(xd.kernel_module, xd.cm.top, j.at("iota"));
        xd.p = matrix_from_json(xd.cm.base.module, xd.quotient.module, j.at("p"));
        xd.s = matrix_from_json(xd.quotient.module, xd.cm.base.module, j.at("s"));
        xd.image_indices = j.at("image_indices").get<std::vector<size_t>>();
        std::vector<std::string> nnames;
        for (size_t i : xd.image_indices) {
            if (i >= xd.cm.base.module->rank()) throw error("crossed_extension: image index out of range");
            nnames.push_back(xd.cm.base.module->basis[i]);
        }
        ModulePtr nmod = make_module(xd.cm.base.module->ring, std::move(nnames));
        xd.sigma = matrix_from_json(nmod, xd.cm.top, j.at("sigma"));
        return xd;
    });
}

Json twoalg_to_json(const PreLie2Data& x) {
    Json j;
    j["kind"] = "two_algebra";
    j["ring"] = ring_to_json(x.p0->ring);
    j["p0"] = x.p0->basis;
    j["p1"] = x.p1->basis;
    j["m1"] = matrix_to_json(x.m1);
    j["m2_00"] = table_to_json(x.m2_00);
    j["m2_01"] = table_to_json(x.m2_01);
    j["m2_10"] = table_to_json(x.m2_10);
    j["m3"] = cochain_to_json(x.m3)["values"];
    Json anchors = Json::array();
    for (const auto& v : x.anchor) anchors.push_back(vf_to_json(v));
    j["anchor"] = anchors;
    return j;
}

PreLie2Data twoalg_from_json(const Json& j) {
    return schema("two_algebra", [&] {
        if (j.value("kind", "two_algebra") != std::string("two_algebra")) throw error("expected kind=two_algebra");
        RingPtr ring = ring_from_json(j.at("ring"));
        ModulePtr p0 = make_module(ring, j.at("p0").get<std::vector<std::string>>());
        ModulePtr p1 = make_module(ring, j.at("p1").get<std::vector<std::string>>());
        PreLie2Data x = PreLie2Data::empty(p0, p1);
        x.m1 = matrix_from_json(p1, p0, j.at("m1"));
        table_from_json(x.m2_00, p0, j.at("m2_00"), "m2_00");
        table_from_json(x.m2_01, p1, j.at("m2_01"), "m2_01");
        table_from_json(x.m2_10, p1, j.at("m2_10"), "m2_10");
        for (const auto& ent : j.at("m3")) {
            std::vector<int> key = ent.at(0).get<std::vector<int>>();
            x.m3.set(key, element_from_json(p1, ent.at(1)));
        }
        const Json& anc = j.at("anchor");
        if (anc.size() != p0->rank()) throw error("two_algebra: anchor arity mismatch");
        x.anchor.clear();
        for (const auto& v : anc) x.anchor.push_back(vf_from_json(ring, v));
        return x;
    });
}

Json report_to_json(const Report& r) {
    Json j;
    j["overall"] = r.ok() ? "PASS" : "FAIL";
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json e;
        e["check"] = it.id;
        e["status"] = it.pass ? "PASS" : "FAIL";
        if (!it.pass && !it.witness.empty()) e["witness"] = it.witness;
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

Json rmatrix_input_to_json(const RMatrixInput& in) {
    Json j;
    j["kind"] = "rmatrix_input";
    Json lie;
    lie["dim"] = in.lie.dim;
    Json br = Json::array();
    for (size_t i = 0; i < in.lie.dim; ++i)
        for (size_t k = i + 1; k < in.lie.dim; ++k) {
            bool nonzero = false;
            for (const auto& c : in.lie.bracket[i][k])
                if (!c.is_zero()) nonzero = true;
            if (!nonzero) continue;
            Json coeffs = Json::array();
            for (const auto& c : in.lie.bracket[i][k]) coeffs.push_back(c.str());
            br.push_back(Json::array({i, k, coeffs}));
        }
    lie["bracket"] = br;
    j["lie"] = lie;
    j["ring"] = ring_to_json(in.action.images.at(0).ring);
    Json act = Json::array();
    for (const auto& v : in.action.images) act.push_back(vf_to_json(v));
    j["action"] = act;
    Json rr = Json::array();
    for (size_t i = 0; i < in.lie.dim; ++i)
        for (size_t k = i + 1; k < in.lie.dim; ++k)
            if (!in.r.coeffs[i][k].is_zero()) rr.push_back(Json::array({i, k, in.r.coeffs[i][k].str()}));
    j["r"] = rr;
    return j;
}

RMatrixInput rmatrix_input_from_json(const Json& j) {
    return schema("rmatrix_input", [&] {
        if (j.value("kind", "rmatrix_input") != std::string("rmatrix_input")) throw error("expected kind=rmatrix_input");
        RMatrixInput in;
        const Json& lie = j.at("lie");
        in.lie.dim = lie.at("dim").get<size_t>();
        in.lie.bracket.assign(in.lie.dim,
                              std::vector<std::vector<Rational>>(in.lie.dim, std::vector<Rational>(in.lie.dim, Rational(0))));
        for (const auto& ent : lie.at("bracket")) {
            size_t a = ent.at(0).get<size_t>();
            size_t b = ent.at(1).get<size_t>();
            if (a >= in.lie.dim || b >= in.lie.dim) throw error("lie bracket: index out of range");
            const Json& coeffs = ent.at(2);
            if (coeffs.size() != in.lie.dim) throw error("lie bracket: coefficient arity mismatch");
            for (size_t k = 0; k < in.lie.dim; ++k) {
                Rational c = Rational::parse(coeffs.at(k).get<std::string>());
                in.lie.bracket[a][b][k] = c;
                in.lie.bracket[b][a][k] = -c;
            }
        }
        RingPtr ring = ring_from_json(j.at("ring"));
        in.action.flavor = ActionData::Flavor::lie;
        in.action.dim = in.lie.dim;
        in.action.table = in.lie.bracket;
        const Json& act = j.at("action");
        if (act.size() != in.lie.dim) throw error("action: expected one vector field per basis element");
        for (const auto& v : act) in.action.images.push_back(vf_from_json(ring, v));
        std::vector<std::tuple<size_t, size_t, Rational>> entries;
        for (const auto& ent : j.at("r")) {
            entries.emplace_back(ent.at(0).get<size_t>(), ent.at(1).get<size_t>(),
                                 Rational::parse(ent.at(2).get<std::string>()));
        }
        in.r = RMatrix::make(in.lie, entries);
        return in;
    });
}

std::string file_kind(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw error("input file has no 'kind' field");
    return j.at("kind").get<std::string>();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace plrk
