// regenerate the JSON fixture corpus under tests/fixtures

#include "plrk/extensions.hpp"
#include "plrk/json_io.hpp"

#include <fstream>
#include <iostream>

using namespace plrk;

namespace {

void write(const std::string& dir, const std::string& name, const Json& j) {
    std::ofstream out(dir + "/" + name);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << name << "\n";
}

void write_raw(const std::string& dir, const std::string& name, const std::string& text) {
    std::ofstream out(dir + "/" + name);
    out << text;
    std::cout << "wrote " << name << "\n";
}

PreLieRinehartData dn(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(vars);
    std::vector<VectorField> fields;
    for (int i = 0; i < n; ++i) fields.push_back(VectorField::partial(ring, i));
    return coordinate_algebra(ring, fields);
}

PreLieRinehartData triangular() {
    ModulePtr m = make_module(make_ring({}), {"e1", "e2"});
    PreLieRinehartData d = PreLieRinehartData::zero(m);
    d.product[0][1] = Element::basis(m, 1);
    return d;
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "tests/fixtures";

    write(dir, "d1.json", structure_to_json(dn(1)));
    write(dir, "d2.json", structure_to_json(dn(2)));
    write(dir, "d3.json", structure_to_json(dn(3)));
    write(dir, "lie_d2.json", structure_to_json(sub_adjacent(dn(2))));

    {
        RingPtr kt = make_ring({"t"});
        write(dir, "kt.json", structure_to_json(coordinate_algebra(kt, {VectorField::partial(kt, 0)})));
        RingPtr lz = make_ring({"z"}, true);
        write(dir, "laurent.json", structure_to_json(coordinate_algebra(lz, {VectorField::partial(lz, 0)})));
    }

    {
        PreLieRinehartData bad = dn(2);
        bad.product[0][1] += Element::basis(bad.module, 0);
        write(dir, "d2_mutated.json", structure_to_json(bad));
    }

    write_raw(dir, "malformed.json", "{ this is not json\n");
    {
        Json j;
        j["kind"] = "frobnicator";
        write(dir, "unknown_kind.json", j);
    }

    // sl(2) with the standard action on Q[x1,x2] and r = h^e + h^f + 2 e^f (flat)
    {
        RMatrixInput in;
        in.lie = LieAlgebraFD::sl2();
        RingPtr ring = make_ring({"x1", "x2"});
        in.action.flavor = ActionData::Flavor::lie;
        in.action.dim = 3;
        in.action.table = in.lie.bracket;
        Poly x1 = Poly::variable(ring, 0), x2 = Poly::variable(ring, 1);
        in.action.images = {VectorField(ring, {x1, -x2}), VectorField(ring, {Poly::zero(ring), x1}),
                            VectorField(ring, {x2, Poly::zero(ring)})};
        in.r = RMatrix::make(in.lie, {{0, 1, Rational(1)}, {0, 2, Rational(1)}, {1, 2, Rational(2)}});
        Json combined = rmatrix_input_to_json(in);
        write(dir, "sl2.json", combined);
        write(dir, "sl2_lie.json", combined["lie"]);
        write(dir, "sl2_action.json", Json{{"ring", combined["ring"]}, {"action", combined["action"]}});
    }

    // field-case representation and cochains over the triangular algebra
    {
        PreLieRinehartData tri = triangular();
        Representation rep = lr_representation(tri);
        write(dir, "rep_triangular.json", representation_to_json(rep));

        Cochain id = Cochain::zero(CochainKind::prelie, 1, tri.module, tri.module);
        for (size_t i = 0; i < 2; ++i) id.set({(int)i}, Element::basis(tri.module, i));
        write(dir, "cochain_id.json", cochain_with_rep_to_json(rep, id));

        write(dir, "cochain_closed.json", cochain_with_rep_to_json(rep, prelie_coboundary(rep, id)));

        Cochain bad = Cochain::zero(CochainKind::prelie, 2, tri.module, tri.module);
        bad.set({0, 1}, Element::basis(tri.module, 0));
        write(dir, "cochain_nonclosed.json", cochain_with_rep_to_json(rep, bad));

        write(dir, "cochain_zero.json",
              cochain_with_rep_to_json(rep, Cochain::zero(CochainKind::prelie, 2, tri.module, tri.module)));
    }

    // extensions: semidirect product of the triangular algebra with itself
    {
        PreLieRinehartData tri = triangular();
        ModulePtr kmod = make_module(tri.module->ring, {"u1", "u2"});
        ExtensionData x;
        x.quotient = tri;
        x.kernel = PreLieRinehartData::zero(kmod);
        Representation lr = lr_representation(tri);
        x.rep.algebra = tri;
        x.rep.target = kmod;
        for (size_t i = 0; i < 2; ++i) {
            LinearMap rho(kmod, kmod), mu(kmod, kmod);
            rho.m = lr.rho[i].linear.m;
            mu.m = lr.mu[i].m;
            x.rep.rho.emplace_back(rho, tri.anchor[i]);
            x.rep.mu.push_back(mu);
        }
        x.omega = Cochain::zero(CochainKind::prelie, 2, tri.module, kmod);
        write(dir, "ext_semidirect.json", extension_to_json(x));

        // split flavor for the four-file form of `extend`
        write(dir, "ext_quotient.json", structure_to_json(x.quotient));
        write(dir, "ext_kernel.json", structure_to_json(x.kernel));
        Json repj;
        Json full = extension_to_json(x);
        repj["rho"] = full["rho"];
        repj["mu"] = full["mu"];
        write(dir, "ext_rep.json", repj);
        Cochain phi = Cochain::zero(CochainKind::prelie, 1, tri.module, kmod);
        phi.set({0}, Element::basis(kmod, 1));
        Cochain w = prelie_coboundary(x.rep, phi); // a genuine 2-cocycle
        Json wj;
        wj["values"] = cochain_to_json(w)["values"];
        write(dir, "ext_cocycle.json", wj);

        ExtensionData xc = x;
        xc.omega = w;
        if (!check_extension_conditions(xc).ok()) {
            std::cerr << "ext_cocycle fixture is not a cocycle\n";
            return 1;
        }

        // crossed module: the kernel ideal inside the semidirect total
        SplitExtension s = build_extension(x);
        CrossedModuleData cm = crossed_from_ideal(s.total, s.kernel_indices);
        write(dir, "crossed_ideal.json", crossed_module_to_json(cm));
        write(dir, "twoalg_strict.json", twoalg_to_json(crossed_to_strict(cm)));

        // crossed extensions around the kernel ideal, with an inert top
        // coordinate w spanning ker(boundary)
        auto build_xd = [&](const Cochain& omega) {
            ExtensionData xx = x;
            xx.omega = omega;
            SplitExtension ss = build_extension(xx);
            CrossedModuleData icm = crossed_from_ideal(ss.total, ss.kernel_indices);
            std::vector<std::string> tn = icm.top->basis;
            tn.push_back("w");
            ModulePtr top2 = make_module(tri.module->ring, tn);
            size_t nk = icm.top->rank();
            CrossedModuleData cm2;
            cm2.base = icm.base;
            cm2.top = top2;
            cm2.top_product.assign(nk + 1, std::vector<Element>(nk + 1, Element::zero(top2)));
            cm2.boundary = LinearMap(top2, icm.base.module);
            for (size_t i = 0; i < icm.base.module->rank(); ++i)
                for (size_t k = 0; k < nk; ++k) cm2.boundary.m[i][k] = icm.boundary.m[i][k];
            cm2.rep.algebra = icm.base;
            cm2.rep.target = top2;
            for (size_t i = 0; i < icm.base.module->rank(); ++i) {
                LinearMap rho(top2, top2), mu(top2, top2);
                for (size_t a = 0; a < nk; ++a)
                    for (size_t b = 0; b < nk; ++b) {
                        rho.m[a][b] = icm.rep.rho[i].linear.m[a][b];
                        mu.m[a][b] = icm.rep.mu[i].m[a][b];
                    }
                cm2.rep.rho.emplace_back(rho, icm.rep.rho[i].symbol);
                cm2.rep.mu.push_back(mu);
            }
            CrossedExtensionData xd;
            xd.cm = cm2;
            xd.quotient = tri;
            xd.kernel_module = make_module(tri.module->ring, {"w"});
            xd.iota = LinearMap(xd.kernel_module, top2);
            xd.iota.m[nk][0] = Poly::one(tri.module->ring);
            xd.p = LinearMap(ss.total.module, tri.module);
            for (size_t i = 0; i < 2; ++i) xd.p.m[i][i] = Poly::one(tri.module->ring);
            xd.s = LinearMap(tri.module, ss.total.module);
            for (size_t i = 0; i < 2; ++i) xd.s.m[i][i] = Poly::one(tri.module->ring);
            xd.image_indices = ss.kernel_indices;
            ModulePtr nmod = make_module(tri.module->ring, kmod->basis);
            xd.sigma = LinearMap(nmod, top2);
            for (size_t k = 0; k < nk; ++k) xd.sigma.m[k][k] = Poly::one(tri.module->ring);
            return xd;
        };

        // fixture 1: semidirect total with a non-homomorphism section
        {
            CrossedExtensionData xd = build_xd(x.omega);
            LinearMap varphi(tri.module, xd.cm.top);
            varphi.m[0][1] = Poly::one(tri.module->ring);
            xd.s = xd.s + xd.cm.boundary.compose(varphi);
            if (!check_crossed_extension(xd).ok()) {
                std::cerr << "crossed extension fixture fails its checks\n";
                return 1;
            }
            write(dir, "crossed_ext.json", crossed_extension_to_json(xd));
        }

        // fixture 2: twisted total and a sigma shifted into ker(boundary);
        // the classifying 3-cocycle is nonzero here
        {
            Cochain phi2 = Cochain::zero(CochainKind::prelie, 1, tri.module, kmod);
            phi2.set({0}, Element::basis(kmod, 1));
            phi2.set({1}, Element::basis(kmod, 0));
            CrossedExtensionData xd = build_xd(prelie_coboundary(x.rep, phi2));
            size_t wrow = xd.cm.top->rank() - 1;
            xd.sigma.m[wrow][0] = Poly::one(tri.module->ring);
            xd.sigma.m[wrow][1] = Poly::one(tri.module->ring);
            if (!check_crossed_extension(xd).ok()) {
                std::cerr << "twisted crossed extension fixture fails its checks\n";
                return 1;
            }
            if (three_cocycle_from_extension(xd).is_zero()) {
                std::cerr << "twisted crossed extension fixture has a zero cocycle\n";
                return 1;
            }
            write(dir, "crossed_ext_twisted.json", crossed_extension_to_json(xd));
        }

        // skeletal two-algebra from the same representation with a coboundary 3-cocycle
        Cochain phi2 = Cochain::zero(CochainKind::prelie, 2, tri.module, kmod);
        phi2.set({0, 1}, Element::basis(kmod, 1));
        Cochain m3 = prelie_coboundary(x.rep, phi2);
        write(dir, "twoalg_skeletal.json", twoalg_to_json(triple_to_skeletal(tri, x.rep, m3)));
    }

    return 0;
}
