// plrk: construct, verify, and transform (pre-)Lie-Rinehart structures
// with exact rational arithmetic.

#include "plrk/freeprelie.hpp"
#include "plrk/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

using namespace plrk;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

void emit_report(const Report& r, bool as_json) {
    if (as_json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        std::cout << r.str();
}

void emit_bundle(const Json& j, const Report& r, bool as_json) {
    if (!as_json) std::cout << r.str();
    std::cout << j.dump(2) << "\n";
}

int report_exit(const Report& r) { return r.ok() ? kExitPass : kExitFail; }

Report verify_dispatch(const Json& j) {
    std::string kind = file_kind(j);
    if (kind == "prelie_rinehart") return verify_prelie_rinehart(prelie_structure_from_json(j));
    if (kind == "lie_rinehart") return verify_lie_rinehart(lie_structure_from_json(j));
    if (kind == "representation") return check_representation(representation_from_json(j));
    if (kind == "cochain") {
        auto [rep, c] = cochain_with_rep_from_json(j);
        return cocycle_check(rep, c);
    }
    if (kind == "extension") return check_extension_conditions(extension_from_json(j));
    if (kind == "crossed_module") return verify_crossed_module(crossed_module_from_json(j));
    if (kind == "crossed_extension") return check_crossed_extension(crossed_extension_from_json(j));
    if (kind == "two_algebra") return verify_prelie2(twoalg_from_json(j));
    if (kind == "rmatrix_input") {
        RMatrixInput in = rmatrix_input_from_json(j);
        Report r = in.lie.verify();
        r.merge(in.action.check());
        r.add("cybe_residual_zero", cybe_residual(in.r).is_zero());
        return r;
    }
    throw error("unknown kind '" + kind + "'");
}

Json wedge3_json(const Wedge3& w) {
    Json a = Json::array();
    for (const auto& [idx, c] : w.coeffs) a.push_back(Json::array({idx[0], idx[1], idx[2], c.str()}));
    return a;
}

Json poisson_json(const PoissonData& p) {
    Json a = Json::array();
    for (size_t i = 0; i < p.ring->nvars(); ++i)
        for (size_t j = i + 1; j < p.ring->nvars(); ++j)
            if (!p.table[i][j].is_zero()) a.push_back(Json::array({i, j, p.table[i][j].str()}));
    return a;
}

int cmd_rmatrix(const std::string& input, const std::string& lie_path, const std::string& action_path,
                const std::string& rspec, bool as_json) {
    Json j;
    if (!input.empty()) {
        j = load_json_file(input);
    } else {
        if (lie_path.empty() || action_path.empty())
            throw error("rmatrix: need --input, or both --lie and --action");
        j["kind"] = "rmatrix_input";
        j["lie"] = load_json_file(lie_path);
        Json act = load_json_file(action_path);
        j["ring"] = act.at("ring");
        j["action"] = act.at("action");
        j["r"] = Json::array();
    }
    RMatrixInput in = rmatrix_input_from_json(j);
    if (!rspec.empty()) {
        // --r "r1,r2,r3": coefficients on the i<j pairs in row-major order
        std::vector<Rational> coeffs;
        std::string cur;
        for (char ch : rspec + ",") {
            if (ch == ',') {
                coeffs.push_back(Rational::parse(cur));
                cur.clear();
            } else
                cur.push_back(ch);
        }
        std::vector<std::tuple<size_t, size_t, Rational>> entries;
        size_t t = 0;
        for (size_t i = 0; i < in.lie.dim && t < coeffs.size(); ++i)
            for (size_t j = i + 1; j < in.lie.dim && t < coeffs.size(); ++j)
                entries.emplace_back(i, j, coeffs[t++]);
        if (t != coeffs.size()) throw error("--r has more coefficients than basis pairs");
        in.r = RMatrix::make(in.lie, entries);
    }
    Report pre = in.lie.verify();
    pre.merge(in.action.check());
    if (!pre.ok()) throw error("rmatrix: Lie algebra or action data is inconsistent");

    Wedge3 res = cybe_residual(in.r);
    PoissonData poisson = induced_poisson(in.r, in.action);
    PreLieRinehartData om = omega1_prelie(in.r, in.action);
    Report rep = verify_prelie_rinehart(om);
    Report full;
    full.add("cybe_residual_zero", res.is_zero(), res.is_zero() ? "" : res.str());
    full.merge(rep, "omega1.");

    Json out;
    out["cybe_residual"] = wedge3_json(res);
    out["cybe_zero"] = res.is_zero();
    out["poisson"] = poisson_json(poisson);
    out["omega1"] = structure_to_json(om);
    out["report"] = report_to_json(full);
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        emit_bundle(out, full, as_json);
    return report_exit(full);
}

int cmd_fuzz(uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    Report all;

    auto random_poly = [&](const RingPtr& ring, int max_deg) {
        std::uniform_int_distribution<int> coeff(-2, 2);
        Poly p = Poly::zero(ring);
        for (int t = 0; t < 2; ++t) {
            Expvec e(ring->nvars(), 0);
            int budget = max_deg;
            for (size_t v = 0; v < ring->nvars() && budget > 0; ++v) {
                std::uniform_int_distribution<int> pick(0, budget);
                e[v] = pick(rng);
                budget -= e[v];
            }
            p.add_term(e, Rational(coeff(rng)));
        }
        return p;
    };

    ActionData sl2act;
    {
        RingPtr ring = make_ring({"x1", "x2"});
        sl2act.flavor = ActionData::Flavor::lie;
        sl2act.dim = 3;
        sl2act.table = LieAlgebraFD::sl2().bracket;
        Poly x1 = Poly::variable(ring, 0), x2 = Poly::variable(ring, 1);
        sl2act.images = {VectorField(ring, {x1, -x2}), VectorField(ring, {Poly::zero(ring), x1}),
                         VectorField(ring, {x2, Poly::zero(ring)})};
    }

    // delta^2 = 0 on random cochains over D_2
    {
        RingPtr ring = make_ring({"x1", "x2"});
        PreLieRinehartData alg =
            coordinate_algebra(ring, {VectorField::partial(ring, 0), VectorField::partial(ring, 1)});
        Representation rep = lr_representation(alg);
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            Cochain c = Cochain::zero(CochainKind::prelie, 2, alg.module, alg.module);
            for (const auto& key : Cochain::keys(CochainKind::prelie, 2, 2)) {
                Element v(alg.module);
                for (size_t i = 0; i < 2; ++i) v.coeffs[i] = random_poly(alg.module->ring, 2);
                if (!v.is_zero()) c.set(key, v);
            }
            ok = prelie_coboundary(rep, prelie_coboundary(rep, c)).is_zero();
        }
        all.add("fuzz.delta_squared", ok);
    }

    // jacobi residual identity over random sl(2) r-matrices
    {
        const RingPtr& ring = sl2act.images[0].ring;
        std::uniform_int_distribution<int> c(-2, 2);
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            RMatrix r = RMatrix::make(LieAlgebraFD::sl2(),
                                      {{0, 1, Rational(c(rng))}, {0, 2, Rational(c(rng))}, {1, 2, Rational(c(rng))}});
            Poly a = random_poly(ring, 2), b = random_poly(ring, 2), cc = random_poly(ring, 2);
            ok = residual_identity_check(r, sl2act, a, b, cc).ok();
        }
        all.add("fuzz.jacobi_residual_identity", ok);
    }

    // flat dichotomy at random grid points
    {
        std::uniform_int_distribution<int> c(-2, 2);
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            int r1 = c(rng), r2 = c(rng), r3 = c(rng);
            RMatrix r = RMatrix::make(LieAlgebraFD::sl2(),
                                      {{0, 1, Rational(r1)}, {0, 2, Rational(r2)}, {1, 2, Rational(r3)}});
            bool flat = r3 * r3 - 4 * r1 * r2 == 0;
            PreLieRinehartData om = omega1_prelie(r, sl2act);
            ok = verify_prelie_rinehart(om).ok() == flat;
        }
        all.add("fuzz.flat_dichotomy", ok);
    }

    std::cout << all.str();
    return report_exit(all);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic kernel for (pre-)Lie-Rinehart algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string path, rspec;
    std::string alg_path, kernel_path, rep_path, cocycle_path, input_path;
    int max_degree = 2;
    uint64_t seed = 0;
    int samples = 25;

    auto* verify = app.add_subcommand("verify", "verify a structure file, exit 0/1");
    verify->add_option("path", path)->required();

    auto* rmatrix = app.add_subcommand("rmatrix", "CYBE residual, Poisson bracket and the Omega^1 structure");
    std::string lie_path, action_path;
    rmatrix->add_option("--input", input_path, "combined rmatrix_input JSON");
    rmatrix->add_option("--lie", lie_path, "Lie algebra structure constants JSON");
    rmatrix->add_option("--action", action_path, "action JSON with {ring, action}");
    rmatrix->add_option("--r", rspec, "the r coefficients on basis pairs, e.g. \"1,1,2\"");

    auto* delta = app.add_subcommand("delta", "coboundary of a cochain file");
    delta->add_option("path", path)->required();

    auto* cocycle = app.add_subcommand("cocycle-check", "is the cochain closed, exit 0/1");
    cocycle->add_option("path", path)->required();

    auto* cohomology = app.add_subcommand("cohomology", "exact cohomology dimensions (field case)");
    cohomology->add_option("path", path)->required();
    cohomology->add_option("--max-degree", max_degree);

    auto* extend = app.add_subcommand("extend", "build an abelian extension from a 2-cocycle");
    extend->add_option("--input", input_path, "extension JSON with quotient/kernel/rep/cocycle");
    extend->add_option("--algebra", alg_path);
    extend->add_option("--kernel", kernel_path);
    extend->add_option("--rep", rep_path);
    extend->add_option("--cocycle", cocycle_path);

    auto* crossed = app.add_subcommand("crossed", "crossed-module operations");
    std::string crossed_op;
    crossed->add_option("op", crossed_op, "verify | total | cocycle3")->required();
    crossed->add_option("path", path)->required();

    auto* twoalg = app.add_subcommand("twoalg", "2-algebra operations");
    twoalg->add_option("path", path)->required();
    bool to_crossed = false, from_crossed = false;
    twoalg->add_flag("--to-crossed", to_crossed);
    twoalg->add_flag("--from-crossed", from_crossed);

    auto* fuzz = app.add_subcommand("fuzz", "randomized property suites");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--samples", samples);

    for (auto* sc : {verify, rmatrix, delta, cocycle, cohomology, extend, crossed, twoalg, fuzz})
        sc->add_flag("--json", as_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            Report r = verify_dispatch(load_json_file(path));
            emit_report(r, as_json);
            return report_exit(r);
        }
        if (rmatrix->parsed()) return cmd_rmatrix(input_path, lie_path, action_path, rspec, as_json);
        if (delta->parsed()) {
            auto [rep, c] = cochain_with_rep_from_json(load_json_file(path));
            Cochain d = prelie_coboundary(rep, c);
            std::cout << cochain_with_rep_to_json(rep, d).dump(2) << "\n";
            return kExitPass;
        }
        if (cocycle->parsed()) {
            auto [rep, c] = cochain_with_rep_from_json(load_json_file(path));
            Report r = cocycle_check(rep, c);
            emit_report(r, as_json);
            return report_exit(r);
        }
        if (cohomology->parsed()) {
            Representation rep = representation_from_json(load_json_file(path));
            Report chk = check_representation(rep);
            if (!chk.ok()) {
                emit_report(chk, as_json);
                return kExitFail;
            }
            auto dims = cohomology_dims_field(rep, max_degree);
            Json out;
            out["dims"] = dims;
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        }
        if (extend->parsed()) {
            ExtensionData x;
            if (!input_path.empty()) {
                x = extension_from_json(load_json_file(input_path));
            } else {
                if (alg_path.empty() || kernel_path.empty() || rep_path.empty() || cocycle_path.empty())
                    throw error("extend: need --input or all of --algebra/--kernel/--rep/--cocycle");
                Json j;
                j["kind"] = "extension";
                j["quotient"] = load_json_file(alg_path);
                j["kernel"] = load_json_file(kernel_path);
                Json repj = load_json_file(rep_path);
                j["rho"] = repj.at("rho");
                j["mu"] = repj.at("mu");
                j["cocycle"] = load_json_file(cocycle_path).at("values");
                x = extension_from_json(j);
            }
            Report cond = check_extension_conditions(x);
            SplitExtension s = build_extension(x);
            Report ver = verify_prelie_rinehart(s.total);
            Report full;
            full.merge(cond);
            full.merge(ver, "total.");
            Json out;
            out["total"] = structure_to_json(s.total);
            out["report"] = report_to_json(full);
            if (as_json)
                std::cout << out.dump(2) << "\n";
            else
                emit_bundle(out, full, as_json);
            return report_exit(full);
        }
        if (crossed->parsed()) {
            Json j = load_json_file(path);
            if (crossed_op == "verify") {
                Report r = file_kind(j) == "crossed_extension" ? check_crossed_extension(crossed_extension_from_json(j))
                                                               : verify_crossed_module(crossed_module_from_json(j));
                emit_report(r, as_json);
                return report_exit(r);
            }
            if (crossed_op == "total") {
                CrossedModuleData cm = crossed_module_from_json(j);
                Report r = verify_crossed_module(cm);
                if (!r.ok()) {
                    emit_report(r, as_json);
                    return kExitFail;
                }
                PreLieRinehartData tot = total_algebra(cm);
                std::cout << structure_to_json(tot).dump(2) << "\n";
                return kExitPass;
            }
            if (crossed_op == "cocycle3") {
                CrossedExtensionData xd = crossed_extension_from_json(j);
                Report chk = check_crossed_extension(xd);
                if (!chk.ok()) {
                    emit_report(chk, as_json);
                    return kExitFail;
                }
                Cochain f = three_cocycle_from_extension(xd);
                Representation qrep = induced_quotient_rep(xd);
                std::cout << cochain_with_rep_to_json(qrep, f).dump(2) << "\n";
                return kExitPass;
            }
            throw error("crossed: unknown op '" + crossed_op + "'");
        }
        if (twoalg->parsed()) {
            if (to_crossed == from_crossed) throw error("twoalg: pass exactly one of --to-crossed/--from-crossed");
            if (to_crossed) {
                PreLie2Data x = twoalg_from_json(load_json_file(path));
                Report r = verify_prelie2(x);
                if (!r.ok() || !x.m3.is_zero()) {
                    r.add("strict", x.m3.is_zero());
                    emit_report(r, as_json);
                    return kExitFail;
                }
                std::cout << crossed_module_to_json(strict_to_crossed(x)).dump(2) << "\n";
                return kExitPass;
            }
            CrossedModuleData cm = crossed_module_from_json(load_json_file(path));
            Report r = verify_crossed_module(cm);
            if (!r.ok()) {
                emit_report(r, as_json);
                return kExitFail;
            }
            std::cout << twoalg_to_json(crossed_to_strict(cm)).dump(2) << "\n";
            return kExitPass;
        }
        if (fuzz->parsed()) {
            if (const char* env = std::getenv("PLRK_SEED")) seed = std::strtoull(env, nullptr, 10);
            return cmd_fuzz(seed, samples);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
