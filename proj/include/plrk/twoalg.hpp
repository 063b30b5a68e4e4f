#ifndef PLRK_TWOALG_HPP
#define PLRK_TWOALG_HPP

#include "plrk/crossed.hpp"

namespace plrk {

// Pre-Lie-Rinehart 2-algebra on a two-term complex P1 --m1--> P0 with the
// degree-respecting products m2 and the coherence 3-map m3 (wedge^2 P0 (x) P0 -> P1).
struct PreLie2Data {
    ModulePtr p0, p1;
    LinearMap m1;                             // P1 -> P0
    std::vector<std::vector<Element>> m2_00;  // P0 x P0 -> P0
    std::vector<std::vector<Element>> m2_01;  // P0 x P1 -> P1
    std::vector<std::vector<Element>> m2_10;  // P1 x P0 -> P1
    Cochain m3;                               // prelie degree 3 table, source P0, target P1
    std::vector<VectorField> anchor;          // theta on P0

    Element m2_00_at(const Element& x, const Element& y) const; // anchor-twisted in the right slot
    Element m2_01_at(const Element& x, const Element& m) const; // anchor-twisted in the right slot
    Element m2_10_at(const Element& m, const Element& x) const; // A-bilinear
    Element m3_at(const Element& x, const Element& y, const Element& z) const;
    PreLieRinehartData degree0_algebra() const;

    static PreLie2Data empty(ModulePtr p0, ModulePtr p1);
};

struct Lie2Data {
    ModulePtr p0, p1;
    LinearMap l1;
    std::vector<std::vector<Element>> l2_00; // antisymmetric
    std::vector<std::vector<Element>> l2_01; // l2(x^0, y^1); l2(y^1, x^0) = -l2(x^0, y^1)
    std::map<std::vector<int>, Element> l3;  // strictly increasing triples in P0 -> P1
    std::vector<VectorField> anchor;

    Element l2_00_at(const Element& x, const Element& y) const;
    Element l2_01_at(const Element& x, const Element& m) const;
    Element l3_at(const Element& x, const Element& y, const Element& z) const;
};

Report verify_prelie2(const PreLie2Data& x);
Report verify_lie2(const Lie2Data& x);

// l2 = antisymmetrized m2, l3 = cyclic sum of m3.
Lie2Data sub_adjacent_2(const PreLie2Data& x);

// strict (m3 = 0) <-> crossed module
CrossedModuleData strict_to_crossed(const PreLie2Data& x);
PreLie2Data crossed_to_strict(const CrossedModuleData& cm);

// skeletal (m1 = 0) <-> (algebra, representation, 3-cocycle)
struct SkeletalTriple {
    PreLieRinehartData algebra;
    Representation rep;
    Cochain cocycle;
};
SkeletalTriple skeletal_to_triple(const PreLie2Data& x);
PreLie2Data triple_to_skeletal(const PreLieRinehartData& alg, const Representation& rep, const Cochain& m3);

bool twoalg_equal(const PreLie2Data& a, const PreLie2Data& b);

} // namespace plrk

#endif
