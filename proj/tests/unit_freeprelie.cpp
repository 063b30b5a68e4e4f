#include "test_helpers.hpp"

#include "plrk/freeprelie.hpp"

#include <doctest.h>
#include <functional>

using namespace plrk;
using namespace plrk::testing;

namespace {

// independent count of rooted trees over g labels by the multiset recursion:
// a tree of size n is a root label plus a multiset of subtrees of total size n-1
size_t count_trees_oracle(int g, int n) {
    static std::map<std::pair<int, int>, size_t> tree_cnt;
    std::function<size_t(int, int)> trees;
    // ways(m, s): multisets of total size m from tree sizes <= s
    std::function<size_t(int, int)> ways = [&](int m, int s) -> size_t {
        if (m == 0) return 1;
        if (s == 0) return 0;
        size_t total = 0;
        size_t ts = trees(g, s);
        // k copies of size-s trees: multichoose(ts, k)
        for (int k = 0; k * s <= m; ++k) {
            // C(ts + k - 1, k)
            size_t mc = 1;
            for (int i = 0; i < k; ++i) mc = mc * (ts + k - 1 - i) / (i + 1);
            total += mc * ways(m - k * s, s - 1);
        }
        return total;
    };
    trees = [&](int gg, int nn) -> size_t {
        if (nn <= 0) return 0;
        auto key = std::make_pair(gg, nn);
        auto it = tree_cnt.find(key);
        if (it != tree_cnt.end()) return it->second;
        size_t r = static_cast<size_t>(gg) * ways(nn - 1, nn - 1);
        tree_cnt[key] = r;
        return r;
    };
    return trees(g, n);
}

} // namespace

TEST_CASE("tree canonical form and text round trip") {
    RootedTree t = RootedTree::parse("a(b,a(b))");
    CHECK(t.size() == 4);
    CHECK(t.str() == "a(b,a(b))");
    // order of children does not matter
    RootedTree u = RootedTree::parse("a(a(b),b)");
    CHECK(t == u);
    CHECK_THROWS_AS(RootedTree::parse("a(b"), error);
}

TEST_CASE("grafting examples") {
    RootedTree dot = RootedTree::leaf(0);
    // dot.dot = the 2-chain
    TreePoly p = graft(dot, dot, 5);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->first.str() == "a(a)");

    // dot.(2-chain) = 3-chain + cherry
    RootedTree chain2 = RootedTree::parse("a(a)");
    TreePoly q = graft(dot, chain2, 5);
    REQUIRE(q.terms.size() == 2);
    std::vector<std::string> got;
    for (const auto& [t, c] : q.terms) {
        CHECK(c == Rational(1));
        got.push_back(t.str());
    }
    CHECK(got == std::vector<std::string>{"a(a,a)", "a(a(a))"});
}

TEST_CASE("left pre-Lie: associator symmetric in the first two slots") {
    // all tree pairs/triples with total size <= 5, one generator
    auto all = enumerate_trees(1, 3);
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                if (x.size() + y.size() + z.size() > 5) continue;
                TreePoly xy = graft(x, y, 0);
                TreePoly yx = graft(y, x, 0);
                TreePoly a1 = graft(TreePoly::of(x, 0), graft(TreePoly::of(y, 0), TreePoly::of(z, 0))) -
                              graft(xy, TreePoly::of(z, 0));
                TreePoly a2 = graft(TreePoly::of(y, 0), graft(TreePoly::of(x, 0), TreePoly::of(z, 0))) -
                              graft(yx, TreePoly::of(z, 0));
                CHECK(a1 == a2);
            }
}

TEST_CASE("basis counts match the enumeration oracle") {
    std::vector<size_t> expect1 = {1, 1, 2, 4, 9, 20};
    for (int n = 1; n <= 6; ++n) {
        CHECK(basis_count(1, n) == expect1[n - 1]);
        CHECK(basis_count(1, n) == count_trees_oracle(1, n));
    }
    CHECK(basis_count(2, 1) == 2);
    CHECK(basis_count(2, 2) == 4);
    for (int n = 1; n <= 4; ++n) CHECK(basis_count(2, n) == count_trees_oracle(2, n));
    CHECK(basis_count(3, 1) == 3);
}

TEST_CASE("grafting is independent of input orderings") {
    // permuted encodings normalize to the same canonical tree
    RootedTree a = RootedTree::parse("a(a(a),a,b)");
    RootedTree b = RootedTree::parse("a(b,a,a(a))");
    CHECK(a == b);
    RootedTree dot = RootedTree::leaf(1);
    CHECK(graft(dot, a, 0) == graft(dot, b, 0));
    CHECK(graft(a, dot, 0) == graft(b, dot, 0));
}

TEST_CASE("star action: empty word, single L, composition") {
    TreePoly dot = TreePoly::of(RootedTree::leaf(0), 4);
    CHECK(star_action({}, dot) == dot);
    CHECK(star_action({dot}, dot) == graft(dot, dot));
    TreePoly lhs = star_action({dot, dot}, dot);
    TreePoly rhs = graft(dot, graft(dot, dot));
    CHECK(lhs == rhs);

    // module law: (u ++ v) * y = u * (v * y), also under truncation
    auto trees = enumerate_trees(2, 2);
    for (const auto& a : trees)
        for (const auto& b : trees)
            for (int bound : {0, 4}) {
                std::vector<TreePoly> u = {TreePoly::of(a, bound)};
                std::vector<TreePoly> v = {TreePoly::of(b, bound)};
                std::vector<TreePoly> uv = {TreePoly::of(a, bound), TreePoly::of(b, bound)};
                TreePoly y = TreePoly::of(RootedTree::leaf(0), bound);
                CHECK(star_action(uv, y) == star_action(u, star_action(v, y)));
            }
}

TEST_CASE("tree action extends phi and satisfies the action law in bound") {
    RingPtr r = ring1();
    // one generator: lambda vanishes beyond the leaf
    {
        auto trees = enumerate_trees(1, 4);
        auto lam = tree_action({VectorField::partial(r, 0)}, trees);
        for (size_t i = 0; i < trees.size(); ++i) {
            if (trees[i].size() == 1)
                CHECK(lam[i] == VectorField::partial(r, 0));
            else
                CHECK(lam[i].is_zero());
        }
    }
    // two commuting generators
    {
        RingPtr r2 = ring2();
        std::vector<VectorField> phi = {VectorField::partial(r2, 0), VectorField::partial(r2, 1)};
        auto trees = enumerate_trees(2, 3);
        auto lam = tree_action(phi, trees);
        std::map<RootedTree, size_t> idx;
        for (size_t i = 0; i < trees.size(); ++i) idx[trees[i]] = i;
        // lambda(s.t - t.s) = [lambda s, lambda t] whenever s.t stays in bound
        for (const auto& s : trees)
            for (const auto& t : trees) {
                if (s.size() + t.size() > 3) continue;
                TreePoly st = graft(s, t, 0);
                TreePoly ts = graft(t, s, 0);
                VectorField lhs = VectorField::zero(r2);
                for (const auto& [u, c] : st.terms) lhs = lhs + lam[idx.at(u)].scaled(c);
                for (const auto& [u, c] : ts.terms) lhs = lhs - lam[idx.at(u)].scaled(c);
                CHECK(lhs == vf_commutator(lam[idx.at(s)], lam[idx.at(t)]));
            }
    }
    // a non-commuting pair: phi1 = d, phi2 = x d on Q[x]
    {
        std::vector<VectorField> phi = {VectorField::partial(r, 0),
                                        VectorField(r, {Poly::variable(r, 0)})};
        auto trees = enumerate_trees(2, 3);
        auto lam = tree_action(phi, trees);
        std::map<RootedTree, size_t> idx;
        for (size_t i = 0; i < trees.size(); ++i) idx[trees[i]] = i;
        for (const auto& s : trees)
            for (const auto& t : trees) {
                if (s.size() + t.size() > 3) continue;
                TreePoly st = graft(s, t, 0);
                TreePoly ts = graft(t, s, 0);
                VectorField lhs = VectorField::zero(r);
                for (const auto& [u, c] : st.terms) lhs = lhs + lam[idx.at(u)].scaled(c);
                for (const auto& [u, c] : ts.terms) lhs = lhs - lam[idx.at(u)].scaled(c);
                CHECK(lhs == vf_commutator(lam[idx.at(s)], lam[idx.at(t)]));
            }
    }
}

TEST_CASE("free pre-Lie-Rinehart algebra: truncation-aware verification") {
    RingPtr r = ring1();
    // phi = (0): pre-Lie A-algebra with zero anchor, product = grafting
    {
        FreePreLieRinehart f = free_prelie_rinehart(r, {VectorField::zero(r)}, 3);
        CHECK(verify_truncated(f).ok());
        for (const auto& v : f.algebra.anchor) CHECK(v.is_zero());
        // basis is the 1+1+2 = 4 trees of size <= 3
        CHECK(f.trees.size() == 4);
    }
    // phi = (d/dx), bound 3
    {
        FreePreLieRinehart f = free_prelie_rinehart(r, {VectorField::partial(r, 0)}, 3);
        CHECK(verify_truncated(f).ok());
    }
    // two noncommuting generators, bound 3
    {
        std::vector<VectorField> phi = {VectorField::partial(r, 0), VectorField(r, {Poly::variable(r, 0)})};
        FreePreLieRinehart f = free_prelie_rinehart(r, phi, 3);
        CHECK(verify_truncated(f).ok());
    }
}

TEST_CASE("interpretation morphism onto D_1 for bound-2 words") {
    RingPtr r = ring1();
    PreLieRinehartData d1 = dn_algebra(1);
    Element e = Element::basis(d1.module, 0);
    // pi(a (x) (u, X)) = a (u * sigma(X)); on trees this is the interpretation map
    auto trees = enumerate_trees(1, 2);
    // homomorphism property on in-bound pairs
    for (const auto& s : trees)
        for (const auto& t : trees) {
            if (s.size() + t.size() > 2) continue;
            TreePoly st = graft(s, t, 0);
            Element lhs(d1.module);
            for (const auto& [u, c] : st.terms) lhs += interpret_tree(d1, {e}, u).scaled(c);
            Element rhs = extend_product(d1, interpret_tree(d1, {e}, s), interpret_tree(d1, {e}, t));
            CHECK(lhs == rhs);
        }
    // surjectivity on generators: pi(a (x) leaf) = a.d sweeps D_1
    CHECK(interpret_tree(d1, {e}, RootedTree::leaf(0)) == e);
    // the anchor of the free object matches through pi: lambda(t) = theta(pi(t))
    FreePreLieRinehart f = free_prelie_rinehart(r, {d1.anchor[0]}, 2);
    for (size_t i = 0; i < f.trees.size(); ++i)
        CHECK(f.algebra.anchor[i] == d1.anchor_of(interpret_tree(d1, {e}, f.trees[i])));
}

TEST_CASE("interpretation is a pre-Lie morphism for deeper trees and images") {
    RingPtr r = ring1();
    PreLieRinehartData d1 = dn_algebra(1);
    Poly x = Poly::variable(r, 0);
    Element gen = Element::basis(d1.module, 0).scaled(x * x); // x^2 d as the generator image
    auto trees = enumerate_trees(1, 3);
    for (const auto& s : trees)
        for (const auto& t : trees) {
            if (s.size() + t.size() > 3) continue;
            TreePoly st = graft(s, t, 0);
            Element lhs(d1.module);
            for (const auto& [u, c] : st.terms) lhs += interpret_tree(d1, {gen}, u).scaled(c);
            Element rhs = extend_product(d1, interpret_tree(d1, {gen}, s), interpret_tree(d1, {gen}, t));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("graft truncation sets the overflow flag") {
    RootedTree c2 = RootedTree::parse("a(a)");
    TreePoly p = graft(c2, c2, 3);
    CHECK(p.overflow);
    CHECK(p.terms.empty());
}
