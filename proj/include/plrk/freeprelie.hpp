#ifndef PLRK_FREEPRELIE_HPP
#define PLRK_FREEPRELIE_HPP

#include "plrk/structures.hpp"

#include <map>

namespace plrk {

// Rooted tree with generator-labelled nodes; children kept in canonical order,
// so equal trees have equal encodings regardless of construction order.
struct RootedTree {
    int label = 0;
    std::vector<RootedTree> children;

    static RootedTree leaf(int label) { return RootedTree{label, {}}; }

    size_t size() const;
    size_t root_degree() const { return children.size(); }
    void normalize(); // sort children recursively
    bool operator==(const RootedTree& o) const;
    bool operator<(const RootedTree& o) const; // graded, then structural

    // nested-parentheses text with letters a,b,... for generators: "a(b,a(b))"
    std::string str() const;
    static RootedTree parse(const std::string& text);
};

// Q-linear combination of trees, truncated at a node-count bound.
struct TreePoly {
    std::map<RootedTree, Rational> terms;
    int bound = 0;
    bool overflow = false; // some grafting result exceeded the bound and was dropped

    static TreePoly zero(int bound) { return TreePoly{{}, bound, false}; }
    static TreePoly of(const RootedTree& t, int bound);

    void add(const RootedTree& t, const Rational& c);
    TreePoly operator+(const TreePoly& o) const;
    TreePoly operator-(const TreePoly& o) const;
    TreePoly scaled(const Rational& c) const;
    bool operator==(const TreePoly& o) const;
    bool is_zero() const;
    std::string str() const;
};

// t1 . t2 = sum over nodes v of t2 of (t1 attached as a new child of v)
TreePoly graft(const RootedTree& t1, const RootedTree& t2, int bound);
TreePoly graft(const TreePoly& a, const TreePoly& b);

// number of canonical rooted trees with n nodes over g generator labels
size_t basis_count(int generators, int n);
std::vector<RootedTree> enumerate_trees(int generators, int max_nodes); // graded canonical order

// (x_1 (x) ... (x) x_n) * y = L_{x_1} ... L_{x_n} y
TreePoly star_action(const std::vector<TreePoly>& word, const TreePoly& y);

// The action lambda on trees extending phi on the generators, defined by the
// recursion lambda(B+_x(t1..tk)) = [lambda(t1), lambda(rest)] - corrections.
std::vector<VectorField> tree_action(const std::vector<VectorField>& phi, const std::vector<RootedTree>& trees);

// Interpret trees inside a pre-Lie-Rinehart algebra via the same recursion
// (the morphism pi out of the free object, on basis trees).
Element interpret_tree(const PreLieRinehartData& target, const std::vector<Element>& generator_images,
                       const RootedTree& t);

// Truncated free pre-Lie-Rinehart algebra: the transformation algebra of the
// tree action on the in-bound tree basis. Products that overflow the bound are
// truncated; the companion verifier skips the affected tuples.
struct FreePreLieRinehart {
    PreLieRinehartData algebra;
    std::vector<RootedTree> trees;
    int bound = 0;
};

FreePreLieRinehart free_prelie_rinehart(const RingPtr& ring, const std::vector<VectorField>& phi, int bound);

// anchor law + associator symmetry on all in-bound tuples; out-of-bound tuples
// are counted as skipped, not failed
Report verify_truncated(const FreePreLieRinehart& f);

} // namespace plrk

#endif
