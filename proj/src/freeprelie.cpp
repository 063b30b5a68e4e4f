#include "plrk/freeprelie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plrk {

size_t RootedTree::size() const {
    size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

void RootedTree::normalize() {
    for (auto& c : children) c.normalize();
    std::sort(children.begin(), children.end());
}

bool RootedTree::operator==(const RootedTree& o) const { return label == o.label && children == o.children; }

bool RootedTree::operator<(const RootedTree& o) const {
    size_t a = size(), b = o.size();
    if (a != b) return a < b;
    if (label != o.label) return label < o.label;
    return children < o.children;
}

std::string RootedTree::str() const {
    std::ostringstream os;
    os << static_cast<char>('a' + label);
    if (!children.empty()) {
        os << "(";
        for (size_t i = 0; i < children.size(); ++i) os << (i ? "," : "") << children[i].str();
        os << ")";
    }
    return os.str();
}

namespace {

RootedTree parse_tree(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] < 'a' || s[pos] > 'z') throw error("RootedTree::parse: expected label at " + std::to_string(pos));
    RootedTree t = RootedTree::leaf(s[pos] - 'a');
    ++pos;
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            t.children.push_back(parse_tree(s, pos));
            if (pos >= s.size()) throw error("RootedTree::parse: unterminated subtree list");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            throw error("RootedTree::parse: unexpected character");
        }
    }
    return t;
}

} // namespace

RootedTree RootedTree::parse(const std::string& text) {
    size_t pos = 0;
    RootedTree t = parse_tree(text, pos);
    if (pos != text.size()) throw error("RootedTree::parse: trailing characters");
    t.normalize();
    return t;
}

TreePoly TreePoly::of(const RootedTree& t, int bound) {
    TreePoly p = TreePoly::zero(bound);
    p.add(t, Rational(1));
    return p;
}

void TreePoly::add(const RootedTree& t, const Rational& c) {
    if (c.is_zero()) return;
    if (bound > 0 && t.size() > static_cast<size_t>(bound)) {
        overflow = true;
        return;
    }
    auto it = terms.find(t);
    if (it == terms.end())
        terms.emplace(t, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TreePoly TreePoly::operator+(const TreePoly& o) const {
    TreePoly r = *this;
    r.overflow = overflow || o.overflow;
    for (const auto& [t, c] : o.terms) r.add(t, c);
    return r;
}

TreePoly TreePoly::operator-(const TreePoly& o) const { return *this + o.scaled(Rational(-1)); }

TreePoly TreePoly::scaled(const Rational& c) const {
    TreePoly r = TreePoly::zero(bound);
    r.overflow = overflow;
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms) r.terms.emplace(t, k * c);
    return r;
}

bool TreePoly::operator==(const TreePoly& o) const { return terms == o.terms; }

bool TreePoly::is_zero() const { return terms.empty(); }

std::string TreePoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << t.str();
    }
    return os.str();
}

namespace {

// attach t1 as a new child at every node of t2
void graft_into(const RootedTree& t1, const RootedTree& t2, std::vector<RootedTree>& out) {
    RootedTree at_root = t2;
    at_root.children.push_back(t1);
    at_root.normalize();
    out.push_back(at_root);
    for (size_t i = 0; i < t2.children.size(); ++i) {
        std::vector<RootedTree> sub;
        graft_into(t1, t2.children[i], sub);
        for (auto& s : sub) {
            RootedTree copy = t2;
            copy.children[i] = std::move(s);
            copy.normalize();
            out.push_back(std::move(copy));
        }
    }
}

} // namespace

TreePoly graft(const RootedTree& t1, const RootedTree& t2, int bound) {
    TreePoly r = TreePoly::zero(bound);
    std::vector<RootedTree> pieces;
    graft_into(t1, t2, pieces);
    for (auto& p : pieces) r.add(p, Rational(1));
    return r;
}

TreePoly graft(const TreePoly& a, const TreePoly& b) {
    TreePoly r = TreePoly::zero(a.bound ? a.bound : b.bound);
    r.overflow = a.overflow || b.overflow;
    for (const auto& [t1, c1] : a.terms)
        for (const auto& [t2, c2] : b.terms) {
            TreePoly g = graft(t1, t2, r.bound);
            r.overflow = r.overflow || g.overflow;
            for (const auto& [t, c] : g.terms) r.add(t, c * c1 * c2);
        }
    return r;
}

std::vector<RootedTree> enumerate_trees(int generators, int max_nodes) {
    // by size: trees of size n = root label + multiset of subtrees totalling n-1
    std::vector<std::vector<RootedTree>> by_size(max_nodes + 1);
    for (int n = 1; n <= max_nodes; ++n) {
        std::vector<std::vector<RootedTree>> multisets;
        // multisets of trees with total size n-1, nondecreasing in canonical order
        std::function<void(int, const RootedTree*, std::vector<RootedTree>&)> rec =
            [&](int remaining, const RootedTree* min_tree, std::vector<RootedTree>& acc) {
                if (remaining == 0) {
                    multisets.push_back(acc);
                    return;
                }
                for (int s = 1; s <= remaining; ++s)
                    for (const auto& t : by_size[s]) {
                        if (min_tree && t < *min_tree) continue;
                        acc.push_back(t);
                        rec(remaining - s, &t, acc);
                        acc.pop_back();
                    }
            };
        std::vector<RootedTree> acc;
        rec(n - 1, nullptr, acc);
        for (int lab = 0; lab < generators; ++lab)
            for (const auto& ms : multisets) {
                RootedTree t;
                t.label = lab;
                t.children = ms;
                t.normalize();
                by_size[n].push_back(t);
            }
        std::sort(by_size[n].begin(), by_size[n].end());
        by_size[n].erase(std::unique(by_size[n].begin(), by_size[n].end(),
                                     [](const RootedTree& a, const RootedTree& b) { return a == b; }),
                         by_size[n].end());
    }
    std::vector<RootedTree> out;
    for (int n = 1; n <= max_nodes; ++n)
        for (const auto& t : by_size[n]) out.push_back(t);
    return out;
}

size_t basis_count(int generators, int n) {
    auto all = enumerate_trees(generators, n);
    size_t c = 0;
    for (const auto& t : all)
        if (t.size() == static_cast<size_t>(n)) ++c;
    return c;
}

TreePoly star_action(const std::vector<TreePoly>& word, const TreePoly& y) {
    TreePoly r = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = graft(*it, r);
    return r;
}

std::vector<VectorField> tree_action(const std::vector<VectorField>& phi, const std::vector<RootedTree>& trees) {
    if (phi.empty()) return {};
    const RingPtr& ring = phi[0].ring;
    std::map<RootedTree, VectorField> lam;
    size_t maxsize = 0;
    for (const auto& t : trees) maxsize = std::max(maxsize, t.size());
    std::vector<std::vector<RootedTree>> by_size(maxsize + 1);
    for (const auto& t : trees) {
        if (t.children.empty()) lam.emplace(t, phi.at(t.label));
        by_size[t.size()].push_back(t);
    }
    for (auto& v : by_size) std::sort(v.begin(), v.end());

    // The sub-adjacent Lie algebra of a free pre-Lie algebra is free as a Lie
    // algebra, so the action law pins lambda exactly on the span of brackets
    // of smaller trees; a complement gets lambda = 0. Solve size by size with
    // exact Gauss-Jordan elimination, carrying the commutator values along.
    for (size_t n = 2; n <= maxsize; ++n) {
        const auto& basis = by_size[n];
        if (basis.empty()) continue;
        std::map<RootedTree, size_t> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

        std::vector<std::pair<RootedTree, RootedTree>> pairs;
        for (size_t a = 1; a < n; ++a) {
            size_t b = n - a;
            if (b < a) break;
            for (const auto& s : by_size[a])
                for (const auto& t : by_size[b]) {
                    if (a == b && !(s < t)) continue;
                    pairs.emplace_back(s, t);
                }
        }

        std::vector<std::vector<Rational>> rows;   // reduced bracket coordinates
        std::vector<VectorField> values;           // matching commutators
        std::vector<size_t> pivots;
        for (const auto& [s, t] : pairs) {
            TreePoly diff = graft(s, t, 0) - graft(t, s, 0);
            std::vector<Rational> row(basis.size(), Rational(0));
            for (const auto& [u, c] : diff.terms) row[index.at(u)] = c;
            VectorField val = vf_commutator(lam.at(s), lam.at(t));
            // reduce against existing pivots
            for (size_t r = 0; r < rows.size(); ++r) {
                Rational f = row[pivots[r]];
                if (f.is_zero()) continue;
                for (size_t c = 0; c < basis.size(); ++c) row[c] -= f * rows[r][c];
                val = val - values[r].scaled(f);
            }
            size_t p = 0;
            while (p < basis.size() && row[p].is_zero()) ++p;
            if (p == basis.size()) {
                if (!val.is_zero()) throw error("tree_action: inconsistent bracket relation at size " + std::to_string(n));
                continue;
            }
            Rational inv = Rational(1) / row[p];
            for (auto& c : row) c *= inv;
            val = val.scaled(inv);
            // eliminate the new pivot from earlier rows
            for (size_t r = 0; r < rows.size(); ++r) {
                Rational f = rows[r][p];
                if (f.is_zero()) continue;
                for (size_t c = 0; c < basis.size(); ++c) rows[r][c] -= f * row[c];
                values[r] = values[r] - val.scaled(f);
            }
            rows.push_back(std::move(row));
            values.push_back(std::move(val));
            pivots.push_back(p);
        }

        // lambda = 0 off the pivot columns; on a pivot column p_r the reduced
        // row is e_{p_r} + (non-pivot tail), so lambda(basis[p_r]) = values[r]
        for (const auto& t : basis) lam.emplace(t, VectorField::zero(ring));
        for (size_t r = 0; r < rows.size(); ++r) lam[basis[pivots[r]]] = values[r];

        // the law holds on every in-bound pair by construction; recheck exactly
        for (const auto& [s, t] : pairs) {
            TreePoly diff = graft(s, t, 0) - graft(t, s, 0);
            VectorField got = VectorField::zero(ring);
            for (const auto& [u, c] : diff.terms) got = got + lam.at(u).scaled(c);
            if (!(got == vf_commutator(lam.at(s), lam.at(t))))
                throw error("tree_action: action law failed at size " + std::to_string(n));
        }
    }
    std::vector<VectorField> out;
    out.reserve(trees.size());
    for (const auto& t : trees) out.push_back(lam.at(t));
    return out;
}

Element interpret_tree(const PreLieRinehartData& target, const std::vector<Element>& generator_images,
                       const RootedTree& t) {
    if (t.children.empty()) return generator_images.at(t.label);
    RootedTree rest = t;
    RootedTree c1 = rest.children.front();
    rest.children.erase(rest.children.begin());
    rest.normalize();
    Element v = extend_product(target, interpret_tree(target, generator_images, c1),
                               interpret_tree(target, generator_images, rest));
    TreePoly lift = graft(c1, rest, 0);
    for (const auto& [u, c] : lift.terms) {
        if (u == t) continue;
        v = v - interpret_tree(target, generator_images, u).scaled(c);
    }
    return v;
}

FreePreLieRinehart free_prelie_rinehart(const RingPtr& ring, const std::vector<VectorField>& phi, int bound) {
    if (bound < 1 || bound > 5) throw error("free_prelie_rinehart: bound must be between 1 and 5");
    FreePreLieRinehart out;
    out.bound = bound;
    out.trees = enumerate_trees(static_cast<int>(phi.size()), bound);
    std::vector<std::string> names;
    for (const auto& t : out.trees) names.push_back(t.str());
    out.algebra = PreLieRinehartData::zero(make_module(ring, std::move(names)));
    std::vector<VectorField> lam = tree_action(phi, out.trees);
    std::map<RootedTree, size_t> index;
    for (size_t i = 0; i < out.trees.size(); ++i) index[out.trees[i]] = i;
    size_t n = out.trees.size();
    for (size_t i = 0; i < n; ++i) {
        out.algebra.anchor[i] = lam[i];
        for (size_t j = 0; j < n; ++j) {
            TreePoly g = graft(out.trees[i], out.trees[j], bound);
            Element e(out.algebra.module);
            for (const auto& [t, c] : g.terms) e.coeffs[index.at(t)] = Poly::constant(ring, c);
            out.algebra.product[i][j] = e;
        }
    }
    return out;
}

Report verify_truncated(const FreePreLieRinehart& f) {
    Report rep;
    size_t n = f.trees.size();
    size_t bound = static_cast<size_t>(f.bound);
    size_t skipped = 0;

    bool anchor_ok = true;
    std::string w1;
    for (size_t i = 0; i < n && anchor_ok; ++i)
        for (size_t j = i + 1; j < n && anchor_ok; ++j) {
            if (f.trees[i].size() + f.trees[j].size() > bound) {
                ++skipped;
                continue;
            }
            VectorField lhs = f.algebra.anchor_of(f.algebra.product[i][j] - f.algebra.product[j][i]);
            VectorField rhs = vf_commutator(f.algebra.anchor[i], f.algebra.anchor[j]);
            if (!(lhs == rhs)) {
                anchor_ok = false;
                w1 = "pair (" + f.trees[i].str() + ", " + f.trees[j].str() + ")";
            }
        }
    rep.add("truncated.anchor_law", anchor_ok, w1);

    bool assoc_ok = true;
    std::string w2;
    for (size_t i = 0; i < n && assoc_ok; ++i)
        for (size_t j = i + 1; j < n && assoc_ok; ++j)
            for (size_t k = 0; k < n && assoc_ok; ++k) {
                if (f.trees[i].size() + f.trees[j].size() + f.trees[k].size() > bound) {
                    ++skipped;
                    continue;
                }
                Element ei = Element::basis(f.algebra.module, i);
                Element ej = Element::basis(f.algebra.module, j);
                Element ek = Element::basis(f.algebra.module, k);
                Element d = associator(f.algebra, ei, ej, ek) - associator(f.algebra, ej, ei, ek);
                if (!d.is_zero()) {
                    assoc_ok = false;
                    w2 = "triple (" + f.trees[i].str() + ", " + f.trees[j].str() + ", " + f.trees[k].str() + ")";
                }
            }
    rep.add("truncated.associator_symmetry", assoc_ok, w2);
    rep.add("truncated.skipped=" + std::to_string(skipped), true);
    return rep;
}

} // namespace plrk
