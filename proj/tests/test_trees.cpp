#include "bsf/errors.hpp"
#include "bsf/trees.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace bsf;

namespace {

// Parent array (node 0 is the root, preorder) of a tree encoding.
std::vector<int> parents_of(const std::string& enc) {
    std::vector<int> parent;
    std::vector<int> stack;
    for (char c : enc) {
        if (c == '(') {
            parent.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(static_cast<int>(parent.size()) - 1);
        } else {
            stack.pop_back();
        }
    }
    return parent;
}

// Distinct increasing labelled trees: labellings of the non-root nodes by 1..n-1 that
// increase away from the root, identified when they differ by an automorphism.
long count_increasing_labellings(const std::string& enc) {
    const auto parent = parents_of(enc);
    const int n = static_cast<int>(parent.size());
    std::vector<int> labels(n - 1);
    std::iota(labels.begin(), labels.end(), 1);
    std::set<std::string> distinct;
    do {
        bool ok = true;
        for (int v = 1; v < n && ok; ++v)
            if (parent[v] > 0 && labels[parent[v] - 1] >= labels[v - 1]) ok = false;
        if (!ok) continue;
        std::function<std::string(int)> canon = [&](int v) {
            std::vector<std::string> kids;
            for (int w = 1; w < n; ++w)
                if (parent[w] == v) kids.push_back(canon(w));
            std::sort(kids.begin(), kids.end());
            std::string s = std::to_string(v == 0 ? 0 : labels[v - 1]) + "[";
            for (auto& k : kids) s += k + ",";
            return s + "]";
        };
        distinct.insert(canon(0));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return static_cast<long>(distinct.size());
}

// Counts permutations of the non-root nodes that preserve the parent relation.
long count_automorphisms(const std::string& enc) {
    const auto parent = parents_of(enc);
    const int n = static_cast<int>(parent.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int v = 1; v < n && ok; ++v) ok = perm[parent[v]] == parent[perm[v]];
        count += ok;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return count;
}

long catalan(unsigned n) { return binomial(2 * n, n).convert_to<long>() / (n + 1); }

}  // namespace

TEST_CASE("plane tree encodings") {
    CHECK(PlaneTree::single_node().encoding() == "()");
    CHECK(PlaneTree::from_encoding("(()(()))").size() == 4);
    CHECK_THROWS_AS(PlaneTree::from_encoding("(()"), ValidationError);
    CHECK_THROWS_AS(PlaneTree::from_encoding("()()"), ValidationError);
    CHECK_THROWS_AS(PlaneTree::from_encoding(""), ValidationError);
    CHECK_THROWS_AS(PlaneTree::from_encoding("(x)"), ValidationError);

    const auto t = PlaneTree::from_encoding("(()(()))");
    CHECK(t.root_degree() == 2);
    CHECK(t.mirror().encoding() == "((())())");
    const auto subs = t.root_subtrees();
    CHECK(PlaneTree::graft(subs) == t);
}

TEST_CASE("plane tree counts are Catalan and ordered") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto trees = enumerate_plane_trees(n);
        CHECK(static_cast<long>(trees.size()) == catalan(n - 1));
        CHECK(std::is_sorted(trees.begin(), trees.end()));
        CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
        long visited = 0;
        for_each_plane_tree(n, [&](const PlaneTree&) { ++visited; });
        CHECK(visited == catalan(n - 1));
    }
    CHECK_THROWS_AS(enumerate_plane_trees(0), RangeError);
    CHECK_THROWS_AS(enumerate_plane_trees(9, 8), RangeError);
}

TEST_CASE("rooted shapes match deduplicated plane trees") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (unsigned n = 1; n <= 9; ++n) {
        std::set<RootedTreeShape> dedup;
        std::map<std::string, long> plane_count;
        for (const auto& t : enumerate_plane_trees(n)) {
            dedup.insert(shape_of(t));
            ++plane_count[shape_of(t).encoding()];
        }
        const auto shapes = enumerate_rooted_shapes(n);
        CHECK(shapes.size() == expected[n - 1]);
        CHECK(std::vector<RootedTreeShape>(dedup.begin(), dedup.end()) == shapes);
        Integer kappa_total = 0;
        for (const auto& s : shapes) {
            CHECK(kappa_count(s) == plane_count[s.encoding()]);
            kappa_total += kappa_count(s);
        }
        CHECK(kappa_total == catalan(n - 1));
    }
}

TEST_CASE("shape_of is idempotent and order invariant") {
    for (const auto& t : enumerate_plane_trees(7)) {
        const auto s = shape_of(t);
        CHECK(shape_of(s.canonical()) == s);
        CHECK(shape_of(t.mirror()) == s);
    }
}

TEST_CASE("statistics against brute-force oracles") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (const auto& s : enumerate_rooted_shapes(n)) {
            CAPTURE(s.encoding());
            CHECK(alpha_count(s) == count_increasing_labellings(s.encoding()));
            CHECK(symmetry_factor(s) == count_automorphisms(s.encoding()));
            CHECK(factorial(n) % tree_factorial(s) == 0);
        }
    }
}

TEST_CASE("statistics on small examples") {
    const auto cherry = shape_of(PlaneTree::from_encoding("(()())"));
    const auto path3 = shape_of(PlaneTree::from_encoding("((()))"));
    CHECK(tree_factorial(cherry) == 3);
    CHECK(tree_factorial(path3) == 6);
    CHECK(symmetry_factor(cherry) == 2);
    CHECK(alpha_count(cherry) == 1);
    CHECK(kappa_count(shape_of(PlaneTree::from_encoding("(()(()))"))) == 2);
    CHECK(labelled_weight(cherry) == Rational(1, 2));
    CHECK(elementary_differential(PlaneTree::from_encoding("(()()())"), SeriesSpec::geometric()) == 6);
    CHECK(omega_weight(PlaneTree::from_encoding("(()()())"), SeriesSpec::exponential()) == Rational(1, 6));
}
