#pragma once

#include "bsf/rational.hpp"
#include "bsf/series.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsf {

inline constexpr unsigned kDefaultMaxTreeSize = 14;

/// The enumeration cap: BSF_MAX_N from the environment when set and valid,
/// kDefaultMaxTreeSize otherwise.
unsigned default_max_tree_size();

/// Rooted plane tree, stored as its preorder balanced-parenthesis encoding:
/// a node is "(" followed by its children left to right, then ")".
/// The single-node tree is "()"; "(()(()))" is a root with a leaf and a path-2 child.
class PlaneTree {
public:
    /// Throws ValidationError unless `encoding` is one balanced, non-empty tree.
    static PlaneTree from_encoding(std::string_view encoding);
    static PlaneTree single_node();
    /// Grafts `children` left to right under a new root.
    static PlaneTree graft(std::span<const PlaneTree> children);

    const std::string& encoding() const { return encoding_; }
    std::size_t size() const { return encoding_.size() / 2; }
    std::vector<PlaneTree> root_subtrees() const;
    std::size_t root_degree() const;
    /// Reverses every child order.
    PlaneTree mirror() const;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
    friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
        return a.encoding_ <=> b.encoding_;
    }

private:
    explicit PlaneTree(std::string encoding) : encoding_(std::move(encoding)) {}
    std::string encoding_;
};

/// Unordered rooted tree. Children of every node are kept sorted by encoding, so
/// isomorphic trees share one encoding.
class RootedTreeShape {
public:
    const PlaneTree& canonical() const { return canonical_; }
    const std::string& encoding() const { return canonical_.encoding(); }
    std::size_t size() const { return canonical_.size(); }

    friend bool operator==(const RootedTreeShape&, const RootedTreeShape&) = default;
    friend std::strong_ordering operator<=>(const RootedTreeShape& a, const RootedTreeShape& b) {
        return a.canonical_ <=> b.canonical_;
    }

private:
    friend RootedTreeShape shape_of(const PlaneTree& t);
    explicit RootedTreeShape(PlaneTree canonical) : canonical_(std::move(canonical)) {}
    PlaneTree canonical_;
};

/// All plane trees on n nodes in lexicographic order of encoding; C_{n-1} of them.
std::vector<PlaneTree> enumerate_plane_trees(unsigned n, unsigned max_n = default_max_tree_size());
/// Same order as enumerate_plane_trees without materializing the list.
void for_each_plane_tree(unsigned n, const std::function<void(const PlaneTree&)>& visit,
                         unsigned max_n = default_max_tree_size());

/// Non-isomorphic rooted trees on n nodes, built from multisets of smaller shapes
/// (not by deduplicating plane trees). Sorted by encoding.
std::vector<RootedTreeShape> enumerate_rooted_shapes(unsigned n, unsigned max_n = default_max_tree_size());

RootedTreeShape shape_of(const PlaneTree& t);

/// t! = |t| * prod t_i!.
Integer tree_factorial(const PlaneTree& t);
inline Integer tree_factorial(const RootedTreeShape& t) { return tree_factorial(t.canonical()); }

/// Order of the automorphism group.
Integer symmetry_factor(const RootedTreeShape& t);
/// Number of increasing labellings, |t|!/(t! sigma(t)). Throws std::logic_error if inexact.
Integer alpha_count(const RootedTreeShape& t);
/// Number of plane trees of this shape.
Integer kappa_count(const RootedTreeShape& t);

/// omega(t) = prod_v psi_{d(v)}.
Rational omega_weight(const PlaneTree& t, const SeriesSpec& psi);
/// omega_L(t) = prod_v 1/d(v)!.
Rational labelled_weight(const PlaneTree& t);
inline Rational labelled_weight(const RootedTreeShape& t) { return labelled_weight(t.canonical()); }
/// delta_t = prod_v psi_{d(v)} d(v)! = omega/omega_L.
Rational elementary_differential(const PlaneTree& t, const SeriesSpec& psi);
inline Rational elementary_differential(const RootedTreeShape& t, const SeriesSpec& psi) {
    return elementary_differential(t.canonical(), psi);
}

/// Subtrees hanging from the root of an encoding, as views into it.
std::vector<std::string_view> child_encodings(std::string_view encoding);

}  // namespace bsf
