#pragma once

#include "bsf/covariance.hpp"
#include "bsf/rational.hpp"
#include "bsf/report.hpp"
#include "bsf/trees.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bsf {

/// Heights c_0..c_2k of a Dyck path. Step n (1-based) is (c_{n-1}, c_n).
class DyckPath {
public:
    /// Throws ValidationError unless c_0 = c_2k = 0, |c_n - c_{n-1}| = 1, c_n >= 0.
    static DyckPath from_heights(std::vector<int> heights);
    /// "UDUUDD" style; the empty string is the empty path.
    static DyckPath parse(std::string_view steps);

    const std::vector<int>& heights() const { return heights_; }
    unsigned semilength() const { return static_cast<unsigned>(heights_.size() / 2); }
    bool ascending(unsigned step) const { return heights_.at(step) > heights_.at(step - 1); }
    std::vector<unsigned> ascents() const;
    std::vector<unsigned> descents() const;
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    explicit DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {}
    std::vector<int> heights_;
};

/// Fixed-point-free, non-crossing involution of [2k], stored as 1-based images.
class NonCrossingInvolution {
public:
    /// Throws ValidationError unless the images form such an involution.
    static NonCrossingInvolution from_images(std::vector<unsigned> images);

    unsigned size() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned i) const { return images_.at(i - 1); }
    const std::vector<unsigned>& images() const { return images_; }
    /// cr(sigma): the i with i < sigma(i), increasing.
    std::vector<unsigned> openers() const;

    friend bool operator==(const NonCrossingInvolution&, const NonCrossingInvolution&) = default;

private:
    explicit NonCrossingInvolution(std::vector<unsigned> images) : images_(std::move(images)) {}
    std::vector<unsigned> images_;
};

/// One tree edge v -> w as seen by the contour walk: crossed downward at step
/// `down_step` and back upward at `up_step`.
struct EdgeCrossing {
    std::size_t parent = 0;  // preorder index
    std::size_t child = 0;   // preorder index
    std::size_t child_subtree_size = 0;
    unsigned down_step = 0;
    unsigned up_step = 0;
};

/// Contour walk visiting the children of every node from right to left. Each record
/// satisfies up_step = down_step + 2(|t_w| - 1) + 1; a violation is a std::logic_error.
std::vector<EdgeCrossing> walk_crossings(const PlaneTree& t);

/// Tree on k+1 nodes -> Dyck path of length 2k (down into a child is an ascent).
DyckPath plane_tree_to_dyck(const PlaneTree& t);
/// Inverse of plane_tree_to_dyck.
PlaneTree dyck_to_plane_tree(const DyckPath& c);
/// sigma(n) for a descent n is the greatest m <= n with (c_{m-1}, c_m) = (c_n, c_{n-1}).
NonCrossingInvolution dyck_to_involution(const DyckPath& c);
/// sigma_t, pairing the two crossing times of every edge.
NonCrossingInvolution tree_involution(const PlaneTree& t);

/// All Dyck paths of semilength k in lexicographic order of their U/D word (U < D).
std::vector<DyckPath> enumerate_dyck_paths(unsigned k);

/// prod over i in cr(sigma) of beta^2 r(sigma(i) - i).
Rational involution_pair_weight(const NonCrossingInvolution& sigma, const CovarianceSpec& cov);

/// B^r(t)/B^r_|t| against the involution product, for every plane tree with |t| <= max_size.
VerificationReport verify_special_bare(unsigned max_size, const CovarianceSpec& cov,
                                       unsigned max_n = default_max_tree_size());

}  // namespace bsf
