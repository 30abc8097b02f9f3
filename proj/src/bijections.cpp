#include "bsf/bijections.hpp"

#include "bsf/errors.hpp"

#include <functional>
#include <stdexcept>

namespace bsf {

DyckPath DyckPath::from_heights(std::vector<int> heights) {
    if (heights.empty() || heights.size() % 2 == 0)
        throw ValidationError("a Dyck path has 2k + 1 heights");
    if (heights.front() != 0 || heights.back() != 0) throw ValidationError("a Dyck path starts and ends at 0");
    for (std::size_t n = 1; n < heights.size(); ++n) {
        if (heights[n] < 0) throw ValidationError("Dyck path goes below 0 at index " + std::to_string(n));
        if (std::abs(heights[n] - heights[n - 1]) != 1)
            throw ValidationError("Dyck path step " + std::to_string(n) + " is not +-1");
    }
    return DyckPath(std::move(heights));
}

DyckPath DyckPath::parse(std::string_view steps) {
    std::vector<int> heights{0};
    for (char s : steps) {
        if (s != 'U' && s != 'D') throw ValidationError("Dyck word may contain only U and D");
        heights.push_back(heights.back() + (s == 'U' ? 1 : -1));
    }
    return from_heights(std::move(heights));
}

std::vector<unsigned> DyckPath::ascents() const {
    std::vector<unsigned> out;
    for (unsigned n = 1; n < heights_.size(); ++n)
        if (ascending(n)) out.push_back(n);
    return out;
}

std::vector<unsigned> DyckPath::descents() const {
    std::vector<unsigned> out;
    for (unsigned n = 1; n < heights_.size(); ++n)
        if (!ascending(n)) out.push_back(n);
    return out;
}

std::string DyckPath::to_string() const {
    std::string out;
    for (unsigned n = 1; n < heights_.size(); ++n) out += ascending(n) ? 'U' : 'D';
    return out;
}

NonCrossingInvolution NonCrossingInvolution::from_images(std::vector<unsigned> images) {
    const unsigned n = static_cast<unsigned>(images.size());
    if (n % 2 != 0) throw ValidationError("involution must act on an even number of points");
    for (unsigned i = 1; i <= n; ++i) {
        unsigned j = images[i - 1];
        if (j < 1 || j > n) throw ValidationError("involution image out of range");
        if (j == i) throw ValidationError("involution has fixed point " + std::to_string(i));
        if (images[j - 1] != i) throw ValidationError("map is not an involution at " + std::to_string(i));
    }
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            unsigned si = images[i - 1], sj = images[j - 1];
            if (i < si && j < sj && j < si && si < sj)
                throw ValidationError("involution has crossing pairs (" + std::to_string(i) + "," +
                                      std::to_string(si) + ") and (" + std::to_string(j) + "," +
                                      std::to_string(sj) + ")");
        }
    }
    return NonCrossingInvolution(std::move(images));
}

std::vector<unsigned> NonCrossingInvolution::openers() const {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= size(); ++i)
        if (i < images_[i - 1]) out.push_back(i);
    return out;
}

std::vector<EdgeCrossing> walk_crossings(const PlaneTree& t) {
    std::vector<EdgeCrossing> edges;
    unsigned step = 0;
    const std::string& enc = t.encoding();

    // Preorder index of the node opened at `pos` = number of '(' before it.
    std::vector<std::size_t> preorder(enc.size());
    std::size_t opened = 0;
    for (std::size_t i = 0; i < enc.size(); ++i)
        if (enc[i] == '(') preorder[i] = opened++;

    std::function<void(std::size_t, std::string_view)> visit = [&](std::size_t pos, std::string_view node) {
        auto children = child_encodings(node);
        std::vector<std::size_t> offsets;
        std::size_t offset = pos + 1;
        for (auto c : children) {
            offsets.push_back(offset);
            offset += c.size();
        }
        for (std::size_t i = children.size(); i-- > 0;) {
            EdgeCrossing e;
            e.parent = preorder[pos];
            e.child = preorder[offsets[i]];
            e.child_subtree_size = children[i].size() / 2;
            e.down_step = ++step;
            visit(offsets[i], children[i]);
            e.up_step = ++step;
            if (e.up_step != e.down_step + 2 * (e.child_subtree_size - 1) + 1)
                throw std::logic_error("contour walk violates s_w = s_v + 2(|t_w| - 1) + 1");
            edges.push_back(e);
        }
    };
    visit(0, enc);
    return edges;
}

DyckPath plane_tree_to_dyck(const PlaneTree& t) {
    std::vector<int> heights(2 * (t.size() - 1) + 1, 0);
    std::vector<bool> up(heights.size(), false);
    for (const auto& e : walk_crossings(t)) up[e.down_step] = true;
    for (std::size_t n = 1; n < heights.size(); ++n) heights[n] = heights[n - 1] + (up[n] ? 1 : -1);
    return DyckPath::from_heights(std::move(heights));
}

PlaneTree dyck_to_plane_tree(const DyckPath& c) {
    // children[v] is kept left to right; the walk meets children right to left,
    // so each newly discovered child goes in front.
    std::vector<std::vector<std::size_t>> children(1);
    std::vector<std::size_t> stack{0};
    for (unsigned n = 1; n <= 2 * c.semilength(); ++n) {
        if (c.ascending(n)) {
            const std::size_t node = children.size();
            children.emplace_back();
            auto& siblings = children[stack.back()];
            siblings.insert(siblings.begin(), node);
            stack.push_back(node);
        } else {
            stack.pop_back();
        }
    }
    std::function<std::string(std::size_t)> encode = [&](std::size_t v) {
        std::string out = "(";
        for (auto w : children[v]) out += encode(w);
        return out + ")";
    };
    return PlaneTree::from_encoding(encode(0));
}

NonCrossingInvolution dyck_to_involution(const DyckPath& c) {
    const auto& h = c.heights();
    const unsigned len = 2 * c.semilength();
    std::vector<unsigned> images(len, 0);
    for (unsigned n = 1; n <= len; ++n) {
        if (c.ascending(n)) continue;
        for (unsigned m = n; m >= 1; --m) {
            if (h[m - 1] == h[n] && h[m] == h[n - 1]) {
                images[n - 1] = m;
                images[m - 1] = n;
                break;
            }
        }
    }
    return NonCrossingInvolution::from_images(std::move(images));
}

NonCrossingInvolution tree_involution(const PlaneTree& t) {
    std::vector<unsigned> images(2 * (t.size() - 1), 0);
    for (const auto& e : walk_crossings(t)) {
        images[e.down_step - 1] = e.up_step;
        images[e.up_step - 1] = e.down_step;
    }
    return NonCrossingInvolution::from_images(std::move(images));
}

std::vector<DyckPath> enumerate_dyck_paths(unsigned k) {
    std::vector<DyckPath> out;
    std::string word(2 * k, 'U');
    std::function<void(std::size_t, unsigned, unsigned)> extend = [&](std::size_t pos, unsigned ups, unsigned height) {
        if (pos == word.size()) {
            out.push_back(DyckPath::parse(word));
            return;
        }
        if (ups < k) {
            word[pos] = 'U';
            extend(pos + 1, ups + 1, height + 1);
        }
        if (height > 0) {
            word[pos] = 'D';
            extend(pos + 1, ups, height - 1);
        }
    };
    extend(0, 0, 0);
    return out;
}

Rational involution_pair_weight(const NonCrossingInvolution& sigma, const CovarianceSpec& cov) {
    Rational w = 1;
    for (unsigned i : sigma.openers()) w *= cov.scaled(sigma(i) - i);
    return w;
}

VerificationReport verify_special_bare(unsigned max_size, const CovarianceSpec& cov, unsigned max_n) {
    VerificationReport report;
    report.statement = "B^r(t)/B^r_|t| = prod_{i in cr(sigma_t)} beta^2 r(sigma_t(i) - i)";
    report.parameters = {{"covariance", cov.describe()}, {"max_size", max_size}};
    report.order = max_size;

    // Only subtrees strictly below the root are weighted, so K = max_size - 1 suffices.
    const BareWeights weights = cov.bare_weights(max_size > 1 ? max_size - 1 : 0);
    unsigned long checked = 0;
    for (unsigned n = 1; n <= max_size; ++n) {
        for_each_plane_tree(
            n,
            [&](const PlaneTree& t) {
                Rational lhs = 1;
                for (const auto& sub : t.root_subtrees()) lhs *= bare_value(sub, weights);
                const Rational rhs = involution_pair_weight(tree_involution(t), cov);
                if (lhs != rhs) report.record_mismatch(n, lhs, rhs);
                ++checked;
            },
            max_n);
    }
    report.details["trees_checked"] = checked;
    return report;
}

}  // namespace bsf
