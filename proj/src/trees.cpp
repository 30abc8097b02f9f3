#include "bsf/trees.hpp"

#include "bsf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

namespace bsf {

namespace {

void check_size(unsigned n, unsigned max_n) {
    if (n == 0 || n > max_n)
        throw RangeError("tree size " + std::to_string(n) + " outside [1, " + std::to_string(max_n) + "]");
}

// Fills `inner` (length 2(n-1)) with every balanced word in lexicographic order, '(' < ')'.
void balanced_words(std::string& word, std::size_t pos, int open, int remaining_opens,
                    const std::function<void(const std::string&)>& visit) {
    if (pos == word.size()) {
        visit(word);
        return;
    }
    if (remaining_opens > 0) {
        word[pos] = '(';
        balanced_words(word, pos + 1, open + 1, remaining_opens - 1, visit);
    }
    if (open > 0) {
        word[pos] = ')';
        balanced_words(word, pos + 1, open - 1, remaining_opens, visit);
    }
}

std::string canonical_encoding(std::string_view encoding) {
    auto children = child_encodings(encoding);
    std::vector<std::string> sorted;
    sorted.reserve(children.size());
    for (auto c : children) sorted.push_back(canonical_encoding(c));
    std::sort(sorted.begin(), sorted.end());
    std::string out = "(";
    for (auto& c : sorted) out += c;
    out += ")";
    return out;
}

std::string mirrored_encoding(std::string_view encoding) {
    auto children = child_encodings(encoding);
    std::string out = "(";
    for (auto it = children.rbegin(); it != children.rend(); ++it) out += mirrored_encoding(*it);
    out += ")";
    return out;
}

Integer factorial_of(std::string_view encoding) {
    Integer f = static_cast<unsigned long>(encoding.size() / 2);
    for (auto c : child_encodings(encoding)) f *= factorial_of(c);
    return f;
}

// Runs of equal child encodings in a canonical encoding.
std::vector<std::pair<std::string_view, unsigned>> grouped_children(std::string_view canonical) {
    std::vector<std::pair<std::string_view, unsigned>> groups;
    for (auto c : child_encodings(canonical)) {
        if (!groups.empty() && groups.back().first == c)
            ++groups.back().second;
        else
            groups.emplace_back(c, 1u);
    }
    return groups;
}

Integer sigma_of(std::string_view canonical) {
    Integer s = 1;
    for (auto [child, mult] : grouped_children(canonical)) {
        s *= factorial(mult);
        Integer sc = sigma_of(child);
        for (unsigned i = 0; i < mult; ++i) s *= sc;
    }
    return s;
}

Integer kappa_of(std::string_view canonical) {
    const auto groups = grouped_children(canonical);
    unsigned total = 0;
    for (auto& g : groups) total += g.second;
    Integer k = factorial(total);
    for (auto [child, mult] : groups) {
        k /= factorial(mult);
        Integer kc = kappa_of(child);
        for (unsigned i = 0; i < mult; ++i) k *= kc;
    }
    return k;
}

template <class NodeFactor>
Rational product_over_nodes(std::string_view encoding, NodeFactor&& factor) {
    auto children = child_encodings(encoding);
    Rational w = factor(static_cast<unsigned>(children.size()));
    if (w == 0) return w;
    for (auto c : children) {
        w *= product_over_nodes(c, factor);
        if (w == 0) break;
    }
    return w;
}

}  // namespace

unsigned default_max_tree_size() {
    if (const char* env = std::getenv("BSF_MAX_N")) {
        std::string_view text(env);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return kDefaultMaxTreeSize;
}

std::vector<std::string_view> child_encodings(std::string_view encoding) {
    std::vector<std::string_view> children;
    std::size_t start = 1;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < encoding.size(); ++i) {
        depth += encoding[i] == '(' ? 1 : -1;
        if (depth == 0) {
            children.push_back(encoding.substr(start, i - start + 1));
            start = i + 1;
        }
    }
    return children;
}

PlaneTree PlaneTree::from_encoding(std::string_view encoding) {
    if (encoding.size() < 2 || encoding.size() % 2 != 0)
        throw ValidationError("tree encoding must be a non-empty balanced word: '" + std::string(encoding) + "'");
    int depth = 0;
    for (std::size_t i = 0; i < encoding.size(); ++i) {
        char c = encoding[i];
        if (c != '(' && c != ')')
            throw ValidationError("tree encoding may contain only '(' and ')': '" + std::string(encoding) + "'");
        depth += c == '(' ? 1 : -1;
        if (depth < 0 || (depth == 0 && i + 1 != encoding.size()))
            throw ValidationError("tree encoding is not a single balanced tree: '" + std::string(encoding) + "'");
    }
    if (depth != 0) throw ValidationError("unbalanced tree encoding: '" + std::string(encoding) + "'");
    return PlaneTree(std::string(encoding));
}

PlaneTree PlaneTree::single_node() { return PlaneTree("()"); }

PlaneTree PlaneTree::graft(std::span<const PlaneTree> children) {
    std::string enc = "(";
    for (auto& c : children) enc += c.encoding_;
    enc += ")";
    return PlaneTree(std::move(enc));
}

std::vector<PlaneTree> PlaneTree::root_subtrees() const {
    std::vector<PlaneTree> out;
    for (auto c : child_encodings(encoding_)) out.push_back(PlaneTree(std::string(c)));
    return out;
}

std::size_t PlaneTree::root_degree() const { return child_encodings(encoding_).size(); }

PlaneTree PlaneTree::mirror() const { return PlaneTree(mirrored_encoding(encoding_)); }

void for_each_plane_tree(unsigned n, const std::function<void(const PlaneTree&)>& visit, unsigned max_n) {
    check_size(n, max_n);
    std::string inner(2 * (n - 1), '(');
    balanced_words(inner, 0, 0, static_cast<int>(n - 1), [&](const std::string& word) {
        visit(PlaneTree::from_encoding("(" + word + ")"));
    });
}

std::vector<PlaneTree> enumerate_plane_trees(unsigned n, unsigned max_n) {
    std::vector<PlaneTree> out;
    for_each_plane_tree(n, [&](const PlaneTree& t) { out.push_back(t); }, max_n);
    return out;
}

std::vector<RootedTreeShape> enumerate_rooted_shapes(unsigned n, unsigned max_n) {
    check_size(n, max_n);
    // All shapes of size < n, sorted by encoding; a canonical child list is a
    // non-decreasing index sequence into this list.
    std::vector<std::vector<std::string>> by_size(n + 1);
    by_size[1] = {"()"};
    std::vector<std::pair<std::string, unsigned>> pool;

    std::function<void(std::size_t, unsigned, std::string&, std::vector<std::string>&)> extend =
        [&](std::size_t from, unsigned remaining, std::string& children, std::vector<std::string>& out) {
            if (remaining == 0) {
                out.push_back("(" + children + ")");
                return;
            }
            for (std::size_t i = from; i < pool.size(); ++i) {
                if (pool[i].second > remaining) continue;
                const std::size_t mark = children.size();
                children += pool[i].first;
                extend(i, remaining - pool[i].second, children, out);
                children.resize(mark);
            }
        };

    for (unsigned size = 2; size <= n; ++size) {
        pool.clear();
        for (unsigned s = 1; s < size; ++s)
            for (auto& e : by_size[s]) pool.emplace_back(e, s);
        std::sort(pool.begin(), pool.end());
        std::string children;
        extend(0, size - 1, children, by_size[size]);
        std::sort(by_size[size].begin(), by_size[size].end());
    }

    std::vector<RootedTreeShape> shapes;
    shapes.reserve(by_size[n].size());
    for (auto& e : by_size[n]) shapes.push_back(shape_of(PlaneTree::from_encoding(e)));
    return shapes;
}

RootedTreeShape shape_of(const PlaneTree& t) {
    return RootedTreeShape(PlaneTree::from_encoding(canonical_encoding(t.encoding())));
}

Integer tree_factorial(const PlaneTree& t) { return factorial_of(t.encoding()); }

Integer symmetry_factor(const RootedTreeShape& t) { return sigma_of(t.encoding()); }

Integer kappa_count(const RootedTreeShape& t) { return kappa_of(t.encoding()); }

Integer alpha_count(const RootedTreeShape& t) {
    const Integer denom = tree_factorial(t) * symmetry_factor(t);
    const Integer num = factorial(static_cast<unsigned>(t.size()));
    if (num % denom != 0)
        throw std::logic_error("|t|!/(t! sigma(t)) is not an integer for " + t.encoding());
    return num / denom;
}

Rational omega_weight(const PlaneTree& t, const SeriesSpec& psi) {
    return product_over_nodes(t.encoding(), [&](unsigned d) { return psi.coefficient(d); });
}

Rational labelled_weight(const PlaneTree& t) {
    return product_over_nodes(t.encoding(), [](unsigned d) { return Rational(Integer(1), factorial(d)); });
}

Rational elementary_differential(const PlaneTree& t, const SeriesSpec& psi) {
    return product_over_nodes(t.encoding(), [&](unsigned d) { return psi.coefficient(d) * Rational(factorial(d)); });
}

}  // namespace bsf
