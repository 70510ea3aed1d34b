#include "mdtrees/tree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

namespace mdtrees {

namespace {

void collect_labels(const OrderedTree& t, std::vector<int>& out) {
    out.push_back(t.label);
    for (const auto& c : t.children) {
        collect_labels(c, out);
    }
}

void collect_labels(const RootedUnorderedTree& t, std::vector<int>& out) {
    out.push_back(t.label);
    for (const auto& c : t.children) {
        collect_labels(c, out);
    }
}

bool distinct_nonneg(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    if (!labels.empty() && labels.front() < 0) {
        return false;
    }
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

void require_valid(const OrderedTree& t) {
    if (!has_distinct_labels(t)) {
        throw std::invalid_argument("tree labels must be distinct nonnegative integers");
    }
}

void walk_md(const OrderedTree& v, MdResult& r) {
    r.md_vertices.push_back(v.label);
    for (const auto& c : v.children) {
        if (c.label < v.label) {
            walk_md(c, r);
        } else {
            r.increasing_leaf_attachments.emplace_back(v.label, c.label);
        }
    }
}

// Builds the decreasing part (attachment children as bare leaves) and
// collects the subtrees hanging at the attachments.
OrderedTree build_z_part(const OrderedTree& v, std::vector<OrderedTree>& hanging) {
    OrderedTree out{v.label, {}};
    for (const auto& c : v.children) {
        if (c.label < v.label) {
            out.children.push_back(build_z_part(c, hanging));
        } else {
            out.children.push_back(OrderedTree{c.label, {}});
            hanging.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::vector<int> labels_of(const OrderedTree& t) {
    std::vector<int> out;
    collect_labels(t, out);
    return out;
}

std::vector<int> labels_of(const OrderedForest& f) {
    std::vector<int> out;
    for (const auto& t : f.trees) {
        collect_labels(t, out);
    }
    return out;
}

bool has_distinct_labels(const OrderedTree& t) {
    return distinct_nonneg(labels_of(t));
}

int require_prefix_labels(const OrderedTree& t) {
    std::vector<int> labels = labels_of(t);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != static_cast<int>(i)) {
            throw std::invalid_argument("label set must be exactly {0,...,n}");
        }
    }
    return static_cast<int>(labels.size()) - 1;
}

OrderedForest make_forest(std::vector<OrderedTree> trees) {
    std::sort(trees.begin(), trees.end(),
              [](const OrderedTree& a, const OrderedTree& b) { return a.label < b.label; });
    OrderedForest f{std::move(trees)};
    if (!distinct_nonneg(labels_of(f))) {
        throw std::invalid_argument("forest labels must be distinct nonnegative integers");
    }
    return f;
}

MdResult md_subtree(const OrderedTree& t) {
    require_valid(t);
    MdResult r;
    walk_md(t, r);
    r.md_edge_count = static_cast<int>(r.md_vertices.size()) - 1;
    std::sort(r.md_vertices.begin(), r.md_vertices.end());
    return r;
}

int classify_o(const OrderedTree& t) {
    require_prefix_labels(t);
    return md_subtree(t).md_edge_count;
}

std::optional<int> z_shape_edge_count(const OrderedTree& t) {
    require_valid(t);
    // Non-decreasing vertices must all be leaves of t; it suffices to look
    // at the attachment children, since anything deeper hangs below one.
    int md_vertices = 0;
    bool ok = true;
    auto scan = [&](auto&& self, const OrderedTree& v) -> void {
        ++md_vertices;
        for (const auto& c : v.children) {
            if (c.label < v.label) {
                self(self, c);
            } else if (!c.children.empty()) {
                ok = false;
            }
        }
    };
    scan(scan, t);
    if (!ok) {
        return std::nullopt;
    }
    return md_vertices - 1;
}

std::optional<int> is_z_tree(const OrderedTree& t) {
    require_prefix_labels(t);
    return z_shape_edge_count(t);
}

std::pair<OrderedTree, OrderedForest> split_md(const OrderedTree& t) {
    require_valid(t);
    std::vector<OrderedTree> hanging;
    OrderedTree z = build_z_part(t, hanging);
    return {std::move(z), make_forest(std::move(hanging))};
}

std::pair<OrderedTree, OrderedForest> decompose(const OrderedTree& t) {
    require_prefix_labels(t);
    return split_md(t);
}

OrderedTree graft(const OrderedTree& z_part, const OrderedForest& y_part) {
    if (!z_shape_edge_count(z_part).has_value()) {
        throw GraftError(GraftFault::ZShape,
                         "graft: first argument has a non-leaf vertex outside its decreasing subtree");
    }
    std::vector<int> y_labels = labels_of(y_part);
    if (!distinct_nonneg(y_labels)) {
        throw std::invalid_argument("forest labels must be distinct nonnegative integers");
    }

    std::map<int, const OrderedTree*> by_root;
    for (const auto& tree : y_part.trees) {
        by_root.emplace(tree.label, &tree);
    }
    std::set<int> attach_labels;
    for (const auto& [parent, child] : md_subtree(z_part).increasing_leaf_attachments) {
        (void)parent;
        attach_labels.insert(child);
    }
    std::set<int> roots;
    for (const auto& [root, tree] : by_root) {
        (void)tree;
        roots.insert(root);
    }
    if (roots != attach_labels) {
        throw GraftError(GraftFault::RootMismatch,
                         "graft: forest roots differ from the increasing leaves of the first argument");
    }

    std::set<int> z_labels_set;
    for (int l : labels_of(z_part)) {
        z_labels_set.insert(l);
    }
    std::set<int> overlap;
    for (int l : y_labels) {
        if (z_labels_set.count(l)) {
            overlap.insert(l);
        }
    }
    if (overlap != attach_labels) {
        throw GraftError(GraftFault::LabelOverlap,
                         "graft: label sets overlap outside the forest roots");
    }

    auto rebuild = [&](auto&& self, const OrderedTree& v) -> OrderedTree {
        OrderedTree out{v.label, {}};
        for (const auto& c : v.children) {
            if (c.label > v.label) {
                out.children.push_back(*by_root.at(c.label));
            } else {
                out.children.push_back(self(self, c));
            }
        }
        return out;
    };
    return rebuild(rebuild, z_part);
}

int improper_edge_count(const RootedUnorderedTree& t) {
    std::vector<int> labels;
    collect_labels(t, labels);
    if (!distinct_nonneg(labels)) {
        throw std::invalid_argument("tree labels must be distinct nonnegative integers");
    }
    int count = 0;
    auto min_below = [&](auto&& self, const RootedUnorderedTree& v) -> int {
        int mn = v.label;
        for (const auto& c : v.children) {
            int m = self(self, c);
            if (v.label > m) {
                ++count;
            }
            mn = std::min(mn, m);
        }
        return mn;
    };
    min_below(min_below, t);
    return count;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::set<int> seen;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool at_digit() {
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    int parse_label() {
        skip_ws();
        if (!at_digit()) {
            throw ParseError(pos, "expected label");
        }
        std::size_t start = pos;
        long long value = 0;
        while (at_digit()) {
            value = value * 10 + (text[pos] - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw ParseError(start, "label too large");
            }
            ++pos;
        }
        if (!seen.insert(static_cast<int>(value)).second) {
            throw ParseError(start, "duplicate label");
        }
        return static_cast<int>(value);
    }

    OrderedTree parse_node() {
        OrderedTree t;
        t.label = parse_label();
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            t.children.push_back(parse_node());
            skip_ws();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                t.children.push_back(parse_node());
                skip_ws();
            }
            if (pos >= text.size() || text[pos] != ')') {
                throw ParseError(pos, "expected ',' or ')'");
            }
            ++pos;
        }
        return t;
    }

    void expect_end() {
        skip_ws();
        if (pos != text.size()) {
            throw ParseError(pos, "unexpected trailing input");
        }
    }
};

void render(const OrderedTree& t, std::string& out) {
    out += std::to_string(t.label);
    if (!t.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            render(t.children[i], out);
        }
        out += ')';
    }
}

void render(const RootedUnorderedTree& t, std::string& out) {
    out += std::to_string(t.label);
    if (!t.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            render(t.children[i], out);
        }
        out += ')';
    }
}

}  // namespace

OrderedTree parse_tree(std::string_view text) {
    Parser p{text};
    OrderedTree t = p.parse_node();
    p.expect_end();
    return t;
}

std::string render_tree(const OrderedTree& t) {
    std::string out;
    render(t, out);
    return out;
}

OrderedForest parse_forest(std::string_view text) {
    Parser p{text};
    std::vector<OrderedTree> trees;
    trees.push_back(p.parse_node());
    p.skip_ws();
    while (p.pos < text.size() && text[p.pos] == ';') {
        ++p.pos;
        p.skip_ws();
        std::size_t root_pos = p.pos;
        trees.push_back(p.parse_node());
        if (trees[trees.size() - 2].label >= trees.back().label) {
            throw ParseError(root_pos, "forest roots must be strictly increasing");
        }
        p.skip_ws();
    }
    p.expect_end();
    return OrderedForest{std::move(trees)};
}

std::string render_forest(const OrderedForest& f) {
    std::string out;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        render(f.trees[i], out);
    }
    return out;
}

std::string render_tree(const RootedUnorderedTree& t) {
    std::string out;
    render(t, out);
    return out;
}

}  // namespace mdtrees
