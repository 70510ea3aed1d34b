#ifndef MDTREES_TREE_HPP
#define MDTREES_TREE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdtrees {

/// Rooted tree with significant left-to-right child order and distinct
/// nonnegative integer labels.  Two trees differing only in sibling order
/// compare unequal.
struct OrderedTree {
    int label = 0;
    std::vector<OrderedTree> children;

    bool operator==(const OrderedTree&) const = default;
};

/// Sequence of ordered trees whose roots are semantically unordered.
/// Canonical form: root labels strictly increasing.  Build via make_forest
/// (or parse_forest) so the invariant holds.
struct OrderedForest {
    std::vector<OrderedTree> trees;

    bool operator==(const OrderedForest&) const = default;
};

/// Rooted labeled tree with unordered children, stored canonically:
/// children sorted by the minimum label in their subtree (ties impossible
/// with distinct labels), so structural equality is set-semantics equality.
struct RootedUnorderedTree {
    int label = 0;
    std::vector<RootedUnorderedTree> children;

    bool operator==(const RootedUnorderedTree&) const = default;
};

/// Result of extracting the maximal decreasing subtree: the vertex set
/// reachable from the root along all-decreasing edges, plus the edges that
/// leave it.
struct MdResult {
    std::vector<int> md_vertices;  // ascending
    int md_edge_count = 0;         // always md_vertices.size() - 1
    // (parent inside MD, child outside MD), in preorder traversal order.
    std::vector<std::pair<int, int>> increasing_leaf_attachments;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what_arg)
        : std::runtime_error(what_arg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

enum class GraftFault { ZShape, RootMismatch, LabelOverlap };

struct GraftError : std::invalid_argument {
    GraftError(GraftFault f, const std::string& what_arg)
        : std::invalid_argument(what_arg), fault(f) {}
    GraftFault fault;
};

// Labels in preorder.
std::vector<int> labels_of(const OrderedTree& t);
std::vector<int> labels_of(const OrderedForest& f);

bool has_distinct_labels(const OrderedTree& t);

// Throws std::invalid_argument unless the label set is exactly {0,...,n}.
// Returns n.
int require_prefix_labels(const OrderedTree& t);

// Sorts the given trees by root label; rejects duplicate labels.
OrderedForest make_forest(std::vector<OrderedTree> trees);

/// Maximal decreasing subtree: keeps descending from the root while the
/// child label is smaller than the parent label.  Rejects duplicate labels.
MdResult md_subtree(const OrderedTree& t);

/// Number of edges of the maximal decreasing subtree, i.e. the class index
/// of the tree in the census by decreasing-subtree size.  Requires label
/// set {0,...,n}.
int classify_o(const OrderedTree& t);

/// If every vertex outside the maximal decreasing subtree is a leaf of t
/// (it then hangs below its parent as an increasing leaf), returns the
/// decreasing edge count; otherwise nullopt.  Requires label set {0,...,n}.
std::optional<int> is_z_tree(const OrderedTree& t);

// Same shape test without the prefix-label requirement; used on split-off
// decreasing parts whose label sets are arbitrary.
std::optional<int> z_shape_edge_count(const OrderedTree& t);

/// Split a tree at its maximal decreasing subtree without any label-set
/// requirement beyond distinctness.  The first part is the decreasing
/// subtree with each attachment child kept as a bare leaf (sibling order
/// preserved); the second is the forest of full subtrees hanging at those
/// attachment children, roots in canonical order.
std::pair<OrderedTree, OrderedForest> split_md(const OrderedTree& t);

/// split_md with the label set validated to be exactly {0,...,n}.
std::pair<OrderedTree, OrderedForest> decompose(const OrderedTree& t);

/// Inverse of decompose: replaces each increasing leaf of z_part by the
/// y_part tree rooted at the same label.  Throws GraftError with a
/// distinguishing fault on precondition violations.
OrderedTree graft(const OrderedTree& z_part, const OrderedForest& y_part);

/// Number of edges (u,v), u nearer the root, whose upper label exceeds
/// some label in v's subtree.
int improper_edge_count(const RootedUnorderedTree& t);

// Text form: tree := label | label '(' tree (',' tree)* ')'.  Labels are
// decimal digit strings; ASCII whitespace between tokens is ignored.
// Forest form: trees joined by ';' with root labels strictly increasing.
OrderedTree parse_tree(std::string_view text);
std::string render_tree(const OrderedTree& t);
OrderedForest parse_forest(std::string_view text);
std::string render_forest(const OrderedForest& f);
std::string render_tree(const RootedUnorderedTree& t);

}  // namespace mdtrees

#endif
