#include "mdtrees/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <type_traits>
#include <utility>

namespace mdtrees {

namespace {

// Non-owning callable reference; keeps the recursive continuation-passing
// helpers below from instantiating a new template chain per nesting level.
template <typename Sig>
class FnRef;

template <typename R, typename... Args>
class FnRef<R(Args...)> {
  public:
    template <typename F>
    FnRef(F&& f)  // NOLINT: implicit by design
        : object_(const_cast<void*>(static_cast<const void*>(&f))),
          call_([](void* object, Args... args) -> R {
              return (*static_cast<std::remove_reference_t<F>*>(object))(
                  std::forward<Args>(args)...);
          }) {}

    R operator()(Args... args) const { return call_(object_, std::forward<Args>(args)...); }

  private:
    void* object_;
    R (*call_)(void*, Args...);
};

using TreeEmit = FnRef<void(OrderedTree)>;
using SeqEmit = FnRef<void(std::vector<OrderedTree>)>;

void require_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    }
}

std::vector<int> prefix_labels(int n) {
    std::vector<int> labels(n + 1);
    std::iota(labels.begin(), labels.end(), 0);
    return labels;
}

std::vector<int> validated_label_set(std::vector<int> labels, const char* what) {
    if (labels.empty()) {
        throw std::invalid_argument(std::string(what) + ": label set must be nonempty");
    }
    std::sort(labels.begin(), labels.end());
    if (labels.front() < 0 ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw std::invalid_argument(std::string(what) +
                                    ": labels must be distinct nonnegative integers");
    }
    return labels;
}

// ---- ordered tree shapes ---------------------------------------------------
//
// Shape templates carry label 0 everywhere; there are Catalan-many per
// vertex count, so the lists stay tiny and only the shape-times-permutation
// product is streamed.

std::vector<std::vector<OrderedTree>> forest_shapes(int vertices);

std::vector<OrderedTree> shapes_with(int vertices) {
    std::vector<OrderedTree> out;
    for (auto& children : forest_shapes(vertices - 1)) {
        out.push_back(OrderedTree{0, std::move(children)});
    }
    return out;
}

std::vector<std::vector<OrderedTree>> forest_shapes(int vertices) {
    std::vector<std::vector<OrderedTree>> out;
    if (vertices == 0) {
        out.emplace_back();
        return out;
    }
    for (int first = 1; first <= vertices; ++first) {
        for (const auto& head : shapes_with(first)) {
            for (const auto& rest : forest_shapes(vertices - first)) {
                std::vector<OrderedTree> seq;
                seq.reserve(rest.size() + 1);
                seq.push_back(head);
                seq.insert(seq.end(), rest.begin(), rest.end());
                out.push_back(std::move(seq));
            }
        }
    }
    return out;
}

void fill_preorder(OrderedTree& t, const std::vector<int>& labels, std::size_t& next) {
    t.label = labels[next++];
    for (auto& c : t.children) {
        fill_preorder(c, labels, next);
    }
}

// ---- decreasing trees --------------------------------------------------------

void decreasing_on(const std::vector<int>& labels, TreeEmit emit);

// Ordered sequences of decreasing trees partitioning `labels`; the first
// tree takes each nonempty subset in ascending bitmask order.
void decreasing_forests_on(const std::vector<int>& labels, SeqEmit emit) {
    if (labels.empty()) {
        emit({});
        return;
    }
    const int m = static_cast<int>(labels.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> head_set, rest_set;
        for (int i = 0; i < m; ++i) {
            ((mask >> i) & 1u ? head_set : rest_set).push_back(labels[i]);
        }
        decreasing_on(head_set, [&](OrderedTree head) {
            decreasing_forests_on(rest_set, [&](std::vector<OrderedTree> seq) {
                std::vector<OrderedTree> children;
                children.reserve(seq.size() + 1);
                children.push_back(std::move(head));
                for (auto& t : seq) {
                    children.push_back(std::move(t));
                }
                emit(std::move(children));
            });
        });
    }
}

void decreasing_on(const std::vector<int>& labels, TreeEmit emit) {
    // The root dominates every descendant, so it is the maximum label.
    std::vector<int> rest(labels.begin(), labels.end() - 1);
    decreasing_forests_on(rest, [&](std::vector<OrderedTree> children) {
        emit(OrderedTree{labels.back(), std::move(children)});
    });
}

// ---- ordered trees with a prescribed root (for forests) ----------------------

void labeled_forests_on(const std::vector<int>& labels, SeqEmit emit);

void tree_with_root_on(int root, const std::vector<int>& rest, TreeEmit emit) {
    labeled_forests_on(rest, [&](std::vector<OrderedTree> children) {
        emit(OrderedTree{root, std::move(children)});
    });
}

void labeled_forests_on(const std::vector<int>& labels, SeqEmit emit) {
    if (labels.empty()) {
        emit({});
        return;
    }
    const int m = static_cast<int>(labels.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> head_set, rest_set;
        for (int i = 0; i < m; ++i) {
            ((mask >> i) & 1u ? head_set : rest_set).push_back(labels[i]);
        }
        for (std::size_t r = 0; r < head_set.size(); ++r) {
            std::vector<int> below = head_set;
            below.erase(below.begin() + static_cast<long>(r));
            tree_with_root_on(head_set[r], below, [&](OrderedTree head) {
                labeled_forests_on(rest_set, [&](std::vector<OrderedTree> seq) {
                    std::vector<OrderedTree> children;
                    children.reserve(seq.size() + 1);
                    children.push_back(std::move(head));
                    for (auto& t : seq) {
                        children.push_back(std::move(t));
                    }
                    emit(std::move(children));
                });
            });
        }
    }
}

// ---- k-subsets of {1..n} in lexicographic order -------------------------------

void for_each_combination(int n, int k, FnRef<void(const std::vector<int>&)> use) {
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 1);
    while (true) {
        use(combo);
        int i = k - 1;
        while (i >= 0 && combo[i] == n - (k - 1 - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++combo[i];
        for (int j = i + 1; j < k; ++j) {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

// ---- direct construction of the Z family --------------------------------------

// Inserts the labels of `rest` (ascending) one at a time as leaves under
// vertices of the original decreasing skeleton, at every child position.
// With the fixed insertion order every final tree arises exactly once:
// repeatedly removing the largest inserted leaf recovers the choices.
void insert_increasing_leaves(OrderedTree& tree, const std::set<int>& skeleton,
                              const std::vector<int>& rest, std::size_t idx,
                              const TreeVisitor& visit) {
    if (idx == rest.size()) {
        visit(tree);
        return;
    }
    const int leaf = rest[idx];
    auto descend = [&](auto&& self, OrderedTree& v) -> void {
        if (v.label < leaf) {
            for (std::size_t pos = 0; pos <= v.children.size(); ++pos) {
                v.children.insert(v.children.begin() + static_cast<long>(pos),
                                  OrderedTree{leaf, {}});
                insert_increasing_leaves(tree, skeleton, rest, idx + 1, visit);
                v.children.erase(v.children.begin() + static_cast<long>(pos));
            }
        }
        for (auto& c : v.children) {
            if (skeleton.count(c.label)) {
                self(self, c);
            }
        }
    };
    descend(descend, tree);
}

// ---- rooted unordered trees ----------------------------------------------------

struct RootedBuild {
    RootedUnorderedTree tree;
    int min_label;
};

RootedBuild build_rooted(int v, int parent, const std::vector<std::vector<int>>& adj) {
    RootedBuild out{RootedUnorderedTree{v, {}}, v};
    std::vector<RootedBuild> children;
    for (int u : adj[v]) {
        if (u != parent) {
            children.push_back(build_rooted(u, v, adj));
        }
    }
    std::sort(children.begin(), children.end(),
              [](const RootedBuild& a, const RootedBuild& b) { return a.min_label < b.min_label; });
    for (auto& c : children) {
        out.min_label = std::min(out.min_label, c.min_label);
        out.tree.children.push_back(std::move(c.tree));
    }
    return out;
}

// Standard decode: degree counting plus a growing leaf set.
std::vector<std::vector<int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n + 1, 1);
    for (int a : seq) {
        ++degree[a];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v) {
        if (degree[v] == 1) {
            leaves.insert(v);
        }
    }
    std::vector<std::vector<int>> adj(n + 1);
    for (int a : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        adj[leaf].push_back(a);
        adj[a].push_back(leaf);
        if (--degree[a] == 1) {
            leaves.insert(a);
        }
    }
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    adj[u].push_back(v);
    adj[v].push_back(u);
    return adj;
}

int md_edge_count_of(const OrderedTree& t) {
    return md_subtree(t).md_edge_count;
}

}  // namespace

Family family_from_name(const std::string& name) {
    if (name == "O") return Family::O;
    if (name == "Z") return Family::Z;
    if (name == "F") return Family::F;
    if (name == "Decreasing") return Family::Decreasing;
    if (name == "RootedUnordered") return Family::RootedUnordered;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::O: return "O";
        case Family::Z: return "Z";
        case Family::F: return "F";
        case Family::Decreasing: return "Decreasing";
        case Family::RootedUnordered: return "RootedUnordered";
    }
    throw std::logic_error("unreachable");
}

void enumerate_ordered_trees(std::vector<int> labels, const TreeVisitor& visit) {
    labels = validated_label_set(std::move(labels), "enumerate_ordered_trees");
    const auto shapes = shapes_with(static_cast<int>(labels.size()));
    for (const auto& shape : shapes) {
        std::vector<int> perm = labels;
        do {
            OrderedTree t = shape;
            std::size_t next = 0;
            fill_preorder(t, perm, next);
            visit(t);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

void enumerate_decreasing_trees(std::vector<int> labels, const TreeVisitor& visit) {
    labels = validated_label_set(std::move(labels), "enumerate_decreasing_trees");
    decreasing_on(labels, [&](OrderedTree t) { visit(t); });
}

void enumerate_z_trees(int n, int k, const TreeVisitor& visit, ZMode mode, int cap) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_z_trees: n must be nonnegative");
    }
    require_cap(n, cap, "enumerate_z_trees");
    if (k < 0 || k > n) {
        return;  // the family is empty there
    }
    if (mode == ZMode::Filter) {
        enumerate_ordered_trees(prefix_labels(n), [&](const OrderedTree& t) {
            if (z_shape_edge_count(t) == k) {
                visit(t);
            }
        });
        return;
    }
    // Vertex 0 can never be an increasing leaf, so it sits in every skeleton.
    for_each_combination(n, k, [&](const std::vector<int>& combo) {
        std::vector<int> skeleton_labels{0};
        skeleton_labels.insert(skeleton_labels.end(), combo.begin(), combo.end());
        std::set<int> skeleton(skeleton_labels.begin(), skeleton_labels.end());
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v) {
            if (!skeleton.count(v)) {
                rest.push_back(v);
            }
        }
        decreasing_on(skeleton_labels, [&](OrderedTree t) {
            insert_increasing_leaves(t, skeleton, rest, 0, visit);
        });
    });
}

void enumerate_forests(int n, int k, const ForestVisitor& visit, int cap) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("enumerate_forests: requires 1 <= k <= n");
    }
    require_cap(n, cap, "enumerate_forests");
    for_each_combination(n, k, [&](const std::vector<int>& roots) {
        std::set<int> root_set(roots.begin(), roots.end());
        std::vector<int> others;
        for (int v = 1; v <= n; ++v) {
            if (!root_set.count(v)) {
                others.push_back(v);
            }
        }
        // Every map from the remaining vertices to a tree index, as an
        // odometer; vertex order inside each part stays ascending.
        std::vector<int> owner(others.size(), 0);
        while (true) {
            std::vector<std::vector<int>> parts(k);
            for (std::size_t i = 0; i < others.size(); ++i) {
                parts[owner[i]].push_back(others[i]);
            }
            std::vector<OrderedTree> acc;
            auto emit_from = [&](auto&& self, std::size_t idx) -> void {
                if (idx == static_cast<std::size_t>(k)) {
                    visit(OrderedForest{acc});
                    return;
                }
                tree_with_root_on(roots[idx], parts[idx], [&](OrderedTree t) {
                    acc.push_back(std::move(t));
                    self(self, idx + 1);
                    acc.pop_back();
                });
            };
            emit_from(emit_from, 0);

            std::size_t pos = 0;
            while (pos < owner.size() && owner[pos] == k - 1) {
                owner[pos++] = 0;
            }
            if (pos == owner.size()) {
                break;
            }
            ++owner[pos];
        }
    });
}

void enumerate_rooted_unordered(int n, const RootedTreeVisitor& visit, int cap) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_rooted_unordered: n must be at least 1");
    }
    require_cap(n, cap, "enumerate_rooted_unordered");
    if (n == 1) {
        visit(RootedUnorderedTree{1, {}});
        return;
    }
    std::vector<int> seq(n - 2, 1);
    while (true) {
        const auto adj = prufer_decode(seq, n);
        for (int root = 1; root <= n; ++root) {
            visit(build_rooted(root, 0, adj).tree);
        }
        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == n) {
            seq[pos++] = 1;
        }
        if (pos == seq.size()) {
            break;
        }
        ++seq[pos];
    }
}

EnumerationReport tabulate_o(int n, int cap) {
    return tabulate_family(Family::O, n, std::nullopt, cap);
}

EnumerationReport tabulate_family(Family family, int n, std::optional<int> k, int cap) {
    if (n < 0) {
        throw std::invalid_argument("tabulate_family: n must be nonnegative");
    }
    require_cap(n, cap, "tabulate_family");
    const auto start = std::chrono::steady_clock::now();

    EnumerationReport report;
    report.family = family;
    report.n = n;
    auto record = [&](int key) {
        if (!k || *k == key) {
            report.census[key] += 1;
        }
    };

    switch (family) {
        case Family::O:
            enumerate_ordered_trees(prefix_labels(n),
                                    [&](const OrderedTree& t) { record(md_edge_count_of(t)); });
            break;
        case Family::Z:
            enumerate_ordered_trees(prefix_labels(n), [&](const OrderedTree& t) {
                if (auto edges = z_shape_edge_count(t)) {
                    record(*edges);
                }
            });
            break;
        case Family::F:
            for (int trees = 1; trees <= n; ++trees) {
                if (k && *k != trees) {
                    continue;
                }
                enumerate_forests(n, trees, [&](const OrderedForest&) { record(trees); }, cap);
            }
            break;
        case Family::Decreasing:
            enumerate_decreasing_trees(prefix_labels(n), [&](const OrderedTree&) { record(n); });
            break;
        case Family::RootedUnordered:
            enumerate_rooted_unordered(
                n, [&](const RootedUnorderedTree& t) { record(improper_edge_count(t)); }, cap);
            break;
    }

    for (const auto& [key, count] : report.census) {
        (void)key;
        report.total += count;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace mdtrees
