#ifndef MDTREES_ENUMERATE_HPP
#define MDTREES_ENUMERATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdtrees/bignum.hpp"
#include "mdtrees/tree.hpp"

namespace mdtrees {

// Exhaustive generation is intended for desk-scale cross-checking; the cap
// keeps accidental big runs from hanging a session and can be raised
// explicitly.  n = 7 means 17,297,280 ordered trees and 117,649 rooted
// unordered trees.
inline constexpr int kDefaultEnumerationCap = 7;

struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { O, Z, F, Decreasing, RootedUnordered };

Family family_from_name(const std::string& name);
std::string family_name(Family family);

using TreeVisitor = std::function<void(const OrderedTree&)>;
using ForestVisitor = std::function<void(const OrderedForest&)>;
using RootedTreeVisitor = std::function<void(const RootedUnorderedTree&)>;

/// Visits every ordered labeled tree on the given label set exactly once:
/// tree shapes in a fixed recursive order crossed with label permutations
/// in lexicographic order, labels filled in preorder.  Rejects an empty or
/// invalid label set.
void enumerate_ordered_trees(std::vector<int> labels, const TreeVisitor& visit);

/// Visits every decreasing ordered tree (each child label smaller than its
/// parent label) on the given label set exactly once.
void enumerate_decreasing_trees(std::vector<int> labels, const TreeVisitor& visit);

// Two independent generation strategies for the same family; tested to
// agree.  Filter scans all ordered trees; Direct builds decreasing trees
// and inserts the increasing leaves.
enum class ZMode { Direct, Filter };

/// Visits every tree on {0..n} whose non-decreasing vertices are all
/// leaves and whose decreasing part has k edges, exactly once.
void enumerate_z_trees(int n, int k, const TreeVisitor& visit, ZMode mode = ZMode::Direct,
                       int cap = kDefaultEnumerationCap);

/// Visits every forest on {1..n} of k ordered trees with unordered roots
/// (canonical ascending root order), exactly once.  Requires 1 <= k <= n.
void enumerate_forests(int n, int k, const ForestVisitor& visit,
                       int cap = kDefaultEnumerationCap);

/// Visits every rooted labeled unordered tree on {1..n} exactly once, in
/// canonical form; n^(n-1) trees in total.
void enumerate_rooted_unordered(int n, const RootedTreeVisitor& visit,
                                int cap = kDefaultEnumerationCap);

struct EnumerationReport {
    Family family = Family::O;
    int n = 0;
    std::map<int, BigNat> census;  // statistic value -> count
    BigNat total;
    double elapsed_ms = 0.0;
};

/// Census of all ordered trees on {0..n} by decreasing-subtree edge count.
EnumerationReport tabulate_o(int n, int cap = kDefaultEnumerationCap);

/// Census of the chosen family by its natural statistic (decreasing-part
/// edges for O and Z, improper edges for RootedUnordered, tree count for
/// F; the Decreasing census has the single key n).  An explicit k
/// restricts the census to that key.
EnumerationReport tabulate_family(Family family, int n, std::optional<int> k = std::nullopt,
                                  int cap = kDefaultEnumerationCap);

}  // namespace mdtrees

#endif
