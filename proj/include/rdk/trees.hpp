#pragma once

#include <string>
#include <vector>

#include "rdk/stirling.hpp"

namespace rdk {

// Ordered rooted tree. Node 0 is the root; every other node v stands for the
// edge from its parent to v. Nodes are numbered in pre-order.
struct PlaneTree {
    std::vector<std::vector<int>> children;

    int edges() const { return static_cast<int>(children.size()) - 1; }
    bool operator==(const PlaneTree&) const = default;
};

// Accepts N/E or parenthesis words of a (1,1)-Dyck path.
PlaneTree dyck_to_plane_tree(const std::string& q);
std::string plane_tree_to_dyck(const PlaneTree& t);

// Edges labelled 1..n in pre-order, listed in post-order.
Perm postorder_word_of_identity_preorder(const std::string& q);
// Edges labelled 1..n in post-order, listed in pre-order.
Perm preorder_word_of_postorder_labels(const std::string& q);

// (b+1)-ary tree whose internal nodes carry the labels 1..n. children[v] has
// b+1 slots for v >= 1; a slot value of 0 is a leaf. children[0] is unused.
struct AryTree {
    int b = 1;
    int root = 0;
    std::vector<std::vector<int>> children;

    int n() const { return static_cast<int>(children.size()) - 1; }
    bool operator==(const AryTree&) const = default;
};

AryTree xi(const StirlingPerm& pi);
StirlingPerm xi_inverse(const AryTree& t);

struct Leaf {
    int node = 0;
    int slot = 0;
    bool operator==(const Leaf&) const = default;
};
// Leaves from left to right.
std::vector<Leaf> leaves(const AryTree& t);

// Rotation r_i on the subtree rooted at label i. Returns t unchanged when the
// rotation does not apply (left neighbour owned by a larger label, T_i in the
// first slot of its parent, or no leaf to its left).
AryTree tree_rotation(const AryTree& t, int i);
bool tree_rotation_applies(const AryTree& t, int i);

// '(' on entering a node, '*' between consecutive child slots, ')' on leaving.
std::string walk_word(const AryTree& t);
// Parses a walk word; throws InvalidObject on malformed input.
AryTree ary_tree_from_walk(const std::string& pp, int b);

std::string ary_tree_to_dot(const AryTree& t);
std::string plane_tree_to_dot(const PlaneTree& t);

}  // namespace rdk
