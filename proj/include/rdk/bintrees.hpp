#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdk/paths.hpp"

namespace rdk {

// Node 0 is the root; every other node v names the edge from its parent to v.
// left[v] / right[v] hold the child node or -1.
struct BinaryTree {
    std::vector<int> left{-1};
    std::vector<int> right{-1};

    int add_node();
    int edges() const { return static_cast<int>(left.size()) - 1; }
};

// Walk letters: '1' / '!' on the first / second visit of a left edge,
// '2' / '@' on the first / second visit of a right edge.
struct WalkStep {
    char letter;
    int edge;
};
std::vector<WalkStep> walk(const BinaryTree& t);
std::string omega(const BinaryTree& t);
// omega1 keeps the second visits of both edge kinds; omega2 keeps the second
// visit of left edges and the first visit of right edges. N for left, E for right.
std::string omega1(const BinaryTree& t);
std::string omega2(const BinaryTree& t);

// Structural equality up to node numbering.
bool same_shape(const BinaryTree& s, const BinaryTree& t);

// Tr(P): runs N^i E^j processed from the last one, each giving a right chain
// of j edges and a left chain of i edges at the current attachment node.
BinaryTree tr(const std::string& w);

// One rotation moving omega1 a single Young cover toward target (lowest
// differing index first). Throws PreconditionError if target is not above.
BinaryTree binary_rotation(const BinaryTree& t, const std::string& target);

// B(Q,P) for P <=_Y Q: omega1 = Q, omega2 = P.
BinaryTree build_BQP(const std::string& q, const std::string& p);

// Each left edge becomes left_parts left edges, each right edge right_parts
// right edges; extra_right right edges are appended below the root's right chain.
BinaryTree subdivide(const BinaryTree& t, int left_parts, int right_parts, int extra_right = 0);

// Post-order edge labels from 1 (left subtree, right subtree, then the edge).
std::vector<int> postorder_labels(const BinaryTree& t);

// Keeps the edges for which keep[edge] is set and contracts the rest, in walk
// order. Throws InvalidObject when the kept letters are not a tree contour.
BinaryTree extract_subtree(const BinaryTree& t, const std::vector<char>& keep);
// Component i (from 1) keeps the edges with post-order label = i mod r.
std::vector<BinaryTree> extract_subtrees(const BinaryTree& t, int r);

std::string sharp(const std::string& w);
DyckWord sharp(const DyckWord& p);

// d^(i)_j = every b-th letter of omega_i starting at letter b+1-j, j = 1..b.
std::pair<std::vector<std::string>, std::vector<std::string>> d_words(const BinaryTree& t, int b);
// B(P,P0) with left edges cut into b pieces and (a-1)bn right edges appended.
BinaryTree d_tree(const DyckWord& p);

struct Duality {
    // (omega1, omega2) of b_i and c_i, i = 1..a.
    std::vector<std::pair<std::string, std::string>> b;
    std::vector<std::pair<std::string, std::string>> c;
};
// b_i from B(P,P0) cut (b, a); c_i from B(P#, P0#) cut (a, b).
Duality duality(const DyckWord& p);

std::string binary_tree_to_dot(const BinaryTree& t);

}  // namespace rdk
