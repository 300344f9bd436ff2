#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdk/paths.hpp"

namespace rdk {

// Largest k >= i with a(u_j - u_i) < b(j - i) for all i < j <= k (0-based).
int primitive_subsequence(const Seq& u, int i, Slope s);

// Covers are returned as step sequences, sorted lexicographically.
std::vector<Seq> rotation_covers(Slope s, const Seq& u);
std::vector<Seq> rotation_covers(const DyckWord& p);
std::vector<Seq> rotation_covers_hor(const DyckWord& p, const DyckWord& p0);
std::vector<Seq> young_covers(const Seq& u);
std::vector<Seq> young_covers(const DyckWord& p);

// u(lower) >= u(upper) componentwise, i.e. lower <=_Y upper.
bool young_leq(const Seq& lower, const Seq& upper);

// Young chain from u down to target, always decrementing the lowest index
// where the two differ. Includes both ends. Throws PreconditionError when
// target is not above u.
std::vector<Seq> young_chain(const Seq& u, const Seq& target);

enum class OrderKind { young, rotation, rotation_hor };

struct Poset {
    Slope slope;
    int n = 0;
    std::vector<Seq> elements;                 // lexicographic
    std::vector<std::pair<int, int>> covers;   // (lower, upper) indices
};

Poset build_poset(Slope s, int n, OrderKind kind);

// Is upper reachable from lower through covers (reflexive)?
bool poset_leq(const Poset& p, int lower, int upper);

std::string poset_to_dot(const Poset& p);
std::string poset_to_json(const Poset& p);

}  // namespace rdk
