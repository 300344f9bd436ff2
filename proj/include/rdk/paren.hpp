#pragma once

#include <string>
#include <vector>

#include "rdk/stirling.hpp"
#include "rdk/trees.hpp"

namespace rdk {

// Parenthesis presentation: a string over '(', ')', '*'.
using ParenPres = std::string;
// Tuple of (1,1)-Dyck words written with parentheses, component 1 first.
using DyckTuple = std::vector<std::string>;

struct Token {
    char kind = '*';   // '(', ')' or '*'
    int node = 0;      // pre-order index of the enclosing pair, from 1
    int label = 0;     // star label, 0 for parentheses
};

// Type I: each pair numbers its own stars right to left 1..m.
std::vector<Token> labels_I(const ParenPres& pp);
// Type II: all stars numbered right to left 1..m, 1..m, ...
std::vector<Token> labels_II(const ParenPres& pp, int m);

ParenPres alpha_star(const StirlingPerm& pi);
StirlingPerm alpha_star_inverse(const ParenPres& pp, int b);

DyckTuple alpha_I(const ParenPres& pp, int m);
DyckTuple alpha_I(const StirlingPerm& pi);
DyckTuple alpha_II(const ParenPres& pp, int m);
DyckTuple alpha_II(const StirlingPerm& pi);

// Step sequence of a parenthesis word.
Seq paren_step_seq(const std::string& q);
std::string step_seq_paren(const Seq& u);

Seq beta(const DyckTuple& t);

// Largest k > i with u_j - u_i <= b(j - i - 1) for i < j <= k (0-based).
// Requires u_i = u_{i+1}.
int second_primitive_subsequence(const Seq& u, int i, int b);

DyckTuple gamma(const Seq& u, int m);
bool is_admissible(const DyckTuple& t);

// Tuples with u(a_1) <= ... <= u(a_m) componentwise.
std::vector<DyckTuple> chain_tuples(int m, int n);
std::vector<DyckTuple> admissible_tuples(int m, int n);

// Left parentheses go before the (s^N_i + 1)-th star with s^N = beta(t); the
// right parentheses are then forced. Throws InvalidObject on non-admissible t.
ParenPres paren_from_tuple(const DyckTuple& t);

Seq u_from_postorder(const DyckTuple& t);

// Snapshots of the label swaps turning alpha_II into alpha_I; the first entry
// is alpha_II and the last is alpha_I.
std::vector<DyckTuple> type_II_to_I(const StirlingPerm& pi);

struct YoungData {
    std::string interleaved;  // A(P)
    Seq lambda;               // rows of the diagram, longest first
    Seq circled;              // v(P): circled boxes per column, zeros dropped
    Seq transpose;            // conjugate of circled
};
YoungData interleave_and_circle(const DyckTuple& t);
// arm + leg + 1 of box (r, c), 0-based, in the partition lambda.
int hook_length(const Seq& lambda, int r, int c);

// Ceiling recursion p_i = ceil(u / i) for i = b..1; returns (p_1, ..., p_b).
std::vector<Seq> gamma_II(const Seq& u, int b);
// Each N becomes N^b, then E's pad to balance.
std::string enlarged_bar(const std::string& w, int b);
std::vector<std::string> bar_components(const std::string& w, int b);

// Rotation of size m at 0-based i: q_i = ')' and q_{i+1} = '(' are required.
std::string rotate_dyck(const std::string& q, int i, int m);
bool is_admissible_rotation(const std::string& q, int i, int m);
bool is_irreducible_rotation(const std::string& q, int i, int m);

// Rotation at the pair with pre-order label i, moving past a stars to its
// left. Throws PreconditionError when it does not apply.
bool paren_rotation_applies(const ParenPres& pp, int i, int a = 1);
ParenPres rotate_paren(const ParenPres& pp, int i, int a = 1);
DyckTuple rotate_tuple(const DyckTuple& t, const ParenPres& pp, int i, int a = 1);

}  // namespace rdk
