#pragma once

// Brute-force reference implementations used by the tests. None of them call
// into the library.

#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// All N/E words with a*n N's and b*n E's whose prefixes satisfy b*#N >= a*#E,
// found by filtering every arrangement.
std::vector<std::string> dyck_words(int a, int b, int n);

// Number of lattice paths from (0,0) to (bn,an) weakly above y = ax/b, by
// dynamic programming over lattice points.
long long lattice_count(int a, int b, int n);

// binom((b+1)n, n) / (bn+1) in 64-bit arithmetic.
long long fuss_catalan(int b, int n);

// u_k = number of E's before the k-th N.
Seq step_seq(const std::string& w);

// Every multiset permutation of 1^b..n^b satisfying the Stirling condition,
// checked pairwise between copies.
std::vector<Seq> stirling_perms(int n, int b);

// prod_{k<n} (bk + 1).
long long stirling_count(int n, int b);

bool contains_312(const Seq& p);

// Inserts i^b after (g*u_i) symbols, on a plain vector.
Seq zeta(const Seq& u, int b, int g = 1);

// Step sequences of the family obtained from u by lowering one entry by 1.
std::vector<Seq> young_covers(int a, int b, const Seq& u);

// Conjugate partition.
Seq conjugate(const Seq& lambda);

}  // namespace oracle
