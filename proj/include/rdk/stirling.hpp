#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "rdk/paths.hpp"

namespace rdk {

using Perm = std::vector<int>;

// Multiset permutation of 1^b ... n^b in which anything between two copies
// of i exceeds i.
class StirlingPerm {
public:
    StirlingPerm() = default;
    StirlingPerm(int b, Perm entries);

    int n() const { return n_; }
    int b() const { return b_; }
    const Perm& entries() const { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const StirlingPerm& o) const { return b_ == o.b_ && entries_ == o.entries_; }
    bool operator<(const StirlingPerm& o) const { return entries_ < o.entries_; }

private:
    int n_ = 0;
    int b_ = 1;
    Perm entries_;
};

bool is_stirling(int b, const Perm& p);

// Inserts i^b so that exactly u_i symbols precede it, for i = 1..n.
StirlingPerm zeta(const Seq& u, int b);
StirlingPerm zeta_g(const Seq& u, boost::rational<long> g, int b);
Seq zeta_inverse(const StirlingPerm& pi);

bool avoids_312(const Perm& p);

// Young cover at 0-based position i. Throws PreconditionError unless
// pi_i < pi_{i+1}.
StirlingPerm young_cover_chi(const StirlingPerm& pi, int i);
std::vector<StirlingPerm> chi_covers(const StirlingPerm& pi);

// Rotation at 0-based position i: pi_i jumps past the maximal run of larger
// values up to the last copy of that run's minimum. Throws PreconditionError
// unless pi_i < pi_{i+1}.
StirlingPerm rotation_cover_stirling(const StirlingPerm& pi, int i);
std::vector<StirlingPerm> stirling_rotation_covers(const StirlingPerm& pi);

std::vector<StirlingPerm> enumerate_stirling(int n, int b);

// Digits when every entry is below 10, comma-separated otherwise.
std::string to_string(const StirlingPerm& pi, bool force_commas = false);
Perm parse_perm(const std::string& text);
StirlingPerm parse_stirling(const std::string& text, int b);

}  // namespace rdk
