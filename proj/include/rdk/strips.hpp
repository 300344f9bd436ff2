#pragma once

#include <string>
#include <vector>

#include "rdk/stirling.hpp"

namespace rdk {

// Horizontal strips: heights repeated a times, dealt round-robin into b height
// sequences of (1,1)-paths of size an.
std::vector<Seq> delta(const DyckWord& p);
// Vertical strips: step entries repeated b times, dealt into a step sequences
// of (1,1)-paths of size bn.
std::vector<Seq> theta(const DyckWord& p);

// N -> N^b, E -> E^a.
std::string enlarge(const DyckWord& p);
// Component i (from 1) keeps letters i, r+i, 2r+i, ...
std::vector<std::string> interleave_extract(const std::string& w, int r);

enum class Reference { lowest, highest };

// u' = u(P0) - u(P) for the lowest path, u' = u(P) for the highest.
Seq u_prime(const DyckWord& p, Reference q);
std::vector<Seq> v_sequences(const DyckWord& p, Reference q);

// For i = n..1 take the (v_i + 1)-th smallest unused value.
// Throws PreconditionError if some v_i is too large.
Perm eta(const Seq& v);
Perm inverse_perm(const Perm& w);

StirlingPerm mu(const DyckWord& p, Reference q);

}  // namespace rdk
