#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rdk/errors.hpp"
#include "rdk/orders.hpp"
#include "rdk/stirling.hpp"

using namespace rdk;

namespace {
StirlingPerm sp(const std::string& s, int b) { return parse_stirling(s, b); }
}  // namespace

TEST_CASE("zeta") {
    CHECK(to_string(zeta({0, 1, 4}, 2)) == "122133");
    CHECK(to_string(zeta({0}, 3)) == "111");
    CHECK(to_string(zeta({0, 0, 4, 2}, 3)) == "224442133311");
    CHECK(to_string(zeta({0, 1, 2, 4}, 3)) == "123344432211");
    CHECK_THROWS_AS(zeta({0, 4}, 2), PreconditionError);
    for (const Seq& u : enumerate_step_seqs(Slope(1, 3), 4)) CHECK(zeta(u, 3).entries() == oracle::zeta(u, 3));
}

TEST_CASE("zeta inverse") {
    CHECK(zeta_inverse(sp("122133", 2)) == Seq{0, 1, 4});
    CHECK(zeta_inverse(sp("111", 3)) == Seq{0});
    CHECK(zeta_inverse(sp("123344432211", 3)) == Seq{0, 1, 2, 4});
    for (const StirlingPerm& pi : enumerate_stirling(4, 2)) CHECK(zeta(zeta_inverse(pi), 2) == pi);
}

TEST_CASE("scaled zeta") {
    CHECK(to_string(zeta_g({0, 1, 1, 3}, 2, 3)) == "113332444221");
    CHECK(to_string(zeta_g({0, 0, 2, 1}, 2, 3)) == "224442133311");
    CHECK(zeta_g({0, 1, 4}, 1, 2) == zeta({0, 1, 4}, 2));
    CHECK(zeta_g({0, 2, 4}, boost::rational<long>(1, 2), 2) == zeta({0, 1, 2}, 2));
    CHECK_THROWS_AS(zeta_g({0, 1}, boost::rational<long>(1, 2), 2), PreconditionError);
    CHECK(zeta_g({0, 1, 1, 3}, 2, 3).entries() == oracle::zeta({0, 1, 1, 3}, 3, 2));
}

TEST_CASE("312 avoidance") {
    CHECK(avoids_312(sp("122133", 2).entries()));
    CHECK_FALSE(avoids_312(sp("133122", 2).entries()));
    CHECK(avoids_312(sp("111", 3).entries()));
    for (const StirlingPerm& pi : enumerate_stirling(3, 2)) CHECK(avoids_312(pi.entries()) != oracle::contains_312(pi.entries()));
}

TEST_CASE("Stirling validation") {
    CHECK(is_stirling(2, {1, 2, 2, 1}));
    CHECK_FALSE(is_stirling(2, {1, 2, 1, 2}));
    CHECK_FALSE(is_stirling(2, {1, 1, 2}));
    CHECK_THROWS_AS(sp("2112", 2), InvalidObject);
    CHECK(to_string(sp("1,1,2,2", 2)) == "1122");
}

TEST_CASE("Young covers via chi") {
    CHECK(to_string(young_cover_chi(sp("122133", 2), 0)) == "221133");
    CHECK(young_cover_chi(sp("122133", 2), 0) == zeta({0, 0, 4}, 2));
    // Lowering u_3 in (0,1,4) gives zeta((0,1,3),2) = 122331.
    CHECK(to_string(young_cover_chi(sp("122133", 2), 3)) == "122331");
    CHECK_THROWS_AS(young_cover_chi(sp("221133", 2), 0), PreconditionError);
    CHECK(chi_covers(zeta({0, 0, 0}, 2)).empty());
    for (const Seq& u : enumerate_step_seqs(Slope(1, 2), 4)) {
        std::set<StirlingPerm> want;
        for (const Seq& v : oracle::young_covers(1, 2, u)) want.insert(zeta(v, 2));
        const auto got = chi_covers(zeta(u, 2));
        CHECK(std::set<StirlingPerm>(got.begin(), got.end()) == want);
    }
}

TEST_CASE("rotation covers on Stirling permutations") {
    const StirlingPerm pi = sp("123344432211", 3);
    CHECK(rotation_cover_stirling(pi, 0) == zeta({0, 0, 1, 3}, 3));
    CHECK(rotation_cover_stirling(pi, 1) == zeta({0, 1, 1, 3}, 3));
    CHECK(rotation_cover_stirling(sp("122133", 2), 0) == zeta({0, 0, 4}, 2));
    CHECK(stirling_rotation_covers(zeta({0, 0, 0, 0}, 3)).empty());
    CHECK_THROWS_AS(rotation_cover_stirling(sp("221133", 2), 0), PreconditionError);
    std::set<StirlingPerm> want;
    for (const Seq& v : rotation_covers(Slope(1, 3), {0, 1, 2, 4})) want.insert(zeta(v, 3));
    const auto got = stirling_rotation_covers(pi);
    CHECK(std::set<StirlingPerm>(got.begin(), got.end()) == want);
}

TEST_CASE("Stirling enumeration") {
    CHECK(enumerate_stirling(3, 2).size() == 15);
    CHECK(enumerate_stirling(1, 4).size() == 1);
    CHECK(enumerate_stirling(2, 3).size() == 4);
    for (auto [n, b] : {std::pair{3, 2}, {2, 3}, {4, 1}, {3, 3}}) {
        std::vector<Seq> got;
        for (const StirlingPerm& pi : enumerate_stirling(n, b)) got.push_back(pi.entries());
        CHECK(got == oracle::stirling_perms(n, b));
        CHECK(static_cast<long long>(got.size()) == oracle::stirling_count(n, b));
    }
}

TEST_CASE("312-avoiders are the zeta images of (1,b)-paths") {
    for (auto [n, b] : {std::pair{3, 2}, {4, 2}, {3, 3}, {5, 1}}) {
        std::set<Seq> avoiders, images;
        for (const Seq& p : oracle::stirling_perms(n, b))
            if (!oracle::contains_312(p)) avoiders.insert(p);
        for (const Seq& u : enumerate_step_seqs(Slope(1, b), n)) images.insert(zeta(u, b).entries());
        CHECK(avoiders == images);
    }
}

TEST_CASE("serialization of large permutations") {
    const StirlingPerm pi = zeta(Seq(10, 0), 1);
    CHECK(to_string(pi) == "10,9,8,7,6,5,4,3,2,1");
    CHECK(parse_stirling(to_string(pi), 1) == pi);
    CHECK(to_string(sp("12", 1), true) == "1,2");
}
