// Acceptance run: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rdk/bintrees.hpp"
#include "rdk/orders.hpp"
#include "rdk/paren.hpp"
#include "rdk/paths.hpp"
#include "rdk/stirling.hpp"
#include "rdk/strips.hpp"
#include "rdk/trees.hpp"
#include "rdk/verify.hpp"

using namespace rdk;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-time limits in seconds.
constexpr double limit_counting = 1.0;
constexpr double limit_rotation = 30.0;
constexpr double limit_strips = 60.0;
constexpr double limit_suite = 300.0;
constexpr double limit_default = 60.0;

struct Outcome {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void absorb(const Report& r) {
        if (r.passed()) return;
        std::string s = r.check + " [" + r.grid + "]: " + std::to_string(r.failure_count) + "/" +
                        std::to_string(r.instances) + " failing";
        if (!r.failures.empty()) s += ", e.g. " + r.failures.front();
        problems.push_back(s);
    }
};

Report check_on(const std::string& name, const Grid& g) { return run_check(*find_check(name), g); }

Report check_family(const std::string& name, int a, int b, int n) {
    Grid g;
    g.only = Family{Slope(a, b), n};
    return check_on(name, g);
}

Report check_grid(const std::string& name, int max_size) {
    Grid g;
    g.max_size = max_size;
    return check_on(name, g);
}

std::vector<Seq> tuple_steps(const DyckTuple& t) {
    std::vector<Seq> out;
    for (const std::string& q : t) out.push_back(paren_step_seq(q));
    return out;
}

void criterion_counting(Outcome& o) {
    for (int b = 1; b <= 3; ++b)
        for (int n = 1; n <= 5; ++n) {
            const auto count = static_cast<long long>(enumerate_paths(Slope(1, b), n).size());
            const std::string tag = "(1," + std::to_string(b) + "," + std::to_string(n) + ")";
            o.expect(BigInt(count) == fuss_catalan(b, n), tag + " count differs from the formula");
            o.expect(count == oracle::lattice_count(1, b, n), tag + " count differs from the lattice DP");
            o.expect(count == oracle::fuss_catalan(b, n), tag + " count differs from the binomial oracle");
        }
    o.expect(enumerate_paths(Slope(1, 2), 3).size() == 12, "(1,2,3) is not 12");
    o.expect(enumerate_paths(Slope(1, 1), 4).size() == 14, "(1,1,4) is not 14");
}

void criterion_golden_path(Outcome& o) {
    const DyckWord p(Slope(2, 3), 2, "NENENEENEE");
    o.expect(seq_to_string(word_to_step_seq(p)) == "0,1,2,4", "step sequence");
    o.expect(seq_to_string(word_to_height_seq(p)) == "1,2,3,3,4,4", "height sequence");
    std::vector<std::string> d, t;
    for (const Seq& h : delta(p)) d.push_back(seq_to_string(h));
    for (const Seq& u : theta(p)) t.push_back(seq_to_string(u));
    o.expect(d == std::vector<std::string>{"1,2,3,4", "1,3,3,4", "2,3,4,4"}, "delta");
    o.expect(t == std::vector<std::string>{"0,0,1,2,2,4", "0,1,1,2,4,4"}, "theta");
}

void criterion_rotation(Outcome& o) {
    o.absorb(check_grid("rot-equivalence", 14));
    o.absorb(check_on("rot-slope-2-1", Grid{}));
}

void criterion_bijections(Outcome& o) {
    for (int b = 1; b <= 3; ++b)
        for (int n = 1; n <= 4; ++n) {
            const std::string tag = "(b=" + std::to_string(b) + ",n=" + std::to_string(n) + ")";
            long avoiders = 0;
            for (const Seq& raw : oracle::stirling_perms(n, b)) {
                const StirlingPerm pi(b, raw);
                const AryTree t = xi(pi);
                o.expect(xi_inverse(t) == pi, tag + " xi round trip at " + to_string(pi));
                if (oracle::contains_312(raw)) continue;
                ++avoiders;
                o.expect(alpha_star_inverse(alpha_star(pi), b) == pi, tag + " presentation round trip at " + to_string(pi));
            }
            for_each_path(Slope(1, b), n, [&](const DyckWord& p) {
                const Seq u = word_to_step_seq(p);
                o.expect(zeta_inverse(zeta(u, b)) == u, tag + " zeta round trip at " + p.steps());
            });
            const auto fc = oracle::fuss_catalan(b, n);
            o.expect(avoiders == fc, tag + " 312-avoiders differ from Fuss-Catalan");
            o.expect(static_cast<long long>(admissible_tuples(b, n).size()) == fc, tag + " admissible tuples differ from Fuss-Catalan");
        }
}

void criterion_admissibility(Outcome& o) {
    const auto chains = chain_tuples(2, 3);
    o.expect(chains.size() == 14, "chain tuples at (2,3) is " + std::to_string(chains.size()));
    // Brute force: a chain tuple is admissible iff gamma(beta(t)) = t.
    long brute = 0;
    for (const DyckTuple& t : chains) brute += gamma(beta(t), 2) == t;
    o.expect(brute == 12, "brute-force admissible count is " + std::to_string(brute));
    long avoiders = 0;
    for (const Seq& p : oracle::stirling_perms(3, 2)) avoiders += !oracle::contains_312(p);
    o.expect(avoiders == 12, "312-avoiders at (3,2)");
    o.expect(admissible_tuples(2, 3).size() == 12, "library admissible count");
    const DyckTuple bad1{ne_to_paren("NNENEE"), ne_to_paren("NENNEE")};
    const DyckTuple bad2{ne_to_paren("NNNEEE"), ne_to_paren("NNEENE")};
    o.expect(!is_admissible(bad1), "(NNENEE,NENNEE) admissible");
    o.expect(!is_admissible(bad2), "(NNNEEE,NNEENE) admissible");
}

void criterion_gamma(Outcome& o) {
    const auto g = tuple_steps(gamma({0, 0, 0, 2, 5, 6, 17, 18, 18, 20}, 3));
    o.expect(g.size() == 3, "component count");
    if (g.size() != 3) return;
    o.expect(seq_to_string(g[2]) == "0,0,0,1,2,3,6,7,7,8", "u'_3");
    o.expect(seq_to_string(g[1]) == "0,0,0,1,2,2,6,6,6,7", "u'_2");
    o.expect(seq_to_string(g[0]) == "0,0,0,0,1,1,5,5,5,5", "u'_1");
}

void criterion_young_diagram(Outcome& o) {
    const YoungData d = interleave_and_circle({"(((())))", "((()()))", "()()()()"});
    o.expect(d.lambda == Seq{7, 3, 3, 3, 1, 1, 1, 1, 1}, "lambda");
    o.expect(d.circled == Seq{3, 2, 1, 1}, "v(P)");
    o.expect(d.transpose == Seq{4, 2, 1}, "transpose");
    o.expect(oracle::conjugate(d.circled) == d.transpose, "transpose against the conjugate oracle");
    o.absorb(check_grid("yd-transpose", 12));
}

void criterion_dist(Outcome& o) {
    const DyckWord p = step_seq_to_word(Slope(2, 3), 2, {0, 1, 1, 3});
    o.expect(to_string(mu(p, Reference::lowest)) == "224442133311", "mu for the lowest reference");
    o.expect(to_string(mu(p, Reference::highest)) == "113332444221", "mu for the highest reference");
    o.expect(mu(p, Reference::highest).entries() == oracle::zeta({0, 1, 1, 3}, 3, 2), "zeta_2 oracle");
    o.absorb(check_grid("dist-pq", 12));
}

void criterion_strips(Outcome& o) {
    o.absorb(check_grid("strip-dec", 12));
    o.absorb(check_grid("enlarge-extract", 12));
}

void criterion_tuple_rotation(Outcome& o) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) o.absorb(check_family("tuple-rotation", 1, m, n));
    const ParenPres pp = alpha_star(zeta_g({0, 1, 2, 4}, 2, 3));
    const DyckTuple t = alpha_I(pp, 3);
    o.expect(tuple_steps(t) == std::vector<Seq>{{0, 0, 0, 2}, {0, 1, 2, 3}, {0, 1, 2, 3}}, "type-I tuple of the example");
    o.expect(tuple_steps(rotate_tuple(t, pp, 2, 2)) == std::vector<Seq>{{0, 0, 0, 2}, {0, 0, 1, 3}, {0, 0, 1, 3}},
             "rotated tuple of the example");
}

void criterion_omega(Outcome& o) {
    o.absorb(check_grid("bqp-omega", 12));
    const std::string p = "NENENEENEE", q = "NENNEENEEE";
    const BinaryTree b = build_BQP(q, p);
    std::string w1, w2;
    for (char c : omega(b)) {
        if (c == '!' || c == '@') w1 += c;
        if (c == '!' || c == '2') w2 += c;
    }
    o.expect(w1 == "!@!!@@!@@@" && omega1(b) == q, "omega1 of B(Q,P)");
    o.expect(w2 == "!2!2!22!22" && omega2(b) == p, "omega2 of B(Q,P)");
    o.expect(omega1(tr(p)) == p && omega2(tr(p)) == p, "Tr(P)");
}

void criterion_duality(Outcome& o, Clock::time_point start) {
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}})
        for (int n = 1; n <= 2; ++n) {
            o.absorb(check_family("duality-omega1", a, b, n));
            o.absorb(check_family("duality-omega2", a, b, n));
        }
    const DyckWord p(Slope(2, 3), 2, "NENENEENEE");
    const Duality d = duality(p);
    const auto th = theta(p), th0 = theta(lowest_path(Slope(2, 3), 2));
    // theta_1 = (a^2_1)#, theta_2 = (a^1_1)#, theta^0_1 = (a^2_2)#, theta^0_2 = (a^1_2)#.
    o.expect(raw_step_seq_word(th[0], 6) == sharp(d.c[1].first), "theta_1");
    o.expect(raw_step_seq_word(th[1], 6) == sharp(d.c[0].first), "theta_2");
    o.expect(raw_step_seq_word(th0[0], 6) == sharp(d.c[1].second), "theta^0_1");
    o.expect(raw_step_seq_word(th0[1], 6) == sharp(d.c[0].second), "theta^0_2");
    // Wall time of the whole registry at the default grid, on top of this run.
    for (const Check& c : check_registry()) run_check(c, Grid{});
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    o.expect(total < limit_suite, "full suite took " + std::to_string(total) + " s");
}

}  // namespace

int main() {
    const auto start = Clock::now();
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> all = {
        {1, "counting", limit_counting, criterion_counting},
        {2, "golden path pipeline", limit_default, criterion_golden_path},
        {3, "rotation-order equivalence", limit_rotation, criterion_rotation},
        {4, "bijection chain", limit_default, criterion_bijections},
        {5, "admissibility example", limit_default, criterion_admissibility},
        {6, "gamma golden values", limit_default, criterion_gamma},
        {7, "Young diagram reconstruction", limit_default, criterion_young_diagram},
        {8, "mu equals scaled zeta", limit_default, criterion_dist},
        {9, "strip decompositions", limit_strips, criterion_strips},
        {10, "rotation on tuples", limit_default, criterion_tuple_rotation},
        {11, "omega-word contract", limit_default, criterion_omega},
        {12, "duality", limit_suite, [&](Outcome& o) { criterion_duality(o, start); }},
    };
    int failed = 0;
    for (const Criterion& c : all) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > c.limit) o.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit));
        const bool ok = o.problems.empty();
        failed += !ok;
        std::printf("%s %2d %s (%.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.name, secs);
        for (const std::string& p : o.problems) std::printf("     %s\n", p.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
