#include <functional>

#include "doctest.h"
#include "rdk/bintrees.hpp"
#include "rdk/errors.hpp"
#include "rdk/orders.hpp"
#include "rdk/paren.hpp"
#include "rdk/stirling.hpp"
#include "rdk/strips.hpp"

using namespace rdk;

namespace {
const std::string P = "NENENEENEE";
const std::string Q = "NENNEENEEE";
const std::string P1 = "NENNEEENEE";

// Shape as a nested string: (left)(right).
std::string shape(const BinaryTree& t, int v = 0) {
    if (v < 0) return "";
    return "(" + shape(t, t.left[static_cast<std::size_t>(v)]) + "," + shape(t, t.right[static_cast<std::size_t>(v)]) + ")";
}

std::vector<std::string> words(const DyckTuple& t) {
    std::vector<std::string> out;
    for (const std::string& q : t) out.push_back(paren_to_ne(q));
    return out;
}
}  // namespace

TEST_CASE("Tr(P)") {
    const BinaryTree t = tr(P);
    CHECK(t.edges() == 10);
    CHECK(omega1(t) == P);
    CHECK(omega2(t) == P);
    const BinaryTree ne = tr("NE");
    CHECK(ne.edges() == 2);
    CHECK(omega(ne) == "1!2@");
    for (const DyckWord& p : enumerate_paths(Slope(2, 3), 2)) {
        CHECK(omega1(tr(p.steps())) == p.steps());
        CHECK(omega2(tr(p.steps())) == p.steps());
    }
}

TEST_CASE("omega words of B(Q,P)") {
    const BinaryTree b = build_BQP(Q, P);
    CHECK(omega1(b) == Q);
    CHECK(omega2(b) == P);
    std::string kept1, kept2;
    for (char c : omega(b)) {
        if (c == '!' || c == '@') kept1 += c;
        if (c == '!' || c == '2') kept2 += c;
    }
    CHECK(kept1 == "!@!!@@!@@@");
    CHECK(kept2 == "!2!2!22!22");
    CHECK(same_shape(build_BQP(P, P), tr(P)));
    CHECK_THROWS_AS(build_BQP(P, Q), PreconditionError);
}

TEST_CASE("binary rotation steps") {
    const BinaryTree t = tr(P);
    const BinaryTree mid = binary_rotation(t, Q);
    CHECK(omega1(mid) == P1);
    CHECK(omega2(mid) == P);
    CHECK(same_shape(mid, build_BQP(P1, P)));
    const BinaryTree last = binary_rotation(mid, Q);
    CHECK(same_shape(last, build_BQP(Q, P)));
    CHECK(same_shape(binary_rotation(t, P), t));
    CHECK_THROWS_AS(binary_rotation(t, "NENEENENEE"), PreconditionError);
}

TEST_CASE("omega contract on all comparable pairs") {
    for (auto [a, b, n] : {std::tuple{2, 3, 1}, {2, 3, 2}, {1, 2, 3}, {3, 2, 2}}) {
        const auto ps = enumerate_paths(Slope(a, b), n);
        for (const DyckWord& p : ps)
            for (const DyckWord& q : ps)
                if (young_leq(word_to_step_seq(p), word_to_step_seq(q))) {
                    const BinaryTree t = build_BQP(q.steps(), p.steps());
                    CHECK(omega1(t) == q.steps());
                    CHECK(omega2(t) == p.steps());
                }
    }
}

TEST_CASE("subdivision and extraction") {
    const DyckWord p(Slope(2, 3), 2, P);
    const DyckWord p0 = lowest_path(Slope(2, 3), 2);
    const BinaryTree b = build_BQP(P, p0.steps());
    CHECK(shape(subdivide(b, 1, 1)) == shape(b));
    const BinaryTree bt = subdivide(b, 3, 2);
    CHECK(bt.edges() == 2 * 2 * 3 * 2);
    const auto one = extract_subtrees(bt, 1);
    REQUIRE(one.size() == 1);
    CHECK(same_shape(one[0], bt));
    const auto parts = extract_subtrees(bt, 2);
    REQUIRE(parts.size() == 2);
    CHECK(omega1(parts[0]) == "NNENENNEENEE");
    CHECK(omega2(parts[0]) == "NNENEENNENEE");
    CHECK(omega1(parts[1]) == "NENNENEENNEE");
    CHECK(omega2(parts[1]) == "NENNEENENNEE");
    const auto th = theta(p), th0 = theta(p0);
    for (int i = 0; i < 2; ++i)
        CHECK(same_shape(parts[static_cast<std::size_t>(i)],
                         build_BQP(raw_step_seq_word(th[static_cast<std::size_t>(i)], 6),
                                   raw_step_seq_word(th0[static_cast<std::size_t>(i)], 6))));
    const auto lab = postorder_labels(tr("NE"));
    CHECK(lab == std::vector<int>{0, 2, 1});
}

TEST_CASE("dual paths") {
    CHECK(sharp(std::string("NENEE")) == "NNENE");
    CHECK(sharp(sharp(P)) == P);
    const DyckWord d = sharp(DyckWord(Slope(2, 3), 2, P));
    CHECK(d.slope() == Slope(3, 2));
    CHECK(word_to_step_seq(d) == Seq{0, 0, 1, 1, 2, 3});
}

TEST_CASE("strided omega words") {
    const DyckWord p(Slope(2, 3), 2, P);
    const DyckWord p0 = lowest_path(Slope(2, 3), 2);
    const auto [d1, d2] = d_words(d_tree(p), 3);
    CHECK(d1 == words(alpha_II(zeta(word_to_step_seq(p), 3))));
    CHECK(d2 == words(alpha_II(zeta(word_to_step_seq(p0), 3))));
    std::vector<Seq> s1;
    for (const std::string& w : d1) s1.push_back(word_to_step_seq(w));
    CHECK(s1 == gamma_II(word_to_step_seq(p), 3));
    const auto [e1, e2] = d_words(d_tree(p0), 3);
    CHECK(e1 == e2);
    const DyckWord q(Slope(1, 1), 3, "NNENEE");
    const auto [f1, f2] = d_words(d_tree(q), 1);
    CHECK(f1 == std::vector<std::string>{q.steps()});
    CHECK(f2 == std::vector<std::string>{"NENENE"});
}

TEST_CASE("duality at slope (2,3) for NENENEENEE") {
    const Duality d = duality(DyckWord(Slope(2, 3), 2, P));
    REQUIRE(d.b.size() == 2);
    REQUIRE(d.c.size() == 2);
    CHECK(d.b[0].first == "NNENENNEENEE");
    CHECK(d.b[0].second == "NNENEENNENEE");
    CHECK(d.b[1].first == "NENNENEENNEE");
    CHECK(d.b[1].second == "NENNEENENNEE");
    CHECK(d.c[0].first == "NNEENNENEENE");
    CHECK(d.c[0].second == "NNEENENNEENE");
    CHECK(d.c[1].first == "NNENNEENENEE");
    CHECK(d.c[1].second == "NNENEENNENEE");
    for (int i = 0; i < 2; ++i) {
        CHECK(d.b[static_cast<std::size_t>(i)].first == sharp(d.c[static_cast<std::size_t>(1 - i)].first));
        CHECK(d.b[static_cast<std::size_t>(i)].second == sharp(d.c[static_cast<std::size_t>(1 - i)].second));
    }
    const auto pi = zeta_g({0, 0, 1, 1, 2, 3}, 3, 2);
    CHECK(alpha_star(pi) == "((**)*((**)*(**)*(**))*)");
    const auto pi0 = zeta_g({0, 0, 1, 2, 2, 3}, 3, 2);
    CHECK(alpha_star(pi0) == "((**)*(**)*((**)*(**)*))");
    CHECK(words(alpha_II(pi)) == std::vector<std::string>{d.c[1].first, d.c[0].first});
    CHECK(words(alpha_II(pi0)) == std::vector<std::string>{d.c[1].second, d.c[0].second});
}

TEST_CASE("duality for a = 1") {
    for (int b = 2; b <= 3; ++b)
        for (int n = 1; n <= 3; ++n)
            for_each_path(Slope(1, b), n, [&](const DyckWord& p) {
                const Duality d = duality(p);
                CHECK(d.b[0].first == sharp(d.c[0].first));
                CHECK(d.b[0].second == sharp(d.c[0].second));
            });
}

TEST_CASE("omega words determine the tree") {
    // Every tree with at most 6 edges, compared pairwise by shape.
    std::vector<std::vector<BinaryTree>> by_edges(7);
    by_edges[0].push_back(BinaryTree{});
    std::function<void(BinaryTree&, int, const BinaryTree&, int)> copy = [&](BinaryTree& into, int dst, const BinaryTree& from, int src) {
        for (int side = 0; side < 2; ++side) {
            const int c = side == 0 ? from.left[static_cast<std::size_t>(src)] : from.right[static_cast<std::size_t>(src)];
            if (c < 0) continue;
            const int v = into.add_node();
            (side == 0 ? into.left : into.right)[static_cast<std::size_t>(dst)] = v;
            copy(into, v, from, c);
        }
    };
    for (int e = 1; e <= 6; ++e)
        for (int le = 0; le <= e; ++le) {
            const int re = e - le;
            auto opts = [&](int k) {
                std::vector<const BinaryTree*> v;
                if (k == 0) v.push_back(nullptr);
                else
                    for (const BinaryTree& t : by_edges[static_cast<std::size_t>(k - 1)]) v.push_back(&t);
                return v;
            };
            for (const BinaryTree* l : opts(le))
                for (const BinaryTree* r : opts(re)) {
                    if (!r && le == 0) continue;
                    BinaryTree t;
                    if (l) {
                        const int v = t.add_node();
                        t.left[0] = v;
                        copy(t, v, *l, 0);
                    }
                    if (r) {
                        const int v = t.add_node();
                        t.right[0] = v;
                        copy(t, v, *r, 0);
                    }
                    by_edges[static_cast<std::size_t>(e)].push_back(std::move(t));
                }
        }
    CHECK(by_edges[3].size() == 14);
    CHECK(by_edges[6].size() == 429);
    for (const auto& group : by_edges)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                CHECK_FALSE((omega1(group[i]) == omega1(group[j]) && omega2(group[i]) == omega2(group[j])));
}

TEST_CASE("binary tree export") {
    const std::string dot = binary_tree_to_dot(build_BQP(Q, P));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find(":sw") != std::string::npos);
    CHECK(dot.find(":se") != std::string::npos);
}
