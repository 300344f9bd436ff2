#include "rdk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "rdk/bintrees.hpp"
#include "rdk/orders.hpp"
#include "rdk/paren.hpp"
#include "rdk/stirling.hpp"
#include "rdk/strips.hpp"
#include "rdk/trees.hpp"

namespace rdk {

void Report::fail(std::string reproducer) {
    ++failure_count;
    if (failures.size() < 20) failures.push_back(std::move(reproducer));
}

std::vector<Family> families(int max_size) {
    std::vector<Family> out;
    for (int a = 1; a < max_size; ++a)
        for (int b = 1; a + b <= max_size; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (int n = 1; (a + b) * n <= max_size; ++n) out.push_back({Slope(a, b), n});
        }
    return out;
}

std::vector<Family> grid_families(const Grid& g) {
    if (g.only) return {*g.only};
    return families(g.max_size);
}

namespace {

using Pred = bool (*)(Slope);
bool any_slope(Slope) { return true; }
bool a_below_b(Slope s) { return s.a < s.b; }
bool a_is_one(Slope s) { return s.a == 1; }

std::string tag(const Family& f) {
    return "a=" + std::to_string(f.slope.a) + " b=" + std::to_string(f.slope.b) + " n=" + std::to_string(f.n);
}

std::string tag(const DyckWord& p) {
    return "a=" + std::to_string(p.slope().a) + " b=" + std::to_string(p.slope().b) + " n=" +
           std::to_string(p.n()) + " P=" + p.steps();
}

// Runs fn on every path of every family in the grid that satisfies pred. An
// explicit single family is always honoured.
void each_path(const Grid& g, Report& r, Pred pred, const std::function<void(const DyckWord&)>& fn) {
    for (const Family& f : grid_families(g)) {
        if (!g.only && !pred(f.slope)) continue;
        for_each_path(f.slope, f.n, [&](const DyckWord& p) {
            ++r.instances;
            fn(p);
        });
    }
}

std::vector<std::string> tuple_words(const DyckTuple& t) {
    std::vector<std::string> out;
    for (const std::string& q : t) out.push_back(paren_to_ne(q));
    return out;
}

std::string delta_word(const Seq& h, int n) { return raw_height_seq_word(h, n); }

void check_rot_equivalence(const Grid& g, Report& r) {
    each_path(g, r, a_below_b, [&](const DyckWord& p) {
        const auto rot = rotation_covers(p);
        const auto hor = rotation_covers_hor(p, lowest_path(p.slope(), p.n()));
        if (rot != hor) r.fail(tag(p));
    });
}

void check_rot_slope_2_1(const Grid&, Report& r) {
    const Slope s(2, 1);
    const Seq u{0, 0, 1, 1, 2, 2};
    const DyckWord p = step_seq_to_word(s, 3, u);
    ++r.instances;
    const auto rot = rotation_covers(p);
    const auto hor = rotation_covers_hor(p, lowest_path(s, 3));
    const Seq want_rot{0, 0, 0, 0, 1, 1}, want_hor{0, 0, 0, 1, 2, 2};
    if (rot == hor) r.fail(tag(p) + " covers coincide");
    if (std::find(rot.begin(), rot.end(), want_rot) == rot.end())
        r.fail(tag(p) + " rotation covers lack (0,0,0,0,1,1)");
    if (std::find(hor.begin(), hor.end(), want_hor) == hor.end())
        r.fail(tag(p) + " horizontal covers lack (0,0,0,1,2,2)");
}

void check_refinement(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        for (const Seq& v : rotation_covers(p)) {
            const auto chain = young_chain(u, v);
            for (std::size_t k = 1; k < chain.size(); ++k) {
                const auto cov = young_covers(chain[k - 1]);
                if (std::find(cov.begin(), cov.end(), chain[k]) == cov.end()) {
                    r.fail(tag(p) + " cover (" + seq_to_string(v) + ")");
                    break;
                }
            }
        }
    });
}

void check_graded(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const long su = std::accumulate(u.begin(), u.end(), 0L);
        for (const Seq& v : young_covers(u))
            if (std::accumulate(v.begin(), v.end(), 0L) != su - 1) r.fail(tag(p) + " young");
        // A rotation at i lowers exactly the primitive subsequence i..k.
        for (std::size_t i = 1; i < u.size(); ++i) {
            if (u[i - 1] >= u[i]) continue;
            const int k = primitive_subsequence(u, static_cast<int>(i), p.slope());
            Seq v = u;
            for (int j = static_cast<int>(i); j <= k; ++j) --v[static_cast<std::size_t>(j)];
            if (std::accumulate(v.begin(), v.end(), 0L) != su - (k - static_cast<int>(i) + 1))
                r.fail(tag(p) + " rotation");
        }
    });
}

void check_path_roundtrip(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Slope s = p.slope();
        if (!(step_seq_to_word(s, p.n(), word_to_step_seq(p)) == p)) r.fail(tag(p) + " step");
        if (!(height_seq_to_word(s, p.n(), word_to_height_seq(p)) == p)) r.fail(tag(p) + " height");
    });
}

void check_path_count(const Grid& g, Report& r) {
    for (const Family& f : grid_families(g)) {
        if (!g.only && f.slope.a != 1) continue;
        ++r.instances;
        std::size_t count = 0;
        for_each_path(f.slope, f.n, [&](const DyckWord&) { ++count; });
        if (BigInt(count) != fuss_catalan(f.slope.b, f.n)) r.fail(tag(f));
    }
}

void check_path_bounds(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p), u0 = lowest_step_seq(p.slope(), p.n());
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] < 0 || u[k] > u0[k]) {
                r.fail(tag(p));
                break;
            }
        for (const Point& q : p.points())
            if (static_cast<long>(p.slope().b) * q.y < static_cast<long>(p.slope().a) * q.x) {
                r.fail(tag(p) + " prefix");
                break;
            }
    });
}

std::set<StirlingPerm> zeta_all(const std::vector<Seq>& us, int b) {
    std::set<StirlingPerm> out;
    for (const Seq& v : us) out.insert(zeta(v, b));
    return out;
}

void check_zeta_312(const Grid& g, Report& r) {
    for (const Family& f : grid_families(g)) {
        if (!g.only && f.slope.a != 1) continue;
        const int b = f.slope.b;
        std::set<StirlingPerm> images;
        for_each_path(f.slope, f.n, [&](const DyckWord& p) {
            ++r.instances;
            const StirlingPerm pi = zeta(word_to_step_seq(p), b);
            if (!avoids_312(pi.entries())) r.fail(tag(p));
            images.insert(pi);
        });
        if (f.slope.a != 1) continue;
        std::set<StirlingPerm> avoiders;
        for (const StirlingPerm& pi : enumerate_stirling(f.n, b))
            if (avoids_312(pi.entries())) avoiders.insert(pi);
        if (avoiders != images) r.fail(tag(f) + " image differs from the 312-avoiders");
    }
}

void check_chi_young(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const int b = p.slope().b;
        const auto got = chi_covers(zeta(u, b));
        const auto want = zeta_all(young_covers(u), b);
        if (std::set<StirlingPerm>(got.begin(), got.end()) != want) r.fail(tag(p));
    });
}

void check_stirling_rotation(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const int b = p.slope().b;
        const auto got = stirling_rotation_covers(zeta(u, b));
        const auto want = zeta_all(rotation_covers(p), b);
        if (std::set<StirlingPerm>(got.begin(), got.end()) != want) r.fail(tag(p));
    });
}

void check_zeta_roundtrip(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        if (zeta_inverse(zeta(u, p.slope().b)) != u) r.fail(tag(p));
    });
}

void check_xi_bijection(const Grid& g, Report& r) {
    for (const Family& f : grid_families(g)) {
        if (!g.only && f.slope.a != 1) continue;
        std::set<std::string> walks;
        const auto perms = enumerate_stirling(f.n, f.slope.b);
        for (const StirlingPerm& pi : perms) {
            ++r.instances;
            const AryTree t = xi(pi);
            if (!(xi_inverse(t) == pi)) r.fail(tag(f) + " pi=" + to_string(pi));
            if (avoids_312(pi.entries()) && !walks.insert(walk_word(t)).second)
                r.fail(tag(f) + " walk words collide at pi=" + to_string(pi));
        }
    }
}

void check_tree_rotation(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const int b = p.slope().b;
        const AryTree t = xi(zeta(word_to_step_seq(p), b));
        std::set<std::string> got, want;
        for (int i = 2; i <= t.n(); ++i)
            if (tree_rotation_applies(t, i)) got.insert(walk_word(tree_rotation(t, i)));
        for (const Seq& v : rotation_covers(p)) want.insert(alpha_star(zeta(v, b)));
        if (got != want) r.fail(tag(p));
    });
}

void check_walk_counts(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const int b = p.slope().b, n = p.n();
        const std::string w = alpha_star(zeta(word_to_step_seq(p), b));
        const auto cnt = [&](char c) { return static_cast<int>(std::count(w.begin(), w.end(), c)); };
        if (cnt('(') != n || cnt(')') != n || cnt('*') != n * b) r.fail(tag(p));
        int depth = 0;
        for (char c : w) {
            depth += c == '(' ? 1 : (c == ')' ? -1 : 0);
            if (depth < 0) r.fail(tag(p) + " unbalanced");
        }
    });
}

void check_tuple_bijection(const Grid& g, Report& r) {
    for (const Family& f : grid_families(g)) {
        if (f.slope.a != 1) continue;
        const int m = f.slope.b;
        ++r.instances;
        const auto adm = admissible_tuples(m, f.n);
        long avoiders = 0;
        for (const StirlingPerm& pi : enumerate_stirling(f.n, m))
            if (avoids_312(pi.entries())) ++avoiders;
        std::set<DyckTuple> images;
        for_each_path(f.slope, f.n, [&](const DyckWord& p) { images.insert(alpha_I(zeta(word_to_step_seq(p), m))); });
        const BigInt fc = fuss_catalan(m, f.n);
        if (BigInt(adm.size()) != fc || BigInt(avoiders) != fc) r.fail(tag(f) + " counts");
        if (images != std::set<DyckTuple>(adm.begin(), adm.end())) r.fail(tag(f) + " alpha_I image");
    }
}

void check_admissible_fixed_point(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const int m = p.slope().b;
        const DyckTuple t = alpha_I(zeta(u, m));
        if (!is_admissible(t) || beta(t) != u || gamma(u, m) != t) r.fail(tag(p));
    });
}

void check_paren_roundtrip(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const int m = p.slope().b;
        const StirlingPerm pi = zeta(word_to_step_seq(p), m);
        const ParenPres pp = alpha_star(pi);
        if (!(alpha_star_inverse(pp, m) == pi)) r.fail(tag(p) + " inverse");
        if (paren_from_tuple(alpha_I(pp, m)) != pp) r.fail(tag(p) + " from tuple");
    });
}

void check_postorder_u(const Grid& g, Report& r) {
    each_path(g, r, a_is_one, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const DyckTuple t = alpha_I(zeta(u, p.slope().b));
        if (u_from_postorder(t) != u || beta(t) != u) r.fail(tag(p));
    });
}

void check_gamma_II(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const int b = p.slope().b;
        const auto parts = gamma_II(u, b);
        Seq sum(u.size(), 0);
        for (const Seq& q : parts)
            for (std::size_t k = 0; k < u.size(); ++k) sum[k] += q[k];
        if (sum != u) r.fail(tag(p) + " sum");
        const DyckTuple t2 = alpha_II(zeta(u, b));
        std::vector<Seq> got;
        for (const std::string& q : t2) got.push_back(paren_step_seq(q));
        if (got != parts) r.fail(tag(p) + " alpha_II");
        std::vector<Seq> bars;
        for (const std::string& w : bar_components(p.steps(), b)) bars.push_back(word_to_step_seq(w));
        if (bars != parts) r.fail(tag(p) + " bar");
    });
}

void check_type_II_to_I(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const StirlingPerm pi = zeta(word_to_step_seq(p), p.slope().b);
        const auto trace = type_II_to_I(pi);
        if (trace.front() != alpha_II(pi) || trace.back() != alpha_I(pi)) r.fail(tag(p));
    });
}

void check_yd(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Seq u = word_to_step_seq(p);
        const YoungData d = interleave_and_circle(alpha_I(zeta(u, p.slope().b)));
        Seq want;
        for (int x : u)
            if (x > 0) want.push_back(x);
        std::sort(want.rbegin(), want.rend());
        if (d.transpose != want) r.fail(tag(p));
    });
}

void check_yd_corner(const Grid& g, Report& r) {
    for (int rows = 1; rows <= g.max_size; ++rows)
        for (int cols = 1; cols <= g.max_size; ++cols) {
            ++r.instances;
            const Seq rect(static_cast<std::size_t>(rows), cols);
            if (hook_length(rect, 0, 0) != rows + cols - 1)
                r.fail("rows=" + std::to_string(rows) + " cols=" + std::to_string(cols));
        }
}

void check_tuple_rotation(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const Slope s = p.slope();
        const Seq u = word_to_step_seq(p);
        auto present = [&](const Seq& v) { return alpha_star(zeta_g(v, s.a, s.b)); };
        const ParenPres pp = present(u);
        const DyckTuple t = alpha_I(pp, s.b);
        std::set<ParenPres> got_pp, want_pp;
        std::set<DyckTuple> got_t, want_t;
        for (int i = 1; i <= s.a * p.n(); ++i) {
            if (!paren_rotation_applies(pp, i, s.a)) continue;
            got_pp.insert(rotate_paren(pp, i, s.a));
            got_t.insert(rotate_tuple(t, pp, i, s.a));
        }
        for (const Seq& v : rotation_covers(p)) {
            want_pp.insert(present(v));
            want_t.insert(alpha_I(present(v), s.b));
        }
        if (got_pp != want_pp) r.fail(tag(p) + " presentation");
        if (got_t != want_t) r.fail(tag(p) + " tuple");
    });
}

void check_dist_pq(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        for (Reference q : {Reference::lowest, Reference::highest})
            if (!(mu(p, q) == zeta_g(u_prime(p, q), p.slope().a, p.slope().b)))
                r.fail(tag(p) + (q == Reference::lowest ? " Q=lowest" : " Q=highest"));
    });
}

void check_strip_dec(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const auto d = delta(p);
        const auto v = v_sequences(p, Reference::highest);
        const int an = p.slope().a * p.n();
        for (std::size_t i = 0; i < d.size(); ++i)
            if (word_to_step_seq(delta_word(d[i], an)) != v[i]) {
                r.fail(tag(p));
                break;
            }
    });
}

void check_lbdw(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const std::string w = enlarge(p);
        std::vector<Seq> h, u;
        for (const std::string& c : interleave_extract(w, p.slope().b)) h.push_back(word_to_height_seq(c));
        for (const std::string& c : interleave_extract(w, p.slope().a)) u.push_back(word_to_step_seq(c));
        if (h != delta(p)) r.fail(tag(p) + " delta");
        if (u != theta(p)) r.fail(tag(p) + " theta");
    });
}

void check_v_monotone(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        for (Reference q : {Reference::lowest, Reference::highest}) {
            const auto v = v_sequences(p, q);
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                for (std::size_t k = 0; k < v[i].size(); ++k)
                    if (v[i][k] < v[i + 1][k]) r.fail(tag(p));
            for (const Seq& x : v)
                for (std::size_t k = 0; k < x.size(); ++k)
                    if (x[k] > static_cast<int>(k)) r.fail(tag(p) + " eta validity");
        }
    });
}

void check_strip_chains(const Grid& g, Report& r) {
    std::map<std::pair<int, int>, std::pair<std::set<std::vector<Seq>>, std::set<std::vector<Seq>>>> seen;
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const auto d = delta(p), t = theta(p);
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (!young_leq(word_to_step_seq(delta_word(d[i], p.slope().a * p.n())),
                           word_to_step_seq(delta_word(d[i + 1], p.slope().a * p.n()))))
                r.fail(tag(p) + " delta chain");
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            for (std::size_t k = 0; k < t[i].size(); ++k)
                if (t[i][k] > t[i + 1][k]) r.fail(tag(p) + " theta chain");
        auto& slot = seen[{p.slope().a * 100 + p.slope().b, p.n()}];
        if (!slot.first.insert(d).second) r.fail(tag(p) + " delta not injective");
        if (!slot.second.insert(t).second) r.fail(tag(p) + " theta not injective");
    });
}

void check_wrt(const Grid& g, Report& r) {
    for (int n = 1; n <= g.max_size / 2; ++n)
        for_each_path(Slope(1, 1), n, [&](const DyckWord& q) {
            ++r.instances;
            if (preorder_word_of_postorder_labels(q.steps()) != eta(word_to_step_seq(q))) r.fail(tag(q));
        });
}

void check_tr_words(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const BinaryTree t = tr(p.steps());
        if (omega1(t) != p.steps() || omega2(t) != p.steps()) r.fail(tag(p));
    });
}

void check_bqp_omega(const Grid& g, Report& r) {
    for (const Family& f : grid_families(g)) {
        const auto ps = enumerate_paths(f.slope, f.n);
        for (const DyckWord& p : ps)
            for (const DyckWord& q : ps) {
                if (!young_leq(word_to_step_seq(p), word_to_step_seq(q))) continue;
                ++r.instances;
                try {
                    const BinaryTree t = build_BQP(q.steps(), p.steps());
                    if (omega1(t) != q.steps() || omega2(t) != p.steps()) r.fail(tag(p) + " Q=" + q.steps());
                } catch (const std::logic_error& e) {
                    r.fail(tag(p) + " Q=" + q.steps() + " " + e.what());
                }
            }
    }
}

void check_omega_injective(const Grid& g, Report& r) {
    const int max_edges = std::min(10, std::max(1, g.max_size - 2));
    // All binary trees with e edges, built recursively as (left?, right?) shapes.
    std::map<int, std::vector<BinaryTree>> by_size;
    by_size[0].push_back(BinaryTree{});
    auto graft = [](BinaryTree& into, int at, const BinaryTree& from, bool left) {
        std::function<void(int, int, bool)> copy = [&](int src, int dst_parent, bool as_left) {
            const int v = into.add_node();
            (as_left ? into.left : into.right)[static_cast<std::size_t>(dst_parent)] = v;
            if (from.left[static_cast<std::size_t>(src)] >= 0) copy(from.left[static_cast<std::size_t>(src)], v, true);
            if (from.right[static_cast<std::size_t>(src)] >= 0)
                copy(from.right[static_cast<std::size_t>(src)], v, false);
        };
        copy(0, at, left);
    };
    // A tree is a root with an optional left subtree (edge + tree) and optional right subtree.
    std::set<std::pair<std::string, std::string>> words;
    for (int e = 1; e <= max_edges; ++e) {
        auto& out = by_size[e];
        for (int le = 0; le <= e; ++le) {
            const int re = e - le;
            auto sub_options = [&](int edges) {
                std::vector<const BinaryTree*> v;
                if (edges == 0) v.push_back(nullptr);
                else
                    for (const BinaryTree& t : by_size[edges - 1]) v.push_back(&t);
                return v;
            };
            // le edges on the left side (0 means no left child), remaining on the right.
            for (const BinaryTree* l : sub_options(le))
                for (const BinaryTree* rr : sub_options(re)) {
                    if (le == 0 && rr == nullptr) continue;
                    BinaryTree t;
                    if (l) graft(t, 0, *l, true);
                    if (rr) graft(t, 0, *rr, false);
                    if (t.edges() == e) out.push_back(std::move(t));
                }
        }
        for (const BinaryTree& t : out) {
            ++r.instances;
            if (!words.insert({omega1(t), omega2(t)}).second) r.fail("edges=" + std::to_string(e) + " " + omega(t));
        }
        charge_budget(out.size(), "binary trees");
    }
}

void check_d_words(const Grid& g, Report& r) {
    each_path(g, r, any_slope, [&](const DyckWord& p) {
        const int b = p.slope().b;
        const auto [d1, d2] = d_words(d_tree(p), b);
        const DyckWord p0 = lowest_path(p.slope(), p.n());
        if (d1 != tuple_words(alpha_II(zeta(word_to_step_seq(p), b)))) r.fail(tag(p) + " d1");
        if (d2 != tuple_words(alpha_II(zeta(word_to_step_seq(p0), b)))) r.fail(tag(p) + " d2");
    });
}

void check_strip_trees(const Grid& g, Report& r) {
    each_path(g, r, a_below_b, [&](const DyckWord& p) {
        const Slope s = p.slope();
        const DyckWord p0 = lowest_path(s, p.n());
        const BinaryTree bt = subdivide(build_BQP(p.steps(), p0.steps()), s.b, s.a);
        const auto th = theta(p), th0 = theta(p0);
        const auto parts = extract_subtrees(bt, s.a);
        for (int i = 0; i < s.a; ++i) {
            const std::string q = raw_step_seq_word(th[static_cast<std::size_t>(i)], s.b * p.n());
            const std::string q0 = raw_step_seq_word(th0[static_cast<std::size_t>(i)], s.b * p.n());
            if (!same_shape(parts[static_cast<std::size_t>(i)], build_BQP(q, q0))) r.fail(tag(p) + " i=" + std::to_string(i + 1));
        }
    });
}

void check_duality(const Grid& g, Report& r, bool first) {
    each_path(g, r, a_below_b, [&](const DyckWord& p) {
        const int a = p.slope().a;
        const Duality d = duality(p);
        for (int i = 1; i <= a; ++i) {
            const auto& bi = d.b[static_cast<std::size_t>(i - 1)];
            const auto& ci = d.c[static_cast<std::size_t>(a - i)];
            const std::string lhs = first ? bi.first : bi.second;
            const std::string rhs = sharp(first ? ci.first : ci.second);
            if (lhs != rhs) {
                r.fail(tag(p) + " i=" + std::to_string(i));
                break;
            }
        }
    });
}

void check_duality_c_words(const Grid& g, Report& r, bool first) {
    each_path(g, r, a_below_b, [&](const DyckWord& p) {
        const Slope s = p.slope();
        const Duality d = duality(p);
        const DyckWord p0 = lowest_path(s, p.n());
        const std::string dual = sharp(first ? p.steps() : p0.steps());
        const auto e = tuple_words(alpha_II(zeta_g(word_to_step_seq(dual), s.b, s.a)));
        for (int i = 1; i <= s.a; ++i) {
            const auto& ci = d.c[static_cast<std::size_t>(s.a - i)];
            if ((first ? ci.first : ci.second) != e[static_cast<std::size_t>(i - 1)]) {
                r.fail(tag(p) + " i=" + std::to_string(i));
                break;
            }
        }
    });
}

std::vector<Check> make_registry() {
    std::vector<Check> v = {
        {"path-roundtrip", "step and height sequences invert the word encoding", check_path_roundtrip},
        {"path-count", "(1,b)-paths are counted by the Fuss-Catalan number", check_path_count},
        {"path-bounds", "0 <= u(P) <= u(lowest) and every prefix stays above the line", check_path_bounds},
        {"rot-equivalence", "primitive-subsequence and horizontal-distance rotations agree for a < b",
         check_rot_equivalence},
        {"rot-slope-2-1", "at slope (2,1), u=(0,0,1,1,2,2) the two rotations differ as (0,0,0,0,1,1) vs (0,0,0,1,2,2)",
         check_rot_slope_2_1},
        {"rot-refinement", "every rotation cover is a chain of Young covers", check_refinement},
        {"order-graded", "Young covers drop the sum by 1, rotations by the primitive length", check_graded},
        {"zeta-312", "zeta maps (1,m)-paths onto the 312-avoiding m-Stirling permutations", check_zeta_312},
        {"chi-young", "chi realises the Young order on Stirling permutations", check_chi_young},
        {"stirling-rotation", "the Stirling rotation realises the rotation order", check_stirling_rotation},
        {"zeta-roundtrip", "zeta_inverse inverts zeta", check_zeta_roundtrip},
        {"xi-bijection", "xi inverts on Stirling permutations; walk words separate the 312-avoiders",
         check_xi_bijection},
        {"tree-rotation", "tree rotations realise the rotation order", check_tree_rotation},
        {"walk-counts", "walk words have n pairs and nb stars and are balanced", check_walk_counts},
        {"tuple-bijection", "admissible tuples, 312-avoiders and Fuss-Catalan agree; alpha_I hits every admissible tuple",
         check_tuple_bijection},
        {"admissible-fixed-point", "type-I tuples are fixed by gamma after beta", check_admissible_fixed_point},
        {"paren-roundtrip", "the parenthesis presentation inverts, also from the type-I tuple", check_paren_roundtrip},
        {"postorder-u", "post-order words recover the step sequence", check_postorder_u},
        {"gamma-II", "type-II tuples equal the ceiling recursion and the enlarged-path components", check_gamma_II},
        {"type-II-to-I", "label swaps turn the type-II tuple into the type-I tuple", check_type_II_to_I},
        {"yd-transpose", "circled columns of the interleaved diagram transpose to u(P)", check_yd},
        {"yd-corner", "the top-left hook of an m x n rectangle is n+m-1", check_yd_corner},
        {"tuple-rotation", "presentation and tuple rotations realise the rotation order", check_tuple_rotation},
        {"dist-pq", "mu(P,Q) = zeta scaled by a of u'(P)", check_dist_pq},
        {"strip-dec", "step sequences of delta(P) are the v-sequences for the highest path", check_strip_dec},
        {"enlarge-extract", "the enlarged path extracts to delta and theta", check_lbdw},
        {"v-monotone", "v-sequences decrease componentwise and keep eta well defined", check_v_monotone},
        {"strip-chains", "strip components form Young chains and the decompositions are injective",
         check_strip_chains},
        {"post-pre", "post-order labels read in pre-order equal eta of the step sequence", check_wrt},
        {"tr-words", "both omega words of Tr(P) equal P", check_tr_words},
        {"bqp-omega", "omega1(B(Q,P)) = Q and omega2(B(Q,P)) = P", check_bqp_omega},
        {"omega-injective", "(omega1, omega2) determines a binary tree, so B(Q,P) is chain independent",
         check_omega_injective},
        {"d-words", "strided omega words of the extended tree are the type-II tuples of P and P0", check_d_words},
        {"strip-trees", "extracted b_i equals B(theta_i, theta0_i)", check_strip_trees},
        {"duality-omega1", "omega1(b_i) is the dual of omega1(c_{a+1-i})",
         [](const Grid& g, Report& r) { check_duality(g, r, true); }},
        {"duality-omega2", "omega2(b_i) is the dual of omega2(c_{a+1-i})",
         [](const Grid& g, Report& r) { check_duality(g, r, false); }},
        {"duality-c-omega1", "omega1(c_{a+1-i}) is the i-th type-II word of the dual of P",
         [](const Grid& g, Report& r) { check_duality_c_words(g, r, true); }},
        {"duality-c-omega2", "omega2(c_{a+1-i}) is the i-th type-II word of the dual of P0",
         [](const Grid& g, Report& r) { check_duality_c_words(g, r, false); }},
    };
    std::sort(v.begin(), v.end(), [](const Check& x, const Check& y) { return x.name < y.name; });
    return v;
}

}  // namespace

const std::vector<Check>& check_registry() {
    static const std::vector<Check> reg = make_registry();
    return reg;
}

const Check* find_check(const std::string& name) {
    for (const Check& c : check_registry())
        if (c.name == name) return &c;
    return nullptr;
}

Report run_check(const Check& c, const Grid& g) {
    Report r;
    r.check = c.name;
    r.grid = g.only ? tag(*g.only) : "max-size=" + std::to_string(g.max_size);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.run(g, r);
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["grid"] = r.grid;
    j["instances"] = r.instances;
    j["failures"] = r.failure_count;
    j["reproducers"] = r.failures;
    j["status"] = r.passed() ? "pass" : "fail";
    return j.dump();
}

}  // namespace rdk
