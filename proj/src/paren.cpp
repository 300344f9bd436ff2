#include "rdk/paren.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace rdk {

namespace {

constexpr std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::vector<Token> base_tokens(const ParenPres& pp) {
    std::vector<Token> toks;
    std::vector<int> stack;
    int opened = 0;
    for (char c : pp) {
        if (c == '(') {
            stack.push_back(++opened);
            toks.push_back({'(', opened, 0});
        } else if (c == ')') {
            if (stack.empty()) throw InvalidObject("unbalanced presentation");
            toks.push_back({')', stack.back(), 0});
            stack.pop_back();
        } else if (c == '*') {
            if (stack.empty()) throw InvalidObject("star outside every pair");
            toks.push_back({'*', stack.back(), 0});
        } else {
            throw InvalidObject(std::string("bad token '") + c + "'");
        }
    }
    if (!stack.empty()) throw InvalidObject("unbalanced presentation");
    return toks;
}

DyckTuple tuple_from_labels(const std::vector<Token>& toks, int m) {
    DyckTuple out(idx(m));
    for (int i = 1; i <= m; ++i)
        for (const Token& t : toks) {
            if (t.kind == '(') out[idx(i - 1)] += '(';
            else if (t.kind == '*' && t.label == i) out[idx(i - 1)] += ')';
        }
    return out;
}

bool is_paren_dyck(const std::string& q) {
    const std::string w = paren_to_ne(q);
    return w.size() % 2 == 0 && is_dyck_word(Slope(1, 1), static_cast<int>(w.size() / 2), w);
}

}  // namespace

std::vector<Token> labels_I(const ParenPres& pp) {
    std::vector<Token> toks = base_tokens(pp);
    std::map<int, int> seen;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it)
        if (it->kind == '*') it->label = ++seen[it->node];
    return toks;
}

std::vector<Token> labels_II(const ParenPres& pp, int m) {
    std::vector<Token> toks = base_tokens(pp);
    int k = 0;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it)
        if (it->kind == '*') it->label = (k++ % m) + 1;
    return toks;
}

ParenPres alpha_star(const StirlingPerm& pi) { return walk_word(xi(pi)); }

StirlingPerm alpha_star_inverse(const ParenPres& pp, int b) {
    return xi_inverse(ary_tree_from_walk(pp, b));
}

DyckTuple alpha_I(const ParenPres& pp, int m) { return tuple_from_labels(labels_I(pp), m); }
DyckTuple alpha_I(const StirlingPerm& pi) { return alpha_I(alpha_star(pi), pi.b()); }
DyckTuple alpha_II(const ParenPres& pp, int m) { return tuple_from_labels(labels_II(pp, m), m); }
DyckTuple alpha_II(const StirlingPerm& pi) { return alpha_II(alpha_star(pi), pi.b()); }

Seq paren_step_seq(const std::string& q) { return word_to_step_seq(paren_to_ne(q)); }

std::string step_seq_paren(const Seq& u) {
    return ne_to_paren(raw_step_seq_word(u, static_cast<int>(u.size())));
}

Seq beta(const DyckTuple& t) {
    if (t.empty()) return {};
    Seq u(t[0].size() / 2, 0);
    for (const std::string& q : t) {
        const Seq v = paren_step_seq(q);
        if (v.size() != u.size()) throw InvalidObject("tuple components differ in size");
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += v[j];
    }
    return u;
}

int second_primitive_subsequence(const Seq& u, int i, int b) {
    const int n = static_cast<int>(u.size());
    if (i < 0 || i + 1 >= n || u[idx(i)] != u[idx(i + 1)])
        throw PreconditionError("second primitive subsequence: need u_i = u_{i+1}");
    int k = i;
    while (k + 1 < n && u[idx(k + 1)] - u[idx(i)] <= b * (k - i)) ++k;
    return k;
}

DyckTuple gamma(const Seq& u_in, int m) {
    Seq u = u_in;
    const int n = static_cast<int>(u.size());
    std::vector<Seq> parts(idx(m));
    for (int b = m; b >= 2; --b) {
        Seq l(idx(n));
        for (int i = 0; i < n; ++i) {
            if (i == n - 1 || u[idx(i)] != u[idx(i + 1)]) {
                l[idx(i)] = u[idx(i)];
            } else {
                const int k = second_primitive_subsequence(u, i, b);
                l[idx(i)] = u[idx(i)] + b * (k - i);
            }
        }
        Seq up(idx(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (l[idx(j)] < l[idx(i)]) ++up[idx(i)];
        for (int i = 0; i < n; ++i) u[idx(i)] -= up[idx(i)];
        parts[idx(b - 1)] = up;
    }
    if (m >= 1) parts[0] = u;
    DyckTuple out;
    for (const Seq& p : parts) out.push_back(step_seq_paren(p));
    return out;
}

bool is_admissible(const DyckTuple& t) {
    if (t.empty()) return false;
    for (const std::string& q : t)
        if (q.size() != t[0].size() || !is_paren_dyck(q)) return false;
    const Seq u = beta(t);
    const int m = static_cast<int>(t.size());
    if (!is_step_seq(Slope(1, m), static_cast<int>(u.size()), u)) return false;
    return gamma(u, m) == t;
}

std::vector<DyckTuple> chain_tuples(int m, int n) {
    std::vector<Seq> dyck = enumerate_step_seqs(Slope(1, 1), n);
    std::vector<DyckTuple> out;
    DyckTuple cur;
    std::function<void(const Seq*)> rec = [&](const Seq* prev) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            charge_budget(out.size(), "tuples");
            return;
        }
        for (const Seq& u : dyck) {
            if (prev) {
                bool ok = true;
                for (std::size_t j = 0; j < u.size(); ++j) ok = ok && (*prev)[j] <= u[j];
                if (!ok) continue;
            }
            cur.push_back(step_seq_paren(u));
            rec(&u);
            cur.pop_back();
        }
    };
    rec(nullptr);
    return out;
}

std::vector<DyckTuple> admissible_tuples(int m, int n) {
    std::vector<DyckTuple> out;
    for (const DyckTuple& t : chain_tuples(m, n))
        if (is_admissible(t)) out.push_back(t);
    return out;
}

ParenPres paren_from_tuple(const DyckTuple& t) {
    if (t.empty()) throw InvalidObject("empty tuple");
    const int m = static_cast<int>(t.size());
    const Seq sn = beta(t);
    const int n = static_cast<int>(sn.size());
    const int stars = n * m;
    std::vector<int> opens(idx(stars) + 1, 0);
    for (int x : sn) {
        if (x < 0 || x > stars) throw InvalidObject("tuple has no presentation");
        ++opens[idx(x)];
    }
    struct Open {
        int stars;
        bool filled;
    };
    std::vector<Open> stack;
    ParenPres out;
    auto close_top = [&] {
        if (stack.back().stars != m) throw InvalidObject("tuple is not admissible");
        out += ')';
        stack.pop_back();
    };
    for (int g = 0; g <= stars; ++g) {
        for (int k = 0; k < opens[idx(g)]; ++k) {
            while (!stack.empty() && stack.back().filled) close_top();
            if (!stack.empty()) stack.back().filled = true;
            else if (!out.empty()) throw InvalidObject("tuple is not admissible");
            out += '(';
            stack.push_back({0, false});
        }
        if (g == stars) break;
        while (!stack.empty() && stack.back().stars == m) close_top();
        if (stack.empty()) throw InvalidObject("tuple is not admissible");
        ++stack.back().stars;
        stack.back().filled = false;
        out += '*';
    }
    while (!stack.empty()) close_top();
    if (alpha_I(out, m) != t) throw InvalidObject("tuple is not admissible");
    return out;
}

Seq u_from_postorder(const DyckTuple& t) {
    if (t.empty()) return {};
    const std::size_t n = t[0].size() / 2;
    Seq u(n, 0);
    for (const std::string& q : t) {
        const Perm w = postorder_word_of_identity_preorder(q);
        std::vector<std::size_t> pos(n + 1);
        for (std::size_t k = 0; k < w.size(); ++k) pos[idx(w[k])] = k;
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k < j; ++k)
                if (pos[k] < pos[j]) ++u[j - 1];
    }
    return u;
}

std::vector<DyckTuple> type_II_to_I(const StirlingPerm& pi) {
    const int b = pi.b();
    const ParenPres pp = alpha_star(pi);
    const std::vector<Token> target = labels_I(pp);
    std::vector<Token> cur = labels_II(pp, b);
    std::vector<DyckTuple> trace{tuple_from_labels(cur, b)};
    for (;;) {
        std::size_t p = 0;
        while (p < cur.size() && (cur[p].kind != '*' || cur[p].label == target[p].label)) ++p;
        if (p == cur.size()) break;
        std::size_t q = p + 1;
        while (q < cur.size() &&
               !(cur[q].kind == '*' && cur[q].node == cur[p].node && cur[q].label == target[p].label))
            ++q;
        if (q == cur.size()) throw std::logic_error("type II to I: no partner star");
        std::swap(cur[p].label, cur[q].label);
        trace.push_back(tuple_from_labels(cur, b));
    }
    return trace;
}

YoungData interleave_and_circle(const DyckTuple& t) {
    YoungData d;
    const int b = static_cast<int>(t.size());
    if (b == 0) return d;
    const std::size_t len = t[0].size();
    for (std::size_t q = 0; q < len; ++q)
        for (int p = 1; p <= b; ++p) d.interleaved += paren_to_ne(t[idx(b - p)])[q];
    const Seq u = word_to_step_seq(d.interleaved);
    for (auto it = u.rbegin(); it != u.rend(); ++it)
        if (*it > 0) d.lambda.push_back(*it);
    if (d.lambda.empty()) return d;
    Seq per_col(idx(d.lambda[0]), 0);
    for (std::size_t r = 0; r < d.lambda.size(); ++r)
        for (int c = 0; c < d.lambda[r]; ++c)
            if (hook_length(d.lambda, static_cast<int>(r), c) % b == 0) ++per_col[idx(c)];
    for (int x : per_col)
        if (x > 0) d.circled.push_back(x);
    if (!d.circled.empty()) {
        const int top = *std::max_element(d.circled.begin(), d.circled.end());
        for (int k = 0; k < top; ++k) {
            int cnt = 0;
            for (int x : d.circled)
                if (x > k) ++cnt;
            d.transpose.push_back(cnt);
        }
    }
    return d;
}

int hook_length(const Seq& lambda, int r, int c) {
    if (r < 0 || r >= static_cast<int>(lambda.size()) || c < 0 || c >= lambda[idx(r)])
        throw PreconditionError("hook length: box outside the diagram");
    int leg = 0;
    for (std::size_t k = idx(r) + 1; k < lambda.size() && lambda[k] > c; ++k) ++leg;
    return lambda[idx(r)] - c - 1 + leg + 1;
}

std::vector<Seq> gamma_II(const Seq& u_in, int b) {
    Seq u = u_in;
    std::vector<Seq> out(idx(b));
    for (int i = b; i >= 1; --i) {
        Seq p(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) p[j] = (u[j] + i - 1) / i;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] -= p[j];
        out[idx(i - 1)] = p;
    }
    return out;
}

std::string enlarged_bar(const std::string& w, int b) {
    std::string out;
    long balance = 0;
    for (char c : w) {
        if (c == 'N') {
            out.append(idx(b), 'N');
            balance += b;
        } else {
            out += 'E';
            --balance;
        }
    }
    if (balance > 0) out.append(static_cast<std::size_t>(balance), 'E');
    return out;
}

std::vector<std::string> bar_components(const std::string& w, int b) {
    const std::string bar = enlarged_bar(w, b);
    std::vector<std::string> out;
    for (int i = 1; i <= b; ++i) {
        std::string c;
        for (std::size_t k = idx(b - i); k < bar.size(); k += idx(b)) c += bar[k];
        out.push_back(c);
    }
    return out;
}

std::string rotate_dyck(const std::string& q, int i, int m) {
    const int len = static_cast<int>(q.size());
    if (i < 0 || m < 0 || i + 2 * m >= len || q[idx(i)] != ')' || q[idx(i + 1)] != '(')
        throw PreconditionError("dyck rotation: need ')' then '(' and room for the block");
    return q.substr(0, idx(i)) + q.substr(idx(i + 1), idx(2 * m)) + q[idx(i)] + q.substr(idx(i + 2 * m + 1));
}

bool is_admissible_rotation(const std::string& q, int i, int m) {
    if (i < 0 || m < 1 || i + 2 * m >= static_cast<int>(q.size())) return false;
    if (q[idx(i)] != ')' || q[idx(i + 1)] != '(') return false;
    return is_paren_dyck(q.substr(idx(i + 1), idx(2 * m)));
}

bool is_irreducible_rotation(const std::string& q, int i, int m) {
    if (!is_admissible_rotation(q, i, m)) return false;
    int depth = 0;
    for (int k = 0; k < 2 * m; ++k) {
        depth += q[idx(i + 1 + k)] == '(' ? 1 : -1;
        if (depth == 0 && k + 1 < 2 * m) return false;
    }
    return true;
}

namespace {

struct RotationPlan {
    ParenPres result;
    std::vector<std::size_t> crossed;  // star positions stepped over, right to left
    int moved_pairs = 0;
};

bool plan_rotation(const ParenPres& pp, int i, int a, RotationPlan& plan) {
    const std::vector<Token> toks = base_tokens(pp);
    std::size_t e = toks.size(), c = toks.size(), last_own = toks.size();
    for (std::size_t k = 0; k < toks.size(); ++k) {
        if (toks[k].node != i) continue;
        if (toks[k].kind == '(') e = k;
        else if (toks[k].kind == ')') c = k;
        else last_own = k;
    }
    if (e == toks.size() || last_own == toks.size()) return false;
    const std::string x = pp.substr(e, last_own + 1 - e) + ")";
    const std::string tj = pp.substr(last_own + 1, c - last_own - 1);
    const std::string s = pp.substr(0, e) + pp.substr(c + 1);
    std::size_t g = e;
    plan.crossed.clear();
    for (int t = 0; t < a; ++t) {
        if (g == 0 || s[g - 1] != '*') return false;
        --g;
        plan.crossed.push_back(g);
        while (g > 0 && s[g - 1] == ')') --g;
    }
    plan.result = s.substr(0, g) + x + s.substr(g, e - g) + tj + s.substr(e);
    plan.moved_pairs = static_cast<int>(std::count(x.begin(), x.end(), '('));
    return true;
}

}  // namespace

bool paren_rotation_applies(const ParenPres& pp, int i, int a) {
    RotationPlan plan;
    return plan_rotation(pp, i, a, plan);
}

ParenPres rotate_paren(const ParenPres& pp, int i, int a) {
    RotationPlan plan;
    if (!plan_rotation(pp, i, a, plan)) throw PreconditionError("paren rotation does not apply");
    return plan.result;
}

DyckTuple rotate_tuple(const DyckTuple& t, const ParenPres& pp, int i, int a) {
    RotationPlan plan;
    if (!plan_rotation(pp, i, a, plan)) throw PreconditionError("tuple rotation does not apply");
    const std::vector<Token> toks = labels_I(pp);
    DyckTuple out = t;
    for (std::size_t s : plan.crossed) {
        const int l = toks[s].label;
        if (l < 1 || l > static_cast<int>(out.size())) throw InvalidObject("tuple too short for presentation");
        int r = 0;
        for (std::size_t k = 0; k <= s; ++k)
            if (toks[k].kind == '*' && toks[k].label == l) ++r;
        std::string& q = out[idx(l - 1)];
        int seen = 0;
        std::size_t pos = 0;
        for (; pos < q.size(); ++pos)
            if (q[pos] == ')' && ++seen == r) break;
        q = rotate_dyck(q, static_cast<int>(pos), plan.moved_pairs);
    }
    return out;
}

}  // namespace rdk
