#include "rdk/bintrees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rdk/orders.hpp"

namespace rdk {

namespace {
constexpr std::size_t idx(int v) { return static_cast<std::size_t>(v); }
}  // namespace

int BinaryTree::add_node() {
    left.push_back(-1);
    right.push_back(-1);
    return static_cast<int>(left.size()) - 1;
}

std::vector<WalkStep> walk(const BinaryTree& t) {
    std::vector<WalkStep> out;
    std::function<void(int)> rec = [&](int v) {
        if (int l = t.left[idx(v)]; l >= 0) {
            out.push_back({'1', l});
            rec(l);
            out.push_back({'!', l});
        }
        if (int r = t.right[idx(v)]; r >= 0) {
            out.push_back({'2', r});
            rec(r);
            out.push_back({'@', r});
        }
    };
    rec(0);
    return out;
}

std::string omega(const BinaryTree& t) {
    std::string out;
    for (const WalkStep& s : walk(t)) out += s.letter;
    return out;
}

std::string omega1(const BinaryTree& t) {
    std::string out;
    for (const WalkStep& s : walk(t)) {
        if (s.letter == '!') out += 'N';
        else if (s.letter == '@') out += 'E';
    }
    return out;
}

std::string omega2(const BinaryTree& t) {
    std::string out;
    for (const WalkStep& s : walk(t)) {
        if (s.letter == '!') out += 'N';
        else if (s.letter == '2') out += 'E';
    }
    return out;
}

bool same_shape(const BinaryTree& s, const BinaryTree& t) {
    std::function<bool(int, int)> rec = [&](int x, int y) {
        if ((x < 0) != (y < 0)) return false;
        if (x < 0) return true;
        return rec(s.left[idx(x)], t.left[idx(y)]) && rec(s.right[idx(x)], t.right[idx(y)]);
    };
    return rec(0, 0);
}

BinaryTree tr(const std::string& w) {
    std::vector<std::pair<int, int>> runs;
    for (std::size_t k = 0; k < w.size();) {
        int i = 0, j = 0;
        while (k < w.size() && w[k] == 'N') ++i, ++k;
        while (k < w.size() && w[k] == 'E') ++j, ++k;
        runs.emplace_back(i, j);
    }
    BinaryTree t;
    int attach = 0;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        int r = attach;
        for (int k = 0; k < it->second; ++k) {
            const int x = t.add_node();
            t.right[idx(r)] = x;
            r = x;
        }
        int l = attach;
        for (int k = 0; k < it->first; ++k) {
            const int x = t.add_node();
            t.left[idx(l)] = x;
            l = x;
        }
        attach = l;
    }
    return t;
}

namespace {

// Swaps the E at k0 with the N at k0+1 in omega1 by regluing four pieces.
void rotate_step(BinaryTree& t, const std::string& cur, const std::string& nxt) {
    std::size_t k0 = 0;
    while (cur[k0] == nxt[k0]) ++k0;
    if (cur[k0] != 'E' || cur[k0 + 1] != 'N' || nxt[k0] != 'N')
        throw std::logic_error("binary rotation: not a Young cover");
    std::vector<int> order;
    for (const WalkStep& s : walk(t))
        if (s.letter == '!' || s.letter == '@') order.push_back(s.edge);
    std::vector<int> parent(t.left.size(), -1);
    for (std::size_t v = 0; v < t.left.size(); ++v) {
        if (t.left[v] >= 0) parent[idx(t.left[v])] = static_cast<int>(v);
        if (t.right[v] >= 0) parent[idx(t.right[v])] = static_cast<int>(v);
    }
    const int ell = order[k0 + 1];
    const int x = parent[idx(ell)];
    const int z = order[k0];
    if (t.left[idx(x)] != ell || t.right[idx(ell)] != z)
        throw std::logic_error("binary rotation: local configuration not found");
    const int yl = t.left[idx(ell)];
    const int zl = t.left[idx(z)], zr = t.right[idx(z)];
    const int arm = t.right[idx(x)];
    t.left[idx(x)] = yl;
    t.right[idx(x)] = z;
    t.left[idx(z)] = ell;
    t.right[idx(z)] = arm;
    t.left[idx(ell)] = zl;
    t.right[idx(ell)] = zr;
}

int count_e(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), 'E')); }

}  // namespace

BinaryTree binary_rotation(const BinaryTree& t, const std::string& target) {
    const std::string cur = omega1(t);
    if (cur == target) return t;
    const Seq uc = word_to_step_seq(cur), ut = word_to_step_seq(target);
    if (cur.size() != target.size() || !young_leq(uc, ut))
        throw PreconditionError("binary rotation: target is not above the current word");
    const std::vector<Seq> chain = young_chain(uc, ut);
    BinaryTree out = t;
    rotate_step(out, cur, raw_step_seq_word(chain[1], count_e(cur)));
    return out;
}

BinaryTree build_BQP(const std::string& q, const std::string& p) {
    const Seq up = word_to_step_seq(p), uq = word_to_step_seq(q);
    if (p.size() != q.size() || count_e(p) != count_e(q) || !young_leq(up, uq))
        throw PreconditionError("B(Q,P) needs P <=_Y Q");
    BinaryTree t = tr(p);
    std::string cur = p;
    const std::vector<Seq> chain = young_chain(up, uq);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const std::string nxt = raw_step_seq_word(chain[k], count_e(p));
        rotate_step(t, cur, nxt);
        cur = nxt;
    }
    return t;
}

BinaryTree subdivide(const BinaryTree& t, int left_parts, int right_parts, int extra_right) {
    BinaryTree s;
    std::function<void(int, int)> rec = [&](int v, int nv) {
        if (int l = t.left[idx(v)]; l >= 0) {
            int x = nv;
            for (int k = 0; k < left_parts; ++k) {
                const int y = s.add_node();
                s.left[idx(x)] = y;
                x = y;
            }
            rec(l, x);
        }
        if (int r = t.right[idx(v)]; r >= 0) {
            int x = nv;
            for (int k = 0; k < right_parts; ++k) {
                const int y = s.add_node();
                s.right[idx(x)] = y;
                x = y;
            }
            rec(r, x);
        }
    };
    rec(0, 0);
    int v = 0;
    while (s.right[idx(v)] >= 0) v = s.right[idx(v)];
    for (int k = 0; k < extra_right; ++k) {
        const int y = s.add_node();
        s.right[idx(v)] = y;
        v = y;
    }
    return s;
}

std::vector<int> postorder_labels(const BinaryTree& t) {
    std::vector<int> lab(t.left.size(), 0);
    int next = 0;
    for (const WalkStep& s : walk(t))
        if (s.letter == '!' || s.letter == '@') lab[idx(s.edge)] = ++next;
    return lab;
}

BinaryTree extract_subtree(const BinaryTree& t, const std::vector<char>& keep) {
    BinaryTree s;
    std::vector<int> stack{0};
    std::vector<char> side{0};
    for (const WalkStep& w : walk(t)) {
        if (!keep[idx(w.edge)]) continue;
        const int top = stack.back();
        switch (w.letter) {
            case '1':
                if (s.left[idx(top)] >= 0 || s.right[idx(top)] >= 0)
                    throw InvalidObject("kept edges do not form a contour");
                stack.push_back(s.add_node());
                s.left[idx(top)] = stack.back();
                side.push_back('L');
                break;
            case '2':
                if (s.right[idx(top)] >= 0) throw InvalidObject("kept edges do not form a contour");
                stack.push_back(s.add_node());
                s.right[idx(top)] = stack.back();
                side.push_back('R');
                break;
            default:
                if (stack.size() < 2 || side.back() != (w.letter == '!' ? 'L' : 'R'))
                    throw InvalidObject("kept edges do not form a contour");
                stack.pop_back();
                side.pop_back();
        }
    }
    return s;
}

std::vector<BinaryTree> extract_subtrees(const BinaryTree& t, int r) {
    const std::vector<int> lab = postorder_labels(t);
    std::vector<BinaryTree> out;
    for (int i = 1; i <= r; ++i) {
        std::vector<char> keep(lab.size(), 0);
        for (std::size_t v = 1; v < lab.size(); ++v) keep[v] = (lab[v] % r) == (i % r);
        out.push_back(extract_subtree(t, keep));
    }
    return out;
}

std::string sharp(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = (c == 'N') ? 'E' : (c == 'E' ? 'N' : c);
    return out;
}

DyckWord sharp(const DyckWord& p) {
    return DyckWord(Slope(p.slope().b, p.slope().a), p.n(), sharp(p.steps()));
}

std::pair<std::vector<std::string>, std::vector<std::string>> d_words(const BinaryTree& t, int b) {
    auto split = [b](const std::string& w) {
        std::vector<std::string> out;
        for (int j = 1; j <= b; ++j) {
            std::string c;
            for (std::size_t k = idx(b - j); k < w.size(); k += idx(b)) c += w[k];
            out.push_back(c);
        }
        return out;
    };
    return {split(omega1(t)), split(omega2(t))};
}

BinaryTree d_tree(const DyckWord& p) {
    const Slope s = p.slope();
    const DyckWord p0 = lowest_path(s, p.n());
    return subdivide(build_BQP(p.steps(), p0.steps()), s.b, 1, (s.a - 1) * s.b * p.n());
}

Duality duality(const DyckWord& p) {
    const Slope s = p.slope();
    const DyckWord p0 = lowest_path(s, p.n());
    Duality d;
    const BinaryTree bt = subdivide(build_BQP(p.steps(), p0.steps()), s.b, s.a);
    for (const BinaryTree& x : extract_subtrees(bt, s.a)) d.b.emplace_back(omega1(x), omega2(x));
    const BinaryTree ct = subdivide(build_BQP(sharp(p.steps()), sharp(p0.steps())), s.a, s.b);
    for (const BinaryTree& x : extract_subtrees(ct, s.a)) d.c.emplace_back(omega1(x), omega2(x));
    return d;
}

std::string binary_tree_to_dot(const BinaryTree& t) {
    std::string out = "digraph bintree {\n  node [shape=point];\n";
    int hidden = 0;
    for (std::size_t v = 0; v < t.left.size(); ++v) {
        const std::string nv = "b" + std::to_string(v);
        for (int side = 0; side < 2; ++side) {
            const int c = side == 0 ? t.left[v] : t.right[v];
            const char* port = side == 0 ? "sw" : "se";
            if (c >= 0) {
                out += "  " + nv + ":" + port + " -> b" + std::to_string(c) + " [dir=none";
                out += side == 0 ? ", label=\"L\"" : ", label=\"R\"";
                out += "];\n";
            } else {
                const std::string h = "h" + std::to_string(hidden++);
                out += "  " + h + " [style=invis];\n  " + nv + " -> " + h + " [style=invis];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace rdk
