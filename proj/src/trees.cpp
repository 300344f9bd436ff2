#include "rdk/trees.hpp"

#include <functional>

namespace rdk {

PlaneTree dyck_to_plane_tree(const std::string& q) {
    const std::string w = paren_to_ne(q);
    if (!is_dyck_word(Slope(1, 1), static_cast<int>(w.size() / 2), w))
        throw InvalidObject("not a Dyck word: " + q);
    PlaneTree t;
    t.children.emplace_back();
    std::vector<int> stack{0};
    for (char c : w) {
        if (c == 'N') {
            const int v = static_cast<int>(t.children.size());
            t.children.emplace_back();
            t.children[static_cast<std::size_t>(stack.back())].push_back(v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return t;
}

std::string plane_tree_to_dyck(const PlaneTree& t) {
    std::string out;
    std::function<void(int)> rec = [&](int v) {
        for (int c : t.children[static_cast<std::size_t>(v)]) {
            out += 'N';
            rec(c);
            out += 'E';
        }
    };
    if (!t.children.empty()) rec(0);
    return out;
}

Perm postorder_word_of_identity_preorder(const std::string& q) {
    Perm post;
    std::vector<int> stack;
    int next = 0;
    for (char c : paren_to_ne(q)) {
        if (c == 'N') stack.push_back(++next);
        else {
            post.push_back(stack.back());
            stack.pop_back();
        }
    }
    return post;
}

Perm preorder_word_of_postorder_labels(const std::string& q) {
    const std::string w = paren_to_ne(q);
    std::vector<int> pre, stack;
    std::vector<int> post_label(w.size() / 2 + 1, 0);
    int opened = 0, closed = 0;
    for (char c : w) {
        if (c == 'N') {
            stack.push_back(++opened);
            pre.push_back(opened);
        } else {
            post_label[static_cast<std::size_t>(stack.back())] = ++closed;
            stack.pop_back();
        }
    }
    Perm out;
    for (int e : pre) out.push_back(post_label[static_cast<std::size_t>(e)]);
    return out;
}

AryTree xi(const StirlingPerm& pi) {
    AryTree t;
    t.b = pi.b();
    const int n = pi.n();
    t.children.assign(static_cast<std::size_t>(n) + 1, {});
    const Seq u = zeta_inverse(pi);
    std::vector<Leaf> lv;
    for (int i = 1; i <= n; ++i) {
        t.children[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(t.b) + 1, 0);
        std::vector<Leaf> fresh;
        for (int s = 0; s <= t.b; ++s) fresh.push_back({i, s});
        if (i == 1) {
            t.root = 1;
            lv = fresh;
            continue;
        }
        // Node i hangs at the leaf preceded by u_i symbols of the smaller labels.
        const auto x = static_cast<std::size_t>(u[static_cast<std::size_t>(i - 1)]);
        const Leaf at = lv[x];
        t.children[static_cast<std::size_t>(at.node)][static_cast<std::size_t>(at.slot)] = i;
        lv.erase(lv.begin() + static_cast<long>(x));
        lv.insert(lv.begin() + static_cast<long>(x), fresh.begin(), fresh.end());
    }
    return t;
}

StirlingPerm xi_inverse(const AryTree& t) {
    Perm out;
    std::function<void(int)> rec = [&](int v) {
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < ch.size(); ++s) {
            if (s > 0) out.push_back(v);
            if (ch[s] != 0) rec(ch[s]);
        }
    };
    if (t.root != 0) rec(t.root);
    return StirlingPerm(t.b, std::move(out));
}

std::vector<Leaf> leaves(const AryTree& t) {
    std::vector<Leaf> out;
    std::function<void(int)> rec = [&](int v) {
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < ch.size(); ++s) {
            if (ch[s] == 0) out.push_back({v, static_cast<int>(s)});
            else rec(ch[s]);
        }
    };
    if (t.root != 0) rec(t.root);
    return out;
}

namespace {

Leaf parent_slot(const AryTree& t, int i) {
    for (int v = 1; v <= t.n(); ++v) {
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < ch.size(); ++s)
            if (ch[s] == i) return {v, static_cast<int>(s)};
    }
    return {0, 0};
}

// Returns false when r_i acts as the identity; otherwise applies it to t.
bool apply_rotation(AryTree& t, int i) {
    if (i < 2 || i > t.n()) return false;
    const Leaf par = parent_slot(t, i);
    if (par.node == 0 || par.slot == 0) return false;
    auto& slot = t.children[static_cast<std::size_t>(par.node)][static_cast<std::size_t>(par.slot)];
    slot = 0;
    const std::vector<Leaf> lv = leaves(t);
    std::size_t x = 0;
    while (!(lv[x] == par)) ++x;
    if (x == 0 || lv[x - 1].node > i) {
        slot = i;
        return false;
    }
    const Leaf h = lv[x - 1];
    auto& ci = t.children[static_cast<std::size_t>(i)];
    const int j = ci[static_cast<std::size_t>(t.b)];
    ci[static_cast<std::size_t>(t.b)] = 0;
    t.children[static_cast<std::size_t>(h.node)][static_cast<std::size_t>(h.slot)] = i;
    slot = j;
    return true;
}

}  // namespace

AryTree tree_rotation(const AryTree& t, int i) {
    AryTree out = t;
    if (!apply_rotation(out, i)) return t;
    return out;
}

bool tree_rotation_applies(const AryTree& t, int i) {
    AryTree tmp = t;
    return apply_rotation(tmp, i);
}

std::string walk_word(const AryTree& t) {
    std::string out;
    std::function<void(int)> rec = [&](int v) {
        out += '(';
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < ch.size(); ++s) {
            if (s > 0) out += '*';
            if (ch[s] != 0) rec(ch[s]);
        }
        out += ')';
    };
    if (t.root != 0) rec(t.root);
    return out;
}

AryTree ary_tree_from_walk(const std::string& pp, int b) {
    AryTree t;
    t.b = b;
    t.children.emplace_back();
    struct Open {
        int node;
        int slot;
        bool filled;
    };
    std::vector<Open> stack;
    bool done = false;
    for (char c : pp) {
        if (done) throw InvalidObject("trailing tokens after the root closes");
        if (c == '(') {
            const int v = static_cast<int>(t.children.size());
            t.children.emplace_back(static_cast<std::size_t>(b) + 1, 0);
            if (stack.empty()) {
                t.root = v;
            } else {
                Open& top = stack.back();
                if (top.filled) throw InvalidObject("two subtrees in one slot");
                t.children[static_cast<std::size_t>(top.node)][static_cast<std::size_t>(top.slot)] = v;
                top.filled = true;
            }
            stack.push_back({v, 0, false});
        } else if (c == '*') {
            if (stack.empty()) throw InvalidObject("star outside every pair");
            Open& top = stack.back();
            if (top.slot == b) throw InvalidObject("too many stars in a pair");
            ++top.slot;
            top.filled = false;
        } else if (c == ')') {
            if (stack.empty()) throw InvalidObject("unbalanced ')'");
            if (stack.back().slot != b) throw InvalidObject("pair does not hold b stars");
            stack.pop_back();
            done = stack.empty();
        } else {
            throw InvalidObject(std::string("bad token '") + c + "'");
        }
    }
    if (!stack.empty()) throw InvalidObject("unbalanced '('");
    return t;
}

std::string ary_tree_to_dot(const AryTree& t) {
    std::string out = "digraph arytree {\n  node [shape=circle];\n";
    int leaf = 0;
    for (int v = 1; v <= t.n(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < ch.size(); ++s) {
            if (ch[s] != 0) {
                out += "  v" + std::to_string(v) + " -> v" + std::to_string(ch[s]) + ";\n";
            } else {
                const std::string id = "l" + std::to_string(leaf++);
                out += "  " + id + " [shape=point];\n  v" + std::to_string(v) + " -> " + id + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string plane_tree_to_dot(const PlaneTree& t) {
    std::string out = "digraph planetree {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < t.children.size(); ++v)
        for (int c : t.children[v])
            out += "  p" + std::to_string(v) + " -> p" + std::to_string(c) + " [label=\"" + std::to_string(c) +
                   "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace rdk
