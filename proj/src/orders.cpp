#include "rdk/orders.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"
#include <set>

namespace rdk {

int primitive_subsequence(const Seq& u, int i, Slope s) {
    const int len = static_cast<int>(u.size());
    if (i < 0 || i >= len) throw PreconditionError("primitive subsequence: position out of range");
    int k = i;
    while (k + 1 < len &&
           static_cast<long>(s.a) * (u[static_cast<std::size_t>(k + 1)] - u[static_cast<std::size_t>(i)]) <
               static_cast<long>(s.b) * (k + 1 - i))
        ++k;
    return k;
}

namespace {
std::vector<Seq> sorted_unique(std::set<Seq> s) { return {s.begin(), s.end()}; }
}  // namespace

std::vector<Seq> rotation_covers(Slope s, const Seq& u) {
    std::set<Seq> out;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i - 1] >= u[i]) continue;
        int k = primitive_subsequence(u, static_cast<int>(i), s);
        Seq v = u;
        for (int j = static_cast<int>(i); j <= k; ++j) --v[static_cast<std::size_t>(j)];
        out.insert(v);
    }
    return sorted_unique(out);
}

std::vector<Seq> rotation_covers(const DyckWord& p) {
    return rotation_covers(p.slope(), word_to_step_seq(p));
}

std::vector<Seq> rotation_covers_hor(const DyckWord& p, const DyckWord& p0) {
    Seq u0 = word_to_step_seq(p0);
    // hor is evaluated at points with y up to an; extend u0 by bn there.
    u0.push_back(p.slope().b * p.n());
    const auto pts = p.points();
    const std::string& w = p.steps();
    auto hor = [&](Point q) { return u0[static_cast<std::size_t>(q.y)] - q.x; };
    std::set<Seq> out;
    for (std::size_t t = 1; t < w.size(); ++t) {
        if (w[t - 1] != 'E' || w[t] != 'N') continue;
        const int h = hor(pts[t]);
        for (std::size_t q = t + 1; q < pts.size(); ++q) {
            if (hor(pts[q]) != h) continue;
            std::string nw = w.substr(0, t - 1) + w.substr(t, q - t) + "E" + w.substr(q);
            out.insert(word_to_step_seq(nw));
            break;
        }
    }
    return sorted_unique(out);
}

std::vector<Seq> young_covers(const Seq& u) {
    std::set<Seq> out;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i - 1] >= u[i]) continue;
        Seq v = u;
        --v[i];
        out.insert(v);
    }
    return sorted_unique(out);
}

std::vector<Seq> young_covers(const DyckWord& p) { return young_covers(word_to_step_seq(p)); }

bool young_leq(const Seq& lower, const Seq& upper) {
    if (lower.size() != upper.size()) return false;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] < upper[i]) return false;
    return true;
}

std::vector<Seq> young_chain(const Seq& u, const Seq& target) {
    if (!young_leq(u, target)) throw PreconditionError("young chain: target is not above the start");
    std::vector<Seq> chain{u};
    Seq cur = u;
    while (cur != target) {
        // The lowest differing index is always decrementable: u[i-1] = target[i-1] <= target[i] < u[i].
        std::size_t i = 0;
        while (cur[i] == target[i]) ++i;
        --cur[i];
        chain.push_back(cur);
    }
    return chain;
}

Poset build_poset(Slope s, int n, OrderKind kind) {
    Poset p;
    p.slope = s;
    p.n = n;
    p.elements = enumerate_step_seqs(s, n);
    std::sort(p.elements.begin(), p.elements.end());
    std::map<Seq, int> index;
    for (std::size_t i = 0; i < p.elements.size(); ++i) index[p.elements[i]] = static_cast<int>(i);
    const DyckWord p0 = lowest_path(s, n);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const Seq& u = p.elements[i];
        std::vector<Seq> cov;
        switch (kind) {
            case OrderKind::young: cov = young_covers(u); break;
            case OrderKind::rotation: cov = rotation_covers(s, u); break;
            case OrderKind::rotation_hor: cov = rotation_covers_hor(step_seq_to_word(s, n, u), p0); break;
        }
        for (const Seq& v : cov) p.covers.emplace_back(static_cast<int>(i), index.at(v));
        charge_budget(p.covers.size(), "poset covers");
    }
    return p;
}

bool poset_leq(const Poset& p, int lower, int upper) {
    std::vector<std::vector<int>> up(p.elements.size());
    for (auto [x, y] : p.covers) up[static_cast<std::size_t>(x)].push_back(y);
    std::vector<char> seen(p.elements.size(), 0);
    std::vector<int> stack{lower};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == upper) return true;
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        for (int w : up[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
    return false;
}

std::string poset_to_dot(const Poset& p) {
    std::string out = "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"(" + seq_to_string(p.elements[i]) + ")\"];\n";
    for (auto [x, y] : p.covers)
        out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    out += "}\n";
    return out;
}

std::string poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["a"] = p.slope.a;
    j["b"] = p.slope.b;
    j["n"] = p.n;
    j["elements"] = p.elements;
    nlohmann::json cov = nlohmann::json::array();
    for (auto [x, y] : p.covers) cov.push_back({x, y});
    j["covers"] = cov;
    return j.dump();
}

}  // namespace rdk
