#include "rdk/stirling.hpp"

#include <algorithm>
#include <set>

namespace rdk {

bool is_stirling(int b, const Perm& p) {
    if (b < 1 || p.size() % static_cast<std::size_t>(b) != 0) return false;
    const int n = static_cast<int>(p.size()) / b;
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int x : p) {
        if (x < 1 || x > n) return false;
        ++count[static_cast<std::size_t>(x)];
    }
    for (int v = 1; v <= n; ++v)
        if (count[static_cast<std::size_t>(v)] != b) return false;
    // Stack of values whose copies have started but not finished; it stays
    // increasing exactly when the nesting condition holds.
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> open;
    for (int x : p) {
        if (!open.empty() && open.back() > x) return false;
        if (open.empty() || open.back() != x) {
            if (seen[static_cast<std::size_t>(x)] != 0) return false;
            open.push_back(x);
        }
        ++seen[static_cast<std::size_t>(x)];
        if (seen[static_cast<std::size_t>(x)] == b) open.pop_back();
    }
    return open.empty();
}

StirlingPerm::StirlingPerm(int b, Perm entries) : b_(b), entries_(std::move(entries)) {
    if (!is_stirling(b, entries_)) throw InvalidObject("not a " + std::to_string(b) + "-Stirling permutation");
    n_ = static_cast<int>(entries_.size()) / b;
}

StirlingPerm zeta(const Seq& u, int b) {
    Perm s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int pos = u[i];
        if (pos < 0 || pos > static_cast<int>(s.size()))
            throw PreconditionError("zeta: insertion position out of range");
        s.insert(s.begin() + pos, static_cast<std::size_t>(b), static_cast<int>(i) + 1);
    }
    return StirlingPerm(b, std::move(s));
}

StirlingPerm zeta_g(const Seq& u, boost::rational<long> g, int b) {
    Seq scaled;
    for (int x : u) {
        boost::rational<long> v = g * static_cast<long>(x);
        if (v.denominator() != 1) throw PreconditionError("zeta_g: non-integral scaling");
        scaled.push_back(static_cast<int>(v.numerator()));
    }
    return zeta(scaled, b);
}

Seq zeta_inverse(const StirlingPerm& pi) {
    Seq u;
    for (int i = 1; i <= pi.n(); ++i) {
        int pos = 0;
        for (int x : pi.entries()) {
            if (x == i) break;
            if (x < i) ++pos;
        }
        u.push_back(pos);
    }
    return u;
}

bool avoids_312(const Perm& p) {
    // For each middle j, look for a larger entry before it and an entry after
    // it that lies strictly between.
    const std::size_t len = p.size();
    int prefix_max = 0;
    for (std::size_t j = 0; j < len; ++j) {
        if (j > 0) prefix_max = std::max(prefix_max, p[j - 1]);
        for (std::size_t k = j + 1; k < len; ++k)
            if (p[j] < p[k] && p[k] < prefix_max) return false;
    }
    return true;
}

StirlingPerm young_cover_chi(const StirlingPerm& pi, int i) {
    const Perm& p = pi.entries();
    const int len = static_cast<int>(p.size());
    if (i < 0 || i + 1 >= len || p[static_cast<std::size_t>(i)] >= p[static_cast<std::size_t>(i + 1)])
        throw PreconditionError("chi: need pi_i < pi_{i+1}");
    const int r = p[static_cast<std::size_t>(i)];
    // s: the minimal value > r whose next occurrence after i precedes the next r.
    int next_r = len;
    for (int t = i + 1; t < len; ++t)
        if (p[static_cast<std::size_t>(t)] == r) { next_r = t; break; }
    int s = 0;
    for (int t = i + 1; t < next_r; ++t) {
        int v = p[static_cast<std::size_t>(t)];
        if (v > r && (s == 0 || v < s)) s = v;
    }
    if (s == 0) throw PreconditionError("chi: no block to shift");
    std::vector<std::size_t> pos;
    int k = -1;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (p[t] != r && p[t] != s) continue;
        if (p[t] == s && k < 0) k = static_cast<int>(pos.size());
        pos.push_back(t);
    }
    const int b = pi.b();
    // r^k s^b r^(b-k) -> r^(k-1) s^b r^(b-k+1)
    Perm out = p;
    std::size_t idx = 0;
    for (int t = 0; t < k - 1; ++t) out[pos[idx++]] = r;
    for (int t = 0; t < b; ++t) out[pos[idx++]] = s;
    while (idx < pos.size()) out[pos[idx++]] = r;
    return StirlingPerm(b, std::move(out));
}

std::vector<StirlingPerm> chi_covers(const StirlingPerm& pi) {
    std::set<StirlingPerm> out;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] < pi[i + 1]) out.insert(young_cover_chi(pi, static_cast<int>(i)));
    return {out.begin(), out.end()};
}

StirlingPerm rotation_cover_stirling(const StirlingPerm& pi, int i) {
    const Perm& p = pi.entries();
    const std::size_t len = p.size();
    const auto ui = static_cast<std::size_t>(i);
    if (i < 0 || ui + 1 >= len || p[ui] >= p[ui + 1])
        throw PreconditionError("stirling rotation: need pi_i < pi_{i+1}");
    std::size_t e = ui + 1;
    while (e < len && p[e] > p[ui]) ++e;
    const int s = *std::min_element(p.begin() + static_cast<long>(ui) + 1, p.begin() + static_cast<long>(e));
    std::size_t j = ui + 1;
    for (std::size_t t = ui + 1; t < e; ++t)
        if (p[t] == s) j = t;
    Perm out(p.begin(), p.begin() + static_cast<long>(ui));
    out.insert(out.end(), p.begin() + static_cast<long>(ui) + 1, p.begin() + static_cast<long>(j) + 1);
    out.push_back(p[ui]);
    out.insert(out.end(), p.begin() + static_cast<long>(j) + 1, p.end());
    return StirlingPerm(pi.b(), std::move(out));
}

std::vector<StirlingPerm> stirling_rotation_covers(const StirlingPerm& pi) {
    std::set<StirlingPerm> out;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] < pi[i + 1]) out.insert(rotation_cover_stirling(pi, static_cast<int>(i)));
    return {out.begin(), out.end()};
}

std::vector<StirlingPerm> enumerate_stirling(int n, int b) {
    std::vector<Perm> cur{Perm{}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Perm> next;
        for (const Perm& s : cur)
            for (std::size_t pos = 0; pos <= s.size(); ++pos) {
                Perm t = s;
                t.insert(t.begin() + static_cast<long>(pos), static_cast<std::size_t>(b), i);
                next.push_back(std::move(t));
                charge_budget(next.size(), "stirling permutations");
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    std::vector<StirlingPerm> out;
    out.reserve(cur.size());
    for (Perm& p : cur) out.emplace_back(b, std::move(p));
    return out;
}

std::string to_string(const StirlingPerm& pi, bool force_commas) {
    const bool commas = force_commas || pi.n() > 9;
    std::string out;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (commas && i) out += ',';
        out += std::to_string(pi[i]);
    }
    return out;
}

Perm parse_perm(const std::string& text) {
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) return parse_seq(text);
    Perm out;
    for (char c : text) {
        if (c < '0' || c > '9') throw InvalidObject(std::string("bad permutation symbol '") + c + "'");
        out.push_back(c - '0');
    }
    return out;
}

StirlingPerm parse_stirling(const std::string& text, int b) { return StirlingPerm(b, parse_perm(text)); }

}  // namespace rdk
