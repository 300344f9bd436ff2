#include "rdk/strips.hpp"

namespace rdk {

namespace {
constexpr std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::vector<Seq> deal(const Seq& s, int repeat, int hands) {
    Seq rep;
    for (int x : s) rep.insert(rep.end(), idx(repeat), x);
    std::vector<Seq> out(idx(hands));
    for (std::size_t k = 0; k < rep.size(); ++k) out[k % idx(hands)].push_back(rep[k]);
    return out;
}
}  // namespace

std::vector<Seq> delta(const DyckWord& p) {
    return deal(word_to_height_seq(p), p.slope().a, p.slope().b);
}

std::vector<Seq> theta(const DyckWord& p) {
    return deal(word_to_step_seq(p), p.slope().b, p.slope().a);
}

std::string enlarge(const DyckWord& p) {
    std::string out;
    for (char c : p.steps()) out.append(idx(c == 'N' ? p.slope().b : p.slope().a), c);
    return out;
}

std::vector<std::string> interleave_extract(const std::string& w, int r) {
    std::vector<std::string> out(idx(r));
    for (std::size_t k = 0; k < w.size(); ++k) out[k % idx(r)] += w[k];
    return out;
}

Seq u_prime(const DyckWord& p, Reference q) {
    Seq u = word_to_step_seq(p);
    if (q == Reference::highest) return u;
    const Seq u0 = lowest_step_seq(p.slope(), p.n());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = u0[k] - u[k];
    return u;
}

std::vector<Seq> v_sequences(const DyckWord& p, Reference q) {
    const int a = p.slope().a, b = p.slope().b;
    Seq rem = u_prime(p, q);
    for (int& x : rem) x *= a;
    std::vector<Seq> out;
    for (int i = 1; i <= b; ++i) {
        const int parts = b - i + 1;
        Seq v(rem.size());
        for (std::size_t k = 0; k < rem.size(); ++k) {
            v[k] = (rem[k] + parts - 1) / parts;
            rem[k] -= v[k];
        }
        out.push_back(std::move(v));
    }
    return out;
}

Perm eta(const Seq& v) {
    const int n = static_cast<int>(v.size());
    Perm pool;
    for (int k = 1; k <= n; ++k) pool.push_back(k);
    Perm w(idx(n));
    for (int i = n - 1; i >= 0; --i) {
        const int x = v[idx(i)];
        if (x < 0 || x >= static_cast<int>(pool.size())) throw PreconditionError("eta: entry too large");
        w[idx(i)] = pool[idx(x)];
        pool.erase(pool.begin() + x);
    }
    return w;
}

Perm inverse_perm(const Perm& w) {
    Perm r(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) r[idx(w[k] - 1)] = static_cast<int>(k) + 1;
    return r;
}

StirlingPerm mu(const DyckWord& p, Reference q) {
    const int b = p.slope().b;
    std::vector<Perm> ws;
    for (const Seq& v : v_sequences(p, q)) ws.push_back(inverse_perm(eta(v)));
    Perm out;
    const std::size_t len = ws.empty() ? 0 : ws[0].size();
    for (std::size_t k = 0; k < len; ++k)
        for (int j = 0; j < b; ++j) out.push_back(ws[idx(j)][k]);
    return StirlingPerm(b, std::move(out));
}

}  // namespace rdk
