#include "rdk/paths.hpp"

#include <numeric>
#include <sstream>

namespace rdk {

Slope::Slope(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1) throw InvalidObject("slope entries must be positive");
    if (std::gcd(a, b) != 1) throw InvalidObject("slope entries must be coprime");
}

bool is_dyck_word(Slope s, int n, std::string_view w) {
    if (n < 0 || w.size() != static_cast<std::size_t>((s.a + s.b) * n)) return false;
    long nn = 0, ne = 0;
    for (char c : w) {
        if (c == 'N') ++nn;
        else if (c == 'E') ++ne;
        else return false;
        if (static_cast<long>(s.b) * nn < static_cast<long>(s.a) * ne) return false;
    }
    return nn == s.a * n && ne == s.b * n;
}

DyckWord::DyckWord(Slope s, int n, std::string steps)
    : slope_(s), n_(n), steps_(std::move(steps)) {
    if (!is_dyck_word(s, n, steps_))
        throw InvalidObject("not an (" + std::to_string(s.a) + "," + std::to_string(s.b) +
                            ")-Dyck word of size " + std::to_string(n) + ": " + steps_);
}

std::vector<Point> DyckWord::points() const {
    std::vector<Point> pts{{0, 0}};
    Point p;
    for (char c : steps_) {
        if (c == 'N') ++p.y;
        else ++p.x;
        pts.push_back(p);
    }
    return pts;
}

Seq word_to_step_seq(std::string_view w) {
    Seq u;
    int e = 0;
    for (char c : w) {
        if (c == 'N') u.push_back(e);
        else ++e;
    }
    return u;
}

Seq word_to_step_seq(const DyckWord& p) { return word_to_step_seq(p.steps()); }

bool is_step_seq(Slope s, int n, const Seq& u) {
    if (u.size() != static_cast<std::size_t>(s.a * n)) return false;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] < 0) return false;
        if (k > 0 && u[k] < u[k - 1]) return false;
        if (static_cast<long>(s.a) * u[k] > static_cast<long>(s.b) * static_cast<long>(k))
            return false;
    }
    return true;
}

std::string raw_step_seq_word(const Seq& u, int total_e) {
    std::string w;
    int e = 0;
    for (int x : u) {
        w.append(static_cast<std::size_t>(std::max(0, x - e)), 'E');
        w.push_back('N');
        e = std::max(e, x);
    }
    w.append(static_cast<std::size_t>(std::max(0, total_e - e)), 'E');
    return w;
}

DyckWord step_seq_to_word(Slope s, int n, const Seq& u) {
    if (!is_step_seq(s, n, u)) throw InvalidObject("invalid step sequence " + seq_to_string(u));
    return DyckWord(s, n, raw_step_seq_word(u, s.b * n));
}

Seq word_to_height_seq(std::string_view w) {
    Seq h;
    int c = 0;
    for (char x : w) {
        if (x == 'E') h.push_back(c);
        else ++c;
    }
    return h;
}

Seq word_to_height_seq(const DyckWord& p) { return word_to_height_seq(p.steps()); }

bool is_height_seq(Slope s, int n, const Seq& h) {
    if (h.size() != static_cast<std::size_t>(s.b * n)) return false;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k > 0 && h[k] < h[k - 1]) return false;
        // h_k >= ceil(k a / b), 1-based k
        if (static_cast<long>(s.b) * h[k] < static_cast<long>(s.a) * static_cast<long>(k + 1))
            return false;
        if (h[k] > s.a * n) return false;
    }
    return true;
}

std::string raw_height_seq_word(const Seq& h, int total_n) {
    std::string w;
    int c = 0;
    for (int x : h) {
        w.append(static_cast<std::size_t>(std::max(0, x - c)), 'N');
        w.push_back('E');
        c = std::max(c, x);
    }
    w.append(static_cast<std::size_t>(std::max(0, total_n - c)), 'N');
    return w;
}

DyckWord height_seq_to_word(Slope s, int n, const Seq& h) {
    if (!is_height_seq(s, n, h)) throw InvalidObject("invalid height sequence " + seq_to_string(h));
    if (n == 0) return DyckWord(s, 0, "");
    return DyckWord(s, n, raw_height_seq_word(h, s.a * n));
}

Seq lowest_step_seq(Slope s, int n) {
    Seq u(static_cast<std::size_t>(s.a * n));
    for (int k = 0; k < s.a * n; ++k) u[static_cast<std::size_t>(k)] = (s.b * k) / s.a;
    return u;
}

DyckWord lowest_path(Slope s, int n) { return step_seq_to_word(s, n, lowest_step_seq(s, n)); }

DyckWord highest_path(Slope s, int n) {
    return DyckWord(s, n, std::string(static_cast<std::size_t>(s.a * n), 'N') +
                              std::string(static_cast<std::size_t>(s.b * n), 'E'));
}

void for_each_path(Slope s, int n, const std::function<void(const DyckWord&)>& fn) {
    const int tn = s.a * n, te = s.b * n;
    std::string w;
    std::size_t count = 0;
    std::function<void(int, int)> rec = [&](int nn, int ne) {
        if (nn == tn && ne == te) {
            charge_budget(++count, "paths");
            fn(DyckWord(s, n, w));
            return;
        }
        if (nn < tn) {
            w.push_back('N');
            rec(nn + 1, ne);
            w.pop_back();
        }
        if (ne < te && static_cast<long>(s.b) * nn >= static_cast<long>(s.a) * (ne + 1)) {
            w.push_back('E');
            rec(nn, ne + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<DyckWord> enumerate_paths(Slope s, int n) {
    std::vector<DyckWord> out;
    for_each_path(s, n, [&](const DyckWord& p) { out.push_back(p); });
    return out;
}

std::vector<Seq> enumerate_step_seqs(Slope s, int n) {
    std::vector<Seq> out;
    for_each_path(s, n, [&](const DyckWord& p) { out.push_back(word_to_step_seq(p)); });
    return out;
}

BigInt fuss_catalan(int b, int n) {
    if (n == 0) return 1;
    // C((b+1)n, n) / (bn + 1)
    BigInt c = 1;
    const int top = (b + 1) * n;
    for (int k = 1; k <= n; ++k) {
        c *= top - n + k;
        c /= k;
    }
    return c / (b * n + 1);
}

int horizontal_distance(const DyckWord& p0, Point p) {
    Seq u0 = word_to_step_seq(p0);
    if (p.y < 0 || p.y >= static_cast<int>(u0.size()))
        throw PreconditionError("horizontal distance: y out of range");
    return u0[static_cast<std::size_t>(p.y)] - p.x;
}

std::string ne_to_paren(std::string_view w) {
    std::string out(w);
    for (char& c : out) c = (c == 'N') ? '(' : (c == 'E' ? ')' : c);
    return out;
}

std::string paren_to_ne(std::string_view w) {
    std::string out(w);
    for (char& c : out) c = (c == '(') ? 'N' : (c == ')' ? 'E' : c);
    return out;
}

std::string seq_to_string(const Seq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Seq parse_seq(std::string_view text) {
    Seq out;
    std::string cleaned;
    for (char c : text) cleaned += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw InvalidObject("not an integer: " + tok);
        }
        if (used != tok.size()) throw InvalidObject("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

}  // namespace rdk
