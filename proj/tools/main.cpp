#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdk/bintrees.hpp"
#include "rdk/errors.hpp"
#include "rdk/orders.hpp"
#include "rdk/paren.hpp"
#include "rdk/paths.hpp"
#include "rdk/stirling.hpp"
#include "rdk/strips.hpp"
#include "rdk/trees.hpp"
#include "rdk/verify.hpp"

using namespace rdk;
using nlohmann::json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_invalid = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    int a = 1;
    int b = 1;
    int n = 0;
    std::string format = "word";
    std::string out;
    std::optional<std::size_t> budget;

    Slope slope() const {
        try {
            return Slope(a, b);
        } catch (const InvalidObject& e) {
            throw UsageError(e.what());
        }
    }
};

void add_slope(CLI::App* cmd, Common& c) {
    cmd->add_option("--a", c.a, "Slope numerator a (N steps per unit)")->check(CLI::PositiveNumber);
    cmd->add_option("--b", c.b, "Slope denominator b (E steps per unit)")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + c.out);
    f << text;
}

std::string read_input(const std::string& positional) {
    if (!positional.empty() && positional != "-") return positional;
    std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back()))) all.pop_back();
    while (!all.empty() && std::isspace(static_cast<unsigned char>(all.front()))) all.erase(all.begin());
    return all;
}

std::string strip_spaces(std::string s) {
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    return s;
}

// Tuples are written as parenthesis or N/E words separated by ',', ';' or spaces,
// optionally wrapped in one extra pair of brackets on each side.
DyckTuple parse_tuple(std::string text) {
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) text = text.substr(1, text.size() - 2);
    DyckTuple t;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        t.push_back(cur.find('N') != std::string::npos || cur.find('E') != std::string::npos ? ne_to_paren(cur) : cur);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else cur += ch;
    }
    flush();
    if (t.empty()) throw UsageError("empty tuple");
    return t;
}

std::string tuple_text(const DyckTuple& t) {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + t[k];
    return s;
}

int infer_n(int length, int per_unit, const char* what) {
    if (per_unit <= 0 || length % per_unit != 0 || length == 0)
        throw InvalidObject(std::string(what) + " length does not fit the slope");
    return length / per_unit;
}

DyckWord parse_word(const Common& c, const std::string& text) {
    const Slope s = c.slope();
    std::string w = text;
    if (w.find('(') != std::string::npos || w.find(')') != std::string::npos) w = paren_to_ne(w);
    if (w.find_first_not_of("NE") != std::string::npos) throw UsageError("word must use N and E");
    const int n = c.n > 0 ? c.n : infer_n(static_cast<int>(w.size()), s.a + s.b, "word");
    return DyckWord(s, n, w);
}

// Every representation is funnelled through the step sequence of a path.
DyckWord to_path(const Common& c, const std::string& from, const std::string& text) {
    const Slope s = c.slope();
    if (from == "word") return parse_word(c, text);
    if (from == "step") {
        const Seq u = parse_seq(text);
        return step_seq_to_word(s, infer_n(static_cast<int>(u.size()), s.a, "step sequence"), u);
    }
    if (from == "height") {
        const Seq h = parse_seq(text);
        return height_seq_to_word(s, infer_n(static_cast<int>(h.size()), s.b, "height sequence"), h);
    }
    StirlingPerm pi;
    if (from == "stirling") pi = parse_stirling(strip_spaces(text), s.b);
    else if (from == "paren") pi = alpha_star_inverse(strip_spaces(text), s.b);
    else if (from == "tuple") pi = alpha_star_inverse(paren_from_tuple(parse_tuple(text)), s.b);
    else throw UsageError("unknown input kind " + from);
    Seq u = zeta_inverse(pi);
    for (int& x : u) {
        if (x % s.a != 0) throw InvalidObject("Stirling permutation is not the image of an (a,b)-path");
        x /= s.a;
    }
    return step_seq_to_word(s, infer_n(static_cast<int>(u.size()), s.a, "permutation"), u);
}

std::string render(const DyckWord& p, const std::string& to) {
    const Slope s = p.slope();
    const Seq u = word_to_step_seq(p);
    if (to == "word") return p.steps();
    if (to == "step") return seq_to_string(u);
    if (to == "height") return seq_to_string(word_to_height_seq(p));
    const StirlingPerm pi = zeta_g(u, s.a, s.b);
    if (to == "stirling") return to_string(pi);
    if (to == "paren") return alpha_star(pi);
    if (to == "tuple") return tuple_text(alpha_I(alpha_star(pi), s.b));
    if (to == "tuple-II") return tuple_text(alpha_II(alpha_star(pi), s.b));
    throw UsageError("unknown output kind " + to);
}

int cmd_enumerate(const Common& c, int n_max) {
    const Slope s = c.slope();
    if (c.n <= 0 && n_max <= 0) throw UsageError("--n or --n-max is required");
    const int lo = c.n > 0 ? c.n : 1, hi = c.n > 0 ? c.n : n_max;
    std::string text;
    json arr = json::array();
    for (int n = lo; n <= hi; ++n)
        for_each_path(s, n, [&](const DyckWord& p) {
            if (c.format == "json") arr.push_back({{"n", n}, {"word", p.steps()}, {"step", word_to_step_seq(p)}});
            else text += p.steps() + "\n";
        });
    emit(c, c.format == "json" ? arr.dump() + "\n" : text);
    return 0;
}

int cmd_convert(const Common& c, const std::string& from, const std::string& to, const std::string& input) {
    const DyckWord p = to_path(c, from, read_input(input));
    emit(c, render(p, to) + "\n");
    return 0;
}

int cmd_decompose(const Common& c, const std::string& kind, const std::string& input) {
    const DyckWord p = parse_word(c, read_input(input));
    const Slope s = p.slope();
    const int an = s.a * p.n(), bn = s.b * p.n();
    std::vector<std::string> comps;
    if (kind == "delta") {
        for (const Seq& h : delta(p)) comps.push_back(raw_height_seq_word(h, an));
    } else if (kind == "theta") {
        for (const Seq& u : theta(p)) comps.push_back(raw_step_seq_word(u, bn));
    } else if (kind == "type-I" || kind == "type-II") {
        const ParenPres pp = alpha_star(zeta_g(word_to_step_seq(p), s.a, s.b));
        for (const std::string& q : kind == "type-I" ? alpha_I(pp, s.b) : alpha_II(pp, s.b)) comps.push_back(paren_to_ne(q));
    } else if (kind == "bar") {
        comps = bar_components(p.steps(), s.b);
    } else {
        throw UsageError("unknown decomposition " + kind);
    }
    if (c.format == "json") {
        emit(c, json{{"kind", kind}, {"components", comps}}.dump() + "\n");
    } else {
        std::string text;
        for (const std::string& w : comps) text += w + "\n";
        emit(c, text);
    }
    return 0;
}

int cmd_dot(const Common& c, const std::string& kind, const std::vector<std::string>& inputs) {
    const Slope s = c.slope();
    auto input = [&](std::size_t k) { return read_input(k < inputs.size() ? inputs[k] : std::string()); };
    std::string text;
    if (kind.rfind("poset-", 0) == 0) {
        if (c.n <= 0) throw UsageError("--n is required for posets");
        const std::string order = kind.substr(6);
        OrderKind ok;
        if (order == "young") ok = OrderKind::young;
        else if (order == "rotation") ok = OrderKind::rotation;
        else if (order == "rotation-hor") ok = OrderKind::rotation_hor;
        else throw UsageError("unknown poset " + kind);
        const Poset p = build_poset(s, c.n, ok);
        text = c.format == "json" ? poset_to_json(p) + "\n" : poset_to_dot(p);
    } else if (kind == "arytree") {
        text = ary_tree_to_dot(xi(parse_stirling(strip_spaces(input(0)), s.b)));
    } else if (kind == "planetree") {
        text = plane_tree_to_dot(dyck_to_plane_tree(strip_spaces(input(0))));
    } else if (kind == "bintree") {
        // Inputs Q and P; P defaults to Q, giving Tr(Q).
        const std::string q = strip_spaces(input(0));
        const std::string p = inputs.size() > 1 ? strip_spaces(inputs[1]) : q;
        const BinaryTree t = build_BQP(q, p);
        text = c.format == "word" ? omega(t) + "\n" : binary_tree_to_dot(t);
    } else {
        throw UsageError("unknown dot kind " + kind);
    }
    emit(c, text);
    return 0;
}

int cmd_verify(const Common& c, const std::string& check, bool list, int max_size) {
    if (list) {
        std::string text;
        for (const Check& k : check_registry()) text += k.name + "\t" + k.claim + "\n";
        emit(c, text);
        return 0;
    }
    Grid g;
    g.max_size = max_size;
    if (c.n > 0) g.only = Family{c.slope(), c.n};
    std::vector<const Check*> todo;
    if (check == "all") {
        for (const Check& k : check_registry()) todo.push_back(&k);
    } else {
        const Check* k = find_check(check);
        if (!k) throw UsageError("unknown check " + check + " (see verify --list)");
        todo.push_back(k);
    }
    bool ok = true;
    std::string text;
    json arr = json::array();
    for (const Check* k : todo) {
        const Report r = run_check(*k, g);
        ok = ok && r.passed();
        std::cerr << r.check << ": " << r.seconds << " s\n";
        if (c.format == "json") {
            arr.push_back(json::parse(report_to_json(r)));
            continue;
        }
        text += std::string(r.passed() ? "PASS " : "FAIL ") + r.check + " [" + r.grid +
                "] instances=" + std::to_string(r.instances) + " failures=" + std::to_string(r.failure_count) + "\n";
        for (const std::string& f : r.failures) text += "  " + f + "\n";
    }
    emit(c, c.format == "json" ? arr.dump(2) + "\n" : text);
    return ok ? 0 : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational Dyck path toolkit"};
    app.require_subcommand(1);
    Common c;
    int n_max = 0, max_size = 12;
    std::string from = "word", to = "step", kind, check = "all", input;
    std::vector<std::string> inputs;
    bool list = false;

    auto* en = app.add_subcommand("enumerate", "List all paths of a family");
    add_slope(en, c);
    en->add_option("--n", c.n, "Size")->check(CLI::PositiveNumber);
    en->add_option("--n-max", n_max, "Enumerate sizes 1..n-max")->check(CLI::PositiveNumber);
    add_output(en, c, {"word", "json"});

    auto* cv = app.add_subcommand("convert", "Convert between representations");
    add_slope(cv, c);
    const std::vector<std::string> kinds{"word", "step", "height", "stirling", "paren", "tuple"};
    std::vector<std::string> out_kinds = kinds;
    out_kinds.push_back("tuple-II");
    cv->add_option("--from", from, "Input kind")->check(CLI::IsMember(kinds));
    cv->add_option("--to", to, "Output kind")->check(CLI::IsMember(out_kinds));
    cv->add_option("--n", c.n, "Size (inferred when omitted)");
    cv->add_option("input", input, "Object; read from stdin when omitted or '-'");
    cv->add_option("--out", c.out, "Write output to this file");

    auto* de = app.add_subcommand("decompose", "Strip and tuple decompositions of a path");
    add_slope(de, c);
    de->add_option("--kind", kind, "Decomposition")
        ->required()
        ->check(CLI::IsMember({"delta", "theta", "type-I", "type-II", "bar"}));
    de->add_option("input", input, "N/E word; read from stdin when omitted or '-'");
    add_output(de, c, {"word", "json"});

    auto* ve = app.add_subcommand("verify", "Run the property checks");
    add_slope(ve, c);
    ve->add_option("--n", c.n, "Restrict to the single family (a,b,n)")->check(CLI::PositiveNumber);
    ve->add_option("--check", check, "Check name or 'all'");
    ve->add_option("--max-size", max_size, "Families with (a+b)n <= max-size")->check(CLI::PositiveNumber);
    ve->add_flag("--list", list, "List the registered checks");
    add_output(ve, c, {"word", "json"});

    auto* dt = app.add_subcommand("dot", "Graphviz export of posets and trees");
    add_slope(dt, c);
    dt->add_option("--kind", kind, "poset-young, poset-rotation, poset-rotation-hor, arytree, planetree, bintree")
        ->required();
    dt->add_option("--n", c.n, "Size for posets");
    dt->add_option("input", inputs, "Objects (two words Q P for bintree); stdin when omitted");
    add_output(dt, c, {"dot", "json", "word"});
    c.format = "word";

    for (CLI::App* sub : {en, cv, de, ve, dt})
        sub->add_option_function<std::size_t>("--budget", [&](const std::size_t& v) { set_budget(v); },
                                              "Enumeration budget (overrides RDK_BUDGET)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }
    if (dt->parsed() && dt->count("--format") == 0) c.format = "dot";

    try {
        if (en->parsed()) return cmd_enumerate(c, n_max);
        if (cv->parsed()) return cmd_convert(c, from, to, input);
        if (de->parsed()) return cmd_decompose(c, kind, input);
        if (ve->parsed()) return cmd_verify(c, check, list, max_size);
        if (dt->parsed()) return cmd_dot(c, kind, inputs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidObject& e) {
        std::cerr << "invalid object: " << e.what() << "\n";
        return exit_invalid;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid object: " << e.what() << "\n";
        return exit_invalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
