#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rdk/errors.hpp"

namespace rdk {

using Seq = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

struct Slope {
    int a = 1;
    int b = 1;

    Slope() = default;
    // Throws InvalidObject unless a, b >= 1 and gcd(a, b) = 1.
    Slope(int a, int b);

    bool operator==(const Slope&) const = default;
};

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};

// True iff w has a*n N's, b*n E's and every prefix satisfies b*#N >= a*#E.
bool is_dyck_word(Slope s, int n, std::string_view w);

// A validated (a,b)-Dyck path of size n.
class DyckWord {
public:
    DyckWord() = default;
    DyckWord(Slope s, int n, std::string steps);

    Slope slope() const { return slope_; }
    int n() const { return n_; }
    const std::string& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }

    // Lattice points visited, starting at (0,0); N increments y, E increments x.
    std::vector<Point> points() const;

    bool operator==(const DyckWord& o) const { return steps_ == o.steps_ && slope_ == o.slope_; }
    bool operator<(const DyckWord& o) const { return steps_ < o.steps_; }

private:
    Slope slope_;
    int n_ = 0;
    std::string steps_;
};

// Step sequence: u_k = number of E before the k-th N.
Seq word_to_step_seq(std::string_view w);
Seq word_to_step_seq(const DyckWord& p);
bool is_step_seq(Slope s, int n, const Seq& u);
DyckWord step_seq_to_word(Slope s, int n, const Seq& u);

// Height sequence: h_k = number of N before the k-th E.
Seq word_to_height_seq(std::string_view w);
Seq word_to_height_seq(const DyckWord& p);
bool is_height_seq(Slope s, int n, const Seq& h);
DyckWord height_seq_to_word(Slope s, int n, const Seq& h);

// Unchecked conversions between sequences and N/E strings.
std::string raw_step_seq_word(const Seq& u, int total_e);
std::string raw_height_seq_word(const Seq& h, int total_n);

Seq lowest_step_seq(Slope s, int n);
DyckWord lowest_path(Slope s, int n);
DyckWord highest_path(Slope s, int n);

// Visits every path of the family in lexicographic word order (N < E).
void for_each_path(Slope s, int n, const std::function<void(const DyckWord&)>& fn);
std::vector<DyckWord> enumerate_paths(Slope s, int n);
std::vector<Seq> enumerate_step_seqs(Slope s, int n);

BigInt fuss_catalan(int b, int n);

// u0(y+1) - x with u0 the step sequence of P0.
int horizontal_distance(const DyckWord& p0, Point p);

// (1,1) words written with parentheses.
std::string ne_to_paren(std::string_view w);
std::string paren_to_ne(std::string_view w);

std::string seq_to_string(const Seq& s);
Seq parse_seq(std::string_view text);

}  // namespace rdk
