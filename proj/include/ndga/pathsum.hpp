#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndga/rational.hpp"

namespace ndga {

struct MultiIndex {
    std::vector<int> entries;

    int length() const { return static_cast<int>(entries.size()); }
    int total() const;
    // |s_{<i}| for 1-based i: sum of the first i-1 entries.
    int prefix_total(int i) const;
    bool in_E(int N) const { return !entries.empty() && total() + length() <= N; }
    int residual(int N) const { return N - total() - length(); }
    std::string str() const;
    // "1,1" or "(1,1)"; "" or "()" is the empty index.
    static MultiIndex parse(const std::string& text);

    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries < b.entries; }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries == b.entries; }
};

// Multipliers on the three edge families; the defaults give the Maurer-Cartan weights.
struct WeightTable {
    int prepend = 1;
    int loop = 1;
    int increment = 1;
};

struct WeightedStep {
    MultiIndex to;
    int weight;
};

// Prepend 0, self-loop, then increments at positions 1..l(s).
std::vector<WeightedStep> mc_successors(const MultiIndex& s, const WeightTable& table = {});
// Whether some path of exactly `steps` edges leads from `from` to `to`.
bool mc_reachable(const MultiIndex& from, const MultiIndex& to, int steps);

struct Path {
    std::vector<MultiIndex> vertices;
    Integer weight;
    std::string str() const;
};

std::vector<Path> enumerate_paths(const MultiIndex& target, int N, const WeightTable& table = {});
Integer mc_coefficient(const MultiIndex& s, int N, const WeightTable& table = {});
Integer path_count(const MultiIndex& s, int N);

// Integer combination of words E_{j1}...E_{jl} followed by d^k.
struct NCPolynomial {
    std::map<std::pair<std::vector<int>, int>, Integer> terms;

    void add(const std::vector<int>& word, int dpow, const Integer& c);
    NCPolynomial part(int dpow) const;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms == b.terms; }
};

// Sum over s in E_N with entries below entry_bound of c(s,N) E_s d^{N(s)}. entry_bound <= 0 disables the filter.
NCPolynomial mc_equation(int N, int entry_bound = 3, const WeightTable& table = {});
std::string render_word(const std::vector<int>& word);
// c_0 + c_1 d + c_2 d^2 = 0 in the e, d(e), d2(e) notation.
std::string render_mc_equation(const NCPolynomial& eq, int max_dpow = 2);

// Par(k, parts): sequences of `parts` non-negative integers with sum k.
std::vector<std::vector<int>> compositions(int k, int parts);
int composition_weight(const std::vector<int>& p);
std::vector<Integer> infinitesimal_coefficients(int N);

using WordTable = std::map<std::string, Integer>;

// Words of (d+e)^N without a run of `d_run` consecutive d's.
WordTable expand_power(int N, int d_run);
// E_j as words in d, e via E_{j+1} = d E_j - (-1)^{j+1} E_j d.
WordTable end_word(int j);
// Expands an NCPolynomial into d,e words and drops words with a d-run of length d_run.
WordTable expand_nc(const NCPolynomial& p, int d_run);

struct McIdentityVerdict {
    int N = 0;
    bool filtered_equal = false;    // the identity with the entry filter s_i < 3
    bool unfiltered_equal = false;  // the same identity keeping every s in E_N
    WordTable residual;             // (d+e)^N minus the filtered side
};

McIdentityVerdict verify_mc_identity(int N, const WeightTable& table = {});

struct InfinitesimalVerdict {
    int N = 0;
    std::vector<Integer> coefficients;
    bool matches_path_sums = false;  // entry k equals c((N-k-1), N)
    bool matches_words = false;      // t-linear part of (d+te)^N equals sum_k coefficients[k] E_{N-k-1} d^k
};

InfinitesimalVerdict verify_infinitesimal(int N);

struct FiniteDigraph {
    std::vector<std::string> labels;
    std::vector<std::tuple<int, int, Rational>> edges;

    int add_vertex(const std::string& label);
    int index(const std::string& label) const;
    void add_edge(int from, int to, const Rational& w) { edges.emplace_back(from, to, w); }
};

// omega_n(y, x): weighted sum over length-n paths from x to y.
Rational kernel_matrix(const FiniteDigraph& g, int n, int x, int y);
Rational kernel_enumerate(const FiniteDigraph& g, int n, int x, int y);

// A possibly infinite graph on multi-indices. can_reach prunes the search; without it the kernel is refused.
struct ImplicitDigraph {
    std::function<std::vector<WeightedStep>(const MultiIndex&)> successors;
    std::function<bool(const MultiIndex&, const MultiIndex&, int)> can_reach;
};

ImplicitDigraph mc_graph(const WeightTable& table = {});
Integer kernel_implicit(const ImplicitDigraph& g, int n, const MultiIndex& x, const MultiIndex& y);
// The Maurer-Cartan graph restricted to |s| + l(s) <= bound.
FiniteDigraph mc_truncation(int bound, const WeightTable& table = {});

}  // namespace ndga
