#include "ndga/pathsum.hpp"

#include <algorithm>
#include <cctype>

#include "ndga/errors.hpp"

namespace ndga {

int MultiIndex::total() const {
    int t = 0;
    for (int x : entries) t += x;
    return t;
}

int MultiIndex::prefix_total(int i) const {
    int t = 0;
    for (int k = 0; k < i - 1 && k < length(); ++k) t += entries[static_cast<std::size_t>(k)];
    return t;
}

std::string MultiIndex::str() const {
    if (entries.empty()) return "∅";
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

MultiIndex MultiIndex::parse(const std::string& text) {
    MultiIndex s;
    if (text == "\u2205" || text == "()" || text == "empty") return s;
    std::string cur;
    bool any = false;
    auto flush = [&]() {
        if (cur.empty()) {
            if (any) throw ParseError("empty entry in multi-index '" + text + "'");
            return;
        }
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad multi-index '" + text + "'");
        s.entries.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') continue;
        if (c == ',') {
            any = true;
            flush();
            any = true;
            continue;
        }
        cur += c;
    }
    if (!cur.empty() || any) flush();
    return s;
}

std::vector<WeightedStep> mc_successors(const MultiIndex& s, const WeightTable& table) {
    std::vector<WeightedStep> out;
    MultiIndex pre;
    pre.entries.push_back(0);
    pre.entries.insert(pre.entries.end(), s.entries.begin(), s.entries.end());
    out.push_back({pre, table.prepend});
    int loop = ((s.total() + s.length()) % 2) ? -1 : 1;
    out.push_back({s, loop * table.loop});
    for (int i = 1; i <= s.length(); ++i) {
        MultiIndex t = s;
        ++t.entries[static_cast<std::size_t>(i - 1)];
        int w = ((s.prefix_total(i) + i - 1) % 2) ? -1 : 1;
        out.push_back({t, w * table.increment});
    }
    return out;
}

bool mc_reachable(const MultiIndex& from, const MultiIndex& to, int steps) {
    if (steps < 0 || to.length() < from.length()) return false;
    int gap = to.total() + to.length() - from.total() - from.length();
    if (gap < 0 || gap > steps) return false;
    int shift = to.length() - from.length();
    for (int i = 0; i < from.length(); ++i)
        if (to.entries[static_cast<std::size_t>(i + shift)] < from.entries[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::string Path::str() const {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += " → ";
        out += vertices[i].str();
    }
    return out;
}

std::vector<Path> enumerate_paths(const MultiIndex& target, int N, const WeightTable& table) {
    if (N < 0) throw InvalidArgument("path length must be non-negative");
    std::vector<Path> out;
    Path cur;
    cur.vertices.push_back(MultiIndex{});
    cur.weight = 1;
    std::function<void(int)> rec = [&](int left) {
        const MultiIndex& v = cur.vertices.back();
        if (left == 0) {
            if (v == target) out.push_back(cur);
            return;
        }
        for (const WeightedStep& st : mc_successors(v, table)) {
            if (!mc_reachable(st.to, target, left - 1)) continue;
            Integer saved = cur.weight;
            cur.vertices.push_back(st.to);
            cur.weight *= st.weight;
            rec(left - 1);
            cur.vertices.pop_back();
            cur.weight = saved;
        }
    };
    if (mc_reachable(MultiIndex{}, target, N)) rec(N);
    return out;
}

namespace {

Integer weighted_walks(const MultiIndex& start, const MultiIndex& target, int N, const WeightTable& table, bool count_only) {
    std::map<std::pair<std::vector<int>, int>, Integer> memo;
    std::function<Integer(const MultiIndex&, int)> W = [&](const MultiIndex& v, int left) -> Integer {
        if (left == 0) return v == target ? Integer(1) : Integer(0);
        auto key = std::make_pair(v.entries, left);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer acc = 0;
        for (const WeightedStep& st : mc_successors(v, table)) {
            if (!mc_reachable(st.to, target, left - 1)) continue;
            Integer sub = W(st.to, left - 1);
            acc += count_only ? sub : sub * st.weight;
        }
        memo.emplace(key, acc);
        return acc;
    };
    if (!mc_reachable(start, target, N)) return 0;
    return W(start, N);
}

}  // namespace

Integer mc_coefficient(const MultiIndex& s, int N, const WeightTable& table) {
    return weighted_walks(MultiIndex{}, s, N, table, false);
}

Integer path_count(const MultiIndex& s, int N) { return weighted_walks(MultiIndex{}, s, N, WeightTable{}, true); }

void NCPolynomial::add(const std::vector<int>& word, int dpow, const Integer& c) {
    if (c == 0) return;
    auto key = std::make_pair(word, dpow);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

NCPolynomial NCPolynomial::part(int dpow) const {
    NCPolynomial out;
    for (const auto& [k, c] : terms)
        if (k.second == dpow) out.terms.insert({k, c});
    return out;
}

namespace {

void all_indices(int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    // budget = N - |s| - l(s) still available
    for (int x = 0; x + 1 <= budget; ++x) {
        cur.push_back(x);
        out.push_back(cur);
        all_indices(budget - x - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

NCPolynomial mc_equation(int N, int entry_bound, const WeightTable& table) {
    if (N < 1) throw InvalidArgument("N must be positive");
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    all_indices(N, cur, all);
    NCPolynomial out;
    for (const auto& e : all) {
        MultiIndex s{e};
        if (entry_bound > 0 && std::any_of(e.begin(), e.end(), [&](int x) { return x >= entry_bound; })) continue;
        out.add(e, s.residual(N), mc_coefficient(s, N, table));
    }
    return out;
}

std::string render_word(const std::vector<int>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size();) {
        std::size_t r = i;
        while (r < word.size() && word[r] == word[i]) ++r;
        int j = word[i];
        std::size_t run = r - i;
        std::string sym = j == 0 ? "e" : j == 1 ? "d(e)" : "d" + std::to_string(j) + "(e)";
        if (run == 1)
            out += sym;
        else if (j == 0)
            out += "e^" + std::to_string(run);
        else
            out += "(" + sym + ")^" + std::to_string(run);
        i = r;
    }
    return out.empty() ? "1" : out;
}

std::string render_mc_equation(const NCPolynomial& eq, int max_dpow) {
    std::vector<std::string> groups;
    for (int k = 0; k <= max_dpow; ++k) {
        std::vector<std::pair<std::vector<int>, Integer>> ts;
        for (const auto& [key, c] : eq.terms)
            if (key.second == k) ts.push_back({key.first, c});
        if (ts.empty()) continue;
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            return a.first > b.first;
        });
        std::string g;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Integer c = ts[i].second;
            Integer a = abs(c);
            if (i == 0)
                g += c < 0 ? "-" : "";
            else
                g += c < 0 ? " - " : " + ";
            if (a != 1) g += a.get_str();
            g += render_word(ts[i].first);
        }
        bool bare = ts.size() == 1 && (ts[0].second == 1 || k == 0);
        std::string piece = bare ? g : "(" + g + ")";
        if (k == 1) piece += " d";
        if (k >= 2) piece += " d^" + std::to_string(k);
        groups.push_back(piece);
    }
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i) out += (i ? " + " : "") + groups[i];
    return (out.empty() ? "0" : out) + " = 0";
}

std::vector<std::vector<int>> compositions(int k, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[static_cast<std::size_t>(pos)] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, k);
    return out;
}

int composition_weight(const std::vector<int>& p) {
    int w = 0;
    for (std::size_t i = 0; i < p.size(); ++i) w += static_cast<int>(i) * p[i];
    return w;
}

std::vector<Integer> infinitesimal_coefficients(int N) {
    if (N < 2) throw InvalidArgument("N must be at least 2");
    std::vector<Integer> out;
    for (int k = 0; k <= N - 1; ++k) {
        Integer acc = 0;
        for (const auto& p : compositions(k, N - k + 1)) acc += composition_weight(p) % 2 ? -1 : 1;
        out.push_back(acc);
    }
    return out;
}

namespace {

bool has_run(const std::string& w, int d_run) {
    if (d_run <= 0) return false;
    return w.find(std::string(static_cast<std::size_t>(d_run), 'd')) != std::string::npos;
}

void add_word(WordTable& t, const std::string& w, const Integer& c) {
    if (c == 0) return;
    Integer& x = t[w];
    x += c;
    if (x == 0) t.erase(w);
}

WordTable product(const WordTable& a, const WordTable& b, int d_run) {
    WordTable out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::string w = wa + wb;
            if (!has_run(w, d_run)) add_word(out, w, ca * cb);
        }
    return out;
}

}  // namespace

WordTable expand_power(int N, int d_run) {
    WordTable out;
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        std::string w;
        for (int i = 0; i < N; ++i) w += (mask >> (N - 1 - i)) & 1ul ? 'e' : 'd';
        if (!has_run(w, d_run)) add_word(out, w, 1);
    }
    return out;
}

WordTable end_word(int j) {
    WordTable cur{{"e", 1}};
    for (int k = 0; k < j; ++k) {
        WordTable next;
        // |E_k| = k + 1
        Integer back = ((k + 1) % 2 == 0) ? -1 : 1;
        for (const auto& [w, c] : cur) {
            add_word(next, "d" + w, c);
            add_word(next, w + "d", c * back);
        }
        cur = next;
    }
    return cur;
}

WordTable expand_nc(const NCPolynomial& p, int d_run) {
    std::map<int, WordTable> cache;
    WordTable out;
    for (const auto& [key, c] : p.terms) {
        WordTable acc{{"", 1}};
        for (int j : key.first) {
            if (!cache.count(j)) cache[j] = end_word(j);
            acc = product(acc, cache[j], d_run);
        }
        acc = product(acc, WordTable{{std::string(static_cast<std::size_t>(key.second), 'd'), 1}}, d_run);
        for (const auto& [w, x] : acc) add_word(out, w, x * c);
    }
    return out;
}

McIdentityVerdict verify_mc_identity(int N, const WeightTable& table) {
    if (N < 3) throw InvalidArgument("the identity is stated for N >= 3");
    McIdentityVerdict v;
    v.N = N;
    WordTable lhs = expand_power(N, 3);
    WordTable filtered = expand_nc(mc_equation(N, 3, table), 3);
    WordTable full = expand_nc(mc_equation(N, 0, table), 3);
    v.filtered_equal = lhs == filtered;
    v.unfiltered_equal = lhs == full;
    v.residual = lhs;
    for (const auto& [w, c] : filtered) add_word(v.residual, w, -c);
    return v;
}

InfinitesimalVerdict verify_infinitesimal(int N) {
    InfinitesimalVerdict v;
    v.N = N;
    v.coefficients = infinitesimal_coefficients(N);
    v.matches_path_sums = true;
    NCPolynomial rhs;
    for (int k = 0; k <= N - 1; ++k) {
        MultiIndex s{{N - k - 1}};
        if (mc_coefficient(s, N) != v.coefficients[static_cast<std::size_t>(k)]) v.matches_path_sums = false;
        rhs.add({N - k - 1}, k, v.coefficients[static_cast<std::size_t>(k)]);
    }
    // t-linear words of (d+te)^N: exactly one e.
    WordTable lhs;
    for (int i = 0; i < N; ++i) {
        std::string w = std::string(static_cast<std::size_t>(i), 'd') + "e" + std::string(static_cast<std::size_t>(N - 1 - i), 'd');
        if (!has_run(w, N)) add_word(lhs, w, 1);
    }
    v.matches_words = lhs == expand_nc(rhs, N);
    return v;
}

int FiniteDigraph::add_vertex(const std::string& label) {
    labels.push_back(label);
    return static_cast<int>(labels.size() - 1);
}

int FiniteDigraph::index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw InvalidArgument("unknown vertex '" + label + "'");
}

Rational kernel_matrix(const FiniteDigraph& g, int n, int x, int y) {
    int V = static_cast<int>(g.labels.size());
    if (x < 0 || x >= V || y < 0 || y >= V) throw InvalidArgument("vertex out of range");
    std::vector<Rational> vec(static_cast<std::size_t>(V));
    vec[static_cast<std::size_t>(x)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<Rational> next(static_cast<std::size_t>(V));
        for (const auto& [a, b, w] : g.edges)
            if (vec[static_cast<std::size_t>(a)] != 0) next[static_cast<std::size_t>(b)] += vec[static_cast<std::size_t>(a)] * w;
        vec = std::move(next);
    }
    return vec[static_cast<std::size_t>(y)];
}

Rational kernel_enumerate(const FiniteDigraph& g, int n, int x, int y) {
    int V = static_cast<int>(g.labels.size());
    if (x < 0 || x >= V || y < 0 || y >= V) throw InvalidArgument("vertex out of range");
    std::vector<std::vector<std::pair<int, Rational>>> adj(static_cast<std::size_t>(V));
    for (const auto& [a, b, w] : g.edges) adj[static_cast<std::size_t>(a)].push_back({b, w});
    Rational total = 0;
    std::function<void(int, int, const Rational&)> rec = [&](int v, int left, const Rational& w) {
        if (left == 0) {
            if (v == y) total += w;
            return;
        }
        for (const auto& [b, ew] : adj[static_cast<std::size_t>(v)]) rec(b, left - 1, w * ew);
    };
    rec(x, n, Rational(1));
    return total;
}

ImplicitDigraph mc_graph(const WeightTable& table) {
    ImplicitDigraph g;
    g.successors = [table](const MultiIndex& s) { return mc_successors(s, table); };
    g.can_reach = mc_reachable;
    return g;
}

Integer kernel_implicit(const ImplicitDigraph& g, int n, const MultiIndex& x, const MultiIndex& y) {
    if (!g.successors) throw InvalidArgument("graph has no successor function");
    if (!g.can_reach) throw InvalidArgument("infinite graph without a pruning certificate");
    std::map<std::pair<std::vector<int>, int>, Integer> memo;
    std::function<Integer(const MultiIndex&, int)> W = [&](const MultiIndex& v, int left) -> Integer {
        if (left == 0) return v == y ? Integer(1) : Integer(0);
        auto key = std::make_pair(v.entries, left);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer acc = 0;
        for (const WeightedStep& st : g.successors(v))
            if (g.can_reach(st.to, y, left - 1)) acc += W(st.to, left - 1) * st.weight;
        memo.emplace(key, acc);
        return acc;
    };
    if (!g.can_reach(x, y, n)) return 0;
    return W(x, n);
}

FiniteDigraph mc_truncation(int bound, const WeightTable& table) {
    FiniteDigraph g;
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    all_indices(bound, cur, all);
    std::map<std::vector<int>, int> id;
    id[{}] = g.add_vertex(MultiIndex{}.str());
    for (const auto& e : all) id[e] = g.add_vertex(MultiIndex{e}.str());
    for (const auto& [e, i] : id)
        for (const WeightedStep& st : mc_successors(MultiIndex{e}, table)) {
            auto it = id.find(st.to.entries);
            if (it != id.end()) g.add_edge(i, it->second, st.weight);
        }
    return g;
}

}  // namespace ndga
