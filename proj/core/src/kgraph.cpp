#include "kcover/kgraph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace kcover {

namespace {

struct BinomTable {
    std::array<std::array<std::uint64_t, max_vertices + 1>, max_vertices + 1> c{};
    BinomTable()
    {
        for (int n = 0; n <= max_vertices; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable binom_table;

}  // namespace

std::uint64_t binom(int n, int k)
{
    if (n < 0 || k < 0 || k > n || n > max_vertices) return 0;
    return binom_table.c[n][k];
}

const char* colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }

std::vector<int> vs_vertices(VertexSet s)
{
    std::vector<int> out;
    while (s) {
        int v = __builtin_ctzll(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet vs_of(const std::vector<int>& vs)
{
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= max_vertices) throw invalid_input("vertex out of range");
        s = vs_with(s, v);
    }
    return s;
}

KEdge::KEdge(std::vector<int> vertices) : v(std::move(vertices))
{
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= max_vertices) throw invalid_input("vertex out of range");
        if (i > 0 && v[i] == v[i - 1]) throw invalid_input("repeated vertex in edge");
    }
}

bool KEdge::contains(int x) const
{
    return std::binary_search(v.begin(), v.end(), x);
}

std::string KEdge::to_string() const
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << '}';
    return out.str();
}

int intersection_size(const KEdge& a, const KEdge& b)
{
    return vs_size(a.vertex_set() & b.vertex_set());
}

std::uint64_t colex_rank(const KEdge& edge, int n, int k)
{
    if (edge.size() != k) throw invalid_input("edge has wrong uniformity");
    if (n < 1 || n > max_vertices || k < 1 || k > n)
        throw invalid_input("bad graph parameters");
    if (edge.v.back() >= n) throw invalid_input("vertex out of range for n");
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom(edge.v[i], i + 1);
    return r;
}

KEdge colex_unrank(std::uint64_t index, int n, int k)
{
    if (index >= binom(n, k)) throw invalid_input("colex index out of range");
    std::vector<int> v(k);
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (binom(c + 1, i) <= index) ++c;
        v[i - 1] = c;
        index -= binom(c, i);
    }
    return KEdge(std::move(v));
}

ColouredKGraph::ColouredKGraph(int n, int k, std::vector<Cell> table)
    : n_(n), k_(k), table_(std::move(table))
{
    if (n < 1 || n > max_vertices) throw invalid_input("n out of range");
    if (k < 2 || k > n) throw invalid_input("k out of range (need 2 <= k <= n)");
    if (table_.size() != binom(n, k)) throw invalid_input("table size must be binom(n, k)");
}

ColouredKGraph ColouredKGraph::monochromatic(int n, int k, Colour c)
{
    return ColouredKGraph(n, k, std::vector<Cell>(binom(n, k), cell_of(c)));
}

ColouredKGraph ColouredKGraph::empty(int n, int k)
{
    return ColouredKGraph(n, k, std::vector<Cell>(binom(n, k), Cell::absent));
}

Cell ColouredKGraph::cell(std::uint64_t rank) const
{
    if (rank >= table_.size()) throw invalid_input("edge rank out of range");
    return table_[rank];
}

bool ColouredKGraph::is_complete() const
{
    return std::none_of(table_.begin(), table_.end(),
                        [](Cell c) { return c == Cell::absent; });
}

std::uint64_t ColouredKGraph::num_edges() const
{
    return static_cast<std::uint64_t>(std::count_if(
        table_.begin(), table_.end(), [](Cell c) { return c != Cell::absent; }));
}

std::vector<std::uint64_t> ColouredKGraph::present_ranks() const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < table_.size(); ++r)
        if (table_[r] != Cell::absent) out.push_back(r);
    return out;
}

ColouredKGraph ColouredKGraph::restrict(VertexSet w) const
{
    std::vector<Cell> table = table_;
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        if (table[r] == Cell::absent) continue;
        VertexSet ev = edge_of(r).vertex_set();
        if ((ev & ~w) != 0) table[r] = Cell::absent;
    }
    return ColouredKGraph(n_, k_, std::move(table));
}

ColouredKGraph ColouredKGraph::swapped() const
{
    std::vector<Cell> table = table_;
    for (Cell& c : table) {
        if (c == Cell::red)
            c = Cell::blue;
        else if (c == Cell::blue)
            c = Cell::red;
    }
    return ColouredKGraph(n_, k_, std::move(table));
}

void for_each_subset(const std::vector<int>& pool, int t,
                     const std::function<void(const std::vector<int>&)>& fn)
{
    const int p = static_cast<int>(pool.size());
    if (t < 0 || t > p) return;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    std::vector<int> cur(t);
    while (true) {
        for (int i = 0; i < t; ++i) cur[i] = pool[idx[i]];
        fn(cur);
        // Colex successor: bump the first index with headroom, reset below.
        int i = 0;
        while (i < t && idx[i] + 1 == (i + 1 < t ? idx[i + 1] : p)) ++i;
        if (i == t) break;
        ++idx[i];
        for (int j = 0; j < i; ++j) idx[j] = j;
    }
}

std::vector<KEdge> neighbourhood(const ColouredKGraph& g, VertexSet s)
{
    const int ssize = vs_size(s);
    if (ssize >= g.k()) throw invalid_input("neighbourhood: |S| must be at most k-1");
    std::vector<int> pool;
    for (int v = 0; v < g.n(); ++v)
        if (!vs_contains(s, v)) pool.push_back(v);
    std::vector<int> base = vs_vertices(s);
    std::vector<KEdge> out;
    for_each_subset(pool, g.k() - ssize, [&](const std::vector<int>& ext) {
        std::vector<int> all = base;
        all.insert(all.end(), ext.begin(), ext.end());
        if (g.present(KEdge(std::move(all)))) out.push_back(KEdge(ext));
    });
    return out;
}

std::uint64_t degree(const ColouredKGraph& g, VertexSet s)
{
    return neighbourhood(g, s).size();
}

bool is_dense(const ColouredKGraph& g, double mu, double alpha)
{
    const int n = g.n();
    const int k = g.k();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    for (int i = 1; i <= k - 1; ++i) {
        const double threshold = mu * static_cast<double>(binom(n - i, k - i));
        std::uint64_t exceptional = 0;
        bool ok = true;
        for_each_subset(all, i, [&](const std::vector<int>& sv) {
            if (!ok) return;
            std::uint64_t d = degree(g, vs_of(sv));
            if (static_cast<double>(d) < threshold - 1e-9) {
                if (d != 0) {
                    ok = false;  // exceptional sets must have degree exactly 0
                    return;
                }
                ++exceptional;
            }
        });
        if (!ok) return false;
        if (static_cast<double>(exceptional) > alpha * static_cast<double>(binom(n, i)) + 1e-9)
            return false;
    }
    return true;
}

ColouredKGraph read_colouring(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("empty colouring input");
    std::istringstream header(line);
    int n = 0, k = 0;
    std::string flag;
    if (!(header >> n >> k)) throw invalid_input("bad colouring header");
    bool red_default = false;
    if (header >> flag) {
        if (flag != "complete-red-default") throw invalid_input("unknown header flag: " + flag);
        red_default = true;
    }
    if (n < 1 || n > max_vertices || k < 2 || k > n)
        throw invalid_input("bad colouring parameters");
    std::vector<Cell> table(binom(n, k), red_default ? Cell::red : Cell::absent);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> vs(k);
        for (int i = 0; i < k; ++i)
            if (!(ls >> vs[i]))
                throw invalid_input("bad edge line " + std::to_string(lineno));
        std::string c;
        if (!(ls >> c) || (c != "R" && c != "B"))
            throw invalid_input("bad colour on line " + std::to_string(lineno));
        table[colex_rank(KEdge(vs), n, k)] = c == "R" ? Cell::red : Cell::blue;
    }
    return ColouredKGraph(n, k, std::move(table));
}

void write_colouring(std::ostream& out, const ColouredKGraph& g)
{
    out << g.n() << ' ' << g.k() << '\n';
    for (std::uint64_t r = 0; r < g.num_cells(); ++r) {
        if (!g.present(r)) continue;
        KEdge e = g.edge_of(r);
        for (int i = 0; i < e.size(); ++i) out << e.v[i] << ' ';
        out << colour_char(g.colour(r)) << '\n';
    }
}

}  // namespace kcover
