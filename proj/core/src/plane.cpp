#include "kcover/plane.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace kcover {

namespace {

bool fail(std::string* error, const std::string& why)
{
    if (error) *error = why;
    return false;
}

// Directed edges of an oriented face boundary walk.
void face_directed_edges(const std::vector<int>& face,
                         const std::function<void(int, int)>& fn)
{
    const std::size_t l = face.size();
    if (l < 2) return;
    for (std::size_t i = 0; i < l; ++i) fn(face[i], face[(i + 1) % l]);
}

}  // namespace

int PlaneGraph::num_edges() const
{
    int count = 0;
    for (const auto& adj : adjacency) count += static_cast<int>(adj.size());
    return count / 2;
}

bool PlaneGraph::has_edge(int u, int v) const
{
    if (u < 0 || u >= num_vertices) return false;
    return std::find(adjacency[u].begin(), adjacency[u].end(), v) != adjacency[u].end();
}

bool PlaneGraph::finalize(std::string* error)
{
    rotation.assign(num_vertices, {});
    adjacency.assign(num_vertices, {});
    if (num_vertices <= 0) return fail(error, "no vertices");
    if (outer < 0 || outer >= static_cast<int>(faces.size()))
        return fail(error, "bad outer face index");
    for (const auto& f : faces) {
        if (f.empty()) return fail(error, "empty face");
        for (int v : f)
            if (v < 0 || v >= num_vertices) return fail(error, "face vertex out of range");
    }

    // Each directed edge must appear exactly once over all face boundaries;
    // the corner u -> v -> w defines the rotation successor of u at v.
    std::set<std::pair<int, int>> directed;
    std::vector<std::map<int, int>> next_at(num_vertices);
    bool ok = true;
    std::string why;
    for (const auto& f : faces) {
        const std::size_t l = f.size();
        if (l < 2) continue;
        for (std::size_t i = 0; i < l && ok; ++i) {
            int u = f[i], v = f[(i + 1) % l], w = f[(i + 2) % l];
            if (u == v) {
                ok = false;
                why = "degenerate face edge";
                break;
            }
            if (!directed.emplace(u, v).second) {
                ok = false;
                why = "directed edge repeated across faces";
                break;
            }
            next_at[v][u] = w;
        }
        if (!ok) break;
    }
    if (!ok) return fail(error, why);
    for (const auto& [u, v] : directed)
        if (!directed.count({v, u})) return fail(error, "unmatched directed edge");

    // Rotation at v is the unique orbit of the corner successor map.
    for (int v = 0; v < num_vertices; ++v) {
        const auto& succ = next_at[v];
        if (succ.empty()) continue;
        int start = succ.begin()->first;
        int cur = start;
        std::set<int> seen;
        do {
            if (!seen.insert(cur).second) return fail(error, "rotation orbit not simple");
            rotation[v].push_back(cur);
            auto it = succ.find(cur);
            if (it == succ.end()) return fail(error, "broken rotation orbit");
            cur = it->second;
        } while (cur != start);
        if (rotation[v].size() != succ.size())
            return fail(error, "rotation not a single orbit");
        adjacency[v] = rotation[v];
        std::sort(adjacency[v].begin(), adjacency[v].end());
    }

    // Connectivity.
    std::vector<char> visited(num_vertices, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adjacency[v])
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                q.push(u);
            }
    }
    if (reached != num_vertices) return fail(error, "plane graph disconnected");

    const int euler = num_vertices - num_edges() + static_cast<int>(faces.size());
    if (euler != 2) return fail(error, "Euler formula violated");
    return true;
}

namespace {

// Concentric-grid triangulation for a closed walk of length m >= 3.
std::optional<Triangulation> triangulate_grid(const ColouredKGraph& g,
                                              const TightPseudoWalk& q)
{
    const int k = g.k();
    const int m = q.length();

    // S[i][j]: the k-j smallest vertices of S[i][j-1] cap S[i+1][j-1].
    std::vector<std::vector<VertexSet>> s(m, std::vector<VertexSet>(k));
    for (int i = 0; i < m; ++i) s[i][0] = q.edges[i].vertex_set();
    for (int j = 1; j <= k - 1; ++j) {
        for (int i = 0; i < m; ++i) {
            VertexSet inter = s[i][j - 1] & s[(i + 1) % m][j - 1];
            if (vs_size(inter) < k - j) return std::nullopt;
            VertexSet pick = 0;
            for (int t = 0; t < k - j; ++t) {
                int v = __builtin_ctzll(inter);
                pick = vs_with(pick, v);
                inter = vs_without(inter, v);
            }
            s[i][j] = pick;
        }
    }

    // Apexes z_1..z_k; z_j extends every z_1..z_{j-1} u S[i][j] to an edge.
    std::vector<int> z;
    VertexSet zset = 0;
    for (int j = 1; j <= k; ++j) {
        int chosen = -1;
        for (int v = 0; v < g.n() && chosen < 0; ++v) {
            if (vs_contains(zset, v)) continue;
            bool good = true;
            for (int i = 0; i < m && good; ++i) {
                VertexSet base = j == k ? zset : (zset | s[i][j]);
                if (vs_contains(base, v)) {
                    good = false;
                    break;
                }
                std::vector<int> ev = vs_vertices(vs_with(base, v));
                if (!g.present(KEdge(std::move(ev)))) good = false;
                if (j == k) break;  // S[i][k] is empty; i does not matter
            }
            if (good) chosen = v;
        }
        if (chosen < 0) return std::nullopt;
        z.push_back(chosen);
        zset = vs_with(zset, chosen);
    }

    Triangulation t;
    const int centre = m * k;
    t.plane.num_vertices = m * k + 1;
    auto idx = [&](int i, int j) { return ((i % m + m) % m) * k + j; };

    t.phi.resize(t.plane.num_vertices);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) {
            VertexSet ev = s[i][j];
            for (int u = 0; u < j; ++u) ev = vs_with(ev, z[u]);
            t.phi[idx(i, j)] = KEdge(vs_vertices(ev));
        }
    }
    t.phi[centre] = KEdge(vs_vertices(zset));

    // Outer face clockwise (reverse of the walk order); inner triangles
    // counterclockwise per the concentric-circle embedding.
    std::vector<int> outer_face;
    for (int i = m - 1; i >= 0; --i) outer_face.push_back(idx(i, 0));
    t.plane.faces.push_back(outer_face);
    t.plane.outer = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j + 1 < k; ++j) {
            t.plane.faces.push_back({idx(i, j), idx(i + 1, j), idx(i, j + 1)});
            t.plane.faces.push_back({idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
        }
        t.plane.faces.push_back({idx(i, k - 1), idx(i + 1, k - 1), centre});
    }

    for (int i = 0; i < m; ++i) t.outer_cycle.push_back(idx(i, 0));
    if (!t.plane.finalize()) return std::nullopt;
    return t;
}

std::optional<Triangulation> triangulate_trivial(const TightPseudoWalk& q)
{
    Triangulation t;
    if (q.length() == 1) {
        t.plane.num_vertices = 1;
        t.plane.faces = {{0}};
        t.plane.outer = 0;
        t.phi = {q.edges[0]};
        t.outer_cycle = {0};
    } else {
        t.plane.num_vertices = 2;
        t.plane.faces = {{0, 1}};
        t.plane.outer = 0;
        t.phi = {q.edges[0], q.edges[1]};
        t.outer_cycle = {0, 1};
    }
    if (!t.plane.finalize()) return std::nullopt;
    return t;
}

// Glues two triangulations along the shared bridge path. path1/path2 list
// the same boundary path (as positions into the respective outer cycles, in
// the same phi order).
std::optional<Triangulation> glue(const Triangulation& t1, const Triangulation& t2,
                                  const std::vector<int>& path1_pos,
                                  const std::vector<int>& path2_pos,
                                  const std::vector<int>& combined_pos1,
                                  const std::vector<int>& combined_pos2)
{
    const int n1 = t1.plane.num_vertices;
    std::vector<int> map2(t2.plane.num_vertices, -1);
    for (std::size_t t = 0; t < path2_pos.size(); ++t)
        map2[t2.outer_cycle[path2_pos[t]]] = t1.outer_cycle[path1_pos[t]];
    int next_id = n1;
    for (int v = 0; v < t2.plane.num_vertices; ++v)
        if (map2[v] < 0) map2[v] = next_id++;

    Triangulation out;
    out.plane.num_vertices = next_id;
    out.phi.resize(next_id);
    for (int v = 0; v < n1; ++v) out.phi[v] = t1.phi[v];
    for (int v = 0; v < t2.plane.num_vertices; ++v) out.phi[map2[v]] = t2.phi[v];

    for (std::size_t f = 0; f < t1.plane.faces.size(); ++f)
        if (static_cast<int>(f) != t1.plane.outer)
            out.plane.faces.push_back(t1.plane.faces[f]);
    for (std::size_t f = 0; f < t2.plane.faces.size(); ++f) {
        if (static_cast<int>(f) == t2.plane.outer) continue;
        std::vector<int> face = t2.plane.faces[f];
        for (int& v : face) v = map2[v];
        out.plane.faces.push_back(std::move(face));
    }

    for (int p : combined_pos1) out.outer_cycle.push_back(t1.outer_cycle[p]);
    for (int p : combined_pos2) out.outer_cycle.push_back(map2[t2.outer_cycle[p]]);
    std::vector<int> outer_face(out.outer_cycle.rbegin(), out.outer_cycle.rend());
    out.plane.outer = static_cast<int>(out.plane.faces.size());
    out.plane.faces.push_back(std::move(outer_face));

    out.case_b_splits = t1.case_b_splits + t2.case_b_splits + 1;
    if (!out.plane.finalize()) return std::nullopt;
    return out;
}

}  // namespace

std::optional<Triangulation> triangulate(const ColouredKGraph& g, const TightPseudoWalk& q,
                                         int threshold)
{
    const int k = g.k();
    if (!q.closed || !validate_walk(g, q))
        throw precondition_violation("triangulate: walk must be closed and valid");
    const int m = q.length();
    if (m <= 2) return triangulate_trivial(q);

    // Case B only shrinks walks longer than 4k+2 (each split adds the 2k-2
    // bridge edges to both halves), so the grid cutoff is floored there.
    const int cutoff = std::max(threshold, 4 * k + 2);
    if (m <= cutoff) return triangulate_grid(g, q);

    const int i_star = m / 2;  // 1-based position of the split edge
    auto b = bridge(g, vs_full(g.n()), q.edges[i_star - 1], q.edges[0]);
    if (!b) return std::nullopt;
    // b = e_{i*} f_1 .. f_{2k-2} e_1
    std::vector<KEdge> f(b->edges.begin() + 1, b->edges.end() - 1);

    TightPseudoWalk q1;  // e_1 .. e_{i*} f_1 .. f_{2k-2}
    q1.closed = true;
    q1.edges.assign(q.edges.begin(), q.edges.begin() + i_star);
    q1.edges.insert(q1.edges.end(), f.begin(), f.end());

    TightPseudoWalk q2;  // e_1 f_{2k-2} .. f_1 e_{i*} e_{i*+1} .. e_m
    q2.closed = true;
    q2.edges.push_back(q.edges[0]);
    q2.edges.insert(q2.edges.end(), f.rbegin(), f.rend());
    q2.edges.insert(q2.edges.end(), q.edges.begin() + (i_star - 1), q.edges.end());

    auto t1 = triangulate(g, q1, threshold);
    if (!t1) return std::nullopt;
    auto t2 = triangulate(g, q2, threshold);
    if (!t2) return std::nullopt;

    const int l1 = q1.length();
    const int l2 = q2.length();
    const int path_len = 2 * k;
    // Shared path in phi order e_{i*} f_1 .. f_{2k-2} e_1 (0-based positions).
    std::vector<int> path1, path2;
    for (int t = 0; t < path_len - 1; ++t) path1.push_back(i_star - 1 + t);
    path1.push_back(0);
    for (int t = path_len - 1; t >= 0; --t) path2.push_back(t);
    std::vector<int> comb1, comb2;
    for (int p = 0; p < i_star; ++p) comb1.push_back(p);
    for (int p = path_len; p < l2; ++p) comb2.push_back(p);
    (void)l1;
    return glue(*t1, *t2, path1, path2, comb1, comb2);
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size()) return false;
    const std::size_t l = a.size();
    for (std::size_t shift = 0; shift < l; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < l && match; ++i)
            if (a[i] != b[(i + shift) % l]) match = false;
        if (match) return true;
    }
    return false;
}

}  // namespace

bool validate_triangulation(const Triangulation& t, const ColouredKGraph& g,
                            const TightPseudoWalk& q, std::string* error)
{
    PlaneGraph plane = t.plane;
    std::string why;
    if (!plane.finalize(&why)) return fail(error, "embedding: " + why);
    if (!q.closed || !validate_walk(g, q)) return fail(error, "walk invalid");
    if (static_cast<int>(t.phi.size()) != plane.num_vertices)
        return fail(error, "phi size mismatch");

    for (std::size_t f = 0; f < plane.faces.size(); ++f) {
        if (static_cast<int>(f) == plane.outer) continue;
        if (plane.faces[f].size() != 3) return fail(error, "inner face is not a triangle");
        std::set<int> distinct(plane.faces[f].begin(), plane.faces[f].end());
        if (distinct.size() != 3) return fail(error, "inner face has repeated vertices");
    }

    if (static_cast<int>(t.outer_cycle.size()) != q.length())
        return fail(error, "outer cycle length mismatch");
    for (int i = 0; i < q.length(); ++i)
        if (t.phi[t.outer_cycle[i]] != q.edges[i])
            return fail(error, "outer cycle does not realize the walk");
    std::vector<int> reversed(t.outer_cycle.rbegin(), t.outer_cycle.rend());
    if (!cyclic_equal(plane.faces[plane.outer], reversed) &&
        !cyclic_equal(plane.faces[plane.outer], t.outer_cycle))
        return fail(error, "outer face does not match outer cycle");

    for (int v = 0; v < plane.num_vertices; ++v) {
        if (t.phi[v].size() != g.k()) return fail(error, "phi image has wrong uniformity");
        if (!g.present(t.phi[v])) return fail(error, "phi image not present in host");
        for (int u : plane.adjacency[v])
            if (intersection_size(t.phi[v], t.phi[u]) < g.k() - 1)
                return fail(error, "phi intersection below k-1 on a plane edge");
    }
    return true;
}

HexResult hex_walk(const PlaneGraph& d, const std::vector<int>& outer_cycle,
                   const std::vector<Colour>& col)
{
    const int m = static_cast<int>(outer_cycle.size());
    if (m < 3) throw invalid_input("hex_walk: outer cycle too short");
    if (static_cast<int>(col.size()) != d.num_vertices)
        throw invalid_input("hex_walk: colour vector size mismatch");
    if (col[outer_cycle[0]] != Colour::red || col[outer_cycle[1]] != Colour::blue)
        throw precondition_violation("hex_walk: need x_1 red and x_2 blue");

    // Faces incident to each undirected edge.
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        face_directed_edges(d.faces[f], [&](int u, int v) {
            edge_faces[key(u, v)].push_back(static_cast<int>(f));
        });
    for (auto& [e, fs] : edge_faces)
        if (fs.size() != 2) throw invalid_input("hex_walk: edge not on exactly two faces");

    auto bichromatic = [&](std::pair<int, int> e) { return col[e.first] != col[e.second]; };

    // Every inner triangle must have 0 or 2 bichromatic edges.
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
        if (static_cast<int>(f) == d.outer) continue;
        int deg = 0;
        face_directed_edges(d.faces[f], [&](int u, int v) {
            if (bichromatic(key(u, v))) ++deg;
        });
        if (deg != 0 && deg != 2)
            throw invalid_input("hex_walk: inner face with odd bichromatic degree");
    }

    // Trace the dual cycle from the outer face through x_1 x_2.
    std::pair<int, int> cur = key(outer_cycle[0], outer_cycle[1]);
    if (!bichromatic(cur)) throw invalid_input("hex_walk: x_1 x_2 not bichromatic");
    std::vector<std::pair<int, int>> crossed{cur};
    int cur_face = edge_faces[cur][0] == d.outer ? edge_faces[cur][1] : edge_faces[cur][0];
    const std::size_t step_cap = 2 * d.faces.size() + 2;
    std::size_t steps = 0;
    while (cur_face != d.outer) {
        if (++steps > step_cap) throw invalid_input("hex_walk: trace did not terminate");
        std::pair<int, int> next{-1, -1};
        const auto& face = d.faces[cur_face];
        for (std::size_t i = 0; i < face.size(); ++i) {
            auto e = key(face[i], face[(i + 1) % face.size()]);
            if (e != cur && bichromatic(e)) {
                next = e;
                break;
            }
        }
        if (next.first < 0) throw invalid_input("hex_walk: dead end in dual trace");
        cur = next;
        crossed.push_back(cur);
        cur_face = edge_faces[cur][0] == cur_face ? edge_faces[cur][1] : edge_faces[cur][0];
    }

    HexResult result;
    auto push_side = [&](std::vector<int>& walk, Colour c) {
        for (const auto& e : crossed) {
            int v = col[e.first] == c ? e.first : e.second;
            if (walk.empty() || walk.back() != v) walk.push_back(v);
        }
    };
    push_side(result.red_walk, Colour::red);
    push_side(result.blue_walk, Colour::blue);

    const auto& last = crossed.back();
    int i_star = -1;
    for (int p = 0; p < m; ++p) {
        int a = outer_cycle[p], b = outer_cycle[(p + 1) % m];
        if (key(a, b) == last) {
            i_star = p + 1;  // 1-based; x_{i*} = outer_cycle[p]
            if (col[a] != Colour::blue || col[b] != Colour::red)
                throw invalid_input("hex_walk: crossing edge orientation violated");
            break;
        }
    }
    if (i_star < 0) throw invalid_input("hex_walk: final crossing not on outer cycle");
    result.i_star = i_star;
    return result;
}

}  // namespace kcover
