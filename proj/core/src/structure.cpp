#include "kcover/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace kcover {

namespace {

int comp_of(const ColouredKGraph& g, const TightComponentLabeling& l, const KEdge& e)
{
    return l.component[g.rank_of(e)];
}

void check_instance(const ColouredKGraph& g, const TightComponentLabeling& l,
                    const TightPseudoWalk& q, int i, Colour c)
{
    const int m = q.length();
    if (!q.closed || !validate_walk(g, q))
        throw precondition_violation("crossing witness: walk must be closed and valid");
    if (i <= 1 || i >= m) throw precondition_violation("crossing witness: need 1 < i < m");
    if (g.colour(q.edges[0]) != c || g.colour(q.edges[i - 1]) != c)
        throw precondition_violation("crossing witness: endpoint edges have the wrong colour");
    if (comp_of(g, l, q.edges[0]) == comp_of(g, l, q.edges[i - 1]))
        throw precondition_violation("crossing witness: endpoint edges share a component");
}

}  // namespace

std::optional<CrossingWitness> find_crossing_witness(const ColouredKGraph& g,
                                                     const TightComponentLabeling& l,
                                                     const TightPseudoWalk& q, int i,
                                                     Colour c)
{
    check_instance(g, l, q, i, c);
    const int m = q.length();
    const Colour o = other(c);
    for (int a = 2; a <= i - 1; ++a) {
        if (g.colour(q.edges[a - 1]) != o) continue;
        const int ca = comp_of(g, l, q.edges[a - 1]);
        for (int b = i + 1; b <= m; ++b) {
            if (g.colour(q.edges[b - 1]) != o) continue;
            if (comp_of(g, l, q.edges[b - 1]) == ca) return CrossingWitness{a, b, ca};
        }
    }
    return std::nullopt;
}

namespace {

// Case A on a rotated view of Q starting at start_pos (1-based): the first
// arc of the rotated walk must be entirely opposite-coloured. Returns the
// rotated hex crossing position i* (1-based in the rotated walk) and the
// interior of the opposite-coloured walk from position 2 to position i*.
struct CaseAOutcome {
    int i_star_rot = 0;
    std::vector<KEdge> interior;  // strictly between the two endpoint edges
};

std::optional<CaseAOutcome> case_a(const ColouredKGraph& g, const TightPseudoWalk& q,
                                   int start_pos, Colour c, std::string* failure)
{
    const int m = q.length();
    TightPseudoWalk rotated;
    rotated.closed = true;
    for (int t = 0; t < m; ++t) rotated.edges.push_back(q.edges[(start_pos - 1 + t) % m]);

    auto tri = triangulate(g, rotated);
    if (!tri) {
        *failure = "triangulation failed";
        return std::nullopt;
    }
    std::vector<Colour> col(tri->plane.num_vertices);
    for (int v = 0; v < tri->plane.num_vertices; ++v) {
        Colour cv = g.colour(tri->phi[v]);
        // hex_walk speaks in red/blue with red endpoints; map c to red.
        col[v] = c == Colour::red ? cv : other(cv);
    }
    HexResult hex = hex_walk(tri->plane, tri->outer_cycle, col);

    CaseAOutcome out;
    out.i_star_rot = hex.i_star;
    for (std::size_t t = 1; t + 1 < hex.blue_walk.size(); ++t)
        out.interior.push_back(tri->phi[hex.blue_walk[t]]);
    return out;
}

}  // namespace

ConstructiveResult constructive_crossing_witness(const ColouredKGraph& g,
                                                 const TightPseudoWalk& q, int i,
                                                 Colour c)
{
    TightComponentLabeling l = tight_components(g);
    check_instance(g, l, q, i, c);
    const Colour o = other(c);

    ConstructiveResult result;
    TightPseudoWalk cur = q;
    int cur_i = i;
    const int root_comp = comp_of(g, l, q.edges[0]);
    int found_comp = -1;

    for (;;) {
        const int m = cur.length();
        int s = 0;
        for (int p = 2; p <= cur_i - 1; ++p)
            if (g.colour(cur.edges[p - 1]) == c) ++s;
        ConstructiveStep step;
        step.walk = cur;
        step.i = cur_i;
        step.s = s;
        step.case_a = s == 0;
        result.trace.push_back(step);

        if (cur_i == 2) return result;  // empty first arc; no witness possible

        if (s == 0) {
            auto out = case_a(g, cur, 1, c, &result.failure);
            if (!out) return result;
            const int pos = out->i_star_rot;
            if (pos <= cur_i) {
                result.failure = "crossing landed inside the first arc";
                return result;
            }
            found_comp = comp_of(g, l, cur.edges[pos - 1]);
            break;
        }

        // Case B: j2 minimal in {3..i} with a c-coloured edge outside the root
        // component; j1 maximal c-coloured position before it.
        int j2 = -1;
        for (int p = 3; p <= cur_i && j2 < 0; ++p)
            if (g.colour(cur.edges[p - 1]) == c &&
                comp_of(g, l, cur.edges[p - 1]) != root_comp)
                j2 = p;
        if (j2 < 0) {
            result.failure = "no component change along the first arc";
            return result;
        }
        int j1 = -1;
        for (int p = j2 - 2; p >= 1; --p)
            if (g.colour(cur.edges[p - 1]) == c) {
                j1 = p;
                break;
            }
        // j1 exists since position 1 is c-coloured; e_{j1+1}..e_{j2-1} are all
        // opposite-coloured by the minimality of j2 and maximality of j1.
        auto out = case_a(g, cur, j1, c, &result.failure);
        if (!out) return result;
        // Rotated position back to positions of cur (1-based).
        const int f_pos = (j1 - 1 + out->i_star_rot - 1) % m + 1;
        const int j2_rot = j2 - j1 + 1;
        if (out->i_star_rot <= j2_rot) {
            result.failure = "crossing landed inside the rotated first arc";
            return result;
        }
        if (f_pos > cur_i || f_pos == 1) {
            // The opposite-coloured walk already reaches the far arc.
            found_comp = comp_of(g, l, cur.edges[(f_pos == 1 ? m : f_pos) - 1]);
            break;
        }

        // Splice the found walk into cur, removing c-coloured edges from the
        // first arc, and recurse on the rewritten instance.
        TightPseudoWalk next;
        next.closed = true;
        if (f_pos <= j1 - 1) {
            // cur = e_1..e_{f} [dropped ..e_{j1}] e_{j1+1}..e_m with the
            // interior of the found walk reversed in between.
            next.edges.assign(cur.edges.begin(), cur.edges.begin() + f_pos);
            next.edges.insert(next.edges.end(), out->interior.rbegin(),
                              out->interior.rend());
            next.edges.insert(next.edges.end(), cur.edges.begin() + j1,
                              cur.edges.end());
            cur_i = cur_i - (j1 - f_pos) + static_cast<int>(out->interior.size());
        } else if (f_pos >= j2 + 1 && f_pos <= cur_i - 1) {
            next.edges.assign(cur.edges.begin(), cur.edges.begin() + j1 + 1);
            next.edges.insert(next.edges.end(), out->interior.begin(),
                              out->interior.end());
            next.edges.insert(next.edges.end(), cur.edges.begin() + (f_pos - 1),
                              cur.edges.end());
            cur_i = cur_i - (f_pos - 1 - j1 - 1) + static_cast<int>(out->interior.size());
        } else {
            result.failure = "crossing landed on a c-coloured position";
            return result;
        }
        cur = std::move(next);
    }

    // Map the component found on the rewritten walk back to the original
    // instance: every spliced edge shares its component with an edge of the
    // original first arc, so a positional scan recovers a valid pair.
    const int m = q.length();
    int a = -1, b = -1;
    for (int p = 2; p <= i - 1 && a < 0; ++p)
        if (g.colour(q.edges[p - 1]) == o && comp_of(g, l, q.edges[p - 1]) == found_comp)
            a = p;
    for (int p = i + 1; p <= m && b < 0; ++p)
        if (g.colour(q.edges[p - 1]) == o && comp_of(g, l, q.edges[p - 1]) == found_comp)
            b = p;
    if (a < 0 || b < 0) {
        result.failure = "constructed component not realized on the original walk";
        return result;
    }
    result.witness = CrossingWitness{a, b, found_comp};
    return result;
}

LemmaReport verify_lemma_exhaustive(const ColouredKGraph& g, int max_len, int sample_cap)
{
    const int n = g.n();
    const int k = g.k();
    if (binom(n, k) > 300) throw invalid_input("verify_lemma_exhaustive: graph too large");

    LemmaReport report;
    TightComponentLabeling l = tight_components(g);

    // With at most one component per colour no instance can qualify.
    bool multi = false;
    for (Colour c : {Colour::red, Colour::blue}) {
        int count = 0;
        for (int id = 0; id < l.num_components(); ++id)
            if (l.colour[id] == c) ++count;
        if (count >= 2) multi = true;
    }
    if (!multi) return report;

    // Edge universe and adjacency (self loops included: walks may repeat).
    std::vector<KEdge> edges;
    std::vector<int> rank_to_idx(binom(n, k), -1);
    for (std::uint64_t r = 0; r < binom(n, k); ++r)
        if (g.present(r)) {
            rank_to_idx[r] = static_cast<int>(edges.size());
            edges.push_back(colex_unrank(r, n, k));
        }
    const int ne = static_cast<int>(edges.size());
    std::vector<std::vector<int>> adj(ne);
    for (int a = 0; a < ne; ++a) {
        adj[a].push_back(a);
        for (const KEdge& e : adjacent_edges(g, edges[a]))
            adj[a].push_back(rank_to_idx[g.rank_of(e)]);
        std::sort(adj[a].begin(), adj[a].end());
    }
    std::vector<int> comp(ne), colr(ne);
    for (int a = 0; a < ne; ++a) {
        comp[a] = l.component[g.rank_of(edges[a])];
        colr[a] = g.colour(edges[a]) == Colour::red ? 0 : 1;
    }

    auto bfs_from = [&](const std::vector<int>& sources) {
        std::vector<int> dist(ne, max_len + 1);
        std::queue<int> bq;
        for (int s : sources) {
            dist[s] = 0;
            bq.push(s);
        }
        while (!bq.empty()) {
            int v = bq.front();
            bq.pop();
            for (int u : adj[v])
                if (dist[u] > dist[v] + 1) {
                    dist[u] = dist[v] + 1;
                    bq.push(u);
                }
        }
        return dist;
    };

    std::uint64_t sample_seen = 0;

    std::vector<int> walk(max_len);
    for (int start = 0; start < ne; ++start) {
        // cd[e]: steps from e to an edge that closes back onto the start.
        std::vector<int> cd = bfs_from(adj[start]);
        // dq[e]: steps from e to a start-coloured edge outside start's
        // component (a candidate qualifying position).
        std::vector<int> targets;
        for (int a = 0; a < ne; ++a)
            if (colr[a] == colr[start] && comp[a] != comp[start]) targets.push_back(a);
        if (targets.empty()) continue;
        std::vector<int> dq = bfs_from(targets);

        auto is_target = [&](int a) {
            return colr[a] == colr[start] && comp[a] != comp[start];
        };
        auto emit = [&](int t) {
            ++report.walks_enumerated;
            for (int i = 2; i <= t - 1; ++i) {
                if (!is_target(walk[i - 1])) continue;
                TightPseudoWalk q;
                q.closed = true;
                for (int p = 0; p < t; ++p) q.edges.push_back(edges[walk[p]]);
                Colour c = colr[start] == 0 ? Colour::red : Colour::blue;
                ++report.instances_checked;
                auto w = find_crossing_witness(g, l, q, i, c);
                if (w) {
                    ++report.witnesses_found;
                } else if (report.counterexamples.size() < 64) {
                    report.counterexamples.push_back({q, i});
                }
                if (sample_cap > 0) {
                    ++sample_seen;
                    // Deterministic thinning of the instance stream.
                    if (static_cast<int>(report.samples.size()) < sample_cap &&
                        sample_seen % 37 == 1)
                        report.samples.push_back({q, i});
                }
            }
        };
        // DFS over walk extensions. Prunes branches that can no longer close
        // onto the start edge in budget, and branches that cannot reach a
        // qualifying position by position max_len - 1.
        std::function<void(int, int)> dfs = [&](int t, int qualified) {
            if (cd[walk[t - 1]] == 0) emit(t);
            if (t == max_len) return;
            for (int nxt : adj[walk[t - 1]]) {
                if (cd[nxt] > max_len - t - 1) continue;
                const int q2 = qualified + (is_target(nxt) ? 1 : 0);
                if (q2 == 0 && t + 1 + dq[nxt] > max_len - 1) continue;
                walk[t] = nxt;
                dfs(t + 1, q2);
            }
        };
        walk[0] = start;
        dfs(1, 0);
    }
    return report;
}

}  // namespace kcover
