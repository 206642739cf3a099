#include "loomlab/atlas.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

namespace loomlab {

namespace {

// ---------------------------------------------------------------------------
// (3,3)-loom search over the 3x3 grid, cell (i,j) -> 3i+j.
//
// With the A-side perfect matching fixed to the columns and the B-side one
// to the rows, orthogonality confines A to the 27 row-transversals T_N and
// B = C_3(A) to the 27 column-transversals T_M. Everything the axioms ask
// becomes mask algebra over those two 27-element candidate spaces:
//   - tau(A) = tau(B) = 3 holds automatically (rows/columns are disjoint),
//   - B is the set of column-transversals covering A,
//   - the pair is a loom iff additionally A is exactly the set of
//     row-transversals covering B and every (a,b) meets exactly once.
// Accepted leaves are re-verified with the general machinery.
// ---------------------------------------------------------------------------

struct Grid33 {
    std::array<uint16_t, 27> tn{};  // row transversals as 9-bit masks
    std::array<uint16_t, 27> tm{};  // column transversals
    std::array<uint32_t, 27> hit_of_b{};   // T_N members meeting b
    std::array<uint32_t, 27> orth_of_b{};  // T_N members meeting b exactly once
    std::array<uint32_t, 27> disj_of_b{};  // T_N members disjoint from b
    std::array<uint32_t, 27> hit_of_a{};   // T_M members meeting a
    int comp[27][27];                      // complement transversal or -1
    uint32_t columns_mask = 0;             // indices of the three columns in T_N
    std::vector<int> order;                // non-column candidates, canonical order
    std::vector<uint32_t> undecided_after; // OR of order[d+1..] per depth d

    Grid33() {
        for (int c0 = 0; c0 < 3; ++c0)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = 0; c2 < 3; ++c2) {
                    int i = 9 * c0 + 3 * c1 + c2;
                    tn[i] = uint16_t((1 << (0 + c0)) | (1 << (3 + c1)) | (1 << (6 + c2)));
                    tm[i] = uint16_t((1 << (3 * c0)) | (1 << (3 * c1 + 1)) | (1 << (3 * c2 + 2)));
                }
        for (int b = 0; b < 27; ++b)
            for (int a = 0; a < 27; ++a) {
                int inter = __builtin_popcount(tn[a] & tm[b]);
                if (inter >= 1) hit_of_b[b] |= uint32_t(1) << a;
                if (inter == 1) orth_of_b[b] |= uint32_t(1) << a;
                if (inter == 0) disj_of_b[b] |= uint32_t(1) << a;
            }
        for (int a = 0; a < 27; ++a)
            for (int b = 0; b < 27; ++b)
                if (tn[a] & tm[b]) hit_of_a[a] |= uint32_t(1) << b;
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j) {
                comp[i][j] = -1;
                if (i != j && !(tn[i] & tn[j])) {
                    uint16_t rest = uint16_t(0x1ff & ~(tn[i] | tn[j]));
                    for (int k = 0; k < 27; ++k)
                        if (tn[k] == rest) comp[i][j] = k;
                }
            }
        columns_mask = (1u << 0) | (1u << 13) | (1u << 26);
        std::vector<std::pair<uint16_t, int>> rest;
        for (int i = 0; i < 27; ++i)
            if (!((columns_mask >> i) & 1)) rest.push_back({tn[i], i});
        std::sort(rest.begin(), rest.end());
        for (auto& [mask, i] : rest) order.push_back(i);
        undecided_after.assign(order.size() + 1, 0);
        for (int d = (int)order.size() - 2; d >= 0; --d)
            undecided_after[d] = undecided_after[d + 1] | (uint32_t(1) << order[d + 1]);
    }
};

struct Search33 {
    const Grid33& g;
    uint64_t nodes = 0, leaves = 0;
    std::vector<uint32_t> accepted;  // A-masks of verified leaf checks

    explicit Search33(const Grid33& g_) : g(g_) {}

    // closes in/out under the complement rule; false on contradiction
    bool propagate(uint32_t& in, uint32_t out, int added) {
        std::vector<int> queue{added};
        while (!queue.empty()) {
            int t = queue.back();
            queue.pop_back();
            uint32_t others = in & ~(uint32_t(1) << t);
            while (others) {
                int u = __builtin_ctz(others);
                others &= others - 1;
                int c = g.comp[t][u];
                if (c < 0) continue;
                if ((out >> c) & 1) return false;
                if (!((in >> c) & 1)) {
                    in |= uint32_t(1) << c;
                    queue.push_back(c);
                }
            }
        }
        return true;
    }

    // every b meeting some a twice must end up non-covering; prune when no
    // usable disjoint candidate remains
    bool poisoned_ok(uint32_t in, uint32_t out, uint32_t undecided) {
        for (int b = 0; b < 27; ++b) {
            uint32_t bad = in & g.hit_of_b[b] & ~g.orth_of_b[b];
            if (!bad) continue;
            if (!((in | undecided) & ~out & g.disj_of_b[b])) return false;
        }
        return true;
    }

    void leaf(uint32_t in) {
        ++leaves;
        uint32_t bmask = 0;
        for (int b = 0; b < 27; ++b)
            if ((in & ~g.hit_of_b[b]) == 0) bmask |= uint32_t(1) << b;
        // orthogonality of the full pair
        uint32_t bm = bmask;
        while (bm) {
            int b = __builtin_ctz(bm);
            bm &= bm - 1;
            if (in & ~g.orth_of_b[b]) return;
        }
        // A must be exactly the row-transversals covering B
        for (int a = 0; a < 27; ++a) {
            bool covers = (bmask & ~g.hit_of_a[a]) == 0;
            bool inA = (in >> a) & 1;
            if (covers != inA) return;
        }
        accepted.push_back(in);
    }

    void rec(size_t depth, uint32_t in, uint32_t out) {
        ++nodes;
        if (depth == g.order.size()) {
            leaf(in);
            return;
        }
        int t = g.order[depth];
        uint32_t undecided = g.undecided_after[depth];
        if (((in >> t) & 1) || ((out >> t) & 1)) {
            rec(depth + 1, in, out);
            return;
        }
        // include t
        {
            uint32_t in2 = in | (uint32_t(1) << t);
            if (propagate(in2, out, t) && !(in2 & out) &&
                poisoned_ok(in2, out, undecided)) rec(depth + 1, in2, out);
        }
        // exclude t
        {
            uint32_t out2 = out | (uint32_t(1) << t);
            if (!(in & out2) && poisoned_ok(in, out2, undecided)) rec(depth + 1, in, out2);
        }
    }
};

Hypergraph tn_hypergraph(const Grid33& g, uint32_t mask) {
    std::vector<BitSet> es;
    for (int i = 0; i < 27; ++i)
        if ((mask >> i) & 1) {
            BitSet s(9);
            for (int v = 0; v < 9; ++v)
                if ((g.tn[i] >> v) & 1) s.set(v);
            es.push_back(std::move(s));
        }
    return Hypergraph::from_edge_sets(9, std::move(es));
}

ClassificationResult reduce_classes(std::vector<Loom> found, SearchStats stats) {
    // canonical ordered-pair forms, deterministic order
    std::map<std::vector<int32_t>, Loom> classes;
    for (auto& L : found) {
        PairCanon pc = canonical_pair(L.A, L.B);
        classes.emplace(pc.code, L);
    }
    ClassificationResult res;
    res.stats = stats;
    res.stats.accepted = found.size();
    for (auto& [code, L] : classes) {
        res.classes.push_back(L);
        if (decompose(L).size() == 1)
            ++res.indecomposable_count;
        else
            ++res.decomposable_count;
    }
    return res;
}

}  // namespace

ClassificationResult classify_33_looms(int threads) {
    auto t0 = std::chrono::steady_clock::now();
    static const Grid33 grid;
    threads = std::max(1, threads);

    // split on the first few decisions, one task per in/out prefix
    int split_depth = threads == 1 ? 0 : 6;
    struct Task {
        uint32_t in, out;
        size_t depth;
    };
    std::vector<Task> tasks;
    {
        Search33 seed(grid);
        std::vector<Task> frontier{{grid.columns_mask, 0, 0}};
        for (int d = 0; d < split_depth; ++d) {
            std::vector<Task> nf;
            for (auto& f : frontier) {
                int t = grid.order[f.depth];
                if (((f.in >> t) & 1) || ((f.out >> t) & 1)) {
                    nf.push_back({f.in, f.out, f.depth + 1});
                    continue;
                }
                uint32_t in2 = f.in | (uint32_t(1) << t);
                if (seed.propagate(in2, f.out, t) && !(in2 & f.out))
                    nf.push_back({in2, f.out, f.depth + 1});
                nf.push_back({f.in, f.out | (uint32_t(1) << t), f.depth + 1});
            }
            frontier = std::move(nf);
        }
        tasks = std::move(frontier);
    }

    std::vector<Search33> workers;
    workers.reserve(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i) workers.emplace_back(grid);
    {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        auto body = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                workers[i].rec(tasks[i].depth, tasks[i].in, tasks[i].out);
            }
        };
        for (int t = 0; t < threads; ++t) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    SearchStats stats;
    stats.threads = threads;
    std::vector<uint32_t> accepted;
    for (auto& w : workers) {
        stats.nodes += w.nodes;
        stats.leaves += w.leaves;
        accepted.insert(accepted.end(), w.accepted.begin(), w.accepted.end());
    }
    std::sort(accepted.begin(), accepted.end());
    accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());

    std::vector<Loom> found;
    for (uint32_t amask : accepted) {
        Hypergraph A = tn_hypergraph(grid, amask);
        Hypergraph B = covers_of_size(A, 3);
        VerificationReport rep;
        auto L = verify_loom(A, B, &rep);
        if (!L) throw Error("mask-level (3,3) candidate failed full verification");
        found.push_back(*L);
    }
    auto res = reduce_classes(std::move(found), stats);
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.stats.threads = threads;
    return res;
}

ClassificationResult enumerate_r2_looms(int r) {
    if (r < 1 || r > 5) throw TooLarge("(r,2) enumeration supports 1 <= r <= 5");
    auto t0 = std::chrono::steady_clock::now();
    SearchStats stats;
    // all partitions of r, descending parts
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            parts.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    gen(gen, r, r);
    std::vector<Loom> found;
    for (const auto& q : parts) {
        found.push_back(r2_loom(q));
        ++stats.leaves;
    }
    stats.nodes = parts.size();
    auto res = reduce_classes(std::move(found), stats);
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<Hypergraph> mols_family(int r) {
    if (r == 2) {
        // the three perfect matchings of K4 on the 2x2 grid
        return {Hypergraph::make(4, {{0, 1}, {2, 3}}), Hypergraph::make(4, {{0, 2}, {1, 3}}),
                Hypergraph::make(4, {{0, 3}, {1, 2}})};
    }
    if (r == 3) {
        // the four parallel classes of the 3x3 affine plane
        return {Hypergraph::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
                Hypergraph::make(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}),
                Hypergraph::make(9, {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}}),
                Hypergraph::make(9, {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}})};
    }
    throw Unsupported("built-in families exist for r = 2 and r = 3");
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// deterministic bounded integer, identical across platforms
int bounded(uint64_t& state, int n) { return int(splitmix64(state) % uint64_t(n)); }

std::vector<int> sample_subset(uint64_t& state, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + bounded(state, n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

FamilyCheckReport family_check(const std::vector<Hypergraph>& family, int extension_trials,
                               uint64_t seed) {
    FamilyCheckReport rep;
    rep.pairwise_cross_intersecting = true;
    for (size_t i = 0; i < family.size() && rep.pairwise_cross_intersecting; ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            auto ci = is_cross_intersecting(family[i], family[j]);
            if (!ci.ok) {
                rep.pairwise_cross_intersecting = false;
                rep.violating_i = (int)i;
                rep.violating_j = (int)j;
                break;
            }
        }
    bool first = true;
    for (const auto& h : family) {
        Rational ts = nu_star(h).value;
        rep.taustars.push_back(ts);
        if (first || ts < rep.min_taustar) rep.min_taustar = ts;
        first = false;
    }
    if (extension_trials <= 0 || family.empty() || !rep.pairwise_cross_intersecting)
        return rep;

    int n = family.front().n;
    auto r_opt = family.front().uniformity_opt();
    if (!r_opt) return rep;
    int r = *r_opt;
    // candidate pool: all r-subsets meeting every edge of every member
    std::vector<BitSet> pool;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == r) {
            BitSet s = BitSet::from_indices(n, cur);
            for (const auto& h : family)
                for (const auto& e : h.edges)
                    if (!e.intersects(s)) return;
            pool.push_back(s);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);

    uint64_t state = seed ^ 0x5eedf00dull;
    rep.extension_trials = extension_trials;
    for (int t = 0; t < extension_trials; ++t) {
        if (pool.empty()) {
            ++rep.extension_vacuous;  // no admissible member at all
            continue;
        }
        int edges = 1 + bounded(state, std::min<int>(4, (int)pool.size()));
        std::vector<BitSet> chosen;
        for (int k = 0; k < edges; ++k) chosen.push_back(pool[bounded(state, (int)pool.size())]);
        Hypergraph extra = Hypergraph::from_edge_sets(n, chosen);
        bool ok = true;
        for (const auto& h : family)
            if (!is_cross_intersecting(h, extra).ok) ok = false;
        if (!ok) {
            ++rep.extension_vacuous;
            continue;
        }
        bool all_at_r = nu_star(extra).value == r;
        for (const auto& h : family)
            if (nu_star(h).value != r) all_at_r = false;
        if (all_at_r)
            ++rep.extension_violations;
        else
            ++rep.extension_confirmed;
    }
    return rep;
}

std::pair<Hypergraph, Hypergraph> random_cross_intersecting(int r, int s, uint64_t seed) {
    uint64_t state = seed;
    int n = std::max(r * r, s + r);
    while (true) {
        int na = 2 + bounded(state, 3);
        std::vector<BitSet> a_edges;
        bool matching_shape = bounded(state, 4) == 0 && n >= r * r;
        if (matching_shape) {
            // a matching of r disjoint edges pins tau*(A) = r
            for (int i = 0; i < r; ++i) {
                std::vector<int> e(r);
                for (int k = 0; k < r; ++k) e[k] = i * r + k;
                a_edges.push_back(BitSet::from_indices(n, e));
            }
        } else {
            for (int i = 0; i < na; ++i)
                a_edges.push_back(BitSet::from_indices(n, sample_subset(state, n, r)));
        }
        Hypergraph A = Hypergraph::from_edge_sets(n, a_edges);
        int nb = 1 + bounded(state, 3);
        std::vector<BitSet> b_edges;
        for (int i = 0; i < nb && (int)b_edges.size() < nb; ++i) {
            // one forced hitting vertex per A-edge, padded up to s
            BitSet e(n);
            for (const auto& a : A.edges) {
                auto idx = a.to_indices();
                e.set(idx[bounded(state, (int)idx.size())]);
            }
            if (e.count() > s) continue;
            while (e.count() < s) e.set(bounded(state, n));
            if (e.count() == s) b_edges.push_back(e);
        }
        if (b_edges.empty()) continue;
        Hypergraph B = Hypergraph::from_edge_sets(n, b_edges);
        return {A, B};
    }
}

std::string BatteryReport::to_text() const {
    std::ostringstream os;
    os << "battery r=" << r << " count=" << count << " seed=" << seed << "\n"
       << "  taustar<=r violations:     " << violations_taustar_le_r << "\n"
       << "  mixed max bound violations: " << violations_mixed_max << "\n"
       << "  equality-case violations:   " << violations_equality_case << " (cases seen "
       << equality_cases_seen << ")\n"
       << "  cover-closure supset violations: " << violations_c2 << "\n"
       << "  cover-closure fixpoint violations: " << violations_c3 << "\n"
       << "  sandwich violations:        " << violations_sandwich << "\n"
       << "  verdict: " << (clean() ? "clean" : "VIOLATIONS FOUND") << "\n";
    return os.str();
}

BatteryReport property_battery(int count, uint64_t seed, int r) {
    BatteryReport rep;
    rep.r = r;
    rep.count = count;
    rep.seed = seed;
    for (int i = 0; i < count; ++i) {
        uint64_t state = seed;
        state ^= uint64_t(i) * 0x9e3779b97f4a7c15ull + 0x1234;
        uint64_t sub = splitmix64(state);

        // same uniformity: tau*(A ∪ B) <= r, the sandwich, the equality case
        auto [A, B] = random_cross_intersecting(r, r, sub);
        Hypergraph U = union_families(A, B);
        FracCertificate fu = nu_star(U);
        if (fu.value > r) ++rep.violations_taustar_le_r;
        IntCertificate tu = tau(U);
        IntCertificate nuU = nu(U);
        if (!(Rational(nuU.value) <= fu.value && fu.value <= Rational(tu.value)))
            ++rep.violations_sandwich;
        if (fu.value == r) {
            ++rep.equality_cases_seen;
            Rational ma = nu_star(A).value, mb = nu_star(B).value;
            if (std::max(ma, mb) != r) ++rep.violations_equality_case;
        }

        // mixed uniformities: tau* <= max(r,s)
        int s = std::max(1, r - 1 + 2 * (int)(sub % 2));  // r-1 or r+1
        auto [A2, B2] = random_cross_intersecting(r, s, splitmix64(state));
        Hypergraph U2 = union_families(A2, B2);
        if (nu_star(U2).value > std::max(r, s)) ++rep.violations_mixed_max;

        // cover-closure identities on a small uniform sample
        {
            uint64_t st = splitmix64(state);
            int n = r + 2 + bounded(st, 3);
            int ne = 2 + bounded(st, 3);
            std::vector<BitSet> es;
            for (int k = 0; k < ne; ++k)
                es.push_back(BitSet::from_indices(n, sample_subset(st, n, r)));
            Hypergraph H = Hypergraph::from_edge_sets(n, es);
            int tH = tau(H).value;
            for (int ss : {tH, tH + 1}) {
                if (ss > n) continue;
                Hypergraph cs = covers_of_size(H, ss);
                Hypergraph crcs = covers_of_size(cs, r);
                for (const auto& e : H.edges)
                    if (std::find(crcs.edges.begin(), crcs.edges.end(), e) == crcs.edges.end())
                        ++rep.violations_c2;
                Hypergraph round = covers_of_size(crcs, ss);
                if (round != cs) ++rep.violations_c3;
            }
        }
    }
    return rep;
}

long long partition_count(int r) {
    std::vector<long long> p(r + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int total = part; total <= r; ++total) p[total] += p[total - part];
    return p[r];
}

}  // namespace loomlab
