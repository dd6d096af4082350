#include "greenseq/walker.hpp"

#include "greenseq/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace greenseq {

const char* to_string(StepColor c) { return c == StepColor::Green ? "green" : "red"; }

std::vector<SiltingObject> MutationSequence::objects(const ARCategory& cat) const {
    std::vector<SiltingObject> out;
    out.push_back(start);
    SiltingObject cur = start;
    for (const MutationStep& s : steps) {
        if (s.pos < 0 || s.pos >= static_cast<int>(cur.summands.size()) ||
            !(cur.summands[s.pos] == s.removed))
            throw MalformedInputError("sequence step does not match the object it applies to");
        std::vector<IndecObject> xs = cur.summands;
        xs[s.pos] = s.added;
        cur = make_silting(cat, std::move(xs));
        out.push_back(cur);
    }
    if (!(cur == end)) throw MalformedInputError("sequence does not end at its declared endpoint");
    return out;
}

bool VerificationReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

SearchBounds mgs_bounds(const ARCategory& cat, int m, int slack) {
    SearchBounds b;
    b.kind = WalkKind::Mgs;
    b.m = m;
    b.tame = cat.tame();
    b.shift_lo = -slack;
    b.shift_hi = m + slack;
    if (b.tame) {
        b.N = cat.sincerity_bound().N;
        b.has_degree_window = true;
        const Int bound = Int(cat.n()) * m * b.N;
        b.deg_lo = -bound - slack * b.N;
        b.deg_hi = bound + slack * b.N;
    }
    return b;
}

SearchBounds red_bounds(const ARCategory& cat, const SiltingObject& from, const SiltingObject& to,
                        int m, int slack) {
    SearchBounds b;
    b.kind = WalkKind::Red;
    b.m = m;
    b.tame = cat.tame();
    int lo = from.summands.front().shift, hi = lo;
    for (const SiltingObject* t : {&from, &to})
        for (const IndecObject& x : t->summands) {
            lo = std::min(lo, x.shift);
            hi = std::max(hi, x.shift);
        }
    // summands live in (mod Lambda)[k] for i <= k < j with i = lo, j = hi+1
    b.shift_lo = lo - m - slack;
    b.shift_hi = hi + m + slack;
    if (b.tame) {
        b.N = cat.sincerity_bound().N;
        bool first = true;
        Int L = 0, H = 0;
        for (const IndecObject& x : to.summands)
            if (is_transjective(x)) {
                const Int d = transjective_degree(x);
                L = first ? d : std::min(L, d);
                first = false;
            }
        first = true;
        for (const IndecObject& x : from.summands)
            if (is_transjective(x)) {
                const Int d = transjective_degree(x);
                H = first ? d : std::max(H, d);
                first = false;
            }
        b.target_min_degree = L;
        b.source_max_degree = H;
        const Int span = Int(cat.n()) * b.N * (2 * Int(m) + (hi + 1) - lo);
        b.has_degree_window = true;
        b.deg_lo = L - span - Int(m) * b.N - slack * b.N;
        b.deg_hi = H + span + Int(m) * b.N + slack * b.N;
    }
    return b;
}

namespace {

int bucket_low(const IndecObject& x) {
    // regulars of module shift j-1 count with slice j
    return x.kind == ObjectKind::Regular ? x.shift + 1 : slice_index(x);
}

int bucket_high(const IndecObject& x) {
    return x.kind == ObjectKind::Regular ? x.shift : slice_index(x);
}

} // namespace

Int degree_bound_rhs(const ARCategory& cat, const SiltingObject& t, int m, Int N) {
    (void)cat;
    Int sum = 0;
    for (const IndecObject& x : t.summands) {
        const int j = bucket_low(x);
        if (j >= 0 && j <= m) sum += Int(m - j);
    }
    return -sum * N;
}

Int degree_bound_mirror_rhs(const ARCategory& cat, const SiltingObject& t, int m, Int N) {
    (void)cat;
    Int sum = 0;
    for (const IndecObject& x : t.summands) {
        const int j = bucket_high(x);
        if (j >= 0 && j <= m) sum += Int(j);
    }
    return sum * N;
}

namespace {

bool degrees_of(const SiltingObject& t, Int& lo, Int& hi) {
    bool seen = false;
    for (const IndecObject& x : t.summands) {
        if (!is_transjective(x)) continue;
        const Int d = transjective_degree(x);
        lo = seen ? std::min(lo, d) : d;
        hi = seen ? std::max(hi, d) : d;
        seen = true;
    }
    return seen;
}

bool inside_windows(const SiltingObject& t, const SearchBounds& b) {
    for (const IndecObject& x : t.summands)
        if (x.shift < b.shift_lo || x.shift > b.shift_hi) return false;
    if (b.tame && b.has_degree_window) {
        for (const IndecObject& x : t.summands) {
            if (!is_transjective(x)) continue;
            const Int d = transjective_degree(x);
            if (d < b.deg_lo || d > b.deg_hi) return false;
        }
    }
    return true;
}

bool passes_degree_inequality(const ARCategory& cat, const SiltingObject& t, const SearchBounds& b,
                              int slack) {
    if (!b.tame) return true;
    Int lo = 0, hi = 0;
    if (!degrees_of(t, lo, hi)) return true;
    const Int give = Int(slack) * b.N;
    if (lo < degree_bound_rhs(cat, t, b.m, b.N) - give) return false;
    if (hi > degree_bound_mirror_rhs(cat, t, b.m, b.N) + give) return false;
    return true;
}

bool step_less(const MutationStep& a, const MutationStep& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return static_cast<int>(a.color) < static_cast<int>(b.color);
}

bool sequence_less(const MutationSequence& a, const MutationSequence& b) {
    return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(),
                                        b.steps.end(), step_less);
}

IndecObject added_summand(const SiltingObject& before, const SiltingObject& after) {
    for (const IndecObject& x : after.summands)
        if (index_of_summand(before, x) == -1) return x;
    throw InternalInconsistencyError("mutation did not change any summand");
}

// Explored node graph: every admissible object reachable from the start,
// with mutation results computed once per (node, position, direction).
struct WalkGraph {
    std::vector<SiltingObject> nodes;
    std::vector<std::vector<int>> green; // per node, per position; -1 = pruned away
    std::vector<std::vector<int>> red;   // empty unless reds are walked

    int find(const std::string& key) const {
        const auto it = index.find(key);
        return it == index.end() ? -1 : it->second;
    }

    std::map<std::string, int> index;
};

template <typename Admissible>
WalkGraph build_graph(const ARCategory& cat, const SiltingObject& origin, bool with_red,
                      const Admissible& admissible) {
    WalkGraph g;
    if (!admissible(origin))
        throw InternalInconsistencyError("walk origin fails its own windows");
    g.index[canonical_key(origin)] = 0;
    g.nodes.push_back(origin);
    g.green.emplace_back();
    g.red.emplace_back();
    for (int at = 0; at < static_cast<int>(g.nodes.size()); ++at) {
        const int n = static_cast<int>(g.nodes[at].summands.size());
        std::vector<int> succ_green(n, -1), succ_red(n, -1);
        for (int dir = 0; dir < (with_red ? 2 : 1); ++dir) {
            for (int idx = 0; idx < n; ++idx) {
                const SiltingObject t = g.nodes[at]; // copy: g.nodes may grow below
                SiltingObject next =
                    dir == 0 ? mutate_forward(cat, t, idx) : mutate_backward(cat, t, idx);
                if (!admissible(next)) continue;
                const std::string key = canonical_key(next);
                int at_next = g.find(key);
                if (at_next < 0) {
                    at_next = static_cast<int>(g.nodes.size());
                    g.index[key] = at_next;
                    g.nodes.push_back(std::move(next));
                    g.green.emplace_back();
                    g.red.emplace_back();
                }
                (dir == 0 ? succ_green : succ_red)[idx] = at_next;
            }
        }
        g.green[at] = std::move(succ_green);
        g.red[at] = std::move(succ_red);
    }
    return g;
}

struct MgsWalker {
    const ARCategory& cat;
    const WalkGraph& g;
    int target;
    std::vector<bool> productive; // can reach the target through the graph
    std::vector<MutationStep> path;
    std::vector<MutationSequence> out;

    void dfs(int at) {
        if (at == target) {
            out.push_back(MutationSequence{g.nodes[0], path, g.nodes[at]});
            return; // green steps strictly descend, so the target is final
        }
        const SiltingObject& t = g.nodes[at];
        for (int idx = 0; idx < static_cast<int>(g.green[at].size()); ++idx) {
            const int next = g.green[at][idx];
            if (next < 0 || !productive[next]) continue;
            path.push_back(MutationStep{idx, t.summands[idx],
                                        added_summand(t, g.nodes[next]), StepColor::Green});
            dfs(next);
            path.pop_back();
        }
    }
};

std::vector<bool> mark_reaching(const WalkGraph& g, const std::vector<int>& targets) {
    // reverse reachability over green edges
    std::vector<std::vector<int>> preds(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        for (int w : g.green[v])
            if (w >= 0) preds[w].push_back(static_cast<int>(v));
    std::vector<bool> mark(g.nodes.size(), false);
    std::vector<int> queue;
    for (int t : targets)
        if (t >= 0 && !mark[t]) {
            mark[t] = true;
            queue.push_back(t);
        }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int p : preds[v])
            if (!mark[p]) {
                mark[p] = true;
                queue.push_back(p);
            }
    }
    return mark;
}

} // namespace

std::vector<MutationSequence> enumerate_mmgs(const ARCategory& cat, int m, const WalkOptions& opts) {
    if (m < 1) throw MalformedInputError("enumerate_mmgs needs m >= 1");
    const SearchBounds bounds = mgs_bounds(cat, m, opts.window_slack);
    const SiltingObject origin = algebra_object(cat, 0);
    const SiltingObject target = algebra_object(cat, m);
    auto admissible = [&](const SiltingObject& t) {
        if (!inside_windows(t, bounds)) return false;
        if (opts.use_order_prune && !silting_geq(cat, t, target)) return false;
        if (opts.use_degree_bound_prune &&
            !passes_degree_inequality(cat, t, bounds, opts.window_slack))
            return false;
        return true;
    };
    const WalkGraph g = build_graph(cat, origin, false, admissible);
    const int target_at = g.find(canonical_key(target));
    if (target_at < 0) return {};
    MgsWalker walker{cat, g, target_at, mark_reaching(g, {target_at}), {}, {}};
    if (!walker.productive[0]) return {};
    walker.dfs(0);
    std::sort(walker.out.begin(), walker.out.end(), sequence_less);
    return walker.out;
}

namespace {

struct RedWalker {
    const WalkGraph& g;
    int target;
    int m;
    std::vector<std::vector<bool>> productive; // [budget used][node]
    std::vector<MutationStep> path;
    std::vector<int> visits;
    std::vector<MutationSequence> out;

    bool enter(int at) {
        if (visits[at] + 1 > m + 1) return false; // visit cap on a single path
        ++visits[at];
        return true;
    }

    void dfs(int at, int reds_used) {
        if (!enter(at)) return;
        if (at == target && reds_used == m)
            out.push_back(MutationSequence{g.nodes[0], path, g.nodes[at]});
        const SiltingObject& t = g.nodes[at];
        for (int dir = 0; dir < 2; ++dir) {
            const int next_reds = reds_used + dir;
            if (next_reds > m) break;
            const auto& succ = dir == 0 ? g.green[at] : g.red[at];
            for (int idx = 0; idx < static_cast<int>(succ.size()); ++idx) {
                const int next = succ[idx];
                if (next < 0 || !productive[next_reds][next]) continue;
                path.push_back(MutationStep{idx, t.summands[idx], added_summand(t, g.nodes[next]),
                                            dir == 0 ? StepColor::Green : StepColor::Red});
                dfs(next, next_reds);
                path.pop_back();
            }
        }
        --visits[at];
    }
};

} // namespace

std::vector<MutationSequence> enumerate_m_red(const ARCategory& cat, const SiltingObject& from,
                                              const SiltingObject& to, int m,
                                              const WalkOptions& opts) {
    if (m < 0) throw MalformedInputError("enumerate_m_red needs m >= 0");
    if (from.quiver_tag != cat.tag() || to.quiver_tag != cat.tag())
        throw MixedQuiverError("walk endpoints from a different quiver");
    const SearchBounds bounds = red_bounds(cat, from, to, m, opts.window_slack);
    auto admissible = [&](const SiltingObject& t) { return inside_windows(t, bounds); };
    const WalkGraph g = build_graph(cat, from, true, admissible);
    const int target_at = g.find(canonical_key(to));
    if (target_at < 0) return {};

    // productive[b][v]: some walk from v with m-b more red steps ends at the
    // target (visit caps ignored, so this over-approximates and pruning with
    // it is sound)
    std::vector<std::vector<bool>> productive(m + 1, std::vector<bool>(g.nodes.size(), false));
    std::vector<std::vector<int>> green_preds(g.nodes.size()), red_preds(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        for (int w : g.green[v])
            if (w >= 0) green_preds[w].push_back(static_cast<int>(v));
        for (int w : g.red[v])
            if (w >= 0) red_preds[w].push_back(static_cast<int>(v));
    }
    std::vector<std::pair<int, int>> queue;
    auto mark = [&](int b, int v) {
        if (!productive[b][v]) {
            productive[b][v] = true;
            queue.emplace_back(b, v);
        }
    };
    mark(m, target_at);
    while (!queue.empty()) {
        const auto [b, v] = queue.back();
        queue.pop_back();
        for (int p : green_preds[v]) mark(b, p);
        if (b > 0)
            for (int p : red_preds[v]) mark(b - 1, p);
    }

    RedWalker walker{g, target_at, m, std::move(productive), {}, std::vector<int>(g.nodes.size(), 0), {}};
    if (!walker.productive[0][0]) return {};
    walker.dfs(0, 0);
    std::sort(walker.out.begin(), walker.out.end(), sequence_less);
    return walker.out;
}

VerificationReport verify_sequence(const ARCategory& cat, const MutationSequence& seq,
                                   const SearchBounds& bounds) {
    VerificationReport report;
    auto add = [&](std::string check, int index, bool pass, std::string detail = "") {
        report.entries.push_back(CheckEntry{std::move(check), index, pass, std::move(detail)});
    };

    const auto objects = seq.objects(cat);
    const int reds =
        static_cast<int>(std::count_if(seq.steps.begin(), seq.steps.end(),
                                       [](const MutationStep& s) { return s.color == StepColor::Red; }));

    for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
        const SiltingObject& t = objects[i];

        if (cat.tame()) {
            int transjective = 0;
            for (const IndecObject& x : t.summands)
                if (is_transjective(x)) ++transjective;
            add("min_transjective_summands", i, transjective >= 2,
                std::to_string(transjective) + " transjective");

            Int lo = 0, hi = 0;
            if (degrees_of(t, lo, hi))
                add("degree_gap", i, hi - lo <= bounds.N,
                    "gap " + std::to_string(hi - lo) + " vs N " + std::to_string(bounds.N));

            if (bounds.kind == WalkKind::Mgs) {
                const Int rhs = degree_bound_rhs(cat, t, bounds.m, bounds.N);
                const Int mirror = degree_bound_mirror_rhs(cat, t, bounds.m, bounds.N);
                add("degree_lower_bound", i, lo >= rhs,
                    "min deg " + std::to_string(lo) + " vs " + std::to_string(rhs));
                add("degree_upper_bound", i, hi <= mirror,
                    "max deg " + std::to_string(hi) + " vs " + std::to_string(mirror));
            }

            for (int tube = 1; tube <= cat.tube_count(); ++tube) {
                std::vector<IndecObject> in_tube;
                for (const IndecObject& x : t.summands)
                    if (x.kind == ObjectKind::Regular && x.tube == tube) in_tube.push_back(x);
                if (in_tube.empty()) continue;
                const int s = cat.tube_rank(tube);
                add("tube_summand_cap", i, static_cast<int>(in_tube.size()) <= s - 1,
                    std::to_string(in_tube.size()) + " summands in a rank-" + std::to_string(s) +
                        " tube");
                std::set<int> covered;
                for (const IndecObject& x : in_tube)
                    for (int kk = 0; kk < x.len; ++kk) covered.insert((x.socle - 1 + kk) % s);
                add("tube_not_regular_sincere", i, static_cast<int>(covered.size()) < s);
            }
        }
    }

    // visit cap: endpoints count as visits
    std::map<std::string, int> visits;
    int max_visits = 0;
    for (const SiltingObject& t : objects) max_visits = std::max(max_visits, ++visits[canonical_key(t)]);
    add("visit_cap", -1, max_visits <= reds + 1,
        "max visits " + std::to_string(max_visits) + " vs " + std::to_string(reds + 1));

    for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
        const SiltingObject& before = objects[i];
        const SiltingObject& after = objects[i + 1];
        const bool descends = silting_geq(cat, before, after) && !silting_geq(cat, after, before);
        const bool ascends = silting_geq(cat, after, before) && !silting_geq(cat, before, after);
        const bool pass = seq.steps[i].color == StepColor::Green ? descends : ascends;
        add("color_matches_order", i, pass);
    }

    return report;
}

ExchangeGraph exchange_graph(const ARCategory& cat, int m, const WalkOptions& opts) {
    if (m < 1) throw MalformedInputError("exchange_graph needs m >= 1");
    const SearchBounds bounds = mgs_bounds(cat, m, opts.window_slack);
    const SiltingObject origin = algebra_object(cat, 0);
    const SiltingObject target = algebra_object(cat, m);

    auto admissible = [&](const SiltingObject& t) {
        if (!inside_windows(t, bounds)) return false;
        if (opts.use_order_prune && !silting_geq(cat, t, target)) return false;
        if (opts.use_degree_bound_prune &&
            !passes_degree_inequality(cat, t, bounds, opts.window_slack))
            return false;
        return true;
    };
    const WalkGraph walk = build_graph(cat, origin, false, admissible);

    // nodes sorted by canonical key for a deterministic emission order
    ExchangeGraph g;
    std::vector<int> renumber(walk.nodes.size(), -1);
    for (const auto& [key, at] : walk.index) {
        renumber[at] = static_cast<int>(g.nodes.size());
        g.nodes.push_back(walk.nodes[at]);
    }
    for (std::size_t v = 0; v < walk.nodes.size(); ++v)
        for (int w : walk.green[v])
            if (w >= 0) g.edges.emplace_back(renumber[v], renumber[w]);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

} // namespace greenseq
