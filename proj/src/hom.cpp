#include "greenseq/hom.hpp"

#include "greenseq/errors.hpp"

#include <algorithm>

namespace greenseq {

namespace {

// a in the cyclic window of length len starting at lo (1-based residues mod s)
bool in_cyclic_interval(int a, int lo, int len, int s) {
    return ((a - lo) % s + s) % s < len;
}

// Nonzero maps M_{ij} -> M_{kl} factor through the common window M_{kj}:
// need socle(y) in [socle(x), top(x)] and top(x) in [socle(y), top(y)].
Int tube_hom(const IndecObject& x, const IndecObject& y, int s) {
    const int top_x = (x.socle - 1 + x.len - 1) % s + 1;
    return (in_cyclic_interval(y.socle, x.socle, x.len, s) &&
            in_cyclic_interval(top_x, y.socle, y.len, s))
               ? 1
               : 0;
}

Int require_nonneg(Int v, const char* what) {
    if (v < 0)
        throw InternalInconsistencyError(std::string("sign-safety violation in ") + what);
    return v;
}

} // namespace

HomExtPair hom_ext(const ARCategory& cat, const IndecObject& x, const IndecObject& y) {
    cat.require_same_quiver(x);
    cat.require_same_quiver(y);

    if (x.kind == ObjectKind::Regular && y.kind == ObjectKind::Regular) {
        if (x.tube != y.tube) return {0, 0};
        const int s = cat.tube_rank(x.tube);
        const IndecObject tau_x = cat.tau(x);
        return {tube_hom(x, y, s), tube_hom(y, tau_x, s)}; // ext(x,y) = hom(y, tau x)
    }

    const Int e = euler_form(cat.quiver(), cat.dim_vector(x), cat.dim_vector(y));

    if (is_transjective(x) && is_transjective(y)) {
        if (cat.tame()) {
            if (x.kind == ObjectKind::Preinjective && y.kind == ObjectKind::Preprojective)
                return {0, require_nonneg(-e, "hom(preinjective, preprojective)")};
            if (x.kind == ObjectKind::Preprojective && y.kind == ObjectKind::Preinjective)
                return {require_nonneg(e, "ext(preprojective, preinjective)"), 0};
        }
        // directed component: at most one of hom, ext is nonzero
        return {std::max(e, Int(0)), std::max(-e, Int(0))};
    }

    if (x.kind == ObjectKind::Preprojective && y.kind == ObjectKind::Regular)
        return {require_nonneg(e, "hom(preprojective, regular)"), 0};
    if (x.kind == ObjectKind::Regular && y.kind == ObjectKind::Preinjective)
        return {require_nonneg(e, "hom(regular, preinjective)"), 0};
    if (x.kind == ObjectKind::Regular && y.kind == ObjectKind::Preprojective)
        return {0, require_nonneg(-e, "ext(regular, preprojective)")};
    if (x.kind == ObjectKind::Preinjective && y.kind == ObjectKind::Regular)
        return {0, require_nonneg(-e, "ext(preinjective, regular)")};

    throw InternalInconsistencyError("unhandled hom_ext case");
}

Int hom_derived(const ARCategory& cat, const IndecObject& x, const IndecObject& y) {
    const int gap = y.shift - x.shift;
    if (gap != 0 && gap != 1) {
        cat.require_same_quiver(x);
        cat.require_same_quiver(y);
        return 0;
    }
    const HomExtPair he = hom_ext(cat, x, y);
    return gap == 0 ? he.hom : he.ext;
}

bool is_rigid(const ARCategory& cat, const IndecObject& x) {
    if (hom_ext(cat, x, x).ext != 0)
        throw InternalInconsistencyError("representable object with a self-extension");
    return true;
}

bool compatible(const ARCategory& cat, const IndecObject& x, const IndecObject& y) {
    if (x == y) throw SameObjectError("compatible(x, x) is undefined");
    const IndecObject& early = x.shift <= y.shift ? x : y;
    const IndecObject& late = x.shift <= y.shift ? y : x;
    if (early.shift == late.shift) {
        return hom_ext(cat, early, late).ext == 0 && hom_ext(cat, late, early).ext == 0;
    }
    const HomExtPair down = hom_ext(cat, late, early);
    return down.hom == 0 && down.ext == 0;
}

std::optional<std::vector<int>> silting_compatible_shifts(const ARCategory& cat,
                                                          const std::vector<IndecObject>& modules) {
    const int k = static_cast<int>(modules.size());

    // Per ordered pair (a, b): "b strictly later" is forbidden iff
    // hom(b,a) != 0 or ext(b,a) != 0; equal shifts are forbidden iff either
    // Ext^1 is nonzero. Encode as edges k_b <= k_a, strict when equality is
    // also forbidden, and look for a cycle through a strict edge.
    std::vector<std::vector<int>> leq(k), strict(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const HomExtPair ba = hom_ext(cat, modules[b], modules[a]);
            const HomExtPair ab = hom_ext(cat, modules[a], modules[b]);
            const bool later_forbidden = ba.hom != 0 || ba.ext != 0;
            const bool equal_forbidden = ab.ext != 0 || ba.ext != 0;
            if (!later_forbidden) continue;
            if (equal_forbidden)
                strict[b].push_back(a);
            else
                leq[b].push_back(a);
        }
    }

    // strongly connected components over all edges (iterative Tarjan)
    std::vector<int> comp(k, -1), low(k), num(k, -1), stack;
    int counter = 0, ncomp = 0;
    std::vector<bool> on_stack(k, false);
    auto edges = [&](int v) {
        std::vector<int> out = leq[v];
        out.insert(out.end(), strict[v].begin(), strict[v].end());
        return out;
    };
    for (int root = 0; root < k; ++root) {
        if (num[root] >= 0) continue;
        std::vector<std::pair<int, int>> call;
        call.emplace_back(root, 0);
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, idx] = call.back();
            const auto out = edges(v);
            if (idx < static_cast<int>(out.size())) {
                const int w = out[idx++];
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                const int child = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[child]);
            }
        }
    }

    for (int v = 0; v < k; ++v)
        for (int w : strict[v])
            if (comp[v] == comp[w]) return std::nullopt;

    // feasible: assign levels by longest path in the component DAG,
    // strict edges weight 1, weak edges weight 0
    std::vector<std::vector<std::pair<int, int>>> dag(ncomp);
    std::vector<int> indeg(ncomp, 0);
    for (int v = 0; v < k; ++v) {
        for (int w : leq[v])
            if (comp[v] != comp[w]) { dag[comp[v]].emplace_back(comp[w], 0); ++indeg[comp[w]]; }
        for (int w : strict[v]) { dag[comp[v]].emplace_back(comp[w], 1); ++indeg[comp[w]]; }
    }
    std::vector<int> level(ncomp, 0), order;
    for (int cidx = 0; cidx < ncomp; ++cidx)
        if (indeg[cidx] == 0) order.push_back(cidx);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        for (auto [w, weight] : dag[v]) {
            level[w] = std::max(level[w], level[v] + weight);
            if (--indeg[w] == 0) order.push_back(w);
        }
    }

    // edge b -> a means k_b <= k_a and levels grow along edges
    std::vector<int> shifts(k);
    for (int v = 0; v < k; ++v) shifts[v] = level[comp[v]];
    return shifts;
}

bool silting_compatible_family(const ARCategory& cat, const std::vector<IndecObject>& modules) {
    return silting_compatible_shifts(cat, modules).has_value();
}

} // namespace greenseq
