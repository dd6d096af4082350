#include "greenseq/silting.hpp"

#include "greenseq/errors.hpp"

#include <algorithm>
#include <optional>

namespace greenseq {

namespace {

std::vector<IndecObject> sorted_canonical(std::vector<IndecObject> xs) {
    std::sort(xs.begin(), xs.end(), canonical_less);
    return xs;
}

bool all_distinct_sorted(const std::vector<IndecObject>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] == xs[i - 1]) return false;
    return true;
}

bool pairwise_compatible(const ARCategory& cat, const std::vector<IndecObject>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!compatible(cat, xs[i], xs[j])) return false;
    return true;
}

} // namespace

SiltingObject make_silting(const ARCategory& cat, std::vector<IndecObject> summands) {
    if (!is_silting(cat, summands))
        throw NotSiltingError("the given summands do not form a silting object");
    SiltingObject t;
    t.summands = sorted_canonical(std::move(summands));
    t.quiver_tag = cat.tag();
    return t;
}

SiltingObject algebra_object(const ARCategory& cat, int shift) {
    std::vector<IndecObject> xs;
    xs.reserve(cat.n());
    for (int j = 1; j <= cat.n(); ++j) xs.push_back(cat.projective(j, shift));
    return make_silting(cat, std::move(xs));
}

std::string canonical_key(const SiltingObject& t) {
    std::string key;
    for (const IndecObject& x : t.summands) {
        if (!key.empty()) key += '|';
        key += canonical_token(x);
    }
    return key;
}

int index_of_summand(const SiltingObject& t, const IndecObject& x) {
    for (std::size_t i = 0; i < t.summands.size(); ++i)
        if (t.summands[i] == x) return static_cast<int>(i);
    return -1;
}

bool is_presilting(const ARCategory& cat, const std::vector<IndecObject>& xs) {
    for (const IndecObject& x : xs) cat.require_same_quiver(x);
    const auto sorted = sorted_canonical(xs);
    if (!all_distinct_sorted(sorted)) return false;
    return pairwise_compatible(cat, sorted);
}

bool is_silting(const ARCategory& cat, const std::vector<IndecObject>& xs) {
    return static_cast<int>(xs.size()) == cat.n() && is_presilting(cat, xs);
}

IntVector g_vector(const ARCategory& cat, const IndecObject& x) {
    cat.require_same_quiver(x);
    IntVector g = (cat.cartan_inverse() * cat.dim_vector(x)).eval();
    if (x.shift % 2 != 0) g = -g;
    return g;
}

IntMatrix g_matrix(const ARCategory& cat, const SiltingObject& t) {
    IntMatrix g(cat.n(), static_cast<Eigen::Index>(t.summands.size()));
    for (std::size_t i = 0; i < t.summands.size(); ++i)
        g.col(static_cast<Eigen::Index>(i)) = g_vector(cat, t.summands[i]);
    return g;
}

bool silting_geq(const ARCategory& cat, const SiltingObject& t, const SiltingObject& u) {
    if (t.quiver_tag != u.quiver_tag)
        throw MixedQuiverError("silting order across different quivers");
    // Hom(t, u[k]) for k >= 1 reduces to: module hom when shift(t) > shift(u),
    // module ext when shift(t) >= shift(u).
    for (const IndecObject& a : t.summands) {
        for (const IndecObject& b : u.summands) {
            if (a.shift < b.shift) continue;
            const HomExtPair he = hom_ext(cat, a, b);
            if (he.ext != 0) return false;
            if (a.shift > b.shift && he.hom != 0) return false;
        }
    }
    return true;
}

std::vector<IndecObject> objects_in_window(const ARCategory& cat, const SearchWindow& w) {
    std::vector<IndecObject> out;
    for (int shift = w.shift_lo; shift <= w.shift_hi; ++shift) {
        if (cat.type() == ReprType::Finite) {
            for (int j = 1; j <= cat.n(); ++j) {
                for (int p = 0;; ++p) {
                    const IndecObject x = cat.preprojective(p, j, shift);
                    if (x.tau_power != p || x.vertex != j || x.shift != shift) break; // wrapped: done
                    out.push_back(x);
                }
            }
        } else {
            for (Int deg = w.deg_lo; deg <= w.deg_hi; ++deg)
                for (int j = 1; j <= cat.n(); ++j)
                    out.push_back(deg <= 0 ? cat.preprojective(static_cast<int>(-deg), j, shift)
                                           : cat.preinjective(static_cast<int>(deg - 1), j, shift));
            for (int t = 1; t <= cat.tube_count(); ++t) {
                const int s = cat.tube_rank(t);
                for (int socle = 1; socle <= s; ++socle)
                    for (int len = 1; len <= s - 1; ++len)
                        out.push_back(cat.regular(t, socle, len, shift));
            }
        }
    }
    return out;
}

std::vector<IndecObject> completions(const ARCategory& cat, const std::vector<IndecObject>& almost,
                                     const SearchWindow& w) {
    if (static_cast<int>(almost.size()) != cat.n() - 1 || !is_presilting(cat, almost))
        throw NotAlmostCompleteError("completions: need a pre-silting family of size n-1");
    if (cat.tame() && !w.use_degrees)
        throw InternalInconsistencyError("tame completions need a degree window");

    std::vector<IndecObject> found;
    for (const IndecObject& z : objects_in_window(cat, w)) {
        if (std::find(almost.begin(), almost.end(), z) != almost.end()) continue;
        bool ok = true;
        for (const IndecObject& a : almost)
            if (!compatible(cat, z, a)) { ok = false; break; }
        if (ok) found.push_back(z);
    }

    std::vector<SiltingObject> completed;
    completed.reserve(found.size());
    for (const IndecObject& z : found) {
        auto xs = almost;
        xs.push_back(z);
        completed.push_back(make_silting(cat, std::move(xs)));
    }

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool ab = silting_geq(cat, completed[a], completed[b]);
        const bool ba = silting_geq(cat, completed[b], completed[a]);
        if (ab && ba)
            throw InternalInconsistencyError("distinct completions compare equal in the silting order");
        if (!ab && !ba)
            throw InternalInconsistencyError("completions are not totally ordered");
        return ab;
    });

    std::vector<IndecObject> out;
    out.reserve(found.size());
    for (std::size_t i : order) out.push_back(found[i]);
    return out;
}

namespace {

SearchWindow mutation_window(const ARCategory& cat, const SiltingObject& t,
                             const std::vector<IndecObject>& almost, int extra) {
    SearchWindow w;
    int lo = t.summands.front().shift, hi = lo;
    for (const IndecObject& x : t.summands) {
        lo = std::min(lo, x.shift);
        hi = std::max(hi, x.shift);
    }
    w.shift_lo = lo - 1 - extra;
    w.shift_hi = hi + 1 + extra;
    if (cat.tame()) {
        // compatible transjective pairs differ by at most N in degree, so the
        // new summand lies within N of the remaining transjective degrees
        const Int N = cat.sincerity_bound().N;
        bool seen = false;
        Int dlo = 0, dhi = 0;
        for (const IndecObject& x : almost) {
            if (!is_transjective(x)) continue;
            const Int d = transjective_degree(x);
            dlo = seen ? std::min(dlo, d) : d;
            dhi = seen ? std::max(dhi, d) : d;
            seen = true;
        }
        if (!seen)
            throw InternalInconsistencyError("almost-complete silting object with no transjective summand");
        w.use_degrees = true;
        w.deg_lo = dlo - N * (1 + extra);
        w.deg_hi = dhi + N * (1 + extra);
    }
    return w;
}

std::optional<IndecObject> adjacent_completion(const ARCategory& cat,
                                               const std::vector<IndecObject>& almost,
                                               const IndecObject& x, const SearchWindow& w,
                                               bool below) {
    const auto comps = completions(cat, almost, w);
    const auto it = std::find(comps.begin(), comps.end(), x);
    if (it == comps.end())
        throw InternalInconsistencyError("mutated summand is not among the completions");
    const auto pos = static_cast<std::size_t>(it - comps.begin());
    if (below) {
        if (pos + 1 < comps.size()) return comps[pos + 1];
    } else {
        if (pos > 0) return comps[pos - 1];
    }
    return std::nullopt;
}

SiltingObject mutate(const ARCategory& cat, const SiltingObject& t, int idx, bool forward) {
    if (t.quiver_tag != cat.tag()) throw MixedQuiverError("mutation across different quivers");
    if (idx < 0 || idx >= static_cast<int>(t.summands.size()))
        throw MalformedInputError("mutation index out of range");
    const IndecObject x = t.summands[idx];
    std::vector<IndecObject> almost;
    for (int i = 0; i < static_cast<int>(t.summands.size()); ++i)
        if (i != idx) almost.push_back(t.summands[i]);

    const auto y = adjacent_completion(cat, almost, x, mutation_window(cat, t, almost, 0), forward);
    const auto y_check =
        adjacent_completion(cat, almost, x, mutation_window(cat, t, almost, 1), forward);
    if (y != y_check)
        throw WindowExhaustedError("mutation window re-verification changed the adjacent completion");
    if (!y) throw WindowExhaustedError("no adjacent completion inside the mutation window");

    almost.push_back(*y);
    return make_silting(cat, std::move(almost));
}

} // namespace

SiltingObject mutate_forward(const ARCategory& cat, const SiltingObject& t, int idx) {
    return mutate(cat, t, idx, true);
}

SiltingObject mutate_backward(const ARCategory& cat, const SiltingObject& t, int idx) {
    return mutate(cat, t, idx, false);
}

} // namespace greenseq
