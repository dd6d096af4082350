#include "greenseq/ar_category.hpp"

#include "greenseq/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace greenseq {

namespace {

constexpr Int kScanCap = 4096;

std::uint64_t fnv_hash(const QuiverSpec& q) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(q.n));
    for (const auto& [s, t] : q.arrows) {
        mix(static_cast<std::uint64_t>(s));
        mix(static_cast<std::uint64_t>(t));
    }
    return h;
}

// diff == c * delta with c >= 1?
bool positive_delta_multiple(const IntVector& diff, const IntVector& delta) {
    const Int c = diff[0] / delta[0];
    if (c < 1) return false;
    return diff == (delta * c).eval();
}

} // namespace

bool is_transjective(const IndecObject& x) { return x.kind != ObjectKind::Regular; }

int slice_index(const IndecObject& x) {
    return x.kind == ObjectKind::Preinjective ? x.shift + 1 : x.shift;
}

Int transjective_degree(const IndecObject& x) {
    switch (x.kind) {
        case ObjectKind::Preprojective: return -Int(x.tau_power);
        case ObjectKind::Preinjective: return Int(x.tau_power) + 1;
        case ObjectKind::Regular: break;
    }
    throw NotTransjectiveError("transjective_degree of a regular object");
}

IndecObject shifted(IndecObject x, int k) {
    x.shift += k;
    return x;
}

bool canonical_less(const IndecObject& a, const IndecObject& b) {
    const auto key = [](const IndecObject& x) {
        return std::tuple(slice_index(x), static_cast<int>(x.kind),
                          x.kind == ObjectKind::Regular ? x.tube : x.vertex,
                          x.kind == ObjectKind::Regular ? x.socle : x.tau_power, x.len);
    };
    return key(a) < key(b);
}

std::string canonical_token(const IndecObject& x) {
    switch (x.kind) {
        case ObjectKind::Preprojective:
            return "P:" + std::to_string(x.tau_power) + ":" + std::to_string(x.vertex) + ":" +
                   std::to_string(x.shift);
        case ObjectKind::Preinjective:
            return "I:" + std::to_string(x.tau_power) + ":" + std::to_string(x.vertex) + ":" +
                   std::to_string(x.shift);
        case ObjectKind::Regular:
            return "R:" + std::to_string(x.tube) + ":" + std::to_string(x.socle) + ":" +
                   std::to_string(x.len) + ":" + std::to_string(x.shift);
    }
    return "?";
}

bool is_sincere(const IntVector& d) { return is_strictly_positive(d); }

TubeFamily compute_tubes(const QuiverSpec& q) {
    if (classify(q) != ReprType::Tame) throw NotTameError("compute_tubes: quiver is not tame");
    const IntVector delta = null_root(q);
    const IntMatrix phi = coxeter_matrix(q);
    const IntMatrix phi_inv = unimodular_inverse(phi);

    // every positive real root of defect zero below delta is the dimension
    // vector of one rigid tube object of quasi-length l; its Coxeter orbit
    // has the tube's rank as size and dimension sum l * delta, so the
    // quasi-simple orbits are exactly those summing to delta
    std::vector<IntVector> regular_roots;
    for (const IntVector& d : positive_real_roots_below(q, delta))
        if (euler_form(q, delta, d) == 0) regular_roots.push_back(d);
    std::sort(regular_roots.begin(), regular_roots.end(), lex_less);

    auto contains = [&](const IntVector& v) {
        return std::any_of(regular_roots.begin(), regular_roots.end(),
                           [&](const IntVector& w) { return w == v; });
    };

    TubeFamily family;
    std::vector<bool> used(regular_roots.size(), false);
    for (std::size_t i = 0; i < regular_roots.size(); ++i) {
        if (used[i]) continue;
        Tube tube;
        IntVector cur = regular_roots[i];
        do {
            if (!contains(cur))
                throw InternalInconsistencyError("Coxeter orbit left the regular root set");
            for (std::size_t k = 0; k < regular_roots.size(); ++k)
                if (regular_roots[k] == cur) used[k] = true;
            tube.quasi_simples.push_back(cur);
            cur = (phi_inv * cur).eval(); // tau E_i = E_{i-1}, so the list walks tau^{-1}
            if (tube.quasi_simples.size() > regular_roots.size())
                throw InternalInconsistencyError("Coxeter orbit does not close");
        } while (cur != regular_roots[i]);
        tube.rank = static_cast<int>(tube.quasi_simples.size());

        IntVector sum = IntVector::Zero(q.n);
        for (const IntVector& v : tube.quasi_simples) sum += v;
        const Int l = sum[0] / delta[0];
        if (l < 1 || sum != (delta * l).eval())
            throw InternalInconsistencyError("orbit dimension sum is not a multiple of delta");
        if (l > 1) continue; // orbit of quasi-length l > 1 objects, not a new tube
        if (tube.rank < 2)
            throw InternalInconsistencyError("unexpected rank-1 quasi-simple orbit");
        family.tubes.push_back(std::move(tube));
    }

    std::sort(family.tubes.begin(), family.tubes.end(), [](const Tube& a, const Tube& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return lex_less(a.quasi_simples[0], b.quasi_simples[0]);
    });

    Int slots = 0;
    for (const Tube& t : family.tubes) slots += t.rank - 1;
    if (slots > q.n - 2 || family.tubes.size() > 3)
        throw InternalInconsistencyError("tube family violates the rank bounds");
    return family;
}

SincerityBound compute_sincerity_bound(const QuiverSpec& q) {
    if (classify(q) != ReprType::Tame)
        throw NotTameError("compute_sincerity_bound: quiver is not tame");
    const IntVector delta = null_root(q);
    const IntMatrix c = cartan_matrix(q);
    const IntMatrix phi = coxeter_matrix(q);
    const IntMatrix phi_inv = unimodular_inverse(phi);

    // p_dims[j][k] = d(tau^{-k} P_{j+1}), i_dims[j][k] = d(tau^{k} I_{j+1})
    std::vector<std::vector<IntVector>> p_dims(q.n), i_dims(q.n);
    for (int j = 0; j < q.n; ++j) {
        p_dims[j].push_back(c.col(j));
        i_dims[j].push_back(c.row(j).transpose());
    }
    // return by value: growing the cache reallocates the chain vectors
    auto p_dim = [&](int j, Int k) -> IntVector {
        while (static_cast<Int>(p_dims[j].size()) <= k)
            p_dims[j].push_back((phi_inv * p_dims[j].back()).eval());
        return p_dims[j][static_cast<std::size_t>(k)];
    };
    auto i_dim = [&](int j, Int k) -> IntVector {
        while (static_cast<Int>(i_dims[j].size()) <= k)
            i_dims[j].push_back((phi * i_dims[j].back()).eval());
        return i_dims[j][static_cast<std::size_t>(k)];
    };

    Int H = 0;
    for (Int h = 1; h <= kScanCap && H == 0; ++h) {
        bool ok = true;
        for (int j = 0; j < q.n && ok; ++j)
            ok = positive_delta_multiple((p_dim(j, h) - p_dim(j, 0)).eval(), delta);
        if (ok) H = h;
    }
    if (H == 0) throw InternalInconsistencyError("no Coxeter period found");

    for (Int N = 0; N <= kScanCap; ++N) {
        bool ok = true;
        for (Int k = N; k <= N + H && ok; ++k)
            for (int j = 0; j < q.n && ok; ++j)
                ok = is_sincere(p_dim(j, k)) && is_sincere(i_dim(j, k));
        if (!ok) continue;
        for (int j = 0; j < q.n; ++j)
            if (!positive_delta_multiple((i_dim(j, N + H) - i_dim(j, N)).eval(), delta))
                throw InternalInconsistencyError("preinjective dimension vectors do not repeat modulo delta");
        return SincerityBound{N, H};
    }
    throw InternalInconsistencyError("no sincerity bound found");
}

ARCategory::ARCategory(QuiverSpec q) : q_(std::move(q)) {
    validate_quiver(q_);
    type_ = classify(q_);
    if (type_ == ReprType::Wild)
        throw WildQuiverError("wild quivers are not supported");
    tag_ = fnv_hash(q_);
    cartan_ = cartan_matrix(q_);
    cartan_inv_ = euler_matrix(q_).transpose();
    coxeter_ = coxeter_matrix(q_);
    coxeter_inv_ = (-(cartan_ * euler_matrix(q_))).eval();

    preproj_dims_.assign(q_.n, {});
    preinj_dims_.assign(q_.n, {});
    for (int j = 0; j < q_.n; ++j) {
        preproj_dims_[j].push_back(cartan_.col(j));
        preinj_dims_[j].push_back(cartan_.row(j).transpose());
    }

    if (type_ == ReprType::Tame) {
        delta_ = null_root(q_);
        tubes_ = compute_tubes(q_);
        sincerity_ = compute_sincerity_bound(q_);
    } else {
        // walk each projective's tau^{-1}-orbit until it hits an injective
        std::map<std::vector<Int>, int> injective_of_dim;
        for (int j = 0; j < q_.n; ++j) {
            const IntVector di = cartan_.row(j).transpose();
            injective_of_dim[std::vector<Int>(di.data(), di.data() + q_.n)] = j + 1;
        }
        orbit_len_.assign(q_.n, 0);
        nu_.assign(q_.n, 0);
        for (int j = 0; j < q_.n; ++j) {
            IntVector d = cartan_.col(j);
            int p = 0;
            while (true) {
                auto it = injective_of_dim.find(std::vector<Int>(d.data(), d.data() + q_.n));
                if (it != injective_of_dim.end()) {
                    orbit_len_[j] = p;
                    nu_[j] = it->second;
                    break;
                }
                d = (coxeter_inv_ * d).eval();
                if (++p > kScanCap)
                    throw InternalInconsistencyError("projective orbit does not reach an injective");
            }
        }
    }
}

const IntVector& ARCategory::delta() const {
    if (!tame()) throw NotTameError("delta: quiver is not tame");
    return delta_;
}

const TubeFamily& ARCategory::tubes() const {
    if (!tame()) throw NotTameError("tubes: quiver is not tame");
    return tubes_;
}

const SincerityBound& ARCategory::sincerity_bound() const {
    if (!tame()) throw NotTameError("sincerity bound: quiver is not tame");
    return sincerity_;
}

Int ARCategory::defect(const IntVector& d) const { return euler_form(q_, delta(), d); }

int ARCategory::tube_count() const { return tame() ? static_cast<int>(tubes_.tubes.size()) : 0; }

int ARCategory::tube_rank(int tube) const {
    const auto& ts = tubes().tubes;
    if (tube < 1 || tube > static_cast<int>(ts.size()))
        throw MalformedInputError("tube index out of range");
    return ts[tube - 1].rank;
}

IndecObject ARCategory::preprojective(int p, int vertex, int shift) const {
    if (vertex < 1 || vertex > q_.n) throw MalformedInputError("vertex out of range");
    if (p < 0) throw MalformedInputError("negative tau power");
    if (type_ == ReprType::Finite) {
        // wrap past the injective ridge: tau^{-(r_j+1)} P_j = P_{nu(j)}[1]
        while (p > orbit_len_[vertex - 1]) {
            p -= orbit_len_[vertex - 1] + 1;
            vertex = nu_[vertex - 1];
            ++shift;
        }
    }
    IndecObject x;
    x.kind = ObjectKind::Preprojective;
    x.tau_power = p;
    x.vertex = vertex;
    x.shift = shift;
    x.quiver_tag = tag_;
    return x;
}

IndecObject ARCategory::preinjective(int q, int vertex, int shift) const {
    if (vertex < 1 || vertex > q_.n) throw MalformedInputError("vertex out of range");
    if (q < 0) throw MalformedInputError("negative tau power");
    if (type_ == ReprType::Finite) {
        // tau^q I_j = tau^{q - r} P_{j'} with nu(j') = j; normalize into the
        // preprojective chart, recursing through the crossing rule if needed
        while (true) {
            int j2 = -1;
            for (int v = 1; v <= q_.n; ++v)
                if (nu_[v - 1] == vertex) { j2 = v; break; }
            if (j2 < 0) throw InternalInconsistencyError("Nakayama permutation is not onto");
            const int r = orbit_len_[j2 - 1];
            if (q <= r) return preprojective(r - q, j2, shift);
            q -= r + 1;
            vertex = j2;
            --shift;
        }
    }
    IndecObject x;
    x.kind = ObjectKind::Preinjective;
    x.tau_power = q;
    x.vertex = vertex;
    x.shift = shift;
    x.quiver_tag = tag_;
    return x;
}

IndecObject ARCategory::regular(int tube, int socle, int len, int shift) const {
    if (!tame()) throw MalformedInputError("regular objects exist only for tame quivers");
    const int count = tube_count();
    if (tube < 1 || tube > count) throw MalformedInputError("tube index out of range");
    const int s = tubes_.tubes[tube - 1].rank;
    if (len < 1 || len > s - 1)
        throw MalformedInputError("quasi-length must lie in [1, rank-1]; longer tube objects are not rigid");
    IndecObject x;
    x.kind = ObjectKind::Regular;
    x.tube = tube;
    x.socle = (socle - 1) % s;
    if (x.socle < 0) x.socle += s;
    x.socle += 1;
    x.len = len;
    x.shift = shift;
    x.quiver_tag = tag_;
    return x;
}

IndecObject ARCategory::tau_step(IndecObject x) const {
    switch (x.kind) {
        case ObjectKind::Preprojective:
            if (x.tau_power >= 1) {
                --x.tau_power;
                return x;
            }
            return preinjective(0, x.vertex, x.shift - 1); // tau P_j = I_j[-1]
        case ObjectKind::Preinjective:
            return preinjective(x.tau_power + 1, x.vertex, x.shift);
        case ObjectKind::Regular:
            return regular(x.tube, x.socle - 1, x.len, x.shift);
    }
    throw InternalInconsistencyError("bad object kind");
}

IndecObject ARCategory::tau_inverse_step(IndecObject x) const {
    switch (x.kind) {
        case ObjectKind::Preprojective:
            if (type_ == ReprType::Finite && x.tau_power == orbit_len_[x.vertex - 1])
                return preprojective(0, nu_[x.vertex - 1], x.shift + 1); // tau^{-1} I_j = P_j[1]
            return preprojective(x.tau_power + 1, x.vertex, x.shift);
        case ObjectKind::Preinjective:
            if (x.tau_power >= 1) {
                --x.tau_power;
                return x;
            }
            return preprojective(0, x.vertex, x.shift + 1); // tau^{-1} I_j = P_j[1]
        case ObjectKind::Regular:
            return regular(x.tube, x.socle + 1, x.len, x.shift);
    }
    throw InternalInconsistencyError("bad object kind");
}

IndecObject ARCategory::tau(IndecObject x, Int power) const {
    require_same_quiver(x);
    for (Int i = 0; i < power; ++i) x = tau_step(x);
    for (Int i = 0; i > power; --i) x = tau_inverse_step(x);
    return x;
}

IntVector ARCategory::preprojective_dim(int vertex, int p) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& chain = preproj_dims_[vertex - 1];
    while (static_cast<int>(chain.size()) <= p)
        chain.push_back((coxeter_inv_ * chain.back()).eval());
    return chain[p];
}

IntVector ARCategory::preinjective_dim(int vertex, int q) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& chain = preinj_dims_[vertex - 1];
    while (static_cast<int>(chain.size()) <= q)
        chain.push_back((coxeter_ * chain.back()).eval());
    return chain[q];
}

IntVector ARCategory::dim_vector(const IndecObject& x) const {
    require_same_quiver(x);
    switch (x.kind) {
        case ObjectKind::Preprojective:
            return preprojective_dim(x.vertex, x.tau_power);
        case ObjectKind::Preinjective:
            return preinjective_dim(x.vertex, x.tau_power);
        case ObjectKind::Regular: {
            const Tube& t = tubes().tubes[x.tube - 1];
            IntVector sum = IntVector::Zero(q_.n);
            for (int i = 0; i < x.len; ++i)
                sum += t.quasi_simples[(x.socle - 1 + i) % t.rank];
            return sum;
        }
    }
    throw InternalInconsistencyError("bad object kind");
}

void ARCategory::require_same_quiver(const IndecObject& x) const {
    if (x.quiver_tag != tag_)
        throw MixedQuiverError("object belongs to a different quiver");
}

} // namespace greenseq
