#include "greenseq/quiver.hpp"

#include "greenseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace greenseq {

const char* to_string(ReprType t) {
    switch (t) {
        case ReprType::Finite: return "finite";
        case ReprType::Tame: return "tame";
        case ReprType::Wild: return "wild";
    }
    return "?";
}

void validate_quiver(const QuiverSpec& q) {
    if (q.n < 1) throw MalformedInputError("quiver must have at least one vertex");
    if (q.n > 64) throw MalformedInputError("quiver has too many vertices");
    for (const auto& [s, t] : q.arrows) {
        if (s < 1 || s > q.n || t < 1 || t > q.n)
            throw MalformedInputError("arrow endpoint out of range");
    }

    // acyclic: Kahn's algorithm
    std::vector<int> indeg(q.n, 0);
    std::vector<std::vector<int>> out(q.n);
    for (const auto& [s, t] : q.arrows) {
        ++indeg[t - 1];
        out[s - 1].push_back(t - 1);
    }
    std::queue<int> ready;
    for (int v = 0; v < q.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (seen != q.n) throw MalformedInputError("quiver has a directed cycle");

    // connected underlying graph: union-find
    std::vector<int> parent(q.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [s, t] : q.arrows) parent[find(s - 1)] = find(t - 1);
    for (int v = 1; v < q.n; ++v)
        if (find(v) != find(0)) throw MalformedInputError("underlying graph is not connected");
}

Int euler_form(const QuiverSpec& q, const IntVector& d, const IntVector& e) {
    if (d.size() != q.n || e.size() != q.n)
        throw MalformedInputError("euler_form: vector length does not match the quiver");
    Int value = d.dot(e);
    for (const auto& [s, t] : q.arrows) value -= d[s - 1] * e[t - 1];
    return value;
}

Int tits_form(const QuiverSpec& q, const IntVector& d) { return euler_form(q, d, d); }

IntMatrix euler_matrix(const QuiverSpec& q) {
    IntMatrix e = IntMatrix::Identity(q.n, q.n);
    for (const auto& [s, t] : q.arrows) e(s - 1, t - 1) -= 1;
    return e;
}

IntMatrix symmetrized_matrix(const QuiverSpec& q) {
    const IntMatrix e = euler_matrix(q);
    return (e + e.transpose()).eval();
}

ReprType classify(const QuiverSpec& q) {
    validate_quiver(q);
    const IntMatrix b = symmetrized_matrix(q);

    bool positive_definite = true;
    for (Int minor : leading_principal_minors(b))
        if (minor <= 0) { positive_definite = false; break; }
    if (positive_definite) return ReprType::Finite;

    // semidefiniteness needs every principal minor, not only the leading ones
    if (q.n > 20)
        throw MalformedInputError("classify: non-finite quivers with more than 20 vertices are unsupported");
    for (std::uint32_t mask = 1; mask < (1u << q.n); ++mask) {
        std::vector<int> rows;
        for (int v = 0; v < q.n; ++v)
            if (mask & (1u << v)) rows.push_back(v);
        if (principal_minor(b, rows) < 0) return ReprType::Wild;
    }
    return ReprType::Tame; // semidefinite but not definite: nontrivial radical
}

IntMatrix cartan_matrix(const QuiverSpec& q) {
    validate_quiver(q);
    // #paths(j -> i) = ((I - A)^{-1})_{ji}, so C = E^{-T}
    return unimodular_inverse(euler_matrix(q)).transpose().eval();
}

IntMatrix coxeter_matrix(const QuiverSpec& q) {
    const IntMatrix c = cartan_matrix(q);
    // C^{-1} = E^T, no second inversion needed
    return (-(c.transpose() * euler_matrix(q).transpose())).eval();
}

IntVector null_root(const QuiverSpec& q) {
    if (classify(q) != ReprType::Tame) throw NotTameError("null_root: quiver is not tame");
    const IntMatrix b = symmetrized_matrix(q);
    // rank n-1, so adj(B) = c * delta delta^T is nonzero and its columns span the radical
    const IntMatrix adj = adjugate(b);
    for (Eigen::Index j = 0; j < adj.cols(); ++j) {
        if (!adj.col(j).isZero()) {
            IntVector delta = primitive_vector(adj.col(j));
            if (!is_strictly_positive(delta))
                throw InternalInconsistencyError("null root is not strictly positive");
            if ((b * delta).eval() != IntVector::Zero(q.n))
                throw InternalInconsistencyError("null root is not in the radical");
            return delta;
        }
    }
    throw InternalInconsistencyError("radical of a tame form has a zero adjugate");
}

Int defect(const QuiverSpec& q, const IntVector& d) {
    return euler_form(q, null_root(q), d);
}

std::vector<IntVector> positive_real_roots_below(const QuiverSpec& q, const IntVector& bound) {
    if (bound.size() != q.n) throw MalformedInputError("root scan: bound has wrong length");
    if (!is_nonnegative(bound)) throw MalformedInputError("root scan: bound must be nonnegative");
    std::vector<IntVector> roots;
    IntVector d = IntVector::Zero(q.n);
    // odometer with the last coordinate fastest = lexicographic order
    while (true) {
        Eigen::Index i = q.n - 1;
        while (i >= 0 && d[i] == bound[i]) d[i--] = 0;
        if (i < 0) break;
        ++d[i];
        if (tits_form(q, d) == 1) roots.push_back(d);
    }
    return roots;
}

} // namespace greenseq
