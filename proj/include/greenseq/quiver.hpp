#pragma once

#include "greenseq/linalg.hpp"

#include <utility>
#include <vector>

namespace greenseq {

/// A finite connected acyclic quiver. Vertices are numbered 1..n;
/// parallel arrows are repeated (source, target) pairs.
struct QuiverSpec {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;

    friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;
};

enum class ReprType { Finite, Tame, Wild };

const char* to_string(ReprType t);

/// Throws MalformedInputError unless the quiver is valid: vertex indices in
/// range, no directed cycles, connected underlying graph.
void validate_quiver(const QuiverSpec& q);

/// Representation type, decided by the symmetrized Tits form with exact
/// integer arithmetic: positive definite -> Finite, positive semidefinite
/// with radical -> Tame, indefinite -> Wild.
ReprType classify(const QuiverSpec& q);

/// Euler form <d, e> = sum_i d_i e_i - sum_{arrows s->t} d_s e_t.
Int euler_form(const QuiverSpec& q, const IntVector& d, const IntVector& e);

/// Tits form q(d) = <d, d>.
Int tits_form(const QuiverSpec& q, const IntVector& d);

/// Matrix E of the Euler form: <d, e> = d^T E e.
IntMatrix euler_matrix(const QuiverSpec& q);

/// Symmetrized Tits form matrix E + E^T.
IntMatrix symmetrized_matrix(const QuiverSpec& q);

/// Cartan matrix. Column j-1 is the dimension vector of the projective P_j,
/// with (d(P_j))_i = number of paths from j to i; row i-1 likewise holds the
/// injective dimension vectors, (d(I_j))_i = number of paths from i to j.
IntMatrix cartan_matrix(const QuiverSpec& q);

/// Coxeter matrix Phi = -C^T C^{-1}. Satisfies Phi d(P_j) = -d(I_j) and
/// d(tau M) = Phi d(M) for every module M with no projective summand.
IntMatrix coxeter_matrix(const QuiverSpec& q);

/// Primitive positive generator of the radical of the symmetrized Tits form.
/// Throws NotTameError unless classify(q) == Tame.
IntVector null_root(const QuiverSpec& q);

/// <delta, d>. Negative on preprojective dimension vectors, zero on regular
/// ones, positive on preinjective ones. Throws NotTameError unless tame.
Int defect(const QuiverSpec& q, const IntVector& d);

/// All vectors 0 < d <= bound (coordinatewise) with q(d) = 1, in
/// lexicographic order.
std::vector<IntVector> positive_real_roots_below(const QuiverSpec& q, const IntVector& bound);

} // namespace greenseq
