#pragma once

#include "greenseq/quiver.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace greenseq {

enum class ObjectKind : std::uint8_t { Preprojective = 0, Regular = 1, Preinjective = 2 };

/// Canonical coordinates of a rigid indecomposable object of the bounded
/// derived category:
///   Preprojective(p, j) = tau^{-p} P_j,  Preinjective(q, j) = tau^{q} I_j,
///   Regular(tube, socle, len) = tube object with the given quasi-socle and
///   quasi-length, plus the cohomological shift of the underlying module.
/// Objects are only created through ARCategory, which canonicalizes them, so
/// equal objects always have equal fields.
struct IndecObject {
    ObjectKind kind = ObjectKind::Preprojective;
    int tau_power = 0; // p or q; 0 for regulars
    int vertex = 0;    // transjective only, 1-based
    int tube = 0;      // regular only, 1-based
    int socle = 0;     // regular only, 1-based quasi-socle index
    int len = 0;       // regular only, quasi-length (1 <= len <= rank-1)
    int shift = 0;
    std::uint64_t quiver_tag = 0;

    friend bool operator==(const IndecObject&, const IndecObject&) = default;
};

bool is_transjective(const IndecObject& x);

/// Shift j in the expression x = tau^i P_.[j]: module shift for
/// preprojectives and regulars, module shift + 1 for preinjectives.
int slice_index(const IndecObject& x);

/// The exponent i in x = tau^i P_j[k]: -p for preprojectives, q+1 for
/// preinjectives. Throws NotTransjectiveError on regulars.
Int transjective_degree(const IndecObject& x);

/// Adds k to the shift; commutes with tau.
IndecObject shifted(IndecObject x, int k);

/// Strict total order: (slice, kind, vertex/tube, tau power/socle, length).
bool canonical_less(const IndecObject& a, const IndecObject& b);

/// Compact stable identifier, e.g. "P:1:2:0" or "R:1:2:1:-1".
std::string canonical_token(const IndecObject& x);

bool is_sincere(const IntVector& d);

/// One nonhomogeneous stable tube: quasi-simple dimension vectors listed so
/// that tau moves index i to i-1 (1-based, cyclic).
struct Tube {
    int rank = 0;
    std::vector<IntVector> quasi_simples;
};

struct TubeFamily {
    std::vector<Tube> tubes;
};

/// Certificate that d(tau^{-k} P_j) and d(tau^{k} I_j) are sincere for all
/// k >= N: sincerity is checked on the window [N, N+H] and the dimension
/// vectors repeat modulo a positive multiple of delta with period H.
struct SincerityBound {
    Int N = 0;
    Int H = 1;
};

/// Quasi-simples of the nonhomogeneous tubes, found as the coordinatewise
/// minimal positive real roots of defect zero below delta, grouped into
/// Coxeter orbits. Throws NotTameError unless tame.
TubeFamily compute_tubes(const QuiverSpec& q);

/// Smallest sincerity bound together with its certificate period.
/// Throws NotTameError unless tame.
SincerityBound compute_sincerity_bound(const QuiverSpec& q);

/// Per-quiver context: classification, form matrices, tubes and sincerity
/// data, and the canonical object model. Immutable after construction and
/// safe to share across threads. Rejects wild quivers.
class ARCategory {
public:
    explicit ARCategory(QuiverSpec q);

    const QuiverSpec& quiver() const { return q_; }
    int n() const { return q_.n; }
    ReprType type() const { return type_; }
    bool tame() const { return type_ == ReprType::Tame; }
    std::uint64_t tag() const { return tag_; }

    const IntMatrix& cartan() const { return cartan_; }
    const IntMatrix& cartan_inverse() const { return cartan_inv_; }
    const IntMatrix& coxeter() const { return coxeter_; }
    const IntMatrix& coxeter_inverse() const { return coxeter_inv_; }

    const IntVector& delta() const;              // tame only
    const TubeFamily& tubes() const;             // tame only
    const SincerityBound& sincerity_bound() const; // tame only
    Int defect(const IntVector& d) const;        // tame only

    int tube_count() const;
    int tube_rank(int tube) const; // 1-based tube id

    IndecObject preprojective(int p, int vertex, int shift = 0) const;
    IndecObject preinjective(int q, int vertex, int shift = 0) const;
    IndecObject regular(int tube, int socle, int len, int shift = 0) const;
    IndecObject projective(int vertex, int shift = 0) const { return preprojective(0, vertex, shift); }
    IndecObject injective(int vertex, int shift = 0) const { return preinjective(0, vertex, shift); }

    /// Derived AR translate applied |power| times (inverse for negative
    /// power). Crossing rule: tau P_j = I_j[-1], tau^{-1} I_j = P_j[1].
    IndecObject tau(IndecObject x, Int power = 1) const;

    /// Dimension vector of the underlying module; independent of the shift.
    IntVector dim_vector(const IndecObject& x) const;

    void require_same_quiver(const IndecObject& x) const;

private:
    IndecObject tau_step(IndecObject x) const;
    IndecObject tau_inverse_step(IndecObject x) const;
    IntVector preprojective_dim(int vertex, int p) const;
    IntVector preinjective_dim(int vertex, int q) const;

    QuiverSpec q_;
    ReprType type_ = ReprType::Finite;
    std::uint64_t tag_ = 0;
    IntMatrix cartan_, cartan_inv_, coxeter_, coxeter_inv_;

    // tame data
    IntVector delta_;
    TubeFamily tubes_;
    SincerityBound sincerity_;

    // finite-type orbit data: tau^{-orbit_len_[j]} P_{j+1} = I_{nu_[j]}
    std::vector<int> orbit_len_;
    std::vector<int> nu_;

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::vector<IntVector>> preproj_dims_;
    mutable std::vector<std::vector<IntVector>> preinj_dims_;
};

} // namespace greenseq
