#pragma once

#include "greenseq/silting.hpp"

#include <string>
#include <vector>

namespace greenseq {

enum class StepColor : std::uint8_t { Green = 0, Red = 1 };

const char* to_string(StepColor c);

/// One mutation: the summand at position pos (canonical order of the object
/// being mutated) is removed and replaced.
struct MutationStep {
    int pos = 0;
    IndecObject removed;
    IndecObject added;
    StepColor color = StepColor::Green;

    friend bool operator==(const MutationStep&, const MutationStep&) = default;
};

struct MutationSequence {
    SiltingObject start;
    std::vector<MutationStep> steps;
    SiltingObject end;

    /// All objects along the sequence, start first, by replaying the steps.
    std::vector<SiltingObject> objects(const ARCategory& cat) const;

    friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
};

enum class WalkKind : std::uint8_t { Mgs, Red };

/// Finiteness windows for a walk. For an m-maximal green walk the summand
/// shifts stay in [0, m] and transjective degrees in [-nmN, nmN]; for a walk
/// with m red steps between objects supported in shifts [i, j) the windows
/// widen to [i-m, j+m) and degree cutoffs driven by the endpoint degrees.
struct SearchBounds {
    WalkKind kind = WalkKind::Mgs;
    int m = 1;
    bool tame = false;
    Int N = 0;
    int shift_lo = 0;
    int shift_hi = 0;
    bool has_degree_window = false;
    Int deg_lo = 0;
    Int deg_hi = 0;
    Int target_min_degree = 0; // L
    Int source_max_degree = 0; // H
};

/// Prune switches. The window prunes guarantee termination and stay on;
/// the order prune and the per-object degree inequality are semantically
/// redundant accelerators that oracle mode turns off.
struct WalkOptions {
    bool use_order_prune = true;
    bool use_degree_bound_prune = true;
    int window_slack = 0;
};

SearchBounds mgs_bounds(const ARCategory& cat, int m, int slack = 0);
SearchBounds red_bounds(const ARCategory& cat, const SiltingObject& from, const SiltingObject& to,
                        int m, int slack = 0);

/// Lower bound for the minimal transjective degree of a silting object on an
/// m-maximal green walk: -sum_j n_j (m-j) N, where n_j counts transjective
/// summands of slice j together with regulars of module shift j-1.
Int degree_bound_rhs(const ARCategory& cat, const SiltingObject& t, int m, Int N);

/// Mirror upper bound: sum_j n'_j j N with regulars of module shift j
/// counted in bucket j.
Int degree_bound_mirror_rhs(const ARCategory& cat, const SiltingObject& t, int m, Int N);

/// Every m-maximal green sequence from Lambda to Lambda[m], depth first over
/// forward mutations in canonical summand order, output sorted
/// lexicographically by step positions. Deterministic.
std::vector<MutationSequence> enumerate_mmgs(const ARCategory& cat, int m,
                                             const WalkOptions& opts = {});

/// Every mutation sequence from `from` to `to` with exactly m red steps.
/// No object is visited more than m+1 times on a path.
std::vector<MutationSequence> enumerate_m_red(const ARCategory& cat, const SiltingObject& from,
                                              const SiltingObject& to, int m,
                                              const WalkOptions& opts = {});

struct CheckEntry {
    std::string check;
    int index = -1; // object or step index the entry refers to, -1 for sequence level
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;
    bool all_passed() const;
};

/// Structural and bound checks for every object and step of a sequence:
/// enough transjective summands, degree gaps, the degree inequality (green
/// walks), per-tube caps, visit caps, and color/order agreement.
VerificationReport verify_sequence(const ARCategory& cat, const MutationSequence& seq,
                                   const SearchBounds& bounds);

/// Green mutation graph over all objects reachable from Lambda inside the
/// m-maximal green windows. Nodes are sorted by canonical key.
struct ExchangeGraph {
    std::vector<SiltingObject> nodes;
    std::vector<std::pair<int, int>> edges;
};

ExchangeGraph exchange_graph(const ARCategory& cat, int m, const WalkOptions& opts = {});

} // namespace greenseq
