#pragma once

#include "greenseq/hom.hpp"

#include <string>
#include <vector>

namespace greenseq {

/// A silting object: n pairwise compatible rigid indecomposables, kept in
/// canonical order. Construct through make_silting.
struct SiltingObject {
    std::vector<IndecObject> summands;
    std::uint64_t quiver_tag = 0;

    friend bool operator==(const SiltingObject&, const SiltingObject&) = default;
};

/// Validates, sorts canonically. Throws NotSiltingError.
SiltingObject make_silting(const ARCategory& cat, std::vector<IndecObject> summands);

/// The algebra Lambda[shift] = P_1[shift] + ... + P_n[shift].
SiltingObject algebra_object(const ARCategory& cat, int shift = 0);

/// Stable identity string of the sorted summand list.
std::string canonical_key(const SiltingObject& t);

/// Index of x in the canonical summand order, or -1.
int index_of_summand(const SiltingObject& t, const IndecObject& x);

bool is_presilting(const ARCategory& cat, const std::vector<IndecObject>& xs);
bool is_silting(const ARCategory& cat, const std::vector<IndecObject>& xs);

/// Class in the Grothendieck group of perfect complexes, written in the
/// basis of the indecomposable projectives: (-1)^shift C^{-1} dim(x).
IntVector g_vector(const ARCategory& cat, const IndecObject& x);

/// Columns are the g-vectors of the summands; determinant is +-1 for every
/// silting object.
IntMatrix g_matrix(const ARCategory& cat, const SiltingObject& t);

/// Silting order: T >= U iff there are no nonzero maps from T to positive
/// shifts of U.
bool silting_geq(const ARCategory& cat, const SiltingObject& t, const SiltingObject& u);

/// Candidate region for completions: module shifts in [shift_lo, shift_hi],
/// and for tame quivers transjective degrees in [deg_lo, deg_hi].
struct SearchWindow {
    int shift_lo = 0;
    int shift_hi = 0;
    bool use_degrees = false;
    Int deg_lo = 0;
    Int deg_hi = 0;
};

/// Every object in the window, deterministically ordered.
std::vector<IndecObject> objects_in_window(const ARCategory& cat, const SearchWindow& w);

/// All Z in the window completing the almost-complete family to a silting
/// object, sorted strictly descending in the silting order of the completed
/// objects. The output is checked to be a chain.
std::vector<IndecObject> completions(const ARCategory& cat, const std::vector<IndecObject>& almost,
                                     const SearchWindow& w);

/// Forward (green) Iyama-Yoshino mutation at the idx-th summand: replaces it
/// with the completion adjacent strictly below. The search window follows
/// the degree-gap bound; the result is re-verified in an enlarged window and
/// WindowExhaustedError is thrown if the answer changes.
SiltingObject mutate_forward(const ARCategory& cat, const SiltingObject& t, int idx);

/// Backward (red) mutation: the completion adjacent strictly above.
SiltingObject mutate_backward(const ARCategory& cat, const SiltingObject& t, int idx);

} // namespace greenseq
