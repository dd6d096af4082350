#pragma once

#include "greenseq/ar_category.hpp"

#include <optional>
#include <vector>

namespace greenseq {

/// Hom and Ext^1 dimensions between the underlying modules of a pair of
/// rigid indecomposables. Always satisfies hom - ext = <dim x, dim y>.
struct HomExtPair {
    Int hom = 0;
    Int ext = 0;

    friend bool operator==(const HomExtPair&, const HomExtPair&) = default;
};

/// Module-level Hom/Ext^1 dimensions; shift fields are ignored. All values
/// come from the Euler form plus structural vanishing (directedness of the
/// transjective component, tube orthogonality, the cyclic interval rule
/// inside a tube, and AR duality ext(x, y) = hom(y, tau x)).
HomExtPair hom_ext(const ARCategory& cat, const IndecObject& x, const IndecObject& y);

/// Hom in the derived category: with D = shift(y) - shift(x), this is hom
/// for D = 0, ext for D = 1, and 0 otherwise.
Int hom_derived(const ARCategory& cat, const IndecObject& x, const IndecObject& y);

/// True for every representable object; verifies ext(x, x) = 0 and aborts
/// on violation.
bool is_rigid(const ARCategory& cat, const IndecObject& x);

/// The two-case compatibility predicate on rigid objects x != y: at equal
/// shift both Ext^1 groups vanish; otherwise the later object has no Hom and
/// no Ext^1 to the earlier one.
bool compatible(const ARCategory& cat, const IndecObject& x, const IndecObject& y);

/// Shift assignment (one integer per module) making the family pre-silting,
/// if any exists. Input objects are treated at module level.
std::optional<std::vector<int>> silting_compatible_shifts(const ARCategory& cat,
                                                          const std::vector<IndecObject>& modules);

/// True iff some shift assignment makes the family pre-silting.
bool silting_compatible_family(const ARCategory& cat, const std::vector<IndecObject>& modules);

} // namespace greenseq
