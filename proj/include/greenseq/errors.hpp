#pragma once

#include <stdexcept>
#include <string>

namespace greenseq {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input data: malformed quiver file, object encoding, sequence file, invalid indices.
struct MalformedInputError : Error { using Error::Error; };

/// The operation needs a tame (Euclidean) quiver.
struct NotTameError : Error { using Error::Error; };

/// Wild quivers are rejected wholesale.
struct WildQuiverError : Error { using Error::Error; };

/// Objects belonging to different quivers were combined.
struct MixedQuiverError : Error { using Error::Error; };

/// compatible(x, x) is undefined.
struct SameObjectError : Error { using Error::Error; };

/// A regular object was passed where a transjective one is required.
struct NotTransjectiveError : Error { using Error::Error; };

/// The given summands do not form a silting object.
struct NotSiltingError : Error { using Error::Error; };

/// completions() needs a pre-silting family of size n-1.
struct NotAlmostCompleteError : Error { using Error::Error; };

/// Mutation window re-verification changed the answer; internal bug sentinel.
struct WindowExhaustedError : Error { using Error::Error; };

/// An internal invariant failed; results cannot be trusted.
struct InternalInconsistencyError : Error { using Error::Error; };

} // namespace greenseq
