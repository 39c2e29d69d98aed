#pragma once

#include <stdexcept>
#include <string>

namespace oscnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Potential (after mass weighting) has an eigenvalue at or below tolerance:
// the Hamiltonian has no normalizable ground state.
struct NonPositivePotential : Error {
    using Error::Error;
};

struct InvalidModeSet : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// A symplectic eigenvalue sits below the uncertainty bound.
struct UnphysicalState : Error {
    using Error::Error;
};

struct NonPositiveFactor : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// Randomized graph construction exhausted its retry budget.
struct GenerationFailure : Error {
    using Error::Error;
};

// Interaction matrix does not have the structure an operation requires.
struct PatternMismatch : Error {
    using Error::Error;
};

struct NoEntanglementAtZeroT : Error {
    using Error::Error;
};

struct TooManyModes : Error {
    using Error::Error;
};

}  // namespace oscnet
