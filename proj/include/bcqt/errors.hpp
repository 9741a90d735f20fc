// errors.hpp
// Error types thrown by the simulator and protocol layers.

#pragma once

#include <stdexcept>

namespace bcqt {

struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A user-supplied amplitude pair does not satisfy |a0|^2 + |a1|^2 = 1.
struct NotNormalized : SimulationError {
    using SimulationError::SimulationError;
};

// Two qubits in one register carry the same label.
struct DuplicateLabel : SimulationError {
    using SimulationError::SimulationError;
};

// An operation addressed a label that is not part of the register.
struct UnknownLabel : SimulationError {
    using SimulationError::SimulationError;
};

// A forced measurement outcome has (numerically) zero probability.
// Callers must not renormalize the projected component.
struct ZeroProbabilityBranch : SimulationError {
    using SimulationError::SimulationError;
};

struct DimensionMismatch : SimulationError {
    using SimulationError::SimulationError;
};

// A correction lookup needs the controller's announcement and none is present.
struct MissingCharlieOutcome : SimulationError {
    using SimulationError::SimulationError;
};

// No Pauli pair recovers both input states on some branch.
struct NoValidCorrection : SimulationError {
    using SimulationError::SimulationError;
};

// More than one Pauli pair survives the revalidation inputs.
struct AmbiguousCorrection : SimulationError {
    using SimulationError::SimulationError;
};

// A classical message was appended out of protocol order.
struct TranscriptOrderViolation : SimulationError {
    using SimulationError::SimulationError;
};

// Bad command-line / run configuration (maps to exit code 2).
struct ConfigError : SimulationError {
    using SimulationError::SimulationError;
};

} // namespace bcqt
