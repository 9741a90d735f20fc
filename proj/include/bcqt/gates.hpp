// gates.hpp
// Gate set for the statevector engine: the four recovery operators
// {I, X, iY, Z}, the Hadamard, and CNOT.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "bcqt/errors.hpp"

namespace bcqt {

// Qubits are addressed by label, not by position, so protocol code can speak
// in register names (a1, b1, ...) and tests can use opaque names.
using QubitLabel = std::string;

// Recovery operators. iY is |0><1| - |1><0|, i.e. iY|1> = |0>, iY|0> = -|1>.
enum class PauliOp { I, X, iY, Z };

inline constexpr std::array<PauliOp, 4> kAllPaulis = {PauliOp::I, PauliOp::X,
                                                      PauliOp::iY, PauliOp::Z};

inline std::string_view to_string(PauliOp op) {
    switch (op) {
    case PauliOp::I: return "I";
    case PauliOp::X: return "X";
    case PauliOp::iY: return "iY";
    case PauliOp::Z: return "Z";
    }
    return "?";
}

inline PauliOp pauli_from_string(std::string_view name) {
    if (name == "I") return PauliOp::I;
    if (name == "X") return PauliOp::X;
    if (name == "iY") return PauliOp::iY;
    if (name == "Z") return PauliOp::Z;
    throw ConfigError("unknown Pauli name: " + std::string(name));
}

enum class GateKind { I, X, iY, Z, H, Cnot };

struct Gate {
    GateKind kind;
    QubitLabel target;
    QubitLabel control; // used by Cnot only

    static Gate identity(QubitLabel q) { return {GateKind::I, std::move(q), {}}; }
    static Gate x(QubitLabel q) { return {GateKind::X, std::move(q), {}}; }
    static Gate iy(QubitLabel q) { return {GateKind::iY, std::move(q), {}}; }
    static Gate z(QubitLabel q) { return {GateKind::Z, std::move(q), {}}; }
    static Gate h(QubitLabel q) { return {GateKind::H, std::move(q), {}}; }

    static Gate cnot(QubitLabel control, QubitLabel target) {
        if (control == target)
            throw DuplicateLabel("cnot control and target must differ");
        return {GateKind::Cnot, std::move(target), std::move(control)};
    }

    bool is_two_qubit() const { return kind == GateKind::Cnot; }
};

inline Gate pauli_gate(PauliOp op, const QubitLabel& q) {
    switch (op) {
    case PauliOp::I: return Gate::identity(q);
    case PauliOp::X: return Gate::x(q);
    case PauliOp::iY: return Gate::iy(q);
    case PauliOp::Z: return Gate::z(q);
    }
    throw SimulationError("unreachable");
}

// 2x2 matrix of a single-qubit gate kind. Entries are exactly 0, +/-1 or
// +/-1/sqrt(2); rows/columns are ordered |0>, |1>.
template <typename Scalar = double>
Eigen::Matrix2<std::complex<Scalar>> gate_matrix(GateKind kind) {
    using C = std::complex<Scalar>;
    Eigen::Matrix2<C> m;
    const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
    switch (kind) {
    case GateKind::I:
        m << C(1), C(0), C(0), C(1);
        return m;
    case GateKind::X:
        m << C(0), C(1), C(1), C(0);
        return m;
    case GateKind::iY:
        m << C(0), C(1), C(-1), C(0);
        return m;
    case GateKind::Z:
        m << C(1), C(0), C(0), C(-1);
        return m;
    case GateKind::H:
        m << C(h), C(h), C(h), C(-h);
        return m;
    case GateKind::Cnot:
        break;
    }
    throw DimensionMismatch("gate_matrix: not a single-qubit gate");
}

} // namespace bcqt
