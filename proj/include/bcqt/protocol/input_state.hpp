// input_state.hpp
// The single-qubit payload states the two users teleport to each other.

#pragma once

#include <complex>

#include "bcqt/rng.hpp"
#include "bcqt/state_vector.hpp"

namespace bcqt::protocol {

class InputState {
public:
    InputState(std::complex<double> amp0, std::complex<double> amp1)
        : amp0_(amp0), amp1_(amp1) {
        const double n2 = std::norm(amp0_) + std::norm(amp1_);
        if (std::abs(n2 - 1.0) > normalization_tolerance<double>())
            throw NotNormalized("input state amplitudes must satisfy "
                                "|a0|^2 + |a1|^2 = 1");
    }

    std::complex<double> amp0() const { return amp0_; }
    std::complex<double> amp1() const { return amp1_; }

    StateVector<double> to_state(const QubitLabel& q) const {
        return prepare_single(amp0_, amp1_, q);
    }

private:
    std::complex<double> amp0_, amp1_;
};

// Haar-random single-qubit state: two complex standard normals, normalized,
// with the global phase rotated so the first amplitude is real non-negative.
inline InputState haar_random_input(Xoshiro256StarStar& rng) {
    std::complex<double> a0(rng.normal(), rng.normal());
    std::complex<double> a1(rng.normal(), rng.normal());
    const double n = std::sqrt(std::norm(a0) + std::norm(a1));
    a0 /= n;
    a1 /= n;
    const double m0 = std::abs(a0);
    if (m0 <= 1e-12)
        return InputState(0.0, std::abs(a1));
    return InputState(m0, a1 * (std::conj(a0) / m0));
}

} // namespace bcqt::protocol
