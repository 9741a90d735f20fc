// state_vector.hpp
// Dense statevector over a labeled qubit register, plus the measurement
// primitives used by the protocol: basis post-selection, sampled single-qubit
// measurement, and Bell measurement on a qubit pair.
//
// Conventions, fixed once here and relied on everywhere else:
//   * The first label is the most significant bit of the basis-state index,
//     so a register (a1,b1,c1) reads |a1 b1 c1> left to right.
//   * X-basis outcomes are encoded as bits: 0 <-> |+>, 1 <-> |->.
//   * Measured qubits are removed from the register, not left collapsed in
//     place; a fully measured register has zero qubits and one amplitude.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bcqt/bell.hpp"
#include "bcqt/errors.hpp"
#include "bcqt/gates.hpp"
#include "bcqt/rng.hpp"

namespace bcqt {

// Forced outcomes below this probability are rejected as impossible.
inline constexpr double kZeroProbabilityTol = 1e-15;

template <typename Scalar>
constexpr Scalar normalization_tolerance() {
    // 1e-9 in double precision; looser for narrower scalars.
    if constexpr (std::is_same_v<Scalar, double>)
        return Scalar(1e-9);
    else
        return Scalar(1e-4);
}

enum class Basis { Z, X };

template <typename Scalar = double>
class StateVector {
public:
    using Complex = std::complex<Scalar>;
    using AmpVector = Eigen::Vector<Complex, Eigen::Dynamic>;

    StateVector(std::vector<QubitLabel> labels, AmpVector amps)
        : labels_(std::move(labels)), amps_(std::move(amps)) {
        if (amps_.size() != dim_for(labels_.size()))
            throw DimensionMismatch("amplitude count must be 2^(label count)");
        check_unique(labels_);
        const Scalar n2 = amps_.squaredNorm();
        if (std::abs(n2 - Scalar(1)) > normalization_tolerance<Scalar>())
            throw NotNormalized("state vector is not normalized");
    }

    // Computational basis state |index> on the given register.
    static StateVector basis_state(std::vector<QubitLabel> labels,
                                   Eigen::Index index) {
        AmpVector amps = AmpVector::Zero(dim_for(labels.size()));
        amps(index) = Complex(1);
        return StateVector(std::move(labels), std::move(amps));
    }

    // Normalizes before constructing; for assembling states from term lists.
    static StateVector from_unnormalized(std::vector<QubitLabel> labels,
                                         AmpVector amps) {
        const Scalar n = amps.norm();
        if (n < Scalar(kZeroProbabilityTol))
            throw NotNormalized("cannot normalize a (near-)zero vector");
        amps /= n;
        return StateVector(std::move(labels), std::move(amps));
    }

    int num_qubits() const { return static_cast<int>(labels_.size()); }
    Eigen::Index dim() const { return amps_.size(); }
    const std::vector<QubitLabel>& labels() const { return labels_; }
    const AmpVector& amplitudes() const { return amps_; }
    Complex amplitude(Eigen::Index basis_index) const { return amps_(basis_index); }

    bool has_label(const QubitLabel& q) const {
        return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
    }

    int label_position(const QubitLabel& q) const {
        const auto it = std::find(labels_.begin(), labels_.end(), q);
        if (it == labels_.end())
            throw UnknownLabel("label not in register: " + q);
        return static_cast<int>(it - labels_.begin());
    }

    // Bit shift of the label within a basis index (first label = MSB).
    int bit_shift(const QubitLabel& q) const {
        return num_qubits() - 1 - label_position(q);
    }

private:
    static Eigen::Index dim_for(std::size_t n) {
        return Eigen::Index(1) << n;
    }

    static void check_unique(const std::vector<QubitLabel>& labels) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw DuplicateLabel("duplicate qubit label: " + labels[i]);
    }

    std::vector<QubitLabel> labels_;
    AmpVector amps_;
};

// --- state preparation ------------------------------------------------------

template <typename Scalar = double>
StateVector<Scalar> prepare_single(std::complex<Scalar> alpha0,
                                   std::complex<Scalar> alpha1,
                                   QubitLabel q = QubitLabel("q")) {
    const Scalar n2 = std::norm(alpha0) + std::norm(alpha1);
    if (std::abs(n2 - Scalar(1)) > normalization_tolerance<Scalar>())
        throw NotNormalized("|alpha0|^2 + |alpha1|^2 must be 1");
    typename StateVector<Scalar>::AmpVector amps(2);
    amps << alpha0, alpha1;
    return StateVector<Scalar>({std::move(q)}, std::move(amps));
}

template <typename Scalar = double>
StateVector<Scalar> bell_state(BellOutcome which, QubitLabel qa, QubitLabel qb) {
    using C = std::complex<Scalar>;
    const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
    typename StateVector<Scalar>::AmpVector amps =
        StateVector<Scalar>::AmpVector::Zero(4);
    switch (which) {
    case BellOutcome::PhiPlus:  amps(0b00) = C(h); amps(0b11) = C(h); break;
    case BellOutcome::PhiMinus: amps(0b00) = C(h); amps(0b11) = C(-h); break;
    case BellOutcome::PsiPlus:  amps(0b01) = C(h); amps(0b10) = C(h); break;
    case BellOutcome::PsiMinus: amps(0b01) = C(h); amps(0b10) = C(-h); break;
    }
    return StateVector<Scalar>({std::move(qa), std::move(qb)}, std::move(amps));
}

// Tensor product; a's labels stay most significant.
template <typename Scalar>
StateVector<Scalar> tensor(const StateVector<Scalar>& a,
                           const StateVector<Scalar>& b) {
    for (const auto& q : b.labels())
        if (a.has_label(q))
            throw DuplicateLabel("tensor: label on both factors: " + q);
    std::vector<QubitLabel> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    typename StateVector<Scalar>::AmpVector amps(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i)
        amps.segment(i * b.dim(), b.dim()) = a.amplitude(i) * b.amplitudes();
    return StateVector<Scalar>(std::move(labels), std::move(amps));
}

// --- gates ------------------------------------------------------------------

template <typename Scalar>
StateVector<Scalar> apply_gate(const StateVector<Scalar>& s, const Gate& g) {
    using AmpVector = typename StateVector<Scalar>::AmpVector;
    AmpVector amps = s.amplitudes();
    if (g.kind == GateKind::Cnot) {
        const Eigen::Index cmask = Eigen::Index(1) << s.bit_shift(g.control);
        const Eigen::Index tmask = Eigen::Index(1) << s.bit_shift(g.target);
        for (Eigen::Index k = 0; k < s.dim(); ++k)
            if ((k & cmask) && !(k & tmask))
                std::swap(amps(k), amps(k | tmask));
    } else {
        const auto m = gate_matrix<Scalar>(g.kind);
        const Eigen::Index mask = Eigen::Index(1) << s.bit_shift(g.target);
        for (Eigen::Index k = 0; k < s.dim(); ++k) {
            if (k & mask) continue;
            const auto a0 = amps(k);
            const auto a1 = amps(k | mask);
            amps(k) = m(0, 0) * a0 + m(0, 1) * a1;
            amps(k | mask) = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }
    return StateVector<Scalar>(s.labels(), std::move(amps));
}

// --- measurement ------------------------------------------------------------

template <typename Scalar>
struct Postselected {
    Scalar probability;
    StateVector<Scalar> state;
};

template <typename Scalar>
struct Measured {
    int outcome;
    Scalar probability;
    StateVector<Scalar> state;
};

namespace detail {

// Drop the bit at `shift` from index k.
inline Eigen::Index drop_bit(Eigen::Index k, int shift) {
    const Eigen::Index low = k & ((Eigen::Index(1) << shift) - 1);
    return ((k >> (shift + 1)) << shift) | low;
}

} // namespace detail

// Project qubit q onto the given basis outcome, remove it from the register,
// and renormalize. Returns the outcome probability with the projected state.
template <typename Scalar>
Postselected<Scalar> postselect(const StateVector<Scalar>& s,
                                const QubitLabel& q, Basis basis, int outcome) {
    using AmpVector = typename StateVector<Scalar>::AmpVector;
    const int pos = s.label_position(q);
    const int shift = s.num_qubits() - 1 - pos;
    const Eigen::Index mask = Eigen::Index(1) << shift;
    const Scalar h = Scalar(1) / std::sqrt(Scalar(2));

    AmpVector reduced = AmpVector::Zero(s.dim() / 2);
    for (Eigen::Index k = 0; k < s.dim(); ++k) {
        if (k & mask) continue;
        const auto a0 = s.amplitude(k);
        const auto a1 = s.amplitude(k | mask);
        const Eigen::Index r = detail::drop_bit(k, shift);
        if (basis == Basis::Z)
            reduced(r) = outcome == 0 ? a0 : a1;
        else // X basis: 0 <-> |+>, 1 <-> |->
            reduced(r) = outcome == 0 ? h * (a0 + a1) : h * (a0 - a1);
    }

    const Scalar prob = reduced.squaredNorm();
    if (prob < Scalar(kZeroProbabilityTol))
        throw ZeroProbabilityBranch("forced outcome has zero probability");
    reduced /= std::sqrt(prob);

    std::vector<QubitLabel> labels = s.labels();
    labels.erase(labels.begin() + pos);
    return {prob, StateVector<Scalar>(std::move(labels), std::move(reduced))};
}

// Sampled single-qubit measurement. The collapsed state is produced by the
// same projection path as postselect, so a sampled run and a forced run with
// the same outcome agree exactly.
template <typename Scalar>
Measured<Scalar> measure(const StateVector<Scalar>& s, const QubitLabel& q,
                         Basis basis, Xoshiro256StarStar& rng) {
    const Eigen::Index mask = Eigen::Index(1) << s.bit_shift(q);
    const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
    Scalar p0 = 0;
    for (Eigen::Index k = 0; k < s.dim(); ++k) {
        if (k & mask) continue;
        const auto a0 = s.amplitude(k);
        const auto a1 = s.amplitude(k | mask);
        p0 += basis == Basis::Z ? std::norm(a0) : std::norm(h * (a0 + a1));
    }
    int outcome;
    if (p0 >= Scalar(1) - Scalar(kZeroProbabilityTol))
        outcome = 0;
    else if (p0 < Scalar(kZeroProbabilityTol))
        outcome = 1;
    else
        outcome = rng.uniform() < static_cast<double>(p0) ? 0 : 1;
    auto projected = postselect(s, q, basis, outcome);
    return {outcome, projected.probability, std::move(projected.state)};
}

template <typename Scalar>
struct BellMeasured {
    BellOutcome outcome;
    Scalar probability;
    StateVector<Scalar> state;
};

namespace detail {

template <typename Scalar>
StateVector<Scalar> bell_basis_change(const StateVector<Scalar>& s,
                                      const QubitLabel& q1,
                                      const QubitLabel& q2) {
    return apply_gate(apply_gate(s, Gate::cnot(q1, q2)), Gate::h(q1));
}

} // namespace detail

// Forced Bell measurement on (q1, q2): both qubits are removed and the
// returned probability is the Born weight of the chosen outcome.
template <typename Scalar>
BellMeasured<Scalar> postselect_bell(const StateVector<Scalar>& s,
                                     const QubitLabel& q1, const QubitLabel& q2,
                                     BellOutcome forced) {
    const auto rotated = detail::bell_basis_change(s, q1, q2);
    const auto [bit1, bit2] = bell_bits(forced);
    auto first = postselect(rotated, q1, Basis::Z, bit1);
    auto second = postselect(first.state, q2, Basis::Z, bit2);
    return {forced, first.probability * second.probability,
            std::move(second.state)};
}

template <typename Scalar>
BellMeasured<Scalar> measure_bell(const StateVector<Scalar>& s,
                                  const QubitLabel& q1, const QubitLabel& q2,
                                  Xoshiro256StarStar& rng) {
    const auto rotated = detail::bell_basis_change(s, q1, q2);
    auto first = measure(rotated, q1, Basis::Z, rng);
    auto second = measure(first.state, q2, Basis::Z, rng);
    return {bell_from_bits(first.outcome, second.outcome),
            first.probability * second.probability, std::move(second.state)};
}

// --- register reordering and comparison -------------------------------------

// Same state expressed on a permuted label order.
template <typename Scalar>
StateVector<Scalar> reordered(const StateVector<Scalar>& s,
                              const std::vector<QubitLabel>& new_labels) {
    if (new_labels.size() != s.labels().size())
        throw DimensionMismatch("reordered: label count differs");
    const int n = s.num_qubits();
    std::vector<int> old_shift(new_labels.size());
    for (std::size_t p = 0; p < new_labels.size(); ++p)
        old_shift[p] = s.bit_shift(new_labels[p]); // throws UnknownLabel
    typename StateVector<Scalar>::AmpVector amps(s.dim());
    for (Eigen::Index k_new = 0; k_new < s.dim(); ++k_new) {
        Eigen::Index k_old = 0;
        for (std::size_t p = 0; p < new_labels.size(); ++p) {
            const int new_shift = n - 1 - static_cast<int>(p);
            if ((k_new >> new_shift) & 1)
                k_old |= Eigen::Index(1) << old_shift[p];
        }
        amps(k_new) = s.amplitude(k_old);
    }
    return StateVector<Scalar>(new_labels, std::move(amps));
}

// <a|b>, reordering b onto a's label order first.
template <typename Scalar>
std::complex<Scalar> inner_product(const StateVector<Scalar>& a,
                                   const StateVector<Scalar>& b) {
    if (a.num_qubits() != b.num_qubits())
        throw DimensionMismatch("inner_product: register sizes differ");
    if (a.labels() == b.labels())
        return a.amplitudes().dot(b.amplitudes());
    return a.amplitudes().dot(reordered(b, a.labels()).amplitudes());
}

// True iff |<a|b>| >= 1 - tol, i.e. equal up to a global phase.
template <typename Scalar>
bool states_equal_up_to_phase(const StateVector<Scalar>& a,
                              const StateVector<Scalar>& b, Scalar tol) {
    return std::abs(inner_product(a, b)) >= Scalar(1) - tol;
}

// --- formatting (reports, diagnostics) ---------------------------------------

template <typename Scalar>
std::string format_state(const StateVector<Scalar>& s) {
    std::string out;
    char buf[64];
    for (Eigen::Index k = 0; k < s.dim(); ++k) {
        const auto a = s.amplitude(k);
        if (std::norm(a) < 1e-24) continue;
        // + 0.0 turns negative zero into plain zero
        std::snprintf(buf, sizeof(buf), "(%.9g%+.9gi)|",
                      double(a.real()) + 0.0, double(a.imag()) + 0.0);
        if (!out.empty()) out += " + ";
        out += buf;
        for (int bit = s.num_qubits() - 1; bit >= 0; --bit)
            out += ((k >> bit) & 1) ? '1' : '0';
        out += '>';
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace bcqt
