#include "bcqt/protocol/steps.hpp"

namespace bcqt::protocol {

StateVector<double> build_channel() {
    const auto pair_ab = bell_state<double>(BellOutcome::PhiPlus, reg::a1, reg::b1);
    const auto pair_ca = bell_state<double>(BellOutcome::PhiPlus, reg::c1, reg::a2);
    const auto pair_cb = bell_state<double>(BellOutcome::PhiPlus, reg::c2, reg::b2);
    return tensor(tensor(pair_ab, pair_ca), pair_cb);
}

StateVector<double> compose_system(const StateVector<double>& channel,
                                   const InputState& input_a,
                                   const InputState& input_b) {
    if (channel.num_qubits() != 6)
        throw DimensionMismatch("compose_system expects the 6-qubit channel");
    return tensor(tensor(channel, input_a.to_state(reg::A)),
                  input_b.to_state(reg::B));
}

StateVector<double> step2_cnots(const StateVector<double>& s) {
    return apply_gate(apply_gate(s, Gate::cnot(reg::A, reg::a1)),
                      Gate::cnot(reg::B, reg::b2));
}

Step3Result step3_measure(const StateVector<double>& s,
                          const OutcomeRecord& forced) {
    auto m1 = postselect(s, reg::a1, Basis::Z, forced.alice_z);
    auto m2 = postselect(m1.state, reg::A, Basis::X, forced.alice_x);
    auto m3 = postselect(m2.state, reg::b2, Basis::Z, forced.bob_z);
    auto m4 = postselect(m3.state, reg::B, Basis::X, forced.bob_x);
    OutcomeRecord rec = forced;
    rec.charlie_bell.reset();
    return {rec, m1.probability * m2.probability * m3.probability * m4.probability,
            std::move(m4.state)};
}

Step3Result step3_measure(const StateVector<double>& s, Xoshiro256StarStar& rng) {
    auto m1 = measure(s, reg::a1, Basis::Z, rng);
    auto m2 = measure(m1.state, reg::A, Basis::X, rng);
    auto m3 = measure(m2.state, reg::b2, Basis::Z, rng);
    auto m4 = measure(m3.state, reg::B, Basis::X, rng);
    OutcomeRecord rec;
    rec.alice_z = m1.outcome;
    rec.alice_x = m2.outcome;
    rec.bob_z = m3.outcome;
    rec.bob_x = m4.outcome;
    return {rec, m1.probability * m2.probability * m3.probability * m4.probability,
            std::move(m4.state)};
}

namespace {

StateVector<double> charlie_hadamards(const StateVector<double>& s) {
    return apply_gate(apply_gate(s, Gate::h(reg::c1)), Gate::h(reg::c2));
}

} // namespace

Step4Result step4_charlie(const StateVector<double>& s, bool cooperate,
                          BellOutcome forced) {
    if (!cooperate) return {std::nullopt, 1.0, s};
    auto result = postselect_bell(charlie_hadamards(s), reg::c1, reg::c2, forced);
    return {result.outcome, result.probability, std::move(result.state)};
}

Step4Result step4_charlie(const StateVector<double>& s, bool cooperate,
                          Xoshiro256StarStar& rng) {
    if (!cooperate) return {std::nullopt, 1.0, s};
    auto result = measure_bell(charlie_hadamards(s), reg::c1, reg::c2, rng);
    return {result.outcome, result.probability, std::move(result.state)};
}

} // namespace bcqt::protocol
