#include "bcqt/protocol/run.hpp"

#include <Eigen/SVD>

#include <string>
#include <utility>

namespace bcqt::protocol {

namespace {

std::string user_payload(int z, int x) {
    return "z=" + std::to_string(z) + ",x=" + std::to_string(x);
}

// Split a (near-)product 2-qubit state on (b1, a2) into its factors via the
// rank-1 part of the amplitude matrix.
std::pair<StateVector<double>, StateVector<double>>
factor_final_state(const StateVector<double>& s) {
    Eigen::Matrix2cd amp_matrix;
    amp_matrix << s.amplitude(0), s.amplitude(1), s.amplitude(2), s.amplitude(3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(
        amp_matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Vector2cd u = svd.matrixU().col(0);
    Eigen::Vector2cd w = svd.matrixV().col(0).conjugate();
    return {StateVector<double>({reg::b1}, u.normalized()),
            StateVector<double>({reg::a2}, w.normalized())};
}

ProtocolResult finish_run(const InputState& input_a, const InputState& input_b,
                          const Step3Result& s3, const Step4Result& s4) {
    Transcript transcript;
    transcript.append({Party::Alice,
                       {Party::Bob, Party::Charlie},
                       user_payload(s3.outcome.alice_z, s3.outcome.alice_x)});
    transcript.append({Party::Bob,
                       {Party::Alice, Party::Charlie},
                       user_payload(s3.outcome.bob_z, s3.outcome.bob_x)});
    transcript.append({Party::Charlie,
                       {Party::Alice, Party::Bob},
                       "bell=" + std::string(to_string(*s4.outcome))});

    OutcomeRecord outcome = s3.outcome;
    outcome.charlie_bell = s4.outcome;
    const PauliCorrection correction = resolve_corrections(outcome);

    const auto corrected =
        apply_gate(apply_gate(s4.state, pauli_gate(correction.on_b1, reg::b1)),
                   pauli_gate(correction.on_a2, reg::a2));

    const double f_b1 =
        fidelity(partial_trace(corrected, {reg::b1}), input_a.to_state(reg::b1));
    const double f_a2 =
        fidelity(partial_trace(corrected, {reg::a2}), input_b.to_state(reg::a2));
    auto [final_b1, final_a2] = factor_final_state(corrected);

    return {std::move(transcript), outcome,           correction,
            std::move(final_b1),   std::move(final_a2), f_b1,
            f_a2,                  s3.probability * s4.probability};
}

} // namespace

ProtocolResult run_protocol(const InputState& input_a, const InputState& input_b,
                            const OutcomeRecord& forced) {
    if (!forced.charlie_bell)
        throw MissingCharlieOutcome("forced run needs charlie_bell");
    const auto system =
        step2_cnots(compose_system(build_channel(), input_a, input_b));
    const auto s3 = step3_measure(system, forced);
    const auto s4 = step4_charlie(s3.state, true, forced.charlie_bell.value());
    return finish_run(input_a, input_b, s3, s4);
}

ProtocolResult run_protocol(const InputState& input_a, const InputState& input_b,
                            Xoshiro256StarStar& rng) {
    const auto system =
        step2_cnots(compose_system(build_channel(), input_a, input_b));
    const auto s3 = step3_measure(system, rng);
    const auto s4 = step4_charlie(s3.state, true, rng);
    return finish_run(input_a, input_b, s3, s4);
}

} // namespace bcqt::protocol
