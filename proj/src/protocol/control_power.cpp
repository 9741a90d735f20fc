#include "bcqt/protocol/control_power.hpp"

#include "bcqt/density_matrix.hpp"
#include "bcqt/protocol/steps.hpp"

namespace bcqt::protocol {

ControlPowerResult control_power(const InputState& input_a,
                                 const InputState& input_b) {
    const auto& table = standard_correction_table();
    const Receiver dependent = table.charlie_dependent_receiver();

    const auto target_b1 = input_a.to_state(reg::b1);
    const auto target_a2 = input_b.to_state(reg::a2);

    const auto system =
        step2_cnots(compose_system(build_channel(), input_a, input_b));

    double sum_f_b1 = 0.0, sum_f_a2 = 0.0, max_td = 0.0;
    for (int ub = 0; ub < 16; ++ub) {
        const auto s3 = step3_measure(system, outcome_from_user_branch(ub));
        const PauliCorrection correction = table.without_charlie(ub);

        // The controller measures but announces nothing: average each
        // receiver's reduced state over his Bell outcome.
        Eigen::Matrix2cd rho_b1 = Eigen::Matrix2cd::Zero();
        Eigen::Matrix2cd rho_a2 = Eigen::Matrix2cd::Zero();
        for (BellOutcome bell : kAllBellOutcomes) {
            const auto s4 = step4_charlie(s3.state, true, bell);
            const auto corrected = apply_gate(
                apply_gate(s4.state, pauli_gate(correction.on_b1, reg::b1)),
                pauli_gate(correction.on_a2, reg::a2));
            rho_b1 += s4.probability *
                      partial_trace(corrected, {reg::b1}).entries();
            rho_a2 += s4.probability *
                      partial_trace(corrected, {reg::a2}).entries();
        }
        const DensityMatrix<double> avg_b1({reg::b1}, rho_b1);
        const DensityMatrix<double> avg_a2({reg::a2}, rho_a2);
        sum_f_b1 += fidelity(avg_b1, target_b1);
        sum_f_a2 += fidelity(avg_a2, target_a2);

        const Eigen::Matrix2cd delta =
            (dependent == Receiver::A2 ? rho_a2 : rho_b1) -
            0.5 * Eigen::Matrix2cd::Identity();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(delta);
        max_td = std::max(max_td, solver.eigenvalues().cwiseAbs().sum() / 2.0);
    }

    const double mean_f_b1 = sum_f_b1 / 16.0;
    const double mean_f_a2 = sum_f_a2 / 16.0;
    const double controlled = dependent == Receiver::A2 ? mean_f_a2 : mean_f_b1;
    const double uncontrolled = dependent == Receiver::A2 ? mean_f_b1 : mean_f_a2;
    return {controlled, uncontrolled, max_td, dependent};
}

} // namespace bcqt::protocol
