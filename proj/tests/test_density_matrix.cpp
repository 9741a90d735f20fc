#include "doctest.h"

#include <cmath>
#include <complex>

#include "bcqt/density_matrix.hpp"

#include "support.hpp"

using namespace bcqt;
using testsupport::near;
using testsupport::random_state;

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
    auto pair = bell_state<double>(BellOutcome::PhiPlus, "q1", "q2");
    auto rho = partial_trace(pair, {"q1"});
    CHECK(near(rho.trace(), 1.0, 1e-15));
    CHECK((rho.entries() - 0.5 * Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-15);
}

TEST_CASE("partial trace of a product state is a projector") {
    const std::complex<double> I_UNIT(0.0, 1.0);
    auto s = tensor(StateVector<double>::basis_state({"q1"}, 0),
                    prepare_single<double>(1 / std::sqrt(2.0),
                                           1 / std::sqrt(2.0), "q2"));
    auto rho = partial_trace(s, {"q1"});
    Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
    expected(0, 0) = 1.0;
    CHECK((rho.entries() - expected).cwiseAbs().maxCoeff() <= 1e-15);

    // random product factors reduce to rank-1 projectors
    Xoshiro256StarStar rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto left = random_state(rng, {"a0", "a1"});
        auto right = random_state(rng, {"b0"});
        auto product = tensor(left, right);
        auto reduced = partial_trace(product, {"a0", "a1"});
        const auto eigenvalues = reduced.eigenvalues();
        CHECK(near(eigenvalues(eigenvalues.size() - 1), 1.0, 1e-10));
    }
}

TEST_CASE("reduced density matrices are unit-trace hermitian psd") {
    Xoshiro256StarStar rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        auto s = random_state(rng, n);
        const auto keep = s.labels()[rng.next() % n];
        auto rho = partial_trace(s, {keep});
        CHECK(near(rho.trace(), 1.0, 1e-12));
        CHECK(rho.hermiticity_error() <= 1e-12);
        CHECK(rho.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("fidelity of pure and mixed states against a pure target") {
    auto zero = StateVector<double>::basis_state({"q"}, 0);
    CHECK(near(fidelity(zero, zero), 1.0, 1e-15));

    auto mixed = DensityMatrix<double>::maximally_mixed({"q"});
    CHECK(near(fidelity(mixed, zero), 0.5, 1e-15));
    auto any = prepare_single<double>(0.6, std::complex<double>(0.0, 0.8));
    CHECK(near(fidelity(mixed, any), 0.5, 1e-15));

    // global phase does not matter
    const std::complex<double> phase = std::polar(1.0, 0.83);
    auto rotated = StateVector<double>({"q"}, phase * any.amplitudes());
    CHECK(near(fidelity(rotated, any), 1.0, 1e-12));
    CHECK(near(fidelity(partial_trace(rotated, {"q"}), any), 1.0, 1e-12));

    auto pair = bell_state<double>(BellOutcome::PhiPlus, "q1", "q2");
    CHECK_THROWS_AS(fidelity(partial_trace(pair, {"q1", "q2"}), zero),
                    DimensionMismatch);
}

TEST_CASE("trace distance separates the pure and mixed extremes") {
    auto zero = StateVector<double>::basis_state({"q"}, 0);
    auto projector = partial_trace(tensor(zero, bell_state<double>(
                                                    BellOutcome::PhiPlus, "a",
                                                    "b")),
                                   {"q"});
    auto mixed = DensityMatrix<double>::maximally_mixed({"q"});
    CHECK(near(trace_distance(mixed, mixed), 0.0, 1e-15));
    CHECK(near(trace_distance(projector, mixed), 0.5, 1e-12));
    CHECK_THROWS_AS(trace_distance(
                        mixed, DensityMatrix<double>::maximally_mixed({"r"})),
                    DimensionMismatch);
}
