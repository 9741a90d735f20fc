// density_matrix.hpp
// Reduced density matrices, fidelity and trace distance. Only what the
// control-power analysis and the test oracles need; no mixed-state evolution.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "bcqt/errors.hpp"
#include "bcqt/state_vector.hpp"

namespace bcqt {

template <typename Scalar = double>
class DensityMatrix {
public:
    using Complex = std::complex<Scalar>;
    using Matrix = Eigen::MatrixX<Complex>;

    DensityMatrix(std::vector<QubitLabel> labels, Matrix entries)
        : labels_(std::move(labels)), entries_(std::move(entries)) {
        const Eigen::Index d = Eigen::Index(1) << labels_.size();
        if (entries_.rows() != d || entries_.cols() != d)
            throw DimensionMismatch("density matrix must be 2^n x 2^n");
    }

    static DensityMatrix maximally_mixed(std::vector<QubitLabel> labels) {
        const Eigen::Index d = Eigen::Index(1) << labels.size();
        return DensityMatrix(std::move(labels),
                             Matrix::Identity(d, d) / Scalar(d));
    }

    int num_qubits() const { return static_cast<int>(labels_.size()); }
    Eigen::Index dim() const { return entries_.rows(); }
    const std::vector<QubitLabel>& labels() const { return labels_; }
    const Matrix& entries() const { return entries_; }

    Scalar trace() const { return entries_.trace().real(); }

    Scalar hermiticity_error() const {
        return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    }

    // Ascending real eigenvalues of the Hermitian part.
    Eigen::Vector<Scalar, Eigen::Dynamic> eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_);
        return solver.eigenvalues();
    }

private:
    std::vector<QubitLabel> labels_;
    Matrix entries_;
};

// Reduced density matrix on `keep` (in the given order); all other qubits
// are traced out.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const StateVector<Scalar>& s,
                                    const std::vector<QubitLabel>& keep) {
    using Matrix = typename DensityMatrix<Scalar>::Matrix;
    const int m = static_cast<int>(keep.size());
    std::vector<int> keep_shift(keep.size());
    for (std::size_t p = 0; p < keep.size(); ++p)
        keep_shift[p] = s.bit_shift(keep[p]); // throws UnknownLabel
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (keep[i] == keep[j])
                throw DuplicateLabel("partial_trace: repeated label " + keep[i]);

    std::vector<int> env_shift;
    for (const auto& q : s.labels()) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end())
            env_shift.push_back(s.bit_shift(q));
    }

    const Eigen::Index dk = Eigen::Index(1) << m;
    const Eigen::Index de = Eigen::Index(1) << env_shift.size();
    Matrix rho = Matrix::Zero(dk, dk);
    Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic> column(dk);
    for (Eigen::Index e = 0; e < de; ++e) {
        Eigen::Index base = 0;
        for (std::size_t p = 0; p < env_shift.size(); ++p)
            if ((e >> p) & 1) base |= Eigen::Index(1) << env_shift[p];
        for (Eigen::Index r = 0; r < dk; ++r) {
            Eigen::Index k = base;
            for (int p = 0; p < m; ++p)
                if ((r >> (m - 1 - p)) & 1) k |= Eigen::Index(1) << keep_shift[p];
            column(r) = s.amplitude(k);
        }
        rho.noalias() += column * column.adjoint();
    }
    return DensityMatrix<Scalar>(keep, std::move(rho));
}

// <t| rho |t> for a pure target state on the same register.
template <typename Scalar>
Scalar fidelity(const DensityMatrix<Scalar>& rho,
                const StateVector<Scalar>& target) {
    if (rho.num_qubits() != target.num_qubits())
        throw DimensionMismatch("fidelity: register sizes differ");
    const auto t = rho.labels() == target.labels()
                       ? target.amplitudes()
                       : reordered(target, rho.labels()).amplitudes();
    return (t.adjoint() * rho.entries() * t)(0, 0).real();
}

// |<t|s>|^2 for two pure states.
template <typename Scalar>
Scalar fidelity(const StateVector<Scalar>& s, const StateVector<Scalar>& target) {
    const auto ip = inner_product(target, s);
    return std::norm(ip);
}

// (1/2) * sum |eigenvalues(rho - sigma)|.
template <typename Scalar>
Scalar trace_distance(const DensityMatrix<Scalar>& rho,
                      const DensityMatrix<Scalar>& sigma) {
    if (rho.labels() != sigma.labels())
        throw DimensionMismatch("trace_distance: registers differ");
    using Matrix = typename DensityMatrix<Scalar>::Matrix;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries() -
                                                 sigma.entries());
    return solver.eigenvalues().cwiseAbs().sum() / Scalar(2);
}

} // namespace bcqt
