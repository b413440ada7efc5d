#pragma once

#include <complex>
#include <span>
#include <vector>

// Minimal dense complex linear algebra for dimensions <= 8. This is the
// brute-force reference path: every closed-form eigenvalue formula in the
// library is cross-checked against an explicit eigendecomposition done here.
namespace tsent::linalg {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;

/// Dense row-major complex matrix, dimension 1..8.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diag(std::span<const double> entries);

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_hermitian(double tol = 1e-12) const;
    double frobenius_norm() const;
    double off_diagonal_norm() const;
    cplx trace() const;
    ComplexMatrix adjoint() const;

private:
    int dim_;
    std::vector<cplx> a_;
};

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator+(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Complex amplitude vector, dimension 1..8.
class StateVector {
public:
    explicit StateVector(int dim);
    explicit StateVector(std::vector<cplx> amplitudes);

    int dim() const { return static_cast<int>(amp_.size()); }
    cplx& operator[](int i) { return amp_[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return amp_[static_cast<size_t>(i)]; }

    double norm() const;
    bool is_normalized(double tol = 1e-12) const;

private:
    std::vector<cplx> amp_;
};

/// <bra|ket> with the bra conjugated.
cplx inner_product(const StateVector& bra, const StateVector& ket);

StateVector apply(const ComplexMatrix& m, const StateVector& v);

/// m += weight * |v><v|
void accumulate_outer(ComplexMatrix& m, const StateVector& v, double weight);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops below
/// 1e-14 * max(1, ||M||_F). Throws std::invalid_argument for
/// non-Hermitian input.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// exp(-i H t / hbar) via spectral decomposition of Hermitian H.
ComplexMatrix propagator(const ComplexMatrix& h, double t, double hbar = 1.0);

/// Throws std::invalid_argument unless rho is Hermitian, positive
/// semidefinite within 1e-10 and has unit trace within 1e-10.
void validate_density_matrix(const ComplexMatrix& rho);

/// Trace over the second qubit of a two-qubit density matrix in the
/// basis {|00>, |01>, |10>, |11>}.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho);

/// Tr(rho^2), in [0, 1] for a valid density matrix.
double purity(const ComplexMatrix& rho);

}  // namespace tsent::linalg
