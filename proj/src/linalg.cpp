#include "tsent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tsent::linalg {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw std::invalid_argument("matrix dimension must be in [1, " +
                                    std::to_string(kMaxDim) + "], got " + std::to_string(dim));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(std::span<const double> entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < dim_; ++r) {
        for (int c = r; c < dim_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::off_diagonal_norm() const {
    double s = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            if (r != c) s += std::norm((*this)(r, c));
        }
    }
    return std::sqrt(s);
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
    }
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const cplx l = lhs(r, k);
            if (l == cplx{0.0, 0.0}) continue;
            for (int c = 0; c < n; ++c) out(r, c) += l * rhs(k, c);
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix out(lhs.dim());
    for (int r = 0; r < lhs.dim(); ++r)
        for (int c = 0; c < lhs.dim(); ++c) out(r, c) = lhs(r, c) + rhs(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix out(lhs.dim());
    for (int r = 0; r < lhs.dim(); ++r)
        for (int c = 0; c < lhs.dim(); ++c) out(r, c) = lhs(r, c) - rhs(r, c);
    return out;
}

StateVector::StateVector(int dim) {
    check_dim(dim);
    amp_.assign(static_cast<size_t>(dim), cplx{0.0, 0.0});
}

StateVector::StateVector(std::vector<cplx> amplitudes) : amp_(std::move(amplitudes)) {
    check_dim(static_cast<int>(amp_.size()));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& z : amp_) s += std::norm(z);
    return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

cplx inner_product(const StateVector& bra, const StateVector& ket) {
    if (bra.dim() != ket.dim()) throw std::invalid_argument("state dimension mismatch");
    cplx s{0.0, 0.0};
    for (int i = 0; i < bra.dim(); ++i) s += std::conj(bra[i]) * ket[i];
    return s;
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("matrix/state dimension mismatch");
    StateVector out(v.dim());
    for (int r = 0; r < m.dim(); ++r) {
        cplx s{0.0, 0.0};
        for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

void accumulate_outer(ComplexMatrix& m, const StateVector& v, double weight) {
    if (m.dim() != v.dim()) throw std::invalid_argument("matrix/state dimension mismatch");
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) m(r, c) += weight * v[r] * std::conj(v[c]);
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    const int n = m.dim();

    // Symmetrize exactly so rotations act on a strictly Hermitian copy.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r) {
        a(r, r) = std::real(m(r, r));
        for (int c = r + 1; c < n; ++c) {
            const cplx z = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = z;
            a(c, r) = std::conj(z);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-14 * std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (a.off_diagonal_norm() <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx z = a(p, q);
                const double r = std::abs(z);
                if (r == 0.0) continue;

                // Phase twist on column/row q makes the pivot real.
                const cplx d = std::conj(z) / r;
                for (int i = 0; i < n; ++i) {
                    if (i != q) a(i, q) *= d;
                }
                for (int i = 0; i < n; ++i) {
                    if (i != q) a(q, i) *= std::conj(d);
                }
                a(p, q) = r;
                a(q, p) = r;
                for (int i = 0; i < n; ++i) v(i, q) *= d;

                // Real Jacobi rotation zeroing the (p, q) pivot.
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double tau = (aqq - app) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx api = a(p, i);
                    const cplx aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = std::real(a(p, p));
                a(q, q) = std::real(a(q, q));

                for (int i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    if (sweep == kMaxSweeps && a.off_diagonal_norm() > stop)
        throw std::logic_error("hermitian_eigensystem: Jacobi sweeps did not converge");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int lhs, int rhs) { return std::real(a(lhs, lhs)) < std::real(a(rhs, rhs)); });

    EigenSystem es{std::vector<double>(static_cast<size_t>(n)), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        es.values[static_cast<size_t>(k)] = std::real(a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]));
        for (int i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

ComplexMatrix propagator(const ComplexMatrix& h, double t, double hbar) {
    if (!(hbar > 0.0)) throw std::invalid_argument("propagator: hbar must be positive");
    if (!h.is_hermitian()) throw std::invalid_argument("propagator: Hamiltonian is not Hermitian");

    const EigenSystem es = hermitian_eigensystem(h);
    const int n = h.dim();
    std::vector<cplx> phase(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = -es.values[static_cast<size_t>(k)] * t / hbar;
        phase[static_cast<size_t>(k)] = cplx{std::cos(angle), std::sin(angle)};
    }

    ComplexMatrix u(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                s += es.vectors(r, k) * phase[static_cast<size_t>(k)] * std::conj(es.vectors(c, k));
            u(r, c) = s;
        }
    }
    return u;
}

void validate_density_matrix(const ComplexMatrix& rho) {
    constexpr double tol = 1e-10;
    if (!rho.is_hermitian(tol)) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > tol)
        throw std::invalid_argument("density matrix trace is not 1");
    const std::vector<double> eigs = hermitian_eigenvalues(rho);
    if (eigs.front() < -tol)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("partial_trace_b: expected a 4x4 density matrix");
    validate_density_matrix(rho);
    ComplexMatrix out(2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

double purity(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    double s = 0.0;
    for (int r = 0; r < rho.dim(); ++r)
        for (int c = 0; c < rho.dim(); ++c) s += std::real(rho(r, c) * rho(c, r));
    return s;
}

}  // namespace tsent::linalg
