#pragma once

// Dense calculus for small symmetric matrices: eigendecomposition,
// fractional powers and operator norms. Dimension d is tiny (2 in the
// main use cases), so everything is closed-form or Jacobi sweeps.

#include <cstddef>
#include <span>
#include <vector>

namespace mw {

// Row-major d x d matrix with value semantics.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t d) : d_(d), a_(d * d, 0.0) {}
    SymMatrix(std::size_t d, std::vector<double> entries);

    static SymMatrix identity(std::size_t d);
    static SymMatrix diag(std::vector<double> entries);

    std::size_t dim() const { return d_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    std::span<const double> data() const { return a_; }
    std::span<double> data() { return a_; }

    // Largest |A_ij - A_ji|, used to reject asymmetric input.
    double asymmetry() const;

private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    SymMatrix eigenvectors;           // columns are the eigenvectors, orthogonal
};

// Eigendecomposition of a symmetric matrix: closed form for d <= 2,
// cyclic Jacobi (tol 1e-12, at most 100 sweeps) for d >= 3.
// Throws std::invalid_argument when the asymmetry exceeds the tolerance,
// with the measured asymmetry magnitude in the message.
EigenDecomposition spd_decompose(const SymMatrix& m, double sym_tol = 1e-12);

// A^s = U D(lambda_i^s) U^t from a fixed decomposition. Negative and
// fractional s require positive eigenvalues; violations throw
// std::domain_error (singular weight).
SymMatrix matrix_power(const EigenDecomposition& ed, double s);
SymMatrix matrix_power(const SymMatrix& m, double s);

// Largest eigenvalue of a symmetric positive semi-definite matrix.
double operator_norm(const SymMatrix& m);

// Operator norm (largest singular value) of a general small matrix,
// given row-major entries; used for Jacobians and mixed products.
double operator_norm_general(std::span<const double> a, std::size_t rows, std::size_t cols);

// C = A * B for row-major square matrices of dimension d.
void mat_mul(std::span<const double> a, std::span<const double> b,
             std::span<double> c, std::size_t d);

// Largest eigenvalue of a symmetric 2x2 packed as {a00, a01, a10, a11}.
double sym2_lambda_max(const double* m);

double det2(const double* m);

}  // namespace mw
