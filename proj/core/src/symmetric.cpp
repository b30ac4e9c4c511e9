#include "mweights/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mw {

SymMatrix::SymMatrix(std::size_t d, std::vector<double> entries) : d_(d), a_(std::move(entries)) {
    if (a_.size() != d * d) throw std::invalid_argument("SymMatrix: entry count does not match dimension");
}

SymMatrix SymMatrix::identity(std::size_t d) {
    SymMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

SymMatrix SymMatrix::diag(std::vector<double> entries) {
    SymMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

double SymMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

namespace {

double frobenius(const SymMatrix& m) {
    double s = 0.0;
    for (double v : m.data()) s += v * v;
    return std::sqrt(s);
}

void sort_descending(EigenDecomposition& ed) {
    const std::size_t d = ed.eigenvalues.size();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ed.eigenvalues[a] > ed.eigenvalues[b]; });
    std::vector<double> ev(d);
    SymMatrix u(d);
    for (std::size_t k = 0; k < d; ++k) {
        ev[k] = ed.eigenvalues[order[k]];
        for (std::size_t i = 0; i < d; ++i) u(i, k) = ed.eigenvectors(i, order[k]);
    }
    ed.eigenvalues = std::move(ev);
    ed.eigenvectors = std::move(u);
}

EigenDecomposition decompose2(const SymMatrix& m) {
    const double a = m(0, 0), b = 0.5 * (m(0, 1) + m(1, 0)), c = m(1, 1);
    EigenDecomposition ed;
    ed.eigenvectors = SymMatrix::identity(2);
    if (b == 0.0) {
        ed.eigenvalues = {a, c};
        sort_descending(ed);
        return ed;
    }
    const double half_tr = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), b);
    const double l1 = half_tr + disc;
    const double l2 = half_tr - disc;
    // Eigenvector for l1; pick the better-conditioned expression.
    double vx, vy;
    if (std::abs(l1 - c) > std::abs(l1 - a)) {
        vx = l1 - c;
        vy = b;
    } else {
        vx = b;
        vy = l1 - a;
    }
    const double nrm = std::hypot(vx, vy);
    vx /= nrm;
    vy /= nrm;
    ed.eigenvalues = {l1, l2};
    ed.eigenvectors(0, 0) = vx;
    ed.eigenvectors(1, 0) = vy;
    ed.eigenvectors(0, 1) = -vy;
    ed.eigenvectors(1, 1) = vx;
    return ed;
}

EigenDecomposition decompose_jacobi(const SymMatrix& m) {
    const std::size_t d = m.dim();
    SymMatrix a = m;
    // Symmetrize before sweeping so off-diagonal pairs agree exactly.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = a(j, i) = v;
        }
    SymMatrix u = SymMatrix::identity(d);
    const double scale = std::max(frobenius(a), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(2.0 * off) <= 1e-12 * scale) break;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / a(p, q);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = cs * akp - sn * akq;
                    a(k, q) = sn * akp + cs * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = cs * apk - sn * aqk;
                    a(q, k) = sn * apk + cs * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double ukp = u(k, p), ukq = u(k, q);
                    u(k, p) = cs * ukp - sn * ukq;
                    u(k, q) = sn * ukp + cs * ukq;
                }
            }
        }
    }
    EigenDecomposition ed;
    ed.eigenvalues.resize(d);
    for (std::size_t i = 0; i < d; ++i) ed.eigenvalues[i] = a(i, i);
    ed.eigenvectors = std::move(u);
    sort_descending(ed);
    return ed;
}

}  // namespace

EigenDecomposition spd_decompose(const SymMatrix& m, double sym_tol) {
    const double scale = std::max(frobenius(m), 1e-300);
    const double asym = m.asymmetry();
    if (asym > sym_tol * scale) {
        std::ostringstream os;
        os << "spd_decompose: input is not symmetric, |A - A^t|_max = " << asym
           << " (relative " << asym / scale << ")";
        throw std::invalid_argument(os.str());
    }
    if (m.dim() == 0) throw std::invalid_argument("spd_decompose: empty matrix");
    if (m.dim() == 1) {
        EigenDecomposition ed;
        ed.eigenvalues = {m(0, 0)};
        ed.eigenvectors = SymMatrix::identity(1);
        return ed;
    }
    if (m.dim() == 2) return decompose2(m);
    return decompose_jacobi(m);
}

SymMatrix matrix_power(const EigenDecomposition& ed, double s) {
    const std::size_t d = ed.eigenvalues.size();
    const bool needs_positive = (s < 0.0) || (s != std::floor(s));
    std::vector<double> ls(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double l = ed.eigenvalues[i];
        if (needs_positive && l <= 0.0) {
            std::ostringstream os;
            os << "matrix_power: eigenvalue " << l << " is not positive; power " << s
               << " undefined (singular weight)";
            throw std::domain_error(os.str());
        }
        ls[i] = std::pow(l, s);
    }
    SymMatrix out(d);
    const SymMatrix& u = ed.eigenvectors;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < d; ++k) v += u(i, k) * ls[k] * u(j, k);
            out(i, j) = out(j, i) = v;
        }
    return out;
}

SymMatrix matrix_power(const SymMatrix& m, double s) { return matrix_power(spd_decompose(m), s); }

double operator_norm(const SymMatrix& m) {
    const auto ed = spd_decompose(m);
    return ed.eigenvalues.front();
}

double operator_norm_general(std::span<const double> a, std::size_t rows, std::size_t cols) {
    SymMatrix ata(cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i; j < cols; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < rows; ++k) v += a[k * cols + i] * a[k * cols + j];
            ata(i, j) = ata(j, i) = v;
        }
    const auto ed = spd_decompose(ata);
    return std::sqrt(std::max(ed.eigenvalues.front(), 0.0));
}

void mat_mul(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < d; ++k) v += a[i * d + k] * b[k * d + j];
            c[i * d + j] = v;
        }
}

double sym2_lambda_max(const double* m) {
    const double a = m[0], b = 0.5 * (m[1] + m[2]), c = m[3];
    const double half_tr = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), b);
    return half_tr + disc;
}

double det2(const double* m) { return m[0] * m[3] - m[1] * m[2]; }

}  // namespace mw
