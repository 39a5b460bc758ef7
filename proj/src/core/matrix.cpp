#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace airrev {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw_argument("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double v) { return std::isfinite(v); });
}

Matrix SymmetricMatrix::to_dense() const {
    Matrix m(order_, order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m(i, j) = m(j, i) = at(i, j);
    return m;
}

bool SymmetricMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double v) { return std::isfinite(v); });
}

std::vector<double> mean_vector(const Matrix& d) {
    if (d.rows() == 0 || d.cols() == 0) throw_argument("mean_vector: empty matrix");
    std::vector<double> mean(d.cols(), 0.0);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            mean[j] += d(i, j);
    for (double& m : mean) m /= static_cast<double>(d.rows());
    return mean;
}

SymmetricMatrix scatter_matrix(const Matrix& d) {
    if (d.rows() < 2) throw_argument("scatter_matrix: need at least 2 rows");
    const std::vector<double> mean = mean_vector(d);
    const std::size_t n = d.cols();
    SymmetricMatrix s(n);
    std::vector<double> dev(n);
    for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t j = 0; j < n; ++j) dev[j] = d(r, j) - mean[j];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                s.at(i, j) += dev[i] * dev[j];
    }
    return s;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (double v : a.data()) sum += v * v;
    return std::sqrt(sum);
}

// Largest-magnitude component positive; earliest index decides ties.
void normalize_column_signs(Matrix& vectors) {
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        std::size_t pivot = 0;
        double best = std::abs(vectors(0, j));
        for (std::size_t i = 1; i < vectors.rows(); ++i) {
            const double mag = std::abs(vectors(i, j));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (vectors(pivot, j) < 0.0)
            for (std::size_t i = 0; i < vectors.rows(); ++i) vectors(i, j) = -vectors(i, j);
    }
}

}  // namespace

EigenDecomposition sym_eigen(const SymmetricMatrix& s) {
    if (s.order() == 0) throw_argument("sym_eigen: empty matrix");
    if (!s.all_finite()) throw_argument("sym_eigen: non-finite input");

    const std::size_t n = s.order();
    Matrix a = s.to_dense();
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double tol = 1e-12 * frobenius_norm(a);
    constexpr int kMaxSweeps = 100;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = a(p, i) = c * aip - sn * aiq;
                    a(i, q) = a(q, i) = sn * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = c * vip - sn * viq;
                    v(i, q) = sn * vip + c * viq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > tol) {
        std::ostringstream msg;
        msg << "sym_eigen: no convergence after " << kMaxSweeps
            << " sweeps, off-diagonal residual " << off_diagonal_norm(a);
        throw_numeric(msg.str());
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    EigenDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        dec.eigenvalues[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) dec.eigenvectors(i, j) = v(i, order[j]);
    }
    normalize_column_signs(dec.eigenvectors);
    return dec;
}

namespace {

// Reflector v for the tail x = a[row..m)[col]; returns the new diagonal value.
// H = I - 2 v v^T / (v.v) maps x onto alpha*e1.
struct Reflector {
    std::vector<double> v;
    double norm2 = 0.0;
};

void apply_reflector(const Reflector& h, std::span<double> x) {
    if (h.norm2 == 0.0) return;
    double dot = 0.0;
    for (std::size_t i = 0; i < h.v.size(); ++i) dot += h.v[i] * x[i];
    const double f = 2.0 * dot / h.norm2;
    for (std::size_t i = 0; i < h.v.size(); ++i) x[i] -= f * h.v[i];
}

}  // namespace

LeastSquaresSolution solve_least_squares(const Matrix& x, std::span<const double> y) {
    const std::size_t m = x.rows();
    const std::size_t q = x.cols();
    if (m < 1 || q < 1) throw_argument("solve_least_squares: empty system");
    if (y.size() != m) throw_argument("solve_least_squares: row count mismatch");
    if (!x.all_finite()) throw_argument("solve_least_squares: non-finite design matrix");
    for (double v : y)
        if (!std::isfinite(v)) throw_argument("solve_least_squares: non-finite target");

    Matrix a = x;
    std::vector<double> rhs(y.begin(), y.end());
    std::vector<std::size_t> piv(q);
    std::iota(piv.begin(), piv.end(), 0);

    const std::size_t steps = std::min(m, q);
    std::vector<double> rdiag(steps, 0.0);
    std::vector<double> col(m);

    for (std::size_t k = 0; k < steps; ++k) {
        // Pivot: remaining column with the largest tail norm (lowest index wins ties).
        std::size_t jbest = k;
        double best = -1.0;
        for (std::size_t j = k; j < q; ++j) {
            double norm2 = 0.0;
            for (std::size_t i = k; i < m; ++i) norm2 += a(i, j) * a(i, j);
            if (norm2 > best) {
                best = norm2;
                jbest = j;
            }
        }
        if (jbest != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, jbest));
            std::swap(piv[k], piv[jbest]);
        }

        const std::size_t tail = m - k;
        double alpha = std::sqrt(best);
        if (alpha == 0.0) {
            rdiag[k] = 0.0;
            continue;
        }
        if (a(k, k) > 0.0) alpha = -alpha;

        Reflector h;
        h.v.resize(tail);
        for (std::size_t i = 0; i < tail; ++i) h.v[i] = a(k + i, k);
        h.v[0] -= alpha;
        for (double hv : h.v) h.norm2 += hv * hv;

        a(k, k) = alpha;
        for (std::size_t i = 1; i < tail; ++i) a(k + i, k) = 0.0;
        for (std::size_t j = k + 1; j < q; ++j) {
            for (std::size_t i = 0; i < tail; ++i) col[i] = a(k + i, j);
            apply_reflector(h, {col.data(), tail});
            for (std::size_t i = 0; i < tail; ++i) a(k + i, j) = col[i];
        }
        for (std::size_t i = 0; i < tail; ++i) col[i] = rhs[k + i];
        apply_reflector(h, {col.data(), tail});
        for (std::size_t i = 0; i < tail; ++i) rhs[k + i] = col[i];

        rdiag[k] = alpha;
    }

    double max_pivot = 0.0;
    for (double r : rdiag) max_pivot = std::max(max_pivot, std::abs(r));
    const double threshold = 1e-10 * max_pivot;
    std::size_t rank = 0;
    while (rank < steps && std::abs(rdiag[rank]) > threshold && max_pivot > 0.0) ++rank;

    LeastSquaresSolution sol;
    sol.rank = rank;
    sol.coefficients.assign(q, 0.0);
    if (rank == 0) return sol;

    std::vector<double> beta_perm(q, 0.0);
    if (rank == q) {
        for (std::size_t ii = q; ii-- > 0;) {
            double acc = rhs[ii];
            for (std::size_t j = ii + 1; j < q; ++j) acc -= a(ii, j) * beta_perm[j];
            beta_perm[ii] = acc / a(ii, ii);
        }
    } else {
        // Complete orthogonal decomposition: QR-factor R1^T (q x rank) so the
        // minimal-norm solution falls out of a triangular solve.
        Matrix b(q, rank);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < q; ++j)
                b(j, i) = (j >= i) ? a(i, j) : 0.0;

        std::vector<Reflector> zs(rank);
        std::vector<double> work(q);
        for (std::size_t k = 0; k < rank; ++k) {
            const std::size_t tail = q - k;
            double norm2 = 0.0;
            for (std::size_t i = k; i < q; ++i) norm2 += b(i, k) * b(i, k);
            double alpha = std::sqrt(norm2);
            if (alpha == 0.0) throw_numeric("solve_least_squares: degenerate trapezoid factor");
            if (b(k, k) > 0.0) alpha = -alpha;

            Reflector& h = zs[k];
            h.v.resize(tail);
            for (std::size_t i = 0; i < tail; ++i) h.v[i] = b(k + i, k);
            h.v[0] -= alpha;
            for (double hv : h.v) h.norm2 += hv * hv;

            b(k, k) = alpha;
            for (std::size_t i = 1; i < tail; ++i) b(k + i, k) = 0.0;
            for (std::size_t j = k + 1; j < rank; ++j) {
                for (std::size_t i = 0; i < tail; ++i) work[i] = b(k + i, j);
                apply_reflector(h, {work.data(), tail});
                for (std::size_t i = 0; i < tail; ++i) b(k + i, j) = work[i];
            }
        }

        // R1 = [U^T 0] Z^T with U = b's top rank x rank upper triangle.
        // Forward-substitute U^T w1 = rhs[0..rank), zero-pad, map back through Z.
        std::vector<double> w(q, 0.0);
        for (std::size_t i = 0; i < rank; ++i) {
            double acc = rhs[i];
            for (std::size_t j = 0; j < i; ++j) acc -= b(j, i) * w[j];
            w[i] = acc / b(i, i);
        }
        for (std::size_t k = rank; k-- > 0;) {
            apply_reflector(zs[k], {w.data() + k, q - k});
        }
        beta_perm = std::move(w);
    }

    for (std::size_t j = 0; j < q; ++j) sol.coefficients[piv[j]] = beta_perm[j];
    return sol;
}

}  // namespace airrev
