// SPDX-License-Identifier: Apache-2.0
#include "entpair/decompositions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "entpair/errors.hpp"

namespace entpair {

namespace {

// Hermitian product M = B B†, built so that M(j,i) is the exact conjugate of
// M(i,j) (same summation order, conjugated term by term).
ComplexMatrix gram_right(const ComplexMatrix& b) {
    const std::size_t n = b.rows();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double diag = 0.0;
        for (std::size_t k = 0; k < n; ++k) diag += std::norm(b(i, k));
        m(i, i) = diag;
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += b(i, k) * std::conj(b(j, k));
            m(i, j) = s;
            m(j, i) = std::conj(s);
        }
    }
    return m;
}

struct Cluster {
    std::size_t begin;  // column range [begin, end) in the sorted eigenbasis
    std::size_t end;
};

// Eigenvalues arrive descending; group near-equal ones, snap the noise floor
// to exact zero, and return the nonnegative square roots.
std::vector<double> snapped_singular_values(std::vector<double>& lambda) {
    const double lmax = lambda.empty() ? 0.0 : std::max(lambda.front(), 0.0);
    std::vector<double> sigma(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        double l = std::max(lambda[i], 0.0);
        if (l <= kEigenvalueFloor * lmax) l = 0.0;
        lambda[i] = l;
        sigma[i] = std::sqrt(l);
    }
    return sigma;
}

std::vector<Cluster> eigenvalue_clusters(const std::vector<double>& lambda) {
    std::vector<Cluster> clusters;
    const double lmax = lambda.empty() ? 0.0 : lambda.front();
    const double width = kDegeneracyTol * std::max(lmax, 0.0);
    std::size_t i = 0;
    while (i < lambda.size()) {
        std::size_t j = i + 1;
        while (j < lambda.size() && lambda[i] - lambda[j] <= width) ++j;
        clusters.push_back({i, j});
        i = j;
    }
    return clusters;
}

ComplexMatrix column_block(const ComplexMatrix& m, std::size_t begin, std::size_t end) {
    ComplexMatrix out(m.rows(), end - begin);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = m(r, c);
    return out;
}

ComplexVector column_of(const ComplexMatrix& m, std::size_t c) {
    ComplexVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

void set_column(ComplexMatrix& m, std::size_t c, const ComplexVector& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = v[r];
}

double certify(const ComplexMatrix& original, const ComplexMatrix& u,
               const ComplexMatrix& middle, double fact_tol, const char* name,
               double* unitarity_out) {
    const ComplexMatrix rebuilt = mat_mul(mat_mul(u, middle), transpose(u));
    const double residual = frobenius_norm(original - rebuilt);
    const ComplexMatrix gram = mat_mul(adjoint(u), u);
    const double unitarity =
        frobenius_norm(gram - ComplexMatrix::identity(u.cols()));
    if (residual > fact_tol || unitarity > fact_tol)
        throw CertificationError(std::string(name) + ": certification failed (residual " +
                                 std::to_string(residual) + ", unitarity defect " +
                                 std::to_string(unitarity) + ")");
    *unitarity_out = unitarity;
    return residual;
}

// Takagi factor of the m×m Gram block S restricted to one degenerate cluster.
// There S is complex symmetric with S†S = σ²I, so its real and imaginary
// parts commute: diagonalize them simultaneously with real rotations, then
// split each diagonal phase between U and Uᵀ.
ComplexMatrix cluster_takagi_factor(const ComplexMatrix& s, double sigma) {
    const std::size_t m = s.rows();
    ComplexMatrix x(m, m), y(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            x(i, j) = Complex(0.5 * (s(i, j).real() + s(j, i).real()), 0.0);
            y(i, j) = Complex(0.5 * (s(i, j).imag() + s(j, i).imag()), 0.0);
        }

    HermitianEig ex = hermitian_eig(x);
    ComplexMatrix q = ex.eigenvectors;  // real orthogonal

    // Within each eigenvalue cluster of X, rotate to diagonalize Y as well.
    const double width = kDegeneracyTol * std::max(sigma, 1e-300);
    std::size_t i = 0;
    while (i < m) {
        std::size_t j = i + 1;
        while (j < m && ex.eigenvalues[i] - ex.eigenvalues[j] <= width) ++j;
        if (j - i > 1) {
            ComplexMatrix qc = column_block(q, i, j);
            ComplexMatrix yc = mat_mul(adjoint(qc), mat_mul(y, qc));
            HermitianEig ey = hermitian_eig(yc);
            ComplexMatrix rotated = mat_mul(qc, ey.eigenvectors);
            for (std::size_t c = i; c < j; ++c)
                for (std::size_t r = 0; r < m; ++r) q(r, c) = rotated(r, c - i);
        }
        i = j;
    }

    const ComplexMatrix d = mat_mul(transpose(q), mat_mul(s, q));
    ComplexMatrix w = q;
    for (std::size_t c = 0; c < m; ++c) {
        const double theta = std::arg(d(c, c));
        const Complex half_phase = std::polar(1.0, 0.5 * theta);
        for (std::size_t r = 0; r < m; ++r) w(r, c) *= half_phase;
    }
    return w;
}

}  // namespace

TakagiResult takagi(const ComplexMatrix& b, double fact_tol) {
    if (b.rows() != b.cols()) throw ContractViolation("takagi: matrix must be square");
    if (!is_finite(b)) throw ValidationError("takagi: matrix has non-finite entries");
    const std::size_t n = b.rows();
    const double bnorm = frobenius_norm(b);
    if (frobenius_norm(b - transpose(b)) > fact_tol * std::max(bnorm, 1e-300))
        throw ValidationError("takagi: input is not complex symmetric within tolerance");

    HermitianEig eig = hermitian_eig(gram_right(b));
    std::vector<double> sigma = snapped_singular_values(eig.eigenvalues);

    ComplexMatrix u(n, n);
    for (const Cluster& cluster : eigenvalue_clusters(eig.eigenvalues)) {
        const ComplexMatrix vc = column_block(eig.eigenvectors, cluster.begin, cluster.end);
        if (sigma[cluster.begin] == 0.0) {
            // Null directions: any orthonormal basis works, no phase to fix.
            for (std::size_t c = cluster.begin; c < cluster.end; ++c)
                set_column(u, c, column_of(eig.eigenvectors, c));
            continue;
        }
        const ComplexMatrix s = mat_mul(adjoint(vc), mat_mul(b, conjugate(vc)));
        const ComplexMatrix w = cluster_takagi_factor(s, sigma[cluster.begin]);
        const ComplexMatrix cols = mat_mul(vc, w);
        for (std::size_t c = cluster.begin; c < cluster.end; ++c)
            for (std::size_t r = 0; r < n; ++r) u(r, c) = cols(r, c - cluster.begin);
    }

    ComplexMatrix middle(n, n);
    for (std::size_t i = 0; i < n; ++i) middle(i, i) = sigma[i];

    TakagiResult out;
    out.residual = certify(b, u, middle, fact_tol, "takagi", &out.unitarity_defect);
    out.u = std::move(u);
    out.sigma = std::move(sigma);
    return out;
}

ComplexMatrix youla_block_matrix(const std::vector<double>& z, std::size_t n) {
    if (2 * z.size() > n) throw ContractViolation("youla_block_matrix: too many blocks");
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < z.size(); ++k) {
        m(2 * k, 2 * k + 1) = z[k];
        m(2 * k + 1, 2 * k) = -z[k];
    }
    return m;
}

YoulaResult youla(const ComplexMatrix& a, double fact_tol) {
    if (a.rows() != a.cols()) throw ContractViolation("youla: matrix must be square");
    if (!is_finite(a)) throw ValidationError("youla: matrix has non-finite entries");
    const std::size_t n = a.rows();
    const double anorm = frobenius_norm(a);
    if (frobenius_norm(a + transpose(a)) > fact_tol * std::max(anorm, 1e-300))
        throw ValidationError("youla: input is not antisymmetric within tolerance");

    HermitianEig eig = hermitian_eig(gram_right(a));
    std::vector<double> sigma = snapped_singular_values(eig.eigenvalues);

    std::vector<std::pair<double, std::array<ComplexVector, 2>>> blocks;
    std::vector<ComplexVector> null_columns;

    for (const Cluster& cluster : eigenvalue_clusters(eig.eigenvalues)) {
        if (sigma[cluster.begin] == 0.0) {
            for (std::size_t c = cluster.begin; c < cluster.end; ++c)
                null_columns.push_back(column_of(eig.eigenvectors, c));
            continue;
        }

        std::vector<ComplexVector> basis;
        for (std::size_t c = cluster.begin; c < cluster.end; ++c)
            basis.push_back(column_of(eig.eigenvectors, c));

        std::vector<ComplexVector> accepted;  // columns already emitted for this cluster
        while (!basis.empty()) {
            if (basis.size() == 1)
                throw InternalConsistencyError(
                    "youla: nonzero singular value with odd multiplicity");

            const ComplexVector v = basis.front();
            ComplexVector v_conj(n);
            for (std::size_t r = 0; r < n; ++r) v_conj[r] = std::conj(v[r]);
            ComplexVector w = mat_vec(a, v_conj);
            const double z = vector_norm(w);
            for (auto& e : w) e /= z;
            // w ⊥ v holds because the antisymmetric quadratic form vanishes;
            // re-orthogonalize against everything emitted so far anyway.
            for (int pass = 0; pass < 2; ++pass) {
                Complex overlap = inner(v, w);
                for (std::size_t r = 0; r < n; ++r) w[r] -= overlap * v[r];
                for (const auto& col : accepted) {
                    overlap = inner(col, w);
                    for (std::size_t r = 0; r < n; ++r) w[r] -= overlap * col[r];
                }
            }
            const double wn = vector_norm(w);
            for (auto& e : w) e /= wn;

            // Columns (v, −w) give the block [[0, z], [−z, 0]]; an already
            // canonical input then reproduces the identity transformation.
            ComplexVector minus_w(n);
            for (std::size_t r = 0; r < n; ++r) minus_w[r] = -w[r];
            blocks.push_back({z, {v, minus_w}});
            accepted.push_back(v);
            accepted.push_back(w);

            // Deflate span{v, w} from the rest of the cluster.
            std::vector<ComplexVector> candidates(basis.begin() + 1, basis.end());
            for (auto& q : candidates) {
                const Complex overlap = inner(w, q);
                for (std::size_t r = 0; r < n; ++r) q[r] -= overlap * w[r];
            }
            std::vector<ComplexVector> survivors;
            const std::size_t want = basis.size() - 2;
            for (std::size_t pick = 0; pick < want; ++pick) {
                std::size_t best = 0;
                double best_norm = -1.0;
                for (std::size_t c = 0; c < candidates.size(); ++c) {
                    const double nn = vector_norm(candidates[c]);
                    if (nn > best_norm) {
                        best_norm = nn;
                        best = c;
                    }
                }
                if (best_norm < 1e-6)
                    throw InternalConsistencyError(
                        "youla: cluster deflation lost rank unexpectedly");
                ComplexVector q = candidates[best];
                for (auto& e : q) e /= best_norm;
                candidates.erase(candidates.begin() + best);
                for (auto& rest : candidates) {
                    const Complex overlap = inner(q, rest);
                    for (std::size_t r = 0; r < n; ++r) rest[r] -= overlap * q[r];
                }
                survivors.push_back(std::move(q));
            }
            for (const auto& leftover : candidates)
                if (vector_norm(leftover) > 1e-6)
                    throw InternalConsistencyError(
                        "youla: nonzero singular value with odd multiplicity");
            basis = std::move(survivors);
        }
    }

    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const auto& l, const auto& r) { return l.first > r.first; });

    YoulaResult out;
    out.z.reserve(blocks.size());
    out.u = ComplexMatrix(n, n);
    std::size_t col = 0;
    for (const auto& [z, pair] : blocks) {
        out.z.push_back(z);
        set_column(out.u, col++, pair[0]);
        set_column(out.u, col++, pair[1]);
    }
    for (const auto& nc : null_columns) set_column(out.u, col++, nc);
    out.null_dim = n - 2 * out.z.size();

    out.residual = certify(a, out.u, youla_block_matrix(out.z, n), fact_tol, "youla",
                           &out.unitarity_defect);
    return out;
}

std::size_t canonical_rank(const std::vector<double>& values, double rank_tol) {
    if (values.empty()) return 0;
    const double largest = values.front();
    if (largest <= 0.0) return 0;
    std::size_t count = 0;
    for (double v : values)
        if (v > rank_tol * largest) ++count;
    return count;
}

}  // namespace entpair
