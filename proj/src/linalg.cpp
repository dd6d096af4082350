#include "greenseq/linalg.hpp"

#include "greenseq/errors.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace greenseq {
namespace {

using Wide = __int128;

Int narrow(Wide v, const char* what) {
    if (v > Wide(std::numeric_limits<Int>::max()) || v < Wide(std::numeric_limits<Int>::min()))
        throw InternalInconsistencyError(std::string(what) + ": integer overflow");
    return static_cast<Int>(v);
}

std::vector<std::vector<Wide>> widen(const IntMatrix& a) {
    std::vector<std::vector<Wide>> m(a.rows(), std::vector<Wide>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j);
    return m;
}

// Divisions are exact: every intermediate entry is a minor of the input.
Wide bareiss(std::vector<std::vector<Wide>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Wide prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

Int exact_determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw InternalInconsistencyError("determinant of a non-square matrix");
    return narrow(bareiss(widen(a)), "determinant");
}

IntMatrix adjugate(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw InternalInconsistencyError("adjugate of a non-square matrix");
    const Eigen::Index n = a.rows();
    IntMatrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            // adj(i,j) = (-1)^{i+j} * det(a with row j and column i removed)
            Eigen::Index r = 0;
            for (Eigen::Index ii = 0; ii < n; ++ii) {
                if (ii == j) continue;
                Eigen::Index c = 0;
                for (Eigen::Index jj = 0; jj < n; ++jj) {
                    if (jj == i) continue;
                    minor(r, c++) = a(ii, jj);
                }
                ++r;
            }
            const Int d = exact_determinant(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    }
    return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    const Int det = exact_determinant(a);
    if (det != 1 && det != -1)
        throw InternalInconsistencyError("matrix is not unimodular");
    return (adjugate(a) * det).eval();
}

std::vector<Int> leading_principal_minors(const IntMatrix& a) {
    std::vector<Int> out;
    out.reserve(a.rows());
    for (Eigen::Index k = 1; k <= a.rows(); ++k)
        out.push_back(exact_determinant(a.topLeftCorner(k, k)));
    return out;
}

Int principal_minor(const IntMatrix& a, const std::vector<int>& rows) {
    const Eigen::Index k = static_cast<Eigen::Index>(rows.size());
    IntMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            sub(i, j) = a(rows[i], rows[j]);
    return exact_determinant(sub);
}

bool lex_less(const IntVector& a, const IntVector& b) {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool is_strictly_positive(const IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] <= 0) return false;
    return true;
}

bool is_nonnegative(const IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] < 0) return false;
    return true;
}

IntVector primitive_vector(IntVector v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v[i]);
    if (g == 0) throw InternalInconsistencyError("primitive_vector of the zero vector");
    v /= g;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] < 0) v = -v;
            break;
        }
    }
    return v;
}

} // namespace greenseq
