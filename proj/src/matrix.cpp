#include "swcalc/matrix.hpp"

namespace swcalc {

bool is_symmetric(const IntMat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i])
                return false;
    return true;
}

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw SwError("rat_solve: bad dimensions");
    RatMat aug(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw SwError("rat_solve: matrix not square");
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(aug[col], aug[piv]);
        const Rat pv = aug[col][col];
        for (auto& x : aug[col])
            x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0)
                continue;
            const Rat f = aug[r][col];
            for (std::size_t j = col; j <= n; ++j)
                aug[r][j] -= f * aug[col][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug[i][n];
    return x;
}

std::optional<RatVec> rat_solve(const IntMat& a, const IntVec& b) {
    RatMat aq(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        aq[i] = RatVec(a[i].begin(), a[i].end());
    RatVec bq(b.begin(), b.end());
    return rat_solve(aq, bq);
}

std::optional<RatMat> rat_inverse(const IntMat& a) {
    const std::size_t n = a.size();
    RatMat inv(n, RatVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = 1;
        auto col = rat_solve(a, e);
        if (!col)
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i)
            inv[i][j] = (*col)[i];
    }
    return inv;
}

Int bareiss_det(IntMat a) {
    const std::size_t n = a.size();
    if (n == 0)
        throw SwError("bareiss_det: empty matrix");
    for (const auto& row : a)
        if (row.size() != n)
            throw SwError("bareiss_det: matrix not square");
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {
IntMat minor_of(const IntMat& a, std::size_t row, std::size_t col) {
    const std::size_t n = a.size();
    IntMat m(n - 1, IntVec(n - 1));
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == row)
            continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
            if (j == col)
                continue;
            m[mi][mj++] = a[i][j];
        }
        ++mi;
    }
    return m;
}
}  // namespace

IntMat adjugate(const IntMat& a) {
    const std::size_t n = a.size();
    if (n == 1)
        return IntMat{{1}};
    IntMat adj(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = bareiss_det(minor_of(a, i, j));
            if ((i + j) % 2 != 0)
                c = -c;
            adj[j][i] = c;  // transpose of the cofactor matrix
        }
    return adj;
}

std::size_t rational_rank(const IntMat& a) {
    if (a.empty())
        return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    RatMat m(rows);
    for (std::size_t i = 0; i < rows; ++i)
        m[i] = RatVec(a[i].begin(), a[i].end());
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        const Rat pv = m[r][col];
        for (auto& x : m[r])
            x /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0)
                continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw SwError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw SwError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rat(b[i]);
    return s;
}

}  // namespace swcalc
