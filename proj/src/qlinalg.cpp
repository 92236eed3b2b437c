#include "qlinalg.hpp"

#include <algorithm>

namespace stubborn {

int f_rank(FMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t rr = 0;
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t p = rr;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[rr], m[p]);
        FieldElem inv = m[rr][c].inv();
        for (size_t j = c; j < cols; ++j) m[rr][j] = m[rr][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rr || m[i][c].is_zero()) continue;
            FieldElem f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rr][j];
        }
        ++rr;
        ++rank;
    }
    return rank;
}

FieldElem f_det(FMatrix m) {
    size_t n = m.size();
    FieldElem det(Q(1));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return FieldElem(Q(0));
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        FieldElem inv = m[c][c].inv();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            FieldElem f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

std::optional<std::vector<FieldElem>> f_solve(FMatrix m, std::vector<FieldElem> b) {
    size_t rows = m.size();
    if (rows == 0) return std::vector<FieldElem>{};
    size_t cols = m[0].size();
    std::vector<size_t> pivot_col;
    size_t rr = 0;
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t p = rr;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[rr], m[p]);
        std::swap(b[rr], b[p]);
        FieldElem inv = m[rr][c].inv();
        for (size_t j = c; j < cols; ++j) m[rr][j] = m[rr][j] * inv;
        b[rr] = b[rr] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rr || m[i][c].is_zero()) continue;
            FieldElem f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rr][j];
            b[i] = b[i] - f * b[rr];
        }
        pivot_col.push_back(c);
        ++rr;
    }
    for (size_t i = rr; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<FieldElem> x(cols, FieldElem(Q(0)));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

LDLResult ldl_psd(const QMatrix& Ain) {
    size_t n = Ain.size();
    QMatrix A = Ain;
    LDLResult res;
    res.perm.resize(n);
    for (size_t i = 0; i < n; ++i) res.perm[i] = int(i);
    res.L.assign(n, std::vector<Q>(n, Q(0)));
    for (size_t i = 0; i < n; ++i) res.L[i][i] = 1;
    res.D.assign(n, Q(0));

    for (size_t k = 0; k < n; ++k) {
        // symmetric pivot: largest remaining diagonal entry
        size_t p = k;
        for (size_t i = k + 1; i < n; ++i)
            if (A[i][i] > A[p][p]) p = i;
        if (sgn(A[p][p]) < 0) { res.psd = false; return res; }
        if (sgn(A[p][p]) == 0) {
            // all remaining diagonal entries are <= 0; PSD forces the whole
            // trailing block to vanish
            for (size_t i = k; i < n; ++i)
                for (size_t j = k; j < n; ++j)
                    if (sgn(A[i][j]) != 0) { res.psd = false; return res; }
            res.psd = true;
            return res;
        }
        if (p != k) {
            std::swap(res.perm[p], res.perm[k]);
            for (size_t j = 0; j < n; ++j) std::swap(A[p][j], A[k][j]);
            for (size_t i = 0; i < n; ++i) std::swap(A[i][p], A[i][k]);
            for (size_t j = 0; j < k; ++j) std::swap(res.L[p][j], res.L[k][j]);
        }
        res.D[k] = A[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            Q l = A[i][k] / A[k][k];
            res.L[i][k] = l;
            for (size_t j = k + 1; j <= i; ++j) {
                A[i][j] -= l * A[k][j];
                A[j][i] = A[i][j];
            }
        }
    }
    res.psd = true;
    return res;
}

namespace {

std::vector<Mono> monos_of_degree(int nv, int d) {
    std::vector<Mono> out;
    Mono m(size_t(nv), 0);
    // nv = 3 only
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            m[0] = unsigned(a);
            m[1] = unsigned(b);
            m[2] = unsigned(d - a - b);
            out.push_back(m);
        }
    return out;
}

} // namespace

std::optional<FieldElem> macaulay_res3(const MPoly& f0, const MPoly& f1, const MPoly& f2) {
    int d = f0.total_degree();
    if (d < 1 || f1.total_degree() != d || f2.total_degree() != d)
        fail(ErrCode::precondition, "macaulay_res3: equal positive degrees required");
    int nu = 3 * d - 2;
    std::vector<Mono> cols = monos_of_degree(3, nu);
    size_t N = cols.size();
    std::map<Mono, size_t, GrLexCmp> colindex;
    for (size_t i = 0; i < N; ++i) colindex.emplace(cols[i], i);

    const MPoly* fs[3] = {&f0, &f1, &f2};
    auto reduced_class = [&](const Mono& mu) {
        // first i with var_i-exponent >= d
        for (int i = 0; i < 3; ++i)
            if (int(mu[size_t(i)]) >= d) return i;
        return -1; // cannot happen for nu = 3d-2
    };
    FMatrix M(N, std::vector<FieldElem>(N, FieldElem(Q(0))));
    std::vector<bool> extraneous(N, false);
    for (size_t r = 0; r < N; ++r) {
        const Mono& mu = cols[r];
        int cls = reduced_class(mu);
        if (cls < 0) fail(ErrCode::internal, "macaulay_res3: unclassified monomial");
        int count = 0;
        for (int i = 0; i < 3; ++i)
            if (int(mu[size_t(i)]) >= d) ++count;
        extraneous[r] = count >= 2;
        Mono quot = mu;
        quot[size_t(cls)] -= unsigned(d);
        for (auto& [m, c] : fs[cls]->terms) {
            Mono prod(3);
            for (int i = 0; i < 3; ++i) prod[size_t(i)] = m[size_t(i)] + quot[size_t(i)];
            M[r][colindex.at(prod)] = c;
        }
    }
    FieldElem detM = f_det(M);
    // extraneous minor
    std::vector<size_t> ex;
    for (size_t i = 0; i < N; ++i)
        if (extraneous[i]) ex.push_back(i);
    FMatrix E(ex.size(), std::vector<FieldElem>(ex.size(), FieldElem(Q(0))));
    for (size_t i = 0; i < ex.size(); ++i)
        for (size_t j = 0; j < ex.size(); ++j) E[i][j] = M[ex[i]][ex[j]];
    FieldElem detE = ex.empty() ? FieldElem(Q(1)) : f_det(E);
    if (detE.is_zero()) {
        if (detM.is_zero()) return std::nullopt; // degenerate, caller retries
        fail(ErrCode::internal, "macaulay_res3: extraneous minor vanished unexpectedly");
    }
    return detM / detE;
}

} // namespace stubborn
