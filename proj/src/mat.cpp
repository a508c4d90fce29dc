#include "homkit/mat.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace homkit {

uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    if (s >= p) s -= p;
    return uint32_t(s);
}

uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
}

uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t(uint64_t(a) * b % p);
}

uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    uint32_t base = a % p;
    while (e) {
        if (e & 1) r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
    return fp_pow(a, uint64_t(p) - 2, p);
}

uint32_t fp_from_int(long long v, uint32_t p) {
    long long m = v % (long long)p;
    if (m < 0) m += p;
    return uint32_t(m);
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Mat Mat::identity(std::size_t n, uint32_t prime) {
    Mat m(n, n, prime);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % prime;
    return m;
}

Mat mat_from_rows(const std::vector<std::vector<uint32_t>>& rows, std::size_t cols, uint32_t p) {
    Mat m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("mat_from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % p;
    }
    return m;
}

static void check_same_shape(const Mat& x, const Mat& y, const char* who) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw std::invalid_argument(std::string(who) + ": shape or modulus mismatch");
}

Mat add(const Mat& x, const Mat& y) {
    check_same_shape(x, y, "add");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp_add(r.a[i], y.a[i], r.p);
    return r;
}

Mat sub(const Mat& x, const Mat& y) {
    check_same_shape(x, y, "sub");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp_sub(r.a[i], y.a[i], r.p);
    return r;
}

Mat neg(const Mat& x) {
    Mat r = x;
    for (auto& v : r.a) v = fp_neg(v, r.p);
    return r;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("mul: shape or modulus mismatch");
    Mat r(x.rows, y.cols, x.p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            uint32_t xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                uint32_t yv = y.at(k, j);
                if (yv) r.at(i, j) = fp_add(r.at(i, j), fp_mul(xv, yv, x.p), x.p);
            }
        }
    return r;
}

Mat scalar_mul(uint32_t c, const Mat& x) {
    Mat r = x;
    c %= x.p;
    for (auto& v : r.a) v = fp_mul(v, c, x.p);
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows, x.p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat hstack(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.p != y.p) throw std::invalid_argument("hstack: mismatch");
    Mat r(x.rows, x.cols + y.cols, x.p);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat vstack(const Mat& x, const Mat& y) {
    if (x.cols != y.cols || x.p != y.p) throw std::invalid_argument("vstack: mismatch");
    Mat r(x.rows + y.rows, x.cols, x.p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

bool is_zero(const Mat& x) {
    for (auto v : x.a)
        if (v) return false;
    return true;
}

std::vector<uint32_t> apply_vec(const Mat& x, const std::vector<uint32_t>& v) {
    if (v.size() != x.cols) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<uint32_t> r(x.rows, 0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (x.at(i, j) && v[j]) {
                acc += uint64_t(x.at(i, j)) * v[j] % x.p;
                if (acc >= (uint64_t(x.p) << 20)) acc %= x.p;
            }
        }
        r[i] = uint32_t(acc % x.p);
    }
    return r;
}

RrefResult rref(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols && row < r.rows; ++col) {
        std::size_t sel = row;
        while (sel < r.rows && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(row, j));
        uint32_t inv = fp_inv(r.at(row, col), r.p);
        for (std::size_t j = col; j < r.cols; ++j) r.at(row, j) = fp_mul(r.at(row, j), inv, r.p);
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == row) continue;
            uint32_t f = r.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < r.cols; ++j)
                r.at(i, j) = fp_sub(r.at(i, j), fp_mul(f, r.at(row, j), r.p), r.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (auto c : rr.pivots) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat basis(free_cols.size(), m.cols, m.p);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(k, f) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            basis.at(k, rr.pivots[i]) = fp_neg(rr.reduced.at(i, f), m.p);
    }
    // canonicalize so subspace equality is entry-wise equality
    return row_space(basis);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.p != b.p) throw std::invalid_argument("solve: dimension mismatch");
    RrefResult rr = rref(hstack(a, b));
    for (auto c : rr.pivots)
        if (c >= a.cols) return std::nullopt;
    Mat x(a.cols, b.cols, a.p);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            x.at(rr.pivots[i], j) = rr.reduced.at(i, a.cols + j);
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows != a.cols) return std::nullopt;
    auto x = solve(a, Mat::identity(a.rows, a.p));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows) return std::nullopt;
    return x;
}

Mat row_space(const Mat& rows_mat) {
    RrefResult rr = rref(rows_mat);
    Mat r(rr.pivots.size(), rows_mat.cols, rows_mat.p);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < rows_mat.cols; ++j) r.at(i, j) = rr.reduced.at(i, j);
    return r;
}

std::vector<uint32_t> reduce_mod_rows(const Mat& basis, std::vector<uint32_t> v) {
    if (v.size() != basis.cols) throw std::invalid_argument("reduce_mod_rows: length mismatch");
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t piv = 0;
        while (piv < basis.cols && basis.at(i, piv) == 0) ++piv;
        if (piv == basis.cols) continue;
        uint32_t f = v[piv];
        if (f == 0) continue;
        for (std::size_t j = piv; j < basis.cols; ++j)
            v[j] = fp_sub(v[j], fp_mul(f, basis.at(i, j), basis.p), basis.p);
    }
    return v;
}

bool in_row_space(const Mat& basis, const std::vector<uint32_t>& v) {
    auto r = reduce_mod_rows(basis, v);
    for (auto x : r)
        if (x) return false;
    return true;
}

Mat subspace_sum(const Mat& basis_a, const Mat& basis_b) {
    return row_space(vstack(basis_a, basis_b));
}

Mat subspace_intersect(const Mat& basis_a, const Mat& basis_b) {
    // pairs (alpha, beta) with alpha A = beta B give the intersection
    Mat stacked = vstack(basis_a, basis_b);
    Mat ker = kernel_basis(transpose(stacked));
    Mat vecs(ker.rows, basis_a.cols, basis_a.p);
    for (std::size_t k = 0; k < ker.rows; ++k)
        for (std::size_t i = 0; i < basis_a.rows; ++i) {
            uint32_t c = ker.at(k, i);
            if (!c) continue;
            for (std::size_t j = 0; j < basis_a.cols; ++j)
                vecs.at(k, j) = fp_add(vecs.at(k, j), fp_mul(c, basis_a.at(i, j), basis_a.p), basis_a.p);
        }
    return row_space(vecs);
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << m.rows << "x" << m.cols << " mod " << m.p << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace homkit
