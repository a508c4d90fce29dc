#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homkit {

// Arithmetic in GF(p), p prime, 2 <= p < 2^31. Values are residues in [0, p).
uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_neg(uint32_t a, uint32_t p);
uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t fp_inv(uint32_t a, uint32_t p);
// Reduce a (possibly negative) integer into [0, p).
uint32_t fp_from_int(long long v, uint32_t p);
bool is_prime_u32(uint32_t n);

/// Dense row-major matrix over GF(p). Empty shapes (0 x n, n x 0) are legal
/// and behave as expected under all operations.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, uint32_t prime)
        : rows(r), cols(c), p(prime), a(r * c, 0) {}

    uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Mat identity(std::size_t n, uint32_t prime);

    bool operator==(const Mat& o) const = default;
};

Mat mat_from_rows(const std::vector<std::vector<uint32_t>>& rows, std::size_t cols, uint32_t p);

Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat neg(const Mat& x);
Mat mul(const Mat& x, const Mat& y);
Mat scalar_mul(uint32_t c, const Mat& x);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);
bool is_zero(const Mat& x);

// Apply x to a column vector v (v.size() == x.cols).
std::vector<uint32_t> apply_vec(const Mat& x, const std::vector<uint32_t>& v);

struct RrefResult {
    Mat reduced;
    std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};

/// Unique reduced row echelon form together with pivot columns.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Canonical basis of the right null space {x : m x = 0}; one basis vector
/// per row, rows themselves in reduced echelon form.
Mat kernel_basis(const Mat& m);

/// Some x with a x = b if solvable (free variables pinned to zero), else
/// nullopt. Requires a.rows == b.rows.
std::optional<Mat> solve(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);

/// Canonical basis of the span of the given row vectors: RREF with zero rows
/// dropped. Subspaces compare equal iff their canonical bases are identical.
Mat row_space(const Mat& rows_mat);

/// Reduce v modulo a canonical (RREF, no zero rows) row basis; the result is
/// zero iff v lies in the span.
std::vector<uint32_t> reduce_mod_rows(const Mat& basis, std::vector<uint32_t> v);
bool in_row_space(const Mat& basis, const std::vector<uint32_t>& v);

Mat subspace_sum(const Mat& basis_a, const Mat& basis_b);
Mat subspace_intersect(const Mat& basis_a, const Mat& basis_b);

std::string to_string(const Mat& m);

}  // namespace homkit
