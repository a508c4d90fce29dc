#include "homkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homkit {

namespace {

constexpr std::size_t kMaxPaths = 200000;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("algebra: " + msg); }

uint64_t fnv1a(uint64_t h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::optional<std::size_t> Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    return std::nullopt;
}

std::size_t path_target(const Quiver& q, const Path& path) {
    return path.arrows.empty() ? path.source : q.arrows[path.arrows.back()].tgt;
}

std::string path_name(const Quiver& q, const Path& path) {
    if (path.arrows.empty()) return "e_" + q.vertices[path.source];
    std::string s;
    for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

Path compose(const Quiver& q, const Path& later, const Path& first) {
    if (path_target(q, first) != later.source)
        fail("compose: paths are not composable");
    Path r;
    r.source = first.source;
    r.arrows = first.arrows;
    r.arrows.insert(r.arrows.end(), later.arrows.begin(), later.arrows.end());
    return r;
}

std::vector<uint32_t> Algebra::multiply(const std::vector<uint32_t>& x,
                                        const std::vector<uint32_t>& y) const {
    std::vector<uint32_t> r(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (!y[j]) continue;
            uint32_t c = fp_mul(x[i], y[j], p);
            const auto& prod = product(i, j);
            for (std::size_t k = 0; k < dim; ++k)
                if (prod[k]) r[k] = fp_add(r[k], fp_mul(c, prod[k], p), p);
        }
    }
    return r;
}

Mat Algebra::left_mult(const std::vector<uint32_t>& x) const {
    Mat m(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            const auto& prod = product(i, j);
            for (std::size_t r = 0; r < dim; ++r)
                if (prod[r]) m.at(r, j) = fp_add(m.at(r, j), fp_mul(x[i], prod[r], p), p);
        }
    }
    return m;
}

Mat Algebra::right_mult(const std::vector<uint32_t>& x) const {
    Mat m(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            const auto& prod = product(j, i);
            for (std::size_t r = 0; r < dim; ++r)
                if (prod[r]) m.at(r, j) = fp_add(m.at(r, j), fp_mul(x[i], prod[r], p), p);
        }
    }
    return m;
}

namespace {

std::vector<uint32_t> unit_vec(std::size_t dim, std::size_t i, uint32_t /*p*/) {
    std::vector<uint32_t> v(dim, 0);
    v[i] = 1;
    return v;
}

/// Nilpotency check for a subspace given by canonical row basis; returns the
/// exponent if the chain of power subspaces reaches zero, else nullopt.
std::optional<std::size_t> nilpotency_exponent(const Algebra& a, const Mat& basis) {
    Mat power = basis;
    std::size_t e = 1;
    while (power.rows > 0) {
        if (e > a.dim + 1) return std::nullopt;
        std::vector<std::vector<uint32_t>> rows;
        for (std::size_t i = 0; i < power.rows; ++i)
            for (std::size_t j = 0; j < basis.rows; ++j) {
                std::vector<uint32_t> x(power.a.begin() + i * power.cols,
                                        power.a.begin() + (i + 1) * power.cols);
                std::vector<uint32_t> y(basis.a.begin() + j * basis.cols,
                                        basis.a.begin() + (j + 1) * basis.cols);
                rows.push_back(a.multiply(x, y));
            }
        Mat next = row_space(mat_from_rows(rows, a.dim, a.p));
        if (next == power) return std::nullopt;  // stabilized above zero
        power = std::move(next);
        ++e;
    }
    return e - 1;
}

void verify_algebra(const Algebra& a) {
    if (a.dim == 0) fail("zero-dimensional algebra has no unit");
    if (!is_prime_u32(a.p)) fail("modulus is not prime");
    // unit acts as identity
    for (std::size_t i = 0; i < a.dim; ++i) {
        auto e = unit_vec(a.dim, i, a.p);
        if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e)
            fail("unit does not act as identity");
    }
    // associativity on all basis triples
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < a.dim; ++k) {
                auto lhs = a.multiply(ij, unit_vec(a.dim, k, a.p));
                auto rhs = a.multiply(unit_vec(a.dim, i, a.p), a.product(j, k));
                if (lhs != rhs) fail("associativity fails on a basis triple");
            }
        }
    // complete set of orthogonal idempotents
    if (a.idempotents.empty()) fail("no idempotents supplied");
    std::vector<uint32_t> sum(a.dim, 0);
    for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
        for (std::size_t j = 0; j < a.idempotents.size(); ++j) {
            auto prod = a.multiply(a.idempotents[i], a.idempotents[j]);
            if (i == j ? prod != a.idempotents[i] : prod != std::vector<uint32_t>(a.dim, 0))
                fail("idempotents are not orthogonal idempotents");
        }
        for (std::size_t k = 0; k < a.dim; ++k) sum[k] = fp_add(sum[k], a.idempotents[i][k], a.p);
    }
    if (sum != a.unit) fail("idempotents do not sum to the unit");
    // radical is a two-sided nilpotent ideal of the right codimension
    for (std::size_t r = 0; r < a.radical.rows; ++r) {
        std::vector<uint32_t> x(a.radical.a.begin() + r * a.dim,
                                a.radical.a.begin() + (r + 1) * a.dim);
        for (std::size_t i = 0; i < a.dim; ++i) {
            auto e = unit_vec(a.dim, i, a.p);
            if (!in_row_space(a.radical, a.multiply(e, x)) ||
                !in_row_space(a.radical, a.multiply(x, e)))
                fail("radical is not a two-sided ideal");
        }
    }
    if (!nilpotency_exponent(a, a.radical)) fail("radical is not nilpotent");
    if (a.radical.rows + a.idempotents.size() != a.dim)
        fail("radical codimension does not match the idempotent count");
    // each diagonal block is one-dimensional over the radical (split basic)
    for (const auto& e : a.idempotents) {
        std::vector<std::vector<uint32_t>> block;
        for (std::size_t j = 0; j < a.dim; ++j)
            block.push_back(a.multiply(a.multiply(e, unit_vec(a.dim, j, a.p)), e));
        Mat b = row_space(mat_from_rows(block, a.dim, a.p));
        Mat meet = subspace_intersect(b, a.radical);
        if (b.rows - meet.rows != 1) fail("an idempotent is not primitive (block is not split local)");
    }
    // generators together with the idempotents generate the whole algebra
    {
        std::vector<std::vector<uint32_t>> seed;
        for (const auto& e : a.idempotents) seed.push_back(e);
        for (auto g : a.generators) seed.push_back(unit_vec(a.dim, g, a.p));
        Mat span = row_space(mat_from_rows(seed, a.dim, a.p));
        for (;;) {
            std::vector<std::vector<uint32_t>> rows;
            for (std::size_t i = 0; i < span.rows; ++i)
                for (std::size_t j = 0; j < span.rows; ++j) {
                    std::vector<uint32_t> x(span.a.begin() + i * a.dim, span.a.begin() + (i + 1) * a.dim);
                    std::vector<uint32_t> y(span.a.begin() + j * a.dim, span.a.begin() + (j + 1) * a.dim);
                    rows.push_back(a.multiply(x, y));
                }
            Mat next = subspace_sum(span, row_space(mat_from_rows(rows, a.dim, a.p)));
            if (next.rows == span.rows) break;
            span = std::move(next);
        }
        if (span.rows != a.dim) fail("declared generators do not generate the algebra");
    }
}

uint64_t digest_impl(const Algebra& a) {
    // canonical basis order: by (path length, printed name) when the algebra
    // is presentation-backed, so reordering arrows or relations in the input
    // file does not change the digest
    std::vector<std::size_t> perm(a.dim);
    std::iota(perm.begin(), perm.end(), 0);
    if (a.pres) {
        std::vector<std::pair<std::pair<std::size_t, std::string>, std::size_t>> keys;
        for (std::size_t i = 0; i < a.dim; ++i)
            keys.push_back({{a.basis_paths[i].length(), path_name(a.pres->quiver, a.basis_paths[i])}, i});
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < a.dim; ++i) perm[i] = keys[i].second;
    }
    std::vector<std::size_t> inv(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) inv[perm[i]] = i;

    uint64_t h = 1469598103934665603ull;
    h = fnv1a(h, a.p);
    h = fnv1a(h, a.dim);
    h = fnv1a(h, a.idempotents.size());
    auto mix_vec = [&](const std::vector<uint32_t>& v) {
        for (std::size_t k = 0; k < a.dim; ++k) h = fnv1a(h, v[perm[k]]);
    };
    mix_vec(a.unit);
    for (const auto& e : a.idempotents) mix_vec(e);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) mix_vec(a.product(perm[i], perm[j]));
    return h;
}

}  // namespace

uint64_t algebra_digest(const Algebra& a) { return digest_impl(a); }

AlgebraPtr build_algebra(const Presentation& pres) {
    const Quiver& q = pres.quiver;
    const std::size_t L = pres.nilpotency;
    if (q.vertices.empty()) fail("quiver has no vertices");
    if (L < 1) fail("nilpotency degree must be positive");
    if (!is_prime_u32(pres.p)) fail("modulus is not prime");
    {
        std::map<std::string, int> seen;
        for (const auto& v : q.vertices)
            if (++seen["v:" + v] > 1) fail("duplicate vertex name: " + v);
        for (const auto& ar : q.arrows) {
            if (++seen["a:" + ar.name] > 1) fail("duplicate arrow name: " + ar.name);
            if (ar.src >= q.vertices.size() || ar.tgt >= q.vertices.size())
                fail("arrow endpoint out of range");
        }
    }
    for (const auto& rel : pres.relations) {
        if (rel.terms.empty()) fail("empty relation");
        std::size_t s = rel.terms[0].path.source, t = path_target(q, rel.terms[0].path);
        for (const auto& term : rel.terms) {
            if (term.path.length() < 2) fail("non-admissible relation: a term has length < 2");
            if (term.path.source != s || path_target(q, term.path) != t)
                fail("relation terms are not parallel paths");
        }
    }

    // all paths of length <= L, by length then discovery order
    std::vector<Path> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_index;
    std::vector<std::size_t> level_start;  // level_start[l] = first index of length l
    for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back(Path{v, {}});
    level_start.push_back(0);
    std::size_t lo = 0;
    for (std::size_t len = 1; len <= L; ++len) {
        std::size_t hi = paths.size();
        level_start.push_back(hi);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t ar = 0; ar < q.arrows.size(); ++ar)
                if (q.arrows[ar].src == path_target(q, paths[i])) {
                    Path ext = paths[i];
                    ext.arrows.push_back(ar);
                    paths.push_back(std::move(ext));
                    if (paths.size() > kMaxPaths) fail("path space too large");
                }
        lo = hi;
    }
    level_start.push_back(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i)
        path_index[{paths[i].source, paths[i].arrows}] = i;
    const std::size_t n_le = paths.size();           // paths of length <= L
    const std::size_t n_lt = level_start[L];         // paths of length <  L

    // ideal slice: span of u*r*w truncated at length <= L
    std::vector<std::vector<uint32_t>> ideal_rows;
    for (const auto& rel : pres.relations) {
        std::size_t rs = rel.terms[0].path.source;
        std::size_t rt = path_target(q, rel.terms[0].path);
        for (std::size_t wi = 0; wi < n_lt; ++wi) {
            const Path& w = paths[wi];
            if (path_target(q, w) != rs) continue;
            for (std::size_t ui = 0; ui < n_lt; ++ui) {
                const Path& u = paths[ui];
                if (u.source != rt) continue;
                std::vector<uint32_t> row(n_le, 0);
                bool nonzero = false;
                for (const auto& term : rel.terms) {
                    std::size_t total = w.length() + term.path.length() + u.length();
                    if (total > L) continue;
                    Path comp = compose(q, u, compose(q, term.path, w));
                    auto it = path_index.find({comp.source, comp.arrows});
                    if (it == path_index.end()) fail("internal: composite path not enumerated");
                    row[it->second] = fp_add(row[it->second], term.coeff % pres.p, pres.p);
                    if (row[it->second]) nonzero = true;
                }
                if (nonzero) ideal_rows.push_back(std::move(row));
            }
        }
    }
    Mat ideal_le = row_space(mat_from_rows(ideal_rows, n_le, pres.p));

    // admissibility: every path of length L must lie in the ideal slice
    for (std::size_t i = level_start[L]; i < level_start[L + 1]; ++i) {
        std::vector<uint32_t> ind(n_le, 0);
        ind[i] = 1;
        if (!in_row_space(ideal_le, ind))
            fail("J^L != 0: path " + path_name(q, paths[i]) +
                 " of length " + std::to_string(L) + " is not killed by the relations");
    }

    // reduce modulo the degree-<L slice of the ideal
    Mat ideal_lt(ideal_le.rows, n_lt, pres.p);
    for (std::size_t i = 0; i < ideal_le.rows; ++i)
        for (std::size_t j = 0; j < n_lt; ++j) ideal_lt.at(i, j) = ideal_le.at(i, j);
    RrefResult red = rref(ideal_lt);
    std::vector<char> is_pivot(n_lt, 0);
    for (auto c : red.pivots) is_pivot[c] = 1;

    std::vector<std::size_t> basis_of_path(n_lt, SIZE_MAX);
    std::vector<std::size_t> path_of_basis;
    for (std::size_t i = 0; i < n_lt; ++i)
        if (!is_pivot[i]) {
            basis_of_path[i] = path_of_basis.size();
            path_of_basis.push_back(i);
        }
    const std::size_t dim = path_of_basis.size();

    // one-step rewrite of each path of length < L into the surviving basis
    std::vector<std::vector<uint32_t>> reduce_path(n_lt, std::vector<uint32_t>(dim, 0));
    for (std::size_t i = 0; i < n_lt; ++i) {
        if (!is_pivot[i]) {
            reduce_path[i][basis_of_path[i]] = 1;
        }
    }
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
        std::size_t pc = red.pivots[r];
        for (std::size_t j = 0; j < n_lt; ++j) {
            if (j == pc) continue;
            uint32_t v = red.reduced.at(r, j);
            if (v) reduce_path[pc][basis_of_path[j]] = fp_neg(v, pres.p);
        }
    }

    auto alg = std::make_shared<Algebra>();
    alg->p = pres.p;
    alg->dim = dim;
    alg->pres = pres;
    for (auto pi : path_of_basis) {
        alg->basis_paths.push_back(paths[pi]);
        alg->basis_names.push_back(path_name(q, paths[pi]));
    }
    alg->mult.assign(dim * dim, std::vector<uint32_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        const Path& bi = paths[path_of_basis[i]];
        for (std::size_t j = 0; j < dim; ++j) {
            const Path& bj = paths[path_of_basis[j]];
            if (path_target(q, bj) != bi.source) continue;           // not composable
            if (bi.length() + bj.length() >= L) continue;            // lands in J^L = 0
            Path prod = compose(q, bi, bj);
            auto it = path_index.find({prod.source, prod.arrows});
            alg->mult[i * dim + j] = reduce_path[it->second];
        }
    }
    alg->unit.assign(dim, 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        std::size_t pi = v;  // trivial paths are the first block
        if (is_pivot[pi]) fail("internal: trivial path eliminated by relations");
        std::vector<uint32_t> e(dim, 0);
        e[basis_of_path[pi]] = 1;
        alg->unit[basis_of_path[pi]] = 1;
        alg->idempotents.push_back(std::move(e));
    }
    {
        std::vector<std::vector<uint32_t>> rad_rows;
        for (std::size_t i = 0; i < dim; ++i)
            if (alg->basis_paths[i].length() >= 1) {
                std::vector<uint32_t> r(dim, 0);
                r[i] = 1;
                rad_rows.push_back(std::move(r));
            }
        alg->radical = row_space(mat_from_rows(rad_rows, dim, pres.p));
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (alg->basis_paths[i].length() == 1) alg->generators.push_back(i);

    verify_algebra(*alg);
    alg->digest = digest_impl(*alg);
    return alg;
}

namespace {

/// Minimal polynomial of x inside the unital subalgebra e + x + x^2 + ...,
/// using e as the relevant local unit: returns monic coefficients c_0..c_t
/// (degree t, c_t == 1) with sum c_s x^s = 0, where x^0 := e.
std::vector<uint32_t> local_min_poly(const Algebra& a, const std::vector<uint32_t>& e,
                                     const std::vector<uint32_t>& x) {
    std::vector<std::vector<uint32_t>> powers{e};
    for (;;) {
        Mat krylov = mat_from_rows(powers, a.dim, a.p);
        auto next = a.multiply(powers.back(), x);
        auto sol = solve(transpose(krylov), transpose(mat_from_rows({next}, a.dim, a.p)));
        if (sol) {
            std::vector<uint32_t> coeffs(powers.size() + 1, 0);
            for (std::size_t s = 0; s < powers.size(); ++s)
                coeffs[s] = fp_neg(sol->at(s, 0), a.p);
            coeffs[powers.size()] = 1;
            return coeffs;
        }
        powers.push_back(next);
        if (powers.size() > a.dim + 1) fail("internal: minimal polynomial search overran");
    }
}

/// The unique scalar lambda with x - lambda*e nilpotent, assuming the local
/// block is split local; verified by the caller.
std::optional<uint32_t> local_eigenvalue(const Algebra& a, const std::vector<uint32_t>& e,
                                         const std::vector<uint32_t>& x) {
    auto f = local_min_poly(a, e, x);
    std::size_t deg = f.size() - 1;
    if (deg == 0) return std::nullopt;
    // over a split local block f = (T - lambda)^deg = (T^{p^a} - lambda)^m
    std::size_t pa = 1, m = deg;
    while (m % a.p == 0) {
        m /= a.p;
        pa *= a.p;
    }
    std::size_t idx = pa * (m - 1);
    uint32_t coef = idx < f.size() ? f[idx] : 0;
    uint32_t lambda = fp_mul(fp_neg(coef, a.p), fp_inv(uint32_t(m % a.p), a.p), a.p);
    // verify nilpotency of x - lambda e within the block
    std::vector<uint32_t> n(a.dim);
    for (std::size_t k = 0; k < a.dim; ++k)
        n[k] = fp_sub(x[k], fp_mul(lambda, e[k], a.p), a.p);
    std::vector<uint32_t> acc = n;
    for (std::size_t s = 1; s < a.dim + 1; ++s) {
        bool zero = true;
        for (auto v : acc)
            if (v) { zero = false; break; }
        if (zero) return lambda;
        acc = a.multiply(acc, n);
    }
    for (auto v : acc)
        if (v) return std::nullopt;
    return lambda;
}

}  // namespace

AlgebraPtr build_from_constants(const ConstantsSpec& spec) {
    auto alg = std::make_shared<Algebra>();
    alg->p = spec.p;
    alg->dim = spec.dim;
    alg->basis_names = spec.basis_names;
    if (alg->basis_names.size() != spec.dim) {
        alg->basis_names.resize(spec.dim);
        for (std::size_t i = 0; i < spec.dim; ++i)
            if (alg->basis_names[i].empty()) alg->basis_names[i] = "b" + std::to_string(i);
    }
    if (spec.mult.size() != spec.dim * spec.dim) fail("structure constant table has wrong size");
    for (const auto& v : spec.mult)
        if (v.size() != spec.dim) fail("structure constant row has wrong length");
    alg->mult = spec.mult;
    for (auto& v : alg->mult)
        for (auto& c : v) c %= spec.p;
    alg->unit = spec.unit;
    if (alg->unit.size() != spec.dim) fail("unit coordinates have wrong length");
    for (auto& c : alg->unit) c %= spec.p;
    alg->idempotents = spec.idempotents;
    for (auto& e : alg->idempotents) {
        if (e.size() != spec.dim) fail("idempotent coordinates have wrong length");
        for (auto& c : e) c %= spec.p;
    }

    // radical: off-diagonal Pierce blocks plus the local radicals, which are
    // the kernels of the unique algebra maps of the diagonal blocks onto GF(p)
    std::vector<std::vector<uint32_t>> rad_rows;
    for (std::size_t i = 0; i < alg->idempotents.size(); ++i)
        for (std::size_t j = 0; j < alg->idempotents.size(); ++j) {
            if (i == j) continue;
            for (std::size_t b = 0; b < alg->dim; ++b) {
                std::vector<uint32_t> eb(alg->dim, 0);
                eb[b] = 1;
                rad_rows.push_back(
                    alg->multiply(alg->multiply(alg->idempotents[i], eb), alg->idempotents[j]));
            }
        }
    for (const auto& e : alg->idempotents) {
        std::vector<std::vector<uint32_t>> block_rows;
        for (std::size_t b = 0; b < alg->dim; ++b) {
            std::vector<uint32_t> eb(alg->dim, 0);
            eb[b] = 1;
            block_rows.push_back(alg->multiply(alg->multiply(e, eb), e));
        }
        Mat block = row_space(mat_from_rows(block_rows, alg->dim, alg->p));
        std::vector<uint32_t> lambdas(block.rows);
        for (std::size_t r = 0; r < block.rows; ++r) {
            std::vector<uint32_t> u(block.a.begin() + r * alg->dim,
                                    block.a.begin() + (r + 1) * alg->dim);
            auto lam = local_eigenvalue(*alg, e, u);
            if (!lam) fail("a claimed idempotent is not primitive (block is not split local)");
            lambdas[r] = *lam;
        }
        Mat lrow(1, block.rows, alg->p);
        for (std::size_t r = 0; r < block.rows; ++r) lrow.at(0, r) = lambdas[r];
        Mat ker = kernel_basis(lrow);  // coordinates within the block basis
        for (std::size_t kr = 0; kr < ker.rows; ++kr) {
            std::vector<uint32_t> v(alg->dim, 0);
            for (std::size_t r = 0; r < block.rows; ++r) {
                uint32_t c = ker.at(kr, r);
                if (!c) continue;
                for (std::size_t k = 0; k < alg->dim; ++k)
                    v[k] = fp_add(v[k], fp_mul(c, block.at(r, k), alg->p), alg->p);
            }
            rad_rows.push_back(std::move(v));
        }
    }
    alg->radical = row_space(mat_from_rows(rad_rows, alg->dim, alg->p));

    // generating set: grow from the idempotents until the span closes
    {
        std::vector<std::vector<uint32_t>> seed = alg->idempotents;
        std::vector<std::size_t> gens;
        auto closure = [&](void) -> Mat {
            Mat span = row_space(mat_from_rows(seed, alg->dim, alg->p));
            for (;;) {
                std::vector<std::vector<uint32_t>> rows;
                for (std::size_t i = 0; i < span.rows; ++i)
                    for (std::size_t j = 0; j < span.rows; ++j) {
                        std::vector<uint32_t> x(span.a.begin() + i * alg->dim,
                                                span.a.begin() + (i + 1) * alg->dim);
                        std::vector<uint32_t> y(span.a.begin() + j * alg->dim,
                                                span.a.begin() + (j + 1) * alg->dim);
                        rows.push_back(alg->multiply(x, y));
                    }
                Mat next = subspace_sum(span, row_space(mat_from_rows(rows, alg->dim, alg->p)));
                if (next.rows == span.rows) return span;
                span = std::move(next);
            }
        };
        Mat span = closure();
        while (span.rows < alg->dim) {
            std::size_t pick = SIZE_MAX;
            for (std::size_t b = 0; b < alg->dim; ++b) {
                std::vector<uint32_t> eb(alg->dim, 0);
                eb[b] = 1;
                if (!in_row_space(span, eb)) { pick = b; break; }
            }
            gens.push_back(pick);
            std::vector<uint32_t> eb(alg->dim, 0);
            eb[pick] = 1;
            seed.push_back(eb);
            span = closure();
        }
        alg->generators = gens;
    }

    verify_algebra(*alg);
    alg->digest = digest_impl(*alg);
    return alg;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    if (a->op_cache) return a->op_cache;
    auto op = std::make_shared<Algebra>();
    op->p = a->p;
    op->dim = a->dim;
    op->basis_names = a->basis_names;
    op->mult.assign(a->dim * a->dim, {});
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t j = 0; j < a->dim; ++j) op->mult[i * a->dim + j] = a->product(j, i);
    op->unit = a->unit;
    op->idempotents = a->idempotents;
    op->radical = a->radical;
    op->generators = a->generators;
    if (a->pres) {
        Presentation rev;
        rev.p = a->pres->p;
        rev.nilpotency = a->pres->nilpotency;
        rev.quiver.vertices = a->pres->quiver.vertices;
        for (const auto& ar : a->pres->quiver.arrows)
            rev.quiver.arrows.push_back({ar.name, ar.tgt, ar.src});
        auto reverse_path = [&](const Path& path) {
            Path r;
            r.source = path_target(a->pres->quiver, path);
            r.arrows.assign(path.arrows.rbegin(), path.arrows.rend());
            return r;
        };
        for (const auto& rel : a->pres->relations) {
            Relation rr;
            rr.line = rel.line;
            for (const auto& t : rel.terms) rr.terms.push_back({t.coeff, reverse_path(t.path)});
            rev.relations.push_back(std::move(rr));
        }
        op->pres = std::move(rev);
        for (const auto& bp : a->basis_paths) op->basis_paths.push_back(reverse_path(bp));
    }
    verify_algebra(*op);
    op->digest = digest_impl(*op);
    op->op_cache = a;
    a->op_cache = op;
    return op;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->p == b->p && a->dim == b->dim && a->mult == b->mult && a->unit == b->unit &&
           a->idempotents == b->idempotents;
}

}  // namespace homkit
