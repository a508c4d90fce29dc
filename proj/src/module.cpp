#include "homkit/module.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace homkit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("module: " + msg); }

std::vector<uint32_t> basis_vec(std::size_t dim, std::size_t i) {
    std::vector<uint32_t> v(dim, 0);
    v[i] = 1;
    return v;
}

std::vector<uint32_t> row_of(const Mat& m, std::size_t r) {
    return std::vector<uint32_t>(m.a.begin() + r * m.cols, m.a.begin() + (r + 1) * m.cols);
}

/// Generating elements of the algebra as coordinate vectors: the idempotents
/// plus the declared generators. Intertwining with these forces intertwining
/// with everything.
std::vector<std::vector<uint32_t>> algebra_generators(const Algebra& a) {
    std::vector<std::vector<uint32_t>> gens = a.idempotents;
    for (auto g : a.generators) gens.push_back(basis_vec(a.dim, g));
    return gens;
}

}  // namespace

Mat act(const Module& m, const std::vector<uint32_t>& x) {
    Mat r(m.dim, m.dim, m.p());
    for (std::size_t i = 0; i < m.alg->dim; ++i) {
        if (!x[i]) continue;
        for (std::size_t k = 0; k < r.a.size(); ++k)
            r.a[k] = fp_add(r.a[k], fp_mul(x[i], m.action[i].a[k], r.p), r.p);
    }
    return r;
}

void verify_module(const Module& m) {
    if (m.action.size() != m.alg->dim) fail("one action matrix per algebra basis element required");
    for (const auto& mat : m.action)
        if (mat.rows != m.dim || mat.cols != m.dim || mat.p != m.p())
            fail("action matrix has wrong shape or modulus");
    if (act(m, m.alg->unit) != Mat::identity(m.dim, m.p())) fail("unit does not act as identity");
    for (std::size_t i = 0; i < m.alg->dim; ++i)
        for (std::size_t j = 0; j < m.alg->dim; ++j)
            if (mul(m.action[i], m.action[j]) != act(m, m.alg->product(i, j)))
                fail("action does not respect the structure constants");
}

Module module_from_action(AlgebraPtr alg, std::vector<Mat> action, bool verify) {
    Module m;
    m.alg = std::move(alg);
    m.dim = action.empty() ? 0 : action.front().rows;
    m.action = std::move(action);
    if (m.action.empty()) fail("no action matrices");
    if (verify) verify_module(m);
    return m;
}

Module zero_module(const AlgebraPtr& alg) {
    Module m;
    m.alg = alg;
    m.dim = 0;
    m.action.assign(alg->dim, Mat(0, 0, alg->p));
    return m;
}

bool is_zero_module(const Module& m) { return m.dim == 0; }

Module regular_module(const AlgebraPtr& a) {
    Module m;
    m.alg = a;
    m.dim = a->dim;
    for (std::size_t i = 0; i < a->dim; ++i) {
        Mat l(a->dim, a->dim, a->p);
        for (std::size_t j = 0; j < a->dim; ++j) {
            const auto& prod = a->product(i, j);
            for (std::size_t r = 0; r < a->dim; ++r) l.at(r, j) = prod[r];
        }
        m.action.push_back(std::move(l));
    }
    return m;
}

void verify_map(const ModuleMap& f) {
    if (!same_algebra(f.src.alg, f.tgt.alg)) fail("map endpoints live over different algebras");
    if (f.m.rows != f.tgt.dim || f.m.cols != f.src.dim) fail("map matrix has wrong shape");
    for (const auto& g : algebra_generators(*f.src.alg))
        if (mul(f.m, act(f.src, g)) != mul(act(f.tgt, g), f.m))
            fail("map does not intertwine the actions");
}

ModuleMap make_map(Module src, Module tgt, Mat m, bool verify) {
    ModuleMap f{std::move(src), std::move(tgt), std::move(m)};
    if (verify) verify_map(f);
    return f;
}

ModuleMap identity_map(const Module& m) {
    return {m, m, Mat::identity(m.dim, m.p())};
}

ModuleMap zero_map(const Module& src, const Module& tgt) {
    return {src, tgt, Mat(tgt.dim, src.dim, src.p())};
}

ModuleMap compose_maps(const ModuleMap& later, const ModuleMap& first) {
    if (later.src.dim != first.tgt.dim) fail("compose_maps: dimension mismatch");
    return {first.src, later.tgt, mul(later.m, first.m)};
}

bool is_mono(const ModuleMap& f) { return rank(f.m) == f.src.dim; }
bool is_epi(const ModuleMap& f) { return rank(f.m) == f.tgt.dim; }

Mat invariant_closure(const Module& m, const Mat& seed_rows) {
    Mat span = row_space(seed_rows);
    auto gens = algebra_generators(*m.alg);
    std::vector<Mat> gen_t;
    for (const auto& g : gens) gen_t.push_back(transpose(act(m, g)));
    for (;;) {
        Mat next = span;
        for (const auto& gt : gen_t) next = subspace_sum(next, row_space(mul(span, gt)));
        if (next.rows == span.rows) return span;
        span = std::move(next);
    }
}

Module submodule_module(const Module& m, const Mat& rows, ModuleMap* incl) {
    Mat basis_t = transpose(rows);  // columns = basis vectors
    Module sub;
    sub.alg = m.alg;
    sub.dim = rows.rows;
    for (std::size_t i = 0; i < m.alg->dim; ++i) {
        auto sol = solve(basis_t, mul(m.action[i], basis_t));
        if (!sol) fail("subspace is not action-invariant");
        sub.action.push_back(std::move(*sol));
    }
    if (incl) *incl = {sub, m, basis_t};
    return sub;
}

Module quotient_module(const Module& m, const Mat& rows, ModuleMap* proj) {
    Mat basis = row_space(rows);
    std::vector<char> is_pivot(m.dim, 0);
    for (std::size_t r = 0; r < basis.rows; ++r) {
        std::size_t c = 0;
        while (c < m.dim && basis.at(r, c) == 0) ++c;
        is_pivot[c] = 1;
    }
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < m.dim; ++c)
        if (!is_pivot[c]) coords.push_back(c);

    Mat pr(coords.size(), m.dim, m.p());
    for (std::size_t j = 0; j < m.dim; ++j) {
        auto red = reduce_mod_rows(basis, basis_vec(m.dim, j));
        for (std::size_t t = 0; t < coords.size(); ++t) pr.at(t, j) = red[coords[t]];
    }
    Mat section(m.dim, coords.size(), m.p());
    for (std::size_t t = 0; t < coords.size(); ++t) section.at(coords[t], t) = 1;

    Module quot;
    quot.alg = m.alg;
    quot.dim = coords.size();
    for (std::size_t i = 0; i < m.alg->dim; ++i)
        quot.action.push_back(mul(pr, mul(m.action[i], section)));
    if (proj) *proj = {m, quot, pr};
    return quot;
}

SubQuot sub_quotient(const Module& m, const std::vector<std::vector<uint32_t>>& generators) {
    Mat seed = mat_from_rows(generators, m.dim, m.p());
    Mat rows = invariant_closure(m, seed);
    SubQuot r;
    r.sub_rows = rows;
    r.sub = submodule_module(m, rows, &r.incl);
    r.quot = quotient_module(m, rows, &r.proj);
    return r;
}

ModuleMap kernel_of(const ModuleMap& f) {
    Mat rows = kernel_basis(f.m);
    ModuleMap incl;
    submodule_module(f.src, rows, &incl);
    return incl;
}

Mat image_rows(const ModuleMap& f) { return row_space(transpose(f.m)); }

Module cokernel_of(const ModuleMap& f, ModuleMap* proj) {
    return quotient_module(f.tgt, image_rows(f), proj);
}

Structure module_structure(const Module& m) {
    Structure s;
    std::vector<Mat> rad_actions;
    for (std::size_t r = 0; r < m.alg->radical.rows; ++r)
        rad_actions.push_back(act(m, row_of(m.alg->radical, r)));

    Mat jm(0, m.dim, m.p());
    Mat stacked(0, m.dim, m.p());
    for (const auto& A : rad_actions) {
        jm = subspace_sum(jm, row_space(transpose(A)));
        stacked = vstack(stacked, A);
    }
    s.radical_rows = jm;
    s.socle_rows = kernel_basis(stacked);
    s.radical = submodule_module(m, s.radical_rows);
    s.socle = submodule_module(m, s.socle_rows);
    s.top = quotient_module(m, s.radical_rows, &s.top_proj);
    return s;
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
    if (!same_algebra(m.alg, n.alg)) fail("hom_space: algebra mismatch");
    const std::size_t dm = m.dim, dn = n.dim;
    if (dm == 0 || dn == 0) return {};
    auto gens = algebra_generators(*m.alg);
    Mat sys(gens.size() * dn * dm, dn * dm, m.p());
    std::size_t eq = 0;
    for (const auto& g : gens) {
        Mat gs = act(m, g), gt = act(n, g);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t j = 0; j < dm; ++j) {
                // (F gs - gt F)[r][j] = 0
                for (std::size_t c = 0; c < dm; ++c)
                    sys.at(eq, r * dm + c) = fp_add(sys.at(eq, r * dm + c), gs.at(c, j), sys.p);
                for (std::size_t c = 0; c < dn; ++c)
                    sys.at(eq, c * dm + j) =
                        fp_sub(sys.at(eq, c * dm + j), gt.at(r, c), sys.p);
                ++eq;
            }
    }
    Mat ker = kernel_basis(sys);
    std::vector<Mat> basis;
    for (std::size_t k = 0; k < ker.rows; ++k) {
        Mat f(dn, dm, m.p());
        for (std::size_t i = 0; i < dn * dm; ++i) f.a[i] = ker.at(k, i);
        basis.push_back(std::move(f));
    }
    return basis;
}

Module duality_D(const Module& m) {
    Module d;
    d.alg = opposite(m.alg);
    d.dim = m.dim;
    for (const auto& a : m.action) d.action.push_back(transpose(a));
    return d;
}

Fundamentals fundamental_modules(const AlgebraPtr& a) {
    Fundamentals f;
    Module reg = regular_module(a);
    AlgebraPtr op = opposite(a);
    Module reg_op = regular_module(op);
    std::size_t sum_p = 0, sum_i = 0;
    for (const auto& e : a->idempotents) {
        Mat cols = row_space(transpose(a->right_mult(e)));
        Module proj = submodule_module(reg, cols);
        Module top = module_structure(proj).top;
        if (top.dim != 1) fail("projective top is not simple (algebra not basic?)");
        sum_p += proj.dim;
        f.projectives.push_back(std::move(proj));
        f.simples.push_back(std::move(top));

        Mat cols_op = row_space(transpose(op->right_mult(e)));
        Module proj_op = submodule_module(reg_op, cols_op);
        Module inj = duality_D(proj_op);
        sum_i += inj.dim;
        f.injectives.push_back(std::move(inj));
    }
    if (sum_p != a->dim || sum_i != a->dim)
        fail("projective or injective dimensions do not sum to dim Lambda");
    return f;
}

namespace {

struct MatLess {
    bool operator()(const Mat& x, const Mat& y) const {
        if (x.rows != y.rows) return x.rows < y.rows;
        return x.a < y.a;
    }
};

}  // namespace

SubmoduleLattice all_submodules(const Module& m, std::size_t cap) {
    SubmoduleLattice lat;
    lat.cap = cap;
    std::set<Mat, MatLess> seen;
    seen.insert(Mat(0, m.dim, m.p()));                    // zero submodule
    seen.insert(row_space(Mat::identity(m.dim, m.p())));  // the module itself

    // a semisimple module has one subspace lattice per isotypic component,
    // and the product count is available in closed form; bail out early when
    // it already exceeds the budget instead of enumerating up to the cap
    {
        bool semisimple = true;
        for (std::size_t r = 0; r < m.alg->radical.rows && semisimple; ++r) {
            std::vector<uint32_t> x(m.alg->radical.a.begin() + r * m.alg->dim,
                                    m.alg->radical.a.begin() + (r + 1) * m.alg->dim);
            semisimple = is_zero(act(m, x));
        }
        if (semisimple && m.dim > 0) {
            double count = 1;
            for (const auto& e : m.alg->idempotents) {
                std::size_t d = rank(act(m, e));
                // number of subspaces of GF(p)^d via Gaussian binomials
                std::vector<double> gauss(d + 1, 0.0);
                for (std::size_t k = 0; k <= d; ++k) {
                    double g = 1;
                    for (std::size_t t = 0; t < k; ++t)
                        g *= (std::pow(double(m.p()), double(d - t)) - 1) /
                             (std::pow(double(m.p()), double(t + 1)) - 1);
                    gauss[k] = g;
                }
                double total = 0;
                for (auto g : gauss) total += g;
                count *= total;
                if (count > 4.0 * double(cap)) break;
            }
            if (count > double(cap)) {
                lat.complete = false;
                lat.subspaces.assign(seen.begin(), seen.end());
                return lat;
            }
        }
    }

    // all cyclic submodules; infeasibly many seed vectors flags incompleteness
    std::vector<std::pair<Mat, std::vector<uint32_t>>> cyclic;  // closure + generator
    {
        std::set<Mat, MatLess> cyc_seen;
        double count = 1;
        for (std::size_t i = 0; i < m.dim; ++i) count *= m.p();
        if (count - 1 > 8.0 * 1024 * 1024) {
            lat.complete = false;
        } else {
            std::vector<uint32_t> v(m.dim, 0);
            for (;;) {
                std::size_t pos = 0;
                while (pos < m.dim && v[pos] + 1 == m.p()) v[pos++] = 0;
                if (pos == m.dim) break;
                ++v[pos];
                Mat c = invariant_closure(m, mat_from_rows({v}, m.dim, m.p()));
                if (cyc_seen.insert(c).second) cyclic.push_back({c, v});
                seen.insert(std::move(c));
                if (seen.size() > cap) {
                    lat.complete = false;
                    break;
                }
            }
        }
    }

    // every submodule is a sum of cyclic ones, so closing under single
    // cyclic increments reaches the entire lattice; a cyclic closure lies in
    // an invariant subspace iff its generator does
    if (lat.complete) {
        std::vector<Mat> work(seen.begin(), seen.end());
        for (std::size_t i = 0; i < work.size() && lat.complete; ++i)
            for (const auto& [c, gen] : cyclic) {
                if (in_row_space(work[i], gen)) continue;
                Mat s = subspace_sum(work[i], c);
                if (seen.insert(s).second) {
                    work.push_back(std::move(s));
                    if (seen.size() > cap) {
                        lat.complete = false;
                        break;
                    }
                }
            }
    }

    lat.subspaces.assign(seen.begin(), seen.end());
    return lat;
}

std::vector<std::size_t> iso_signature(const Module& m) {
    std::vector<std::size_t> sig{m.dim};
    std::vector<Mat> idem_actions;
    for (const auto& e : m.alg->idempotents) idem_actions.push_back(act(m, e));

    auto per_idem_dims = [&](const Mat& rows) {
        for (const auto& E : idem_actions) sig.push_back(rank(mul(rows, transpose(E))));
    };

    // radical series
    Mat layer = row_space(Mat::identity(m.dim, m.p()));
    std::vector<Mat> rad_ts;
    for (std::size_t r = 0; r < m.alg->radical.rows; ++r)
        rad_ts.push_back(transpose(act(m, row_of(m.alg->radical, r))));
    while (layer.rows > 0) {
        sig.push_back(layer.rows);
        per_idem_dims(layer);
        Mat next(0, m.dim, m.p());
        for (const auto& rt : rad_ts) next = subspace_sum(next, row_space(mul(layer, rt)));
        if (next.rows == layer.rows) break;  // cannot happen for nilpotent J
        layer = std::move(next);
    }
    sig.push_back(SIZE_MAX);  // separator

    // socle series
    Mat stacked(0, m.dim, m.p());
    for (std::size_t r = 0; r < m.alg->radical.rows; ++r)
        stacked = vstack(stacked, act(m, row_of(m.alg->radical, r)));
    Mat soc = kernel_basis(stacked);
    Mat prev(0, m.dim, m.p());
    while (true) {
        sig.push_back(soc.rows);
        per_idem_dims(soc);
        if (soc.rows == m.dim || soc.rows == prev.rows) break;
        // next socle layer: preimage of soc(M / soc)
        ModuleMap proj;
        Module q = quotient_module(m, soc, &proj);
        Mat stacked_q(0, q.dim, m.p());
        for (std::size_t r = 0; r < m.alg->radical.rows; ++r)
            stacked_q = vstack(stacked_q, act(q, row_of(m.alg->radical, r)));
        Mat soc_q = kernel_basis(stacked_q);
        // preimage rows: solve proj * x = each socle vector, plus current socle
        Mat pre = soc;
        if (soc_q.rows > 0) {
            auto sol = solve(proj.m, transpose(soc_q));
            if (!sol) fail("internal: socle preimage unsolvable");
            pre = subspace_sum(pre, row_space(transpose(*sol)));
        }
        prev = std::move(soc);
        soc = std::move(pre);
        if (soc.rows == prev.rows) break;
    }
    return sig;
}

IsoResult is_isomorphic(const Module& m, const Module& n, std::size_t budget, uint64_t seed,
                        std::size_t samples) {
    if (!same_algebra(m.alg, n.alg)) fail("is_isomorphic: algebra mismatch");
    if (m.dim != n.dim) return {IsoVerdict::no, std::nullopt};
    if (m.dim == 0) return {IsoVerdict::yes, Mat(0, 0, m.p())};
    if (iso_signature(m) != iso_signature(n)) return {IsoVerdict::no, std::nullopt};

    auto basis = hom_space(m, n);
    const std::size_t h = basis.size();
    if (h == 0) return {IsoVerdict::no, std::nullopt};

    auto try_combo = [&](const std::vector<uint32_t>& c) -> std::optional<Mat> {
        Mat f(n.dim, m.dim, m.p());
        for (std::size_t t = 0; t < h; ++t) {
            if (!c[t]) continue;
            for (std::size_t i = 0; i < f.a.size(); ++i)
                f.a[i] = fp_add(f.a[i], fp_mul(c[t], basis[t].a[i], f.p), f.p);
        }
        if (rank(f) == m.dim) return f;
        return std::nullopt;
    };

    // exhaustive when the Hom space is small enough, else seeded sampling
    double total = 1;
    bool exhaustive = true;
    for (std::size_t t = 0; t < h; ++t) {
        total *= m.p();
        if (total > double(budget)) {
            exhaustive = false;
            break;
        }
    }
    if (exhaustive) {
        std::vector<uint32_t> c(h, 0);
        for (;;) {
            std::size_t pos = 0;
            while (pos < h && c[pos] + 1 == m.p()) c[pos++] = 0;
            if (pos == h) break;
            ++c[pos];
            if (auto f = try_combo(c)) return {IsoVerdict::yes, *f};
        }
        return {IsoVerdict::no, std::nullopt};
    }
    Rng rng(seed ^ 0x15030ull);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<uint32_t> c(h);
        for (auto& v : c) v = rng.below(m.p());
        if (auto f = try_combo(c)) return {IsoVerdict::yes, *f};
    }
    return {IsoVerdict::unknown, std::nullopt};
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    DirectSum s;
    if (parts.empty()) fail("direct_sum of nothing needs an algebra; use zero_module");
    s.mod.alg = parts.front().alg;
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (!same_algebra(part.alg, s.mod.alg)) fail("direct_sum: algebra mismatch");
        s.offsets.push_back(total);
        total += part.dim;
    }
    s.mod.dim = total;
    for (std::size_t i = 0; i < s.mod.alg->dim; ++i) {
        Mat blk(total, total, s.mod.alg->p);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Mat& a = parts[k].action[i];
            for (std::size_t r = 0; r < a.rows; ++r)
                for (std::size_t c = 0; c < a.cols; ++c)
                    blk.at(s.offsets[k] + r, s.offsets[k] + c) = a.at(r, c);
        }
        s.mod.action.push_back(std::move(blk));
    }
    return s;
}

ModuleMap summand_injection(const DirectSum& s, const std::vector<Module>& parts, std::size_t k) {
    Mat m(s.mod.dim, parts[k].dim, s.mod.p());
    for (std::size_t i = 0; i < parts[k].dim; ++i) m.at(s.offsets[k] + i, i) = 1;
    return {parts[k], s.mod, std::move(m)};
}

ModuleMap summand_projection(const DirectSum& s, const std::vector<Module>& parts, std::size_t k) {
    Mat m(parts[k].dim, s.mod.dim, s.mod.p());
    for (std::size_t i = 0; i < parts[k].dim; ++i) m.at(i, s.offsets[k] + i) = 1;
    return {s.mod, parts[k], std::move(m)};
}

namespace {

/// Assemble the module of a quiver representation: vertex blocks in vertex
/// order, arrow matrices acting between blocks.
Module module_from_rep(const AlgebraPtr& a, const std::vector<std::size_t>& vdims,
                       const std::vector<Mat>& arrow_mats) {
    const Quiver& q = a->pres->quiver;
    std::vector<std::size_t> off(q.vertices.size() + 1, 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) off[v + 1] = off[v] + vdims[v];
    const std::size_t d = off.back();

    Module m;
    m.alg = a;
    m.dim = d;
    for (std::size_t b = 0; b < a->dim; ++b) {
        const Path& path = a->basis_paths[b];
        std::size_t src = path.source;
        std::size_t tgt = path_target(q, path);
        Mat blk(vdims[src], vdims[src], a->p);
        if (path.arrows.empty()) {
            blk = Mat::identity(vdims[src], a->p);
        } else {
            blk = arrow_mats[path.arrows[0]];
            for (std::size_t t = 1; t < path.arrows.size(); ++t)
                blk = mul(arrow_mats[path.arrows[t]], blk);
        }
        Mat full(d, d, a->p);
        for (std::size_t r = 0; r < blk.rows; ++r)
            for (std::size_t c = 0; c < blk.cols; ++c) full.at(off[tgt] + r, off[src] + c) = blk.at(r, c);
        m.action.push_back(std::move(full));
    }
    return m;
}

bool rep_satisfies_relations(const AlgebraPtr& a, const std::vector<std::size_t>& vdims,
                             const std::vector<Mat>& arrow_mats) {
    for (const auto& rel : a->pres->relations) {
        std::size_t src = rel.terms[0].path.source;
        std::size_t tgt = path_target(a->pres->quiver, rel.terms[0].path);
        Mat sum(vdims[tgt], vdims[src], a->p);
        for (const auto& term : rel.terms) {
            Mat prod = arrow_mats[term.path.arrows[0]];
            for (std::size_t t = 1; t < term.path.arrows.size(); ++t)
                prod = mul(arrow_mats[term.path.arrows[t]], prod);
            sum = add(sum, scalar_mul(term.coeff, prod));
        }
        if (!is_zero(sum)) return false;
    }
    return true;
}

}  // namespace

std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t dim_cap,
                                      std::size_t* raw_count, std::size_t budget) {
    if (!a->pres) fail("module enumeration needs a quiver presentation");
    const Quiver& q = a->pres->quiver;
    const std::size_t nv = q.vertices.size();
    const uint32_t p = a->p;

    std::vector<Module> out;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;  // signature -> indices
    std::size_t raw = 0;

    std::vector<std::size_t> vdims(nv, 0);
    for (;;) {  // odometer over dimension vectors with sum in [1, dim_cap]
        std::size_t pos = 0;
        while (pos < nv && vdims[pos] == dim_cap) vdims[pos++] = 0;
        if (pos == nv) break;
        ++vdims[pos];
        std::size_t total = 0;
        for (auto d : vdims) total += d;
        if (total == 0 || total > dim_cap) continue;

        std::size_t cells = 0;
        for (const auto& ar : q.arrows) cells += vdims[ar.src] * vdims[ar.tgt];
        double combos = 1;
        for (std::size_t c = 0; c < cells; ++c) {
            combos *= p;
            if (combos > double(budget)) fail("enumeration budget exceeded");
        }

        std::vector<uint32_t> flat(cells, 0);
        bool first = true;
        for (;;) {
            if (!first) {
                std::size_t fp_pos = 0;
                while (fp_pos < cells && flat[fp_pos] + 1 == p) flat[fp_pos++] = 0;
                if (fp_pos == cells) break;
                ++flat[fp_pos];
            }
            first = false;

            std::vector<Mat> arrow_mats;
            std::size_t idx = 0;
            for (const auto& ar : q.arrows) {
                Mat mat(vdims[ar.tgt], vdims[ar.src], p);
                for (auto& v : mat.a) v = flat[idx++];
                arrow_mats.push_back(std::move(mat));
            }
            if (!rep_satisfies_relations(a, vdims, arrow_mats)) continue;
            Module m = module_from_rep(a, vdims, arrow_mats);
            ++raw;

            auto sig = iso_signature(m);
            auto& bucket = buckets[sig];
            bool known = false;
            for (auto i : bucket) {
                auto r = is_isomorphic(m, out[i]);
                if (r.verdict == IsoVerdict::yes) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                bucket.push_back(out.size());
                out.push_back(std::move(m));
            }
            if (cells == 0) break;
        }
    }
    if (raw_count) *raw_count = raw;
    return out;
}

Module random_module(const AlgebraPtr& a, std::size_t dim_total, Rng& rng) {
    if (!a->pres) fail("random modules need a quiver presentation");
    const Quiver& q = a->pres->quiver;
    const std::size_t nv = q.vertices.size();
    if (dim_total == 0) return zero_module(a);
    for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::size_t> vdims(nv, 0);
        for (std::size_t t = 0; t < dim_total; ++t) ++vdims[rng.below(uint32_t(nv))];
        std::vector<Mat> arrow_mats;
        for (const auto& ar : q.arrows) {
            Mat mat(vdims[ar.tgt], vdims[ar.src], a->p);
            for (auto& v : mat.a) v = rng.below(a->p);
            arrow_mats.push_back(std::move(mat));
        }
        if (rep_satisfies_relations(a, vdims, arrow_mats))
            return module_from_rep(a, vdims, arrow_mats);
    }
    // semisimple fallback always satisfies admissible relations
    std::vector<std::size_t> vdims(nv, 0);
    for (std::size_t t = 0; t < dim_total; ++t) ++vdims[rng.below(uint32_t(nv))];
    std::vector<Mat> zero_mats;
    for (const auto& ar : q.arrows) zero_mats.push_back(Mat(vdims[ar.tgt], vdims[ar.src], a->p));
    return module_from_rep(a, vdims, zero_mats);
}

}  // namespace homkit
