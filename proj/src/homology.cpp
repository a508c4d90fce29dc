#include "homkit/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace homkit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("homology: " + msg); }
[[noreturn]] void bug(const std::string& msg) { throw std::logic_error("homology: " + msg); }

std::vector<uint32_t> basis_vec(std::size_t dim, std::size_t i) {
    std::vector<uint32_t> v(dim, 0);
    v[i] = 1;
    return v;
}

std::vector<uint32_t> row_of(const Mat& m, std::size_t r) {
    return std::vector<uint32_t>(m.a.begin() + r * m.cols, m.a.begin() + (r + 1) * m.cols);
}

Mat flatten_functionals(const std::vector<Mat>& fs, uint32_t p, std::size_t cells) {
    Mat flat(fs.size(), cells, p);
    for (std::size_t t = 0; t < fs.size(); ++t)
        for (std::size_t i = 0; i < cells; ++i) flat.at(t, i) = fs[t].a[i];
    return flat;
}

}  // namespace

std::string Extent::str() const {
    switch (kind) {
        case Kind::exact: return std::to_string(value);
        case Kind::at_least: return ">=" + std::to_string(value);
        default: return "inf";
    }
}

Tri extent_le(const Extent& e, std::size_t k) {
    switch (e.kind) {
        case Extent::Kind::exact: return e.value <= k ? Tri::yes : Tri::no;
        case Extent::Kind::at_least: return e.value > k ? Tri::no : Tri::unknown;
        default: return Tri::no;
    }
}

Tri extent_ge(const Extent& e, std::size_t k) {
    switch (e.kind) {
        case Extent::Kind::exact: return e.value >= k ? Tri::yes : Tri::no;
        case Extent::Kind::at_least: return e.value >= k ? Tri::yes : Tri::unknown;
        default: return Tri::yes;
    }
}

Tri extent_eq(const Extent& a, const Extent& b) {
    if (a.is_exact() && b.is_exact()) return a.value == b.value ? Tri::yes : Tri::no;
    if (a.is_infinite() && b.is_infinite()) return Tri::yes;
    if (a.is_exact() && b.is_infinite()) return Tri::no;
    if (a.is_infinite() && b.is_exact()) return Tri::no;
    if (a.kind == Extent::Kind::at_least && b.is_exact() && a.value > b.value) return Tri::no;
    if (b.kind == Extent::Kind::at_least && a.is_exact() && b.value > a.value) return Tri::no;
    return Tri::unknown;
}

std::vector<std::size_t> ProjSum::multiplicities() const {
    std::vector<std::size_t> m(alg->idempotents.size(), 0);
    for (auto t : types) ++m[t];
    return m;
}

ProjSum proj_sum(const AlgebraPtr& a, const std::vector<std::size_t>& types) {
    ProjSum s;
    s.alg = a;
    s.types = types;
    if (types.empty()) {
        s.mod = zero_module(a);
        return s;
    }
    Module reg = regular_module(a);
    std::vector<Module> parts;
    for (auto c : types) {
        Mat rows = row_space(transpose(a->right_mult(a->idempotents[c])));
        parts.push_back(submodule_module(reg, rows));
        // local coordinates of the generator e_c within Lambda e_c
        auto sol = solve(transpose(rows), transpose(mat_from_rows({a->idempotents[c]}, a->dim, a->p)));
        if (!sol) bug("idempotent does not lie in its own projective");
        std::vector<uint32_t> gen(rows.rows);
        for (std::size_t t = 0; t < rows.rows; ++t) gen[t] = sol->at(t, 0);
        s.basis_rows.push_back(std::move(rows));
        s.gen_local.push_back(std::move(gen));
    }
    DirectSum ds = direct_sum(parts);
    s.mod = std::move(ds.mod);
    s.offsets = std::move(ds.offsets);
    return s;
}

ModuleMap proj_map_from_generators(const ProjSum& P, const Module& m,
                                   const std::vector<std::vector<uint32_t>>& images) {
    if (images.size() != P.types.size()) fail("one generator image per summand required");
    Mat f(m.dim, P.dim(), m.p());
    for (std::size_t j = 0; j < P.types.size(); ++j) {
        const Mat& rows = P.basis_rows[j];
        Mat e_act = act(m, m.alg->idempotents[P.types[j]]);
        if (apply_vec(e_act, images[j]) != images[j])
            fail("generator image is not fixed by its idempotent");
        for (std::size_t t = 0; t < rows.rows; ++t) {
            auto col = apply_vec(act(m, row_of(rows, t)), images[j]);
            for (std::size_t r = 0; r < m.dim; ++r) f.at(r, P.offsets[j] + t) = col[r];
        }
    }
    return make_map(P.mod, m, std::move(f));
}

std::vector<std::vector<std::vector<uint32_t>>> element_matrix(const ProjSum& P, const ProjSum& Q,
                                                               const ModuleMap& f) {
    const AlgebraPtr& a = P.alg;
    std::vector<std::vector<std::vector<uint32_t>>> elems(
        Q.types.size(), std::vector<std::vector<uint32_t>>(P.types.size()));
    for (std::size_t j = 0; j < P.types.size(); ++j) {
        std::vector<uint32_t> gen(P.dim(), 0);
        for (std::size_t t = 0; t < P.gen_local[j].size(); ++t)
            gen[P.offsets[j] + t] = P.gen_local[j][t];
        auto w = apply_vec(f.m, gen);
        for (std::size_t l = 0; l < Q.types.size(); ++l) {
            std::vector<uint32_t> elem(a->dim, 0);
            const Mat& rows = Q.basis_rows[l];
            for (std::size_t t = 0; t < rows.rows; ++t) {
                uint32_t c = w[Q.offsets[l] + t];
                if (!c) continue;
                for (std::size_t k = 0; k < a->dim; ++k)
                    elem[k] = fp_add(elem[k], fp_mul(c, rows.at(t, k), a->p), a->p);
            }
            elems[l][j] = std::move(elem);
        }
    }
    return elems;
}

ProjSum dualize_proj(const ProjSum& P) {
    return proj_sum(opposite(P.alg), P.types);
}

ModuleMap dual_map(const ProjSum& P, const ProjSum& Q, const ModuleMap& f, const ProjSum& p_dual,
                   const ProjSum& q_dual) {
    const AlgebraPtr& a = P.alg;
    auto elems = element_matrix(P, Q, f);
    Mat d(p_dual.dim(), q_dual.dim(), a->p);
    for (std::size_t l = 0; l < Q.types.size(); ++l) {
        const Mat& yrows = q_dual.basis_rows[l];
        for (std::size_t t = 0; t < yrows.rows; ++t) {
            auto y = row_of(yrows, t);
            for (std::size_t j = 0; j < P.types.size(); ++j) {
                // slot-j component of f^*(y in slot l) is a_{lj} * y in Lambda
                auto comp = a->multiply(elems[l][j], y);
                auto sol = solve(transpose(p_dual.basis_rows[j]),
                                 transpose(mat_from_rows({comp}, a->dim, a->p)));
                if (!sol) bug("dual map component escapes its summand");
                for (std::size_t r = 0; r < sol->rows; ++r)
                    d.at(p_dual.offsets[j] + r, q_dual.offsets[l] + t) = sol->at(r, 0);
            }
        }
    }
    return make_map(q_dual.mod, p_dual.mod, std::move(d));
}

std::vector<std::pair<std::size_t, std::vector<uint32_t>>> cover_generators(const Module& m) {
    std::vector<std::pair<std::size_t, std::vector<uint32_t>>> gens;
    if (m.dim == 0) return gens;
    Structure st = module_structure(m);
    for (std::size_t i = 0; i < m.alg->idempotents.size(); ++i) {
        Mat ei_top = row_space(transpose(act(st.top, m.alg->idempotents[i])));
        if (ei_top.rows == 0) continue;
        auto lifts = solve(st.top_proj.m, transpose(ei_top));
        if (!lifts) bug("top basis does not lift");
        Mat e_act = act(m, m.alg->idempotents[i]);
        for (std::size_t s = 0; s < ei_top.rows; ++s) {
            std::vector<uint32_t> x(m.dim);
            for (std::size_t r = 0; r < m.dim; ++r) x[r] = lifts->at(r, s);
            gens.push_back({i, apply_vec(e_act, x)});
        }
    }
    return gens;
}

Extent ProjResolution::pd() const {
    if (terminated) return Extent::exact(terms.empty() ? 0 : terms.size() - 1);
    if (periodic) return Extent::inf();
    return Extent::at_least(terms.size());
}

ProjResolution min_proj_resolution(const Module& m, std::size_t degree) {
    ProjResolution res;
    res.target = m;

    auto gens = cover_generators(m);
    std::vector<std::size_t> types;
    std::vector<std::vector<uint32_t>> images;
    for (auto& [i, v] : gens) {
        types.push_back(i);
        images.push_back(v);
    }
    res.terms.push_back(proj_sum(m.alg, types));
    res.aug = proj_map_from_generators(res.terms[0], m, images);
    if (m.dim > 0 && !is_epi(res.aug)) bug("projective cover is not epic");

    std::vector<Module> syzygies;       // kernel modules, for periodicity detection
    std::vector<std::vector<std::size_t>> syz_sigs;
    Module kernel_mod;
    ModuleMap incl;

    Mat krows = kernel_basis(res.aug.m);
    res.kernel_rows.push_back(krows);
    for (;;) {
        const ProjSum& top_term = res.terms.back();
        // minimality: the kernel lies in J P
        if (krows.rows > 0) {
            Mat rad = module_structure(top_term.mod).radical_rows;
            for (std::size_t r = 0; r < krows.rows; ++r)
                if (!in_row_space(rad, row_of(krows, r)))
                    bug("cover kernel escapes the radical (resolution not minimal)");
        }
        if (krows.rows == 0) {
            res.terminated = true;
            break;
        }
        if (res.terms.size() > degree) break;

        kernel_mod = submodule_module(top_term.mod, krows, &incl);
        auto sig = iso_signature(kernel_mod);
        for (std::size_t s = 0; s < syzygies.size(); ++s)
            if (syz_sigs[s] == sig &&
                is_isomorphic(syzygies[s], kernel_mod).verdict == IsoVerdict::yes) {
                res.periodic = true;
                break;
            }
        syzygies.push_back(kernel_mod);
        syz_sigs.push_back(std::move(sig));

        auto kgens = cover_generators(kernel_mod);
        std::vector<std::size_t> ktypes;
        std::vector<std::vector<uint32_t>> kimages;
        for (auto& [i, v] : kgens) {
            ktypes.push_back(i);
            kimages.push_back(v);
        }
        ProjSum next = proj_sum(m.alg, ktypes);
        ModuleMap cover = proj_map_from_generators(next, kernel_mod, kimages);
        if (!is_epi(cover)) bug("projective cover is not epic");
        res.diffs.push_back(compose_maps(incl, cover));
        krows = kernel_basis(cover.m);
        res.kernel_rows.push_back(krows);
        res.terms.push_back(std::move(next));
    }
    return res;
}

ProjResolution padded_resolution(const Module& m, std::size_t degree) {
    ProjResolution base = min_proj_resolution(m, degree);
    const std::size_t n = base.terms.size() - 1;
    const AlgebraPtr& a = m.alg;
    const std::size_t ni = a->idempotents.size();

    // pad summand type in homological degree i, for 1 <= i <= n
    auto tau = [&](std::size_t i) { return (i - 1) % ni; };

    ProjResolution res;
    res.target = m;
    res.terminated = base.terminated;
    res.periodic = base.periodic;

    std::vector<ProjSum> terms;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> types = base.terms[i].types;
        if (i >= 1) types.push_back(tau(i));      // A_i
        if (i < n) types.push_back(tau(i + 1));   // B_i, hit identically by A_{i+1}
        terms.push_back(proj_sum(a, types));
    }

    auto base_block = [&](const Mat& src_to_tgt, std::size_t ti, std::size_t si) {
        // embeds a base-level map into the padded terms: base parts sit first
        Mat f(terms[ti].dim(), terms[si].dim(), a->p);
        for (std::size_t r = 0; r < src_to_tgt.rows; ++r)
            for (std::size_t c = 0; c < src_to_tgt.cols; ++c) f.at(r, c) = src_to_tgt.at(r, c);
        return f;
    };

    {
        Mat f(m.dim, terms[0].dim(), a->p);
        for (std::size_t r = 0; r < base.aug.m.rows; ++r)
            for (std::size_t c = 0; c < base.aug.m.cols; ++c) f.at(r, c) = base.aug.m.at(r, c);
        res.aug = make_map(terms[0].mod, m, std::move(f));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        Mat f = base_block(base.diffs[i - 1].m, i - 1, i);
        // A_i inside term i -> B_{i-1} inside term i-1, identity on Lambda e_{tau(i)}
        std::size_t a_slot = base.terms[i].types.size();
        std::size_t b_slot = base.terms[i - 1].types.size() + (i - 1 >= 1 ? 1 : 0);
        std::size_t a_off = terms[i].offsets[a_slot];
        std::size_t b_off = terms[i - 1].offsets[b_slot];
        for (std::size_t t = 0; t < terms[i].basis_rows[a_slot].rows; ++t)
            f.at(b_off + t, a_off + t) = 1;
        res.diffs.push_back(make_map(terms[i].mod, terms[i - 1].mod, std::move(f)));
    }
    res.kernel_rows.push_back(kernel_basis(res.aug.m));
    for (std::size_t i = 1; i <= n; ++i) res.kernel_rows.push_back(kernel_basis(res.diffs[i - 1].m));
    res.terms = std::move(terms);
    return res;
}

namespace {

struct DualComplex {
    std::vector<ProjSum> duals;      // P_i dualized
    std::vector<ModuleMap> maps;     // maps[i] : P_i^* -> P_{i+1}^*, i.e. dual of diffs[i]
};

DualComplex dualize_resolution(const ProjResolution& res, std::size_t up_to) {
    DualComplex dc;
    std::size_t last = std::min(up_to, res.terms.size() - 1);
    for (std::size_t i = 0; i <= last; ++i) dc.duals.push_back(dualize_proj(res.terms[i]));
    for (std::size_t i = 0; i + 1 <= last; ++i)
        dc.maps.push_back(
            dual_map(res.terms[i + 1], res.terms[i], res.diffs[i], dc.duals[i + 1], dc.duals[i]));
    for (std::size_t i = 0; i + 1 < dc.maps.size(); ++i)
        if (!is_zero(mul(dc.maps[i + 1].m, dc.maps[i].m))) bug("dualized resolution is not a complex");
    return dc;
}

}  // namespace

std::vector<std::size_t> ext_dims_from_resolution(const ProjResolution& res, std::size_t max_i) {
    if (!res.terminated && res.terms.size() < max_i + 2)
        fail("resolution too short for the requested Ext range");
    DualComplex dc = dualize_resolution(res, res.terms.size() - 1);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i <= max_i; ++i) {
        if (i >= dc.duals.size()) {
            dims.push_back(0);
            continue;
        }
        std::size_t dim_pi = dc.duals[i].dim();
        std::size_t rank_out = i < dc.maps.size() ? rank(dc.maps[i].m) : 0;
        std::size_t rank_in = (i >= 1 && i - 1 < dc.maps.size()) ? rank(dc.maps[i - 1].m) : 0;
        dims.push_back(dim_pi - rank_out - rank_in);
    }
    return dims;
}

ExtModule ext_lambda(const Module& m, std::size_t i) {
    ExtModule e;
    e.base = m;
    e.degree = i;
    ProjResolution res = min_proj_resolution(m, i + 1);
    const std::size_t last = res.terms.size() - 1;
    if (i > last) {
        if (!res.terminated) bug("resolution shorter than requested without terminating");
        e.value = zero_module(opposite(m.alg));
        return e;
    }
    DualComplex dc = dualize_resolution(res, std::min(i + 1, last));

    Mat ker_rows = i < dc.maps.size() ? kernel_basis(dc.maps[i].m)
                                      : row_space(Mat::identity(dc.duals[i].dim(), m.p()));
    if (i >= dc.maps.size() && !res.terminated) bug("missing outgoing dual map");
    Mat im_rows = i >= 1 ? image_rows(dc.maps[i - 1]) : Mat(0, dc.duals[i].dim(), m.p());
    for (std::size_t r = 0; r < im_rows.rows; ++r)
        if (!in_row_space(ker_rows, row_of(im_rows, r))) bug("image escapes kernel in dual complex");

    Module sub = submodule_module(dc.duals[i].mod, ker_rows);
    Mat im_local(im_rows.rows, ker_rows.rows, m.p());
    if (im_rows.rows > 0) {
        auto sol = solve(transpose(ker_rows), transpose(im_rows));
        if (!sol) bug("image coordinates unsolvable");
        im_local = transpose(*sol);
    }
    e.value = quotient_module(sub, im_local);
    return e;
}

ExtModule lambda_dual(const Module& m) {
    ExtModule e = ext_lambda(m, 0);
    if (e.value.dim != hom_space(m, regular_module(m.alg)).size())
        bug("dual dimension disagrees with the hom space");
    return e;
}

Module transpose_module(const Module& m) {
    ProjResolution res = min_proj_resolution(m, 1);
    if (res.terms.size() < 2) {
        if (!res.terminated) bug("presentation truncated unexpectedly");
        return zero_module(opposite(m.alg));
    }
    ProjSum d0 = dualize_proj(res.terms[0]);
    ProjSum d1 = dualize_proj(res.terms[1]);
    ModuleMap f_star = dual_map(res.terms[1], res.terms[0], res.diffs[0], d1, d0);
    return cokernel_of(f_star);
}

HomDual hom_dual(const Module& m) {
    HomDual hd;
    const AlgebraPtr& b = m.alg;
    AlgebraPtr op = opposite(b);
    hd.functionals = hom_space(m, regular_module(b));
    const std::size_t s = hd.functionals.size();
    if (s == 0) {
        hd.dual = zero_module(op);
        return hd;
    }
    const std::size_t cells = b->dim * m.dim;
    Mat flat = flatten_functionals(hd.functionals, b->p, cells);
    Mat flat_t = transpose(flat);
    std::vector<Mat> action;
    for (std::size_t c = 0; c < b->dim; ++c) {
        Mat rc = b->right_mult(basis_vec(b->dim, c));
        Mat images(cells, s, b->p);
        for (std::size_t t = 0; t < s; ++t) {
            Mat img = mul(rc, hd.functionals[t]);
            for (std::size_t i = 0; i < cells; ++i) images.at(i, t) = img.a[i];
        }
        auto sol = solve(flat_t, images);
        if (!sol) bug("hom space not closed under the dual action");
        action.push_back(std::move(*sol));
    }
    hd.dual = module_from_action(op, std::move(action));
    return hd;
}

Mat functional_of(const HomDual& hd, const std::vector<uint32_t>& coords) {
    if (hd.functionals.empty()) fail("functional_of on a zero dual");
    Mat f(hd.functionals[0].rows, hd.functionals[0].cols, hd.functionals[0].p);
    for (std::size_t t = 0; t < hd.functionals.size(); ++t) {
        if (!coords[t]) continue;
        for (std::size_t i = 0; i < f.a.size(); ++i)
            f.a[i] = fp_add(f.a[i], fp_mul(coords[t], hd.functionals[t].a[i], f.p), f.p);
    }
    return f;
}

std::vector<uint32_t> coords_of_functional(const HomDual& hd, const Mat& f) {
    const std::size_t cells = f.rows * f.cols;
    Mat flat = flatten_functionals(hd.functionals, f.p, cells);
    Mat target(cells, 1, f.p);
    for (std::size_t i = 0; i < cells; ++i) target.at(i, 0) = f.a[i];
    auto sol = solve(transpose(flat), target);
    if (!sol) bug("functional does not lie in the recorded basis");
    std::vector<uint32_t> coords(hd.functionals.size());
    for (std::size_t t = 0; t < coords.size(); ++t) coords[t] = sol->at(t, 0);
    return coords;
}

ModuleMap dual_of_map(const ModuleMap& f, const HomDual& dual_of_src, const HomDual& dual_of_tgt) {
    Mat d(dual_of_src.dual.dim, dual_of_tgt.dual.dim, f.m.p);
    for (std::size_t t = 0; t < dual_of_tgt.functionals.size(); ++t) {
        auto coords = coords_of_functional(dual_of_src, mul(dual_of_tgt.functionals[t], f.m));
        for (std::size_t r = 0; r < coords.size(); ++r) d.at(r, t) = coords[r];
    }
    return make_map(dual_of_tgt.dual, dual_of_src.dual, std::move(d));
}

EvalData eval_data(const Module& m) {
    EvalData ed;
    ed.d1 = hom_dual(m);
    ed.d2 = hom_dual(ed.d1.dual);
    Mat sigma(ed.d2.dual.dim, m.dim, m.p());
    const std::size_t s1 = ed.d1.functionals.size();
    for (std::size_t x = 0; x < m.dim; ++x) {
        // ev_x : M^* -> Lambda as a map of opposite-algebra modules
        Mat ev(m.alg->dim, s1, m.p());
        for (std::size_t t = 0; t < s1; ++t)
            for (std::size_t r = 0; r < m.alg->dim; ++r) ev.at(r, t) = ed.d1.functionals[t].at(r, x);
        if (ed.d2.dual.dim > 0) {
            auto coords = coords_of_functional(ed.d2, ev);
            for (std::size_t r = 0; r < coords.size(); ++r) sigma.at(r, x) = coords[r];
        } else if (!is_zero(ev)) {
            bug("nonzero evaluation functional over a zero double dual");
        }
    }
    ed.sigma = make_map(m, ed.d2.dual, std::move(sigma));
    return ed;
}

EvalReport eval_report(const Module& m) {
    EvalReport rep;
    rep.data = eval_data(m);
    std::size_t rk = rank(rep.data.sigma.m);
    rep.ker_dim = m.dim - rk;
    rep.coker_dim = rep.data.d2.dual.dim - rk;

    Module tr = transpose_module(m);
    ProjResolution res = min_proj_resolution(tr, 3);
    auto dims = ext_dims_from_resolution(res, 2);
    rep.ext1_tr_dim = dims[1];
    rep.ext2_tr_dim = dims[2];
    if (rep.ker_dim != rep.ext1_tr_dim || rep.coker_dim != rep.ext2_tr_dim)
        bug("evaluation kernel/cokernel disagree with Ext^{1,2} of the transpose");
    rep.torsionless = rep.ker_dim == 0;
    rep.reflexive = rep.ker_dim == 0 && rep.coker_dim == 0;
    return rep;
}

namespace {

struct ExtDimData {
    std::vector<std::size_t> dims;
    bool terminated = false;
};

ExtDimData ext_dim_vector(const Module& m, std::size_t bound) {
    ProjResolution res = min_proj_resolution(m, bound + 1);
    ExtDimData d;
    d.dims = ext_dims_from_resolution(res, bound);
    d.terminated = res.terminated;
    return d;
}

Extent grade_from_dims(const ExtDimData& d, std::size_t from, std::size_t bound) {
    for (std::size_t i = from; i <= bound; ++i)
        if (d.dims[i] != 0) return Extent::exact(i);
    return d.terminated ? Extent::inf() : Extent::at_least(bound + 1);
}

}  // namespace

Extent grade_of(const Module& m, std::size_t bound) {
    if (m.dim == 0) return Extent::inf();
    return grade_from_dims(ext_dim_vector(m, bound), 0, bound);
}

Extent reduced_grade_of(const Module& m, std::size_t bound) {
    if (m.dim == 0) return Extent::inf();
    return grade_from_dims(ext_dim_vector(m, bound), 1, bound);
}

GradeReport grade_report(const Module& m, std::size_t bound, std::size_t lattice_cap) {
    GradeReport rep;
    rep.bound = bound;
    if (m.dim == 0) {
        rep.grade = rep.reduced_grade = rep.strong_grade = Extent::inf();
        return rep;
    }
    ExtDimData d = ext_dim_vector(m, bound);
    rep.ext_dims = d.dims;
    rep.grade = grade_from_dims(d, 0, bound);
    rep.reduced_grade = grade_from_dims(d, 1, bound);

    SubmoduleLattice lat = all_submodules(m, lattice_cap);
    rep.lattice_complete = lat.complete;
    bool any = false, all_exact = true, lo_hit = false;
    std::size_t lo = SIZE_MAX;
    for (const auto& rows : lat.subspaces) {
        if (rows.rows == 0) continue;
        Extent g = rows.rows == m.dim ? rep.grade : grade_of(submodule_module(m, rows), bound);
        if (g.is_infinite()) continue;
        any = true;
        if (!g.is_exact()) all_exact = false;
        if (g.value < lo) {
            lo = g.value;
            lo_hit = g.is_exact();
        } else if (g.value == lo && g.is_exact()) {
            lo_hit = true;
        }
    }
    if (!any)
        rep.strong_grade = Extent::inf();
    else if (all_exact || lo_hit)
        rep.strong_grade = Extent::exact(lo);
    else
        rep.strong_grade = Extent::at_least(lo);
    return rep;
}

TorsionfreeReport is_k_torsionfree(const Module& m, std::size_t k) {
    if (k < 1) fail("is_k_torsionfree needs k >= 1");
    Module tr = transpose_module(m);
    TorsionfreeReport rep;
    rep.tr_reduced_grade = reduced_grade_of(tr, k + 1);
    Tri ge = extent_ge(rep.tr_reduced_grade, k + 1);
    if (ge == Tri::unknown) bug("reduced grade of the transpose undecided within its own bound");
    rep.is_torsionfree = ge == Tri::yes;
    if (k <= 2) {
        EvalReport ev = eval_report(m);
        bool expect = k == 1 ? ev.torsionless : ev.reflexive;
        if (expect != rep.is_torsionfree)
            bug("k-torsionfree disagrees with the evaluation map classification");
    }
    return rep;
}

Module syzygy(const Module& m, std::size_t k) {
    if (k < 1) fail("syzygy needs k >= 1");
    ProjResolution res = min_proj_resolution(m, k - 1);
    if (k - 1 >= res.kernel_rows.size()) return zero_module(m.alg);
    return submodule_module(res.terms[k - 1].mod, res.kernel_rows[k - 1]);
}

Extent InjResolution::id() const {
    if (terminated) return Extent::exact(terms.empty() ? 0 : terms.size() - 1);
    if (periodic) return Extent::inf();
    return Extent::at_least(terms.size());
}

InjResolution min_inj_resolution(const Module& m, std::size_t cap) {
    InjResolution res;
    res.target = m;
    res.cosyzygies.push_back(m);
    const AlgebraPtr& a = m.alg;
    Fundamentals fund = fundamental_modules(a);
    std::vector<Mat> soc_gens;  // socle generator of each indecomposable injective
    for (const auto& inj : fund.injectives) {
        Mat soc = module_structure(inj).socle_rows;
        if (soc.rows != 1) bug("indecomposable injective has non-simple socle");
        soc_gens.push_back(soc);
    }
    auto gens = a->idempotents;
    for (auto g : a->generators) gens.push_back(basis_vec(a->dim, g));

    Module c = m;
    while (c.dim != 0 && res.terms.size() < cap) {
        Mat soc = module_structure(c).socle_rows;
        std::vector<std::size_t> mult(a->idempotents.size(), 0);
        std::vector<Module> parts;
        std::vector<std::pair<std::vector<uint32_t>, std::size_t>> prescribed;  // (soc vector in C, part index)
        for (std::size_t i = 0; i < a->idempotents.size(); ++i) {
            Mat ei_soc = row_space(mul(soc, transpose(act(c, a->idempotents[i]))));
            mult[i] = ei_soc.rows;
            for (std::size_t s = 0; s < ei_soc.rows; ++s) {
                prescribed.push_back({row_of(ei_soc, s), parts.size()});
                parts.push_back(fund.injectives[i]);
            }
        }
        std::size_t total_soc = 0;
        for (auto mu : mult) total_soc += mu;
        if (total_soc != soc.rows) bug("socle does not split along the idempotents");

        Module env = parts.empty() ? zero_module(a) : direct_sum(parts).mod;
        std::vector<std::size_t> offsets;
        {
            std::size_t off = 0;
            for (const auto& part : parts) {
                offsets.push_back(off);
                off += part.dim;
            }
        }

        // lifting system: Phi intertwines and extends the socle assignment
        const std::size_t de = env.dim, dc = c.dim;
        std::vector<std::vector<uint32_t>> rows;
        std::vector<uint32_t> rhs;
        for (const auto& g : gens) {
            Mat gc = act(c, g), ge = act(env, g);
            for (std::size_t r = 0; r < de; ++r)
                for (std::size_t j = 0; j < dc; ++j) {
                    std::vector<uint32_t> row(de * dc, 0);
                    for (std::size_t cc = 0; cc < dc; ++cc)
                        row[r * dc + cc] = fp_add(row[r * dc + cc], gc.at(cc, j), a->p);
                    for (std::size_t cc = 0; cc < de; ++cc)
                        row[cc * dc + j] = fp_sub(row[cc * dc + j], ge.at(r, cc), a->p);
                    rows.push_back(std::move(row));
                    rhs.push_back(0);
                }
        }
        for (std::size_t t = 0; t < prescribed.size(); ++t) {
            const auto& [v, part] = prescribed[t];
            std::size_t type = SIZE_MAX;
            {  // recover the idempotent type of this part
                std::size_t seen = 0;
                for (std::size_t i = 0; i < mult.size(); ++i)
                    for (std::size_t s = 0; s < mult[i]; ++s)
                        if (seen++ == part) type = i;
            }
            const Mat& sg = soc_gens[type];
            for (std::size_t r = 0; r < de; ++r) {
                std::vector<uint32_t> row(de * dc, 0);
                for (std::size_t cc = 0; cc < dc; ++cc) row[r * dc + cc] = v[cc];
                std::size_t local = r >= offsets[part] ? r - offsets[part] : SIZE_MAX;
                uint32_t target = (local != SIZE_MAX && local < fund.injectives[type].dim)
                                      ? sg.at(0, local)
                                      : 0;
                rows.push_back(std::move(row));
                rhs.push_back(target);
            }
        }
        Mat sys = mat_from_rows(rows, de * dc, a->p);
        Mat rhs_mat(rhs.size(), 1, a->p);
        for (std::size_t r = 0; r < rhs.size(); ++r) rhs_mat.at(r, 0) = rhs[r];
        auto sol = solve(sys, rhs_mat);
        if (!sol) bug("injective envelope lifting system unsolvable");
        Mat phi(de, dc, a->p);
        for (std::size_t i = 0; i < de * dc; ++i) phi.a[i] = sol->at(i, 0);
        ModuleMap emb = make_map(c, env, std::move(phi));
        if (!is_mono(emb)) bug("injective envelope embedding is not injective");

        res.embeddings.push_back(emb);
        res.terms.push_back(env);
        res.mults.push_back(mult);
        c = cokernel_of(emb);
        res.cosyzygies.push_back(c);
        if (c.dim > 0) {
            auto csig = iso_signature(c);
            for (std::size_t s = 0; s + 1 < res.cosyzygies.size(); ++s)
                if (iso_signature(res.cosyzygies[s]) == csig &&
                    is_isomorphic(res.cosyzygies[s], c).verdict == IsoVerdict::yes) {
                    res.periodic = true;
                    break;
                }
        }
    }
    if (c.dim == 0) res.terminated = true;
    return res;
}

bool is_projective(const Module& m) { return min_proj_resolution(m, 0).terminated; }

bool is_injective(const Module& m) { return min_inj_resolution(m, 1).id() == Extent::exact(0); }

DimsReport dims(const Module& m, std::size_t cap) {
    DimsReport d;
    ProjResolution res = min_proj_resolution(m, cap);
    d.pd = res.pd();
    d.periodic = res.periodic;
    d.id = min_inj_resolution(m, cap + 1).id();
    d.fd = d.pd;  // finitely generated flat = projective over an Artinian algebra
    return d;
}

Extent dominant_dimension(const AlgebraPtr& a, std::size_t cap) {
    InjResolution res = min_inj_resolution(regular_module(a), cap);
    for (std::size_t t = 0; t < res.terms.size(); ++t)
        if (!is_projective(res.terms[t])) return Extent::exact(t);
    return res.terminated ? Extent::inf() : Extent::at_least(res.terms.size());
}

Module leading_injectives(const AlgebraPtr& a) {
    InjResolution res = min_inj_resolution(regular_module(a), 2);
    if (res.terms.empty()) bug("regular module has no injective envelope");
    if (res.terms.size() == 1) return res.terms[0];
    return direct_sum({res.terms[0], res.terms[1]}).mod;
}

PurityReport purity_classify(const Module& m, std::size_t lattice_cap, std::size_t grade_bound) {
    PurityReport rep;
    Module lead = leading_injectives(m.alg);
    rep.pseudo_null = hom_space(m, lead).empty();
    if (m.dim == 0) {
        rep.pure = Tri::unknown;  // purity is defined for nonzero modules only
        return rep;
    }
    Extent g = grade_of(m, grade_bound);
    SubmoduleLattice lat = all_submodules(m, lattice_cap);
    rep.lattice_complete = lat.complete;
    bool undecided = false;
    for (const auto& rows : lat.subspaces) {
        if (rows.rows == 0) continue;
        Extent gx = rows.rows == m.dim ? g : grade_of(submodule_module(m, rows), grade_bound);
        Tri eq = extent_eq(gx, g);
        if (eq == Tri::no) {
            rep.pure = Tri::no;
            rep.impure_witness = rows;
            return rep;
        }
        if (eq == Tri::unknown) undecided = true;
    }
    rep.pure = (!lat.complete || undecided) ? Tri::unknown : Tri::yes;
    return rep;
}

DClassChain d_class_chain(const Module& t, std::size_t k) {
    if (k < 1) fail("d_class_chain needs k >= 1");
    DClassChain chain;
    Module cur = t;
    for (std::size_t stage = 1; stage + 1 <= k; ++stage) {
        EvalData ed = eval_data(cur);
        if (rank(ed.sigma.m) != cur.dim) {
            chain.ok = false;
            chain.failed_stage = stage;
            chain.top = cur;
            return chain;
        }
        auto gens = cover_generators(ed.d1.dual);
        std::vector<std::size_t> types;
        for (auto& [i, v] : gens) types.push_back(i);
        ProjSum p = proj_sum(cur.alg, types);

        Mat emb(p.dim(), ed.d2.dual.dim, cur.p());
        for (std::size_t col = 0; col < ed.d2.dual.dim; ++col) {
            for (std::size_t j = 0; j < gens.size(); ++j) {
                auto val = apply_vec(ed.d2.functionals[col], gens[j].second);
                auto sol = solve(transpose(p.basis_rows[j]),
                                 transpose(mat_from_rows({val}, cur.alg->dim, cur.p())));
                if (!sol) bug("double dual embedding escapes its summand");
                for (std::size_t r = 0; r < sol->rows; ++r)
                    emb.at(p.offsets[j] + r, col) = sol->at(r, 0);
            }
        }
        ModuleMap embedding = make_map(ed.d2.dual, p.mod, std::move(emb));
        if (!is_mono(embedding)) bug("dual of a cover epimorphism is not injective");

        DClassStage st;
        st.t = cur;
        st.t_star = ed.d1.dual;
        st.sigma = ed.sigma;
        st.embedding = embedding;
        st.p = p;
        for (auto& [i, u] : gens) {
            st.cover_types.push_back(i);
            st.cover_images.push_back(u);
        }
        st.next = cokernel_of(embedding);
        cur = st.next;
        chain.stages.push_back(std::move(st));
    }
    chain.top = cur;
    EvalData top_ed = eval_data(cur);
    if (rank(top_ed.sigma.m) != cur.dim) {
        chain.ok = false;
        chain.failed_stage = k;
    }
    return chain;
}

FreeEmbedding torsionless_embedding(const Module& m, bool fatten_to_free) {
    FreeEmbedding fe;
    HomDual hd = hom_dual(m);
    auto gens = cover_generators(hd.dual);
    const AlgebraPtr& a = m.alg;

    if (fatten_to_free) {
        std::vector<Module> parts(gens.size(), regular_module(a));
        Module f = parts.empty() ? zero_module(a) : direct_sum(parts).mod;
        Mat g(f.dim, m.dim, m.p());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Mat uj = functional_of(hd, gens[j].second);
            for (std::size_t r = 0; r < a->dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c) g.at(j * a->dim + r, c) = uj.at(r, c);
        }
        fe.f = f;
        fe.g = make_map(m, f, std::move(g));
    } else {
        std::vector<std::size_t> types;
        for (auto& [i, v] : gens) types.push_back(i);
        ProjSum p = proj_sum(a, types);
        Mat g(p.dim(), m.dim, m.p());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Mat uj = functional_of(hd, gens[j].second);
            for (std::size_t c = 0; c < m.dim; ++c) {
                std::vector<uint32_t> col(a->dim);
                for (std::size_t r = 0; r < a->dim; ++r) col[r] = uj.at(r, c);
                auto sol = solve(transpose(p.basis_rows[j]),
                                 transpose(mat_from_rows({col}, a->dim, a->p)));
                if (!sol) bug("embedding component escapes its summand");
                for (std::size_t r = 0; r < sol->rows; ++r) g.at(p.offsets[j] + r, c) = sol->at(r, 0);
            }
        }
        fe.f = p.mod;
        fe.g = make_map(m, p.mod, std::move(g));
    }
    fe.coker = cokernel_of(fe.g, &fe.coker_proj);
    return fe;
}

}  // namespace homkit
