#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "homkit/module.hpp"
#include "testutil.hpp"

using namespace homkit;
using namespace testutil;

namespace {

struct MatLess {
    bool operator()(const Mat& x, const Mat& y) const {
        if (x.rows != y.rows) return x.rows < y.rows;
        return x.a < y.a;
    }
};

/// Every subspace of GF(p)^d (BFS over single-vector extensions), filtered by
/// invariance under the action. Independent oracle for all_submodules.
std::set<Mat, MatLess> brute_force_invariant_subspaces(const Module& m) {
    std::set<Mat, MatLess> all;
    all.insert(Mat(0, m.dim, m.p()));
    std::vector<Mat> work(all.begin(), all.end());
    std::vector<std::vector<uint32_t>> vecs;
    std::vector<uint32_t> v(m.dim, 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < m.dim && v[pos] + 1 == m.p()) v[pos++] = 0;
        if (pos == m.dim) break;
        ++v[pos];
        vecs.push_back(v);
    }
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const auto& vec : vecs) {
            if (in_row_space(work[i], vec)) continue;
            Mat ext = row_space(vstack(work[i], mat_from_rows({vec}, m.dim, m.p())));
            if (all.insert(ext).second) work.push_back(ext);
        }
    std::set<Mat, MatLess> invariant;
    for (const auto& sub : all) {
        bool ok = true;
        for (std::size_t b = 0; b < m.alg->dim && ok; ++b) {
            Mat image = mul(sub, transpose(m.action[b]));
            for (std::size_t r = 0; r < image.rows && ok; ++r) {
                std::vector<uint32_t> row(image.a.begin() + r * image.cols,
                                          image.a.begin() + (r + 1) * image.cols);
                ok = in_row_space(sub, row);
            }
        }
        if (ok) invariant.insert(sub);
    }
    return invariant;
}

}  // namespace

TEST_CASE("fundamental modules of the fixtures") {
    auto dims = [](const std::vector<Module>& ms) {
        std::vector<std::size_t> d;
        for (const auto& m : ms) d.push_back(m.dim);
        return d;
    };
    {
        auto f = fundamental_modules(semisimple_pair());
        CHECK(dims(f.simples) == std::vector<std::size_t>{1, 1});
        CHECK(dims(f.projectives) == std::vector<std::size_t>{1, 1});
        CHECK(dims(f.injectives) == std::vector<std::size_t>{1, 1});
    }
    {
        auto f = fundamental_modules(a2());
        CHECK(dims(f.projectives) == std::vector<std::size_t>{2, 1});
        CHECK(dims(f.injectives) == std::vector<std::size_t>{1, 2});
        CHECK(dims(f.simples) == std::vector<std::size_t>{1, 1});
    }
    {
        auto f = fundamental_modules(a3_fork());
        CHECK(dims(f.projectives) == std::vector<std::size_t>{3, 1, 1});
        CHECK(dims(f.injectives) == std::vector<std::size_t>{1, 2, 2});
    }
}

TEST_CASE("hom spaces") {
    auto k = fundamental_modules(semisimple_pair()).simples[0];
    CHECK(hom_space(k, k).size() == 1);

    auto a = a2();
    auto f = fundamental_modules(a);
    Module reg = regular_module(a);
    CHECK(hom_space(f.simples[0], reg).empty());   // Hom(S1, Lambda) = 0
    CHECK(hom_space(f.simples[1], reg).size() == 2);  // S2 maps into soc P1 and into P2
}

TEST_CASE("dim Hom(P_i, M) = dim e_i M on 100 random modules per fixture") {
    for (const auto& a : fixture_algebras()) {
        auto f = fundamental_modules(a);
        Rng rng(2024);
        for (int t = 0; t < 100; ++t) {
            Module m = random_module(a, 1 + rng.below(5), rng);
            for (std::size_t i = 0; i < a->idempotents.size(); ++i) {
                std::size_t ei_dim = rank(act(m, a->idempotents[i]));
                CHECK(hom_space(f.projectives[i], m).size() == ei_dim);
            }
        }
    }
}

TEST_CASE("every hom basis element intertwines") {
    auto a = a3_fork();
    auto f = fundamental_modules(a);
    Module reg = regular_module(a);
    for (const auto& h : hom_space(f.injectives[1], reg)) {
        ModuleMap map{f.injectives[1], reg, h};
        verify_map(map);
    }
}

TEST_CASE("duality D") {
    auto a = a2();
    auto f = fundamental_modules(a);
    auto fop = fundamental_modules(opposite(a));

    Module d_simple = duality_D(f.simples[0]);
    CHECK(d_simple.dim == 1);
    CHECK(is_isomorphic(d_simple, fop.simples[0]).verdict == IsoVerdict::yes);

    // D(P_i) is the injective at i over the opposite algebra
    for (std::size_t i = 0; i < 2; ++i) {
        Module d = duality_D(f.projectives[i]);
        CHECK(d.dim == f.projectives[i].dim);
        CHECK(is_isomorphic(d, fop.injectives[i]).verdict == IsoVerdict::yes);
    }

    // D D = identity up to isomorphism
    Rng rng(5);
    for (const auto& alg : fixture_algebras()) {
        Module m = random_module(alg, 3, rng);
        Module dd = duality_D(duality_D(m));
        CHECK(same_algebra(dd.alg, m.alg));
        CHECK(is_isomorphic(dd, m).verdict == IsoVerdict::yes);
    }
}

TEST_CASE("duality is exact on submodule sequences") {
    auto a = a3_fork();
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        Module m = random_module(a, 2 + rng.below(3), rng);
        auto lat = all_submodules(m, 1000);
        const Mat& rows = lat.subspaces[rng.below(uint32_t(lat.subspaces.size()))];
        std::vector<std::vector<uint32_t>> gens;
        for (std::size_t r = 0; r < rows.rows; ++r)
            gens.emplace_back(rows.a.begin() + r * rows.cols, rows.a.begin() + (r + 1) * rows.cols);
        SubQuot sq = sub_quotient(m, gens);
        CHECK(sq.sub.dim + sq.quot.dim == m.dim);
        Module dm = duality_D(m), dsub = duality_D(sq.sub), dquot = duality_D(sq.quot);
        CHECK(dm.dim == dsub.dim + dquot.dim);
        // dual of the projection embeds D(quot) into D(m)
        ModuleMap demb{dquot, dm, transpose(sq.proj.m)};
        verify_map(demb);
        CHECK(is_mono(demb));
    }
}

TEST_CASE("structure: radical, socle, top") {
    {
        auto f = fundamental_modules(semisimple_pair());
        Structure st = module_structure(f.simples[0]);
        CHECK(st.radical_rows.rows == 0);
        CHECK(st.socle_rows.rows == 1);
    }
    {
        auto a = a2();
        auto f = fundamental_modules(a);
        Structure st = module_structure(f.projectives[0]);
        CHECK(st.radical.dim == 1);
        CHECK(st.top.dim == 1);
        CHECK(is_isomorphic(st.radical, f.simples[1]).verdict == IsoVerdict::yes);
        CHECK(is_isomorphic(st.top, f.simples[0]).verdict == IsoVerdict::yes);
    }
    {
        auto d = dual_numbers();
        Module reg = regular_module(d);
        Structure st = module_structure(reg);
        CHECK(st.radical_rows == st.socle_rows);
        CHECK(st.radical.dim == 1);
    }
}

TEST_CASE("sub_quotient edge cases") {
    auto a = a2();
    Module reg = regular_module(a);
    std::vector<std::vector<uint32_t>> basis;
    for (std::size_t i = 0; i < reg.dim; ++i) {
        std::vector<uint32_t> v(reg.dim, 0);
        v[i] = 1;
        basis.push_back(v);
    }
    SubQuot full = sub_quotient(reg, basis);
    CHECK(full.sub.dim == reg.dim);
    CHECK(full.quot.dim == 0);
    SubQuot none = sub_quotient(reg, {});
    CHECK(none.sub.dim == 0);
    CHECK(none.quot.dim == reg.dim);

    auto f = fundamental_modules(a);
    Structure st = module_structure(f.projectives[0]);
    std::vector<uint32_t> socle_vec(st.socle_rows.a.begin(), st.socle_rows.a.end());
    SubQuot sq = sub_quotient(f.projectives[0], {socle_vec});
    CHECK(is_isomorphic(sq.sub, f.simples[1]).verdict == IsoVerdict::yes);
    CHECK(is_isomorphic(sq.quot, f.simples[0]).verdict == IsoVerdict::yes);
}

TEST_CASE("submodule lattices match brute force") {
    auto check = [](const Module& m) {
        auto lat = all_submodules(m, 1u << 20);
        REQUIRE(lat.complete);
        auto brute = brute_force_invariant_subspaces(m);
        REQUIRE(lat.subspaces.size() == brute.size());
        for (const auto& s : lat.subspaces) CHECK(brute.count(s) == 1);
    };

    auto f2 = fundamental_modules(a2());
    check(f2.simples[0]);  // {0, M}
    Module reg_dual = regular_module(dual_numbers());
    auto lat = all_submodules(reg_dual, 100);
    CHECK(lat.subspaces.size() == 3);
    check(reg_dual);
    check(direct_sum({f2.projectives[0], f2.projectives[0]}).mod);  // P1 + P1 over A2
    check(regular_module(a3_fork()));

    Rng rng(77);
    for (const auto& a : fixture_algebras()) check(random_module(a, 4, rng));
}

TEST_CASE("incomplete lattice is flagged, never truncated silently") {
    auto a = a3_fork();
    Module big = regular_module(a);
    auto lat = all_submodules(big, 3);
    CHECK(!lat.complete);
}

TEST_CASE("isomorphism testing") {
    auto a = a2();
    auto f = fundamental_modules(a);
    auto self = is_isomorphic(f.projectives[0], f.projectives[0]);
    REQUIRE(self.verdict == IsoVerdict::yes);
    REQUIRE(self.witness.has_value());
    CHECK(inverse(*self.witness).has_value());

    CHECK(is_isomorphic(f.simples[0], f.simples[1]).verdict == IsoVerdict::no);

    // dual numbers are self-injective: Lambda = D(Lambda)
    auto d = dual_numbers();
    Module reg = regular_module(d);
    Module dd = duality_D(regular_module(opposite(d)));
    CHECK(is_isomorphic(reg, dd).verdict == IsoVerdict::yes);

    // distinct modules with equal dimension vectors
    Module s1s2 = direct_sum({f.simples[0], f.simples[1]}).mod;
    CHECK(is_isomorphic(s1s2, f.projectives[0]).verdict == IsoVerdict::no);
}

TEST_CASE("module enumeration up to isomorphism") {
    auto a = a2();
    auto mods = enumerate_modules(a, 2);
    CHECK(mods.size() == 6);  // S1, S2, S1^2, S2^2, S1+S2, P1
    for (const auto& m : mods) verify_module(m);
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            CHECK(is_isomorphic(mods[i], mods[j]).verdict == IsoVerdict::no);

    auto d = dual_numbers();
    CHECK(enumerate_modules(d, 2).size() == 3);  // S, S^2, Lambda

    // dim <= 2 over the fork: 3 simples, 6 semisimple pairs, and the two
    // two-dimensional indecomposables with socle at a sink
    CHECK(enumerate_modules(a3_fork(), 2).size() == 11);
}

TEST_CASE("random modules satisfy the relations") {
    Rng rng(3);
    for (const auto& a : fixture_algebras())
        for (int t = 0; t < 20; ++t) {
            Module m = random_module(a, 1 + rng.below(5), rng);
            verify_module(m);
        }
}
