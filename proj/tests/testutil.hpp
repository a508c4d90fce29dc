#pragma once

#include "homkit/algebra.hpp"
#include "homkit/module.hpp"

namespace testutil {

using namespace homkit;

/// GF(2) x GF(2): two vertices, no arrows.
inline AlgebraPtr semisimple_pair() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 1;
    pr.quiver.vertices = {"1", "2"};
    return build_algebra(pr);
}

/// GF(2)[x]/(x^2) as a one-loop bound quiver.
inline AlgebraPtr dual_numbers() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"v"};
    pr.quiver.arrows = {{"x", 0, 0}};
    Relation rel;
    rel.terms.push_back({1, Path{0, {0, 0}}});
    pr.relations.push_back(rel);
    return build_algebra(pr);
}

/// Path algebra of 1 -> 2 over GF(2).
inline AlgebraPtr a2() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2"};
    pr.quiver.arrows = {{"a", 0, 1}};
    return build_algebra(pr);
}

/// Path algebra of 2 <- 1 -> 3 over GF(2).
inline AlgebraPtr a3_fork() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2", "3"};
    pr.quiver.arrows = {{"a", 0, 1}, {"b", 0, 2}};
    return build_algebra(pr);
}

/// 1 -> 2 -> 3 with the composite killed: global dimension 2.
inline AlgebraPtr a3_zero_composite() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2", "3"};
    pr.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    Relation rel;
    rel.terms.push_back({1, Path{0, {0, 1}}});  // b*a
    pr.relations.push_back(rel);
    return build_algebra(pr);
}

/// k[x,y]/(x,y)^2: commutative local, with a torsionless non-reflexive simple.
inline AlgebraPtr commutative_local_two() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"v"};
    pr.quiver.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    for (std::vector<std::size_t> w : {std::vector<std::size_t>{0, 0},
                                       std::vector<std::size_t>{0, 1},
                                       std::vector<std::size_t>{1, 0},
                                       std::vector<std::size_t>{1, 1}}) {
        Relation rel;
        rel.terms.push_back({1, Path{0, w}});
        pr.relations.push_back(rel);
    }
    return build_algebra(pr);
}

/// 1 -> 2 -> 3 over GF(3) with the composite scaled into a relation.
inline AlgebraPtr a3_line_gf3() {
    Presentation pr;
    pr.p = 3;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2", "3"};
    pr.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    Relation rel;
    rel.terms.push_back({2, Path{0, {0, 1}}});
    pr.relations.push_back(rel);
    return build_algebra(pr);
}

/// GF(2)[x]/(x^3): Frobenius, so self-injective with periodic resolutions.
inline AlgebraPtr truncated_poly_cubed() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 3;
    pr.quiver.vertices = {"v"};
    pr.quiver.arrows = {{"x", 0, 0}};
    Relation rel;
    rel.terms.push_back({1, Path{0, {0, 0, 0}}});
    pr.relations.push_back(rel);
    return build_algebra(pr);
}

/// The Kronecker quiver: two parallel arrows 1 -> 2, hereditary.
inline AlgebraPtr kronecker() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2"};
    pr.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return build_algebra(pr);
}

/// A noncommutative local algebra: loops x, y with x^2 = y^2 = xy = 0 and
/// the other composite surviving (dimension 4, radical cube zero).
inline AlgebraPtr noncommutative_local() {
    Presentation pr;
    pr.p = 2;
    pr.nilpotency = 3;
    pr.quiver.vertices = {"v"};
    pr.quiver.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    for (std::vector<std::size_t> w : {std::vector<std::size_t>{0, 0},
                                       std::vector<std::size_t>{1, 1},
                                       std::vector<std::size_t>{1, 0}}) {
        Relation rel;
        rel.terms.push_back({1, Path{0, w}});
        pr.relations.push_back(rel);
    }
    return build_algebra(pr);
}

/// A2 over a larger prime, to exercise inversion away from characteristic 2.
inline AlgebraPtr a2_gf101() {
    Presentation pr;
    pr.p = 101;
    pr.nilpotency = 2;
    pr.quiver.vertices = {"1", "2"};
    pr.quiver.arrows = {{"a", 0, 1}};
    return build_algebra(pr);
}

inline std::vector<AlgebraPtr> fixture_algebras() {
    return {semisimple_pair(), dual_numbers(), a2(), a3_fork(), a3_zero_composite()};
}

/// Helper: does m admit some P_i as a direct summand? Searches split pairs
/// phi: M -> P_i, psi: P_i -> M with phi psi = id, exhaustively over phi.
inline bool has_projective_summand(const Module& m) {
    auto fund = fundamental_modules(m.alg);
    for (const auto& p : fund.projectives) {
        if (p.dim > m.dim) continue;
        auto down = hom_space(m, p);   // candidates phi
        auto up = hom_space(p, m);     // solve for psi linearly per phi
        if (down.empty() || up.empty()) continue;
        std::vector<uint32_t> c(down.size(), 0);
        for (;;) {
            std::size_t pos = 0;
            while (pos < c.size() && c[pos] + 1 == m.p()) c[pos++] = 0;
            if (pos == c.size()) break;
            ++c[pos];
            Mat phi(p.dim, m.dim, m.p());
            for (std::size_t t = 0; t < c.size(); ++t)
                if (c[t]) phi = add(phi, scalar_mul(c[t], down[t]));
            // phi * (sum d_k psi_k) = id, linear in d
            Mat sys(p.dim * p.dim, up.size(), m.p());
            for (std::size_t k = 0; k < up.size(); ++k) {
                Mat comp = mul(phi, up[k]);
                for (std::size_t i = 0; i < comp.a.size(); ++i) sys.at(i, k) = comp.a[i];
            }
            Mat rhs(p.dim * p.dim, 1, m.p());
            Mat id = Mat::identity(p.dim, m.p());
            for (std::size_t i = 0; i < id.a.size(); ++i) rhs.at(i, 0) = id.a[i];
            if (solve(sys, rhs)) return true;
        }
    }
    return false;
}

/// Structure-constant form of GF(2)[x]/(x^2): basis {1, x}.
inline ConstantsSpec dual_numbers_constants() {
    ConstantsSpec s;
    s.p = 2;
    s.dim = 2;
    s.basis_names = {"one", "x"};
    s.mult = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
    s.unit = {1, 0};
    s.idempotents = {{1, 0}};
    return s;
}

/// Structure-constant form of GF(2) x GF(2).
inline ConstantsSpec pair_constants() {
    ConstantsSpec s;
    s.p = 2;
    s.dim = 2;
    s.basis_names = {"u", "v"};
    s.mult = {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
    s.unit = {1, 1};
    s.idempotents = {{1, 0}, {0, 1}};
    return s;
}

}  // namespace testutil
