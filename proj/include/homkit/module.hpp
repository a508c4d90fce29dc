#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homkit/algebra.hpp"
#include "homkit/mat.hpp"

namespace homkit {

/// splitmix64; used wherever deterministic seeded randomness is needed
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return n ? uint32_t(next() % n) : 0; }
};

/// Finitely generated left module as a matrix representation: one action
/// matrix per algebra basis element, extended linearly.
struct Module {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Mat> action;

    uint32_t p() const { return alg->p; }
};

Module module_from_action(AlgebraPtr alg, std::vector<Mat> action, bool verify = true);
void verify_module(const Module& m);
Module zero_module(const AlgebraPtr& alg);
bool is_zero_module(const Module& m);

/// The left regular module: underlying space the algebra itself, action by
/// left multiplication. Decomposes as the direct sum of the Lambda e_i.
Module regular_module(const AlgebraPtr& a);

/// Action of an arbitrary algebra element given by coordinates.
Mat act(const Module& m, const std::vector<uint32_t>& x);

struct ModuleMap {
    Module src, tgt;
    Mat m;  // tgt.dim x src.dim, applied to column vectors
};

ModuleMap make_map(Module src, Module tgt, Mat m, bool verify = true);
void verify_map(const ModuleMap& f);
ModuleMap identity_map(const Module& m);
ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap compose_maps(const ModuleMap& later, const ModuleMap& first);
bool is_mono(const ModuleMap& f);
bool is_epi(const ModuleMap& f);

/// Closure of the span of the seed rows under the algebra action.
Mat invariant_closure(const Module& m, const Mat& seed_rows);

/// Module structure on an action-invariant subspace (canonical row basis).
Module submodule_module(const Module& m, const Mat& rows, ModuleMap* incl = nullptr);
Module quotient_module(const Module& m, const Mat& rows, ModuleMap* proj = nullptr);

struct SubQuot {
    Module sub;
    ModuleMap incl;
    Module quot;
    ModuleMap proj;
    Mat sub_rows;
};
SubQuot sub_quotient(const Module& m, const std::vector<std::vector<uint32_t>>& generators);

ModuleMap kernel_of(const ModuleMap& f);  // inclusion of ker f into src
Mat image_rows(const ModuleMap& f);
Module cokernel_of(const ModuleMap& f, ModuleMap* proj = nullptr);

struct Structure {
    Mat radical_rows;
    Mat socle_rows;
    Module radical;
    Module socle;
    Module top;
    ModuleMap top_proj;
};
Structure module_structure(const Module& m);

/// Basis of Hom(m, n) as intertwiner matrices, canonically ordered.
std::vector<Mat> hom_space(const Module& m, const Module& n);

/// k-dual: a module over the opposite algebra with transposed action.
Module duality_D(const Module& m);

struct Fundamentals {
    std::vector<Module> simples;
    std::vector<Module> projectives;  // P_i = Lambda e_i
    std::vector<Module> injectives;   // I_i = D(e_i Lambda)
};
Fundamentals fundamental_modules(const AlgebraPtr& a);

struct SubmoduleLattice {
    std::vector<Mat> subspaces;  // canonical row bases, sorted by (dim, entries)
    bool complete = true;
    std::size_t cap = 0;
};

/// Breadth-first closure of all cyclic submodules under pairwise sums. Flags
/// the result incomplete instead of silently truncating when the budget is
/// exceeded.
SubmoduleLattice all_submodules(const Module& m, std::size_t cap);

enum class IsoVerdict { yes, no, unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::unknown;
    std::optional<Mat> witness;  // invertible intertwiner when verdict == yes
};

std::vector<std::size_t> iso_signature(const Module& m);

/// Certificate-producing isomorphism test: "yes" always carries an explicit
/// invertible intertwiner; "no" is certified either by an invariant mismatch
/// or by exhausting Hom; otherwise unknown-at-budget.
IsoResult is_isomorphic(const Module& m, const Module& n, std::size_t budget = (std::size_t)1 << 20,
                        uint64_t seed = 0, std::size_t samples = 4096);

struct DirectSum {
    Module mod;
    std::vector<std::size_t> offsets;
};
DirectSum direct_sum(const std::vector<Module>& parts);
ModuleMap summand_injection(const DirectSum& s, const std::vector<Module>& parts, std::size_t k);
ModuleMap summand_projection(const DirectSum& s, const std::vector<Module>& parts, std::size_t k);

/// All modules of total dimension in [1, dim_cap] up to isomorphism,
/// enumerated exhaustively from the quiver presentation. `raw_count`, when
/// given, receives the number of representations before deduplication.
std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t dim_cap,
                                      std::size_t* raw_count = nullptr,
                                      std::size_t budget = (std::size_t)1 << 22);

Module random_module(const AlgebraPtr& a, std::size_t dim_total, Rng& rng);

}  // namespace homkit
