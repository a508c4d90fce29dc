#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkit/module.hpp"

namespace homkit {

/// Three-valued answer for unbounded homological invariants: an exact value,
/// a lower bound hit at a computation cap, or a genuine infinity detected by
/// termination (or by periodicity, for projective dimension).
struct Extent {
    enum class Kind { exact, at_least, infinite };
    Kind kind = Kind::exact;
    std::size_t value = 0;

    static Extent exact(std::size_t v) { return {Kind::exact, v}; }
    static Extent at_least(std::size_t v) { return {Kind::at_least, v}; }
    static Extent inf() { return {Kind::infinite, 0}; }

    bool is_exact() const { return kind == Kind::exact; }
    bool is_infinite() const { return kind == Kind::infinite; }
    std::string str() const;
    bool operator==(const Extent&) const = default;
};

enum class Tri { yes, no, unknown };

Tri extent_le(const Extent& e, std::size_t k);  // e <= k ?
Tri extent_ge(const Extent& e, std::size_t k);  // e >= k ?
Tri extent_eq(const Extent& a, const Extent& b);

/// A finite direct sum of the indecomposable projectives Lambda e_c, with the
/// summand types recorded. `basis_rows[j]` is the canonical basis of the j-th
/// summand inside the regular module; generators sit at `gen_local[j]`.
struct ProjSum {
    AlgebraPtr alg;
    Module mod;
    std::vector<std::size_t> types;
    std::vector<std::size_t> offsets;
    std::vector<Mat> basis_rows;
    std::vector<std::vector<uint32_t>> gen_local;

    std::size_t dim() const { return mod.dim; }
    std::vector<std::size_t> multiplicities() const;
};

ProjSum proj_sum(const AlgebraPtr& a, const std::vector<std::size_t>& types);

/// The module map P -> M sending the j-th summand generator to images[j]
/// (which must satisfy e_{c_j} images[j] = images[j]).
ModuleMap proj_map_from_generators(const ProjSum& P, const Module& m,
                                   const std::vector<std::vector<uint32_t>>& images);

/// Entries of a map between explicit projectives as algebra elements
/// a[l][j] in e_{c_j} Lambda e_{d_l}: f(x in slot j) = sum_l x * a[l][j].
std::vector<std::vector<std::vector<uint32_t>>> element_matrix(const ProjSum& P, const ProjSum& Q,
                                                               const ModuleMap& f);

/// P viewed over the opposite algebra: (Lambda e_c)^* = e_c Lambda.
ProjSum dualize_proj(const ProjSum& P);

/// Hom(-, Lambda) applied to a map between explicit projectives; the caller
/// supplies the dualized endpoints so maps compose on shared objects.
ModuleMap dual_map(const ProjSum& P, const ProjSum& Q, const ModuleMap& f, const ProjSum& p_dual,
                   const ProjSum& q_dual);

/// Projective cover generators of m: pairs (idempotent type, lift in e_i m)
/// covering a basis of the top.
std::vector<std::pair<std::size_t, std::vector<uint32_t>>> cover_generators(const Module& m);

struct ProjResolution {
    Module target;
    std::vector<ProjSum> terms;     // P_0 .. P_n
    ModuleMap aug;                  // P_0 -> target
    std::vector<ModuleMap> diffs;   // diffs[i] : P_{i+1} -> P_i
    std::vector<Mat> kernel_rows;   // kernel_rows[i] = ker of the map out of P_i
    bool terminated = false;        // last kernel is zero
    bool periodic = false;          // some syzygy recurred up to isomorphism

    Extent pd() const;
};

/// Minimal projective resolution by iterated projective covers, computed up
/// to P_degree or until the kernel vanishes.
ProjResolution min_proj_resolution(const Module& m, std::size_t degree);

/// A deliberately non-minimal resolution: the minimal one with a split-exact
/// complex glued onto every level. Used as an independent oracle for Ext.
ProjResolution padded_resolution(const Module& m, std::size_t degree);

/// dim Ext^i(M, Lambda) for 0 <= i <= max_i read off a resolution by rank
/// arithmetic on the dualized differentials. Requires the resolution to reach
/// degree max_i + 1 or terminate.
std::vector<std::size_t> ext_dims_from_resolution(const ProjResolution& res, std::size_t max_i);

struct ExtModule {
    Module base;
    std::size_t degree = 0;
    Module value;  // over the opposite algebra
};

/// Ext^i(M, Lambda) carried as a genuine module over the opposite algebra.
ExtModule ext_lambda(const Module& m, std::size_t i);
/// M^* = Hom(M, Lambda) via the dualized minimal presentation (degree 0 Ext).
ExtModule lambda_dual(const Module& m);
/// Auslander-Bridger transpose: coker of the dualized minimal presentation.
Module transpose_module(const Module& m);

/// Hom(M, Lambda) with an explicit functional basis; the dual carries the
/// opposite-algebra action induced on the functionals.
struct HomDual {
    Module dual;                   // over opposite(m.alg)
    std::vector<Mat> functionals;  // phi_t : M -> Lambda, dim(Lambda) x dim(M)
};
HomDual hom_dual(const Module& m);

Mat functional_of(const HomDual& hd, const std::vector<uint32_t>& coords);
std::vector<uint32_t> coords_of_functional(const HomDual& hd, const Mat& f);

/// Hom(-, Lambda) applied to an arbitrary map f : X -> Y, in hom-dual
/// coordinates: Y^* -> X^*.
ModuleMap dual_of_map(const ModuleMap& f, const HomDual& dual_of_src, const HomDual& dual_of_tgt);

struct EvalData {
    HomDual d1;      // M^*
    HomDual d2;      // M^{**}
    ModuleMap sigma;  // M -> M^{**}
};
EvalData eval_data(const Module& m);

struct EvalReport {
    EvalData data;
    std::size_t ker_dim = 0;
    std::size_t coker_dim = 0;
    std::size_t ext1_tr_dim = 0;  // dim Ext^1_op(Tr M, Lambda)
    std::size_t ext2_tr_dim = 0;  // dim Ext^2_op(Tr M, Lambda)
    bool torsionless = false;
    bool reflexive = false;
};

/// The evaluation map M -> M^{**} with kernel/cokernel dimensions, hard
/// cross-checked against Ext^{1,2} of the transpose on the opposite side.
EvalReport eval_report(const Module& m);

Extent grade_of(const Module& m, std::size_t bound);
Extent reduced_grade_of(const Module& m, std::size_t bound);

struct GradeReport {
    Extent grade;
    Extent reduced_grade;
    Extent strong_grade;
    bool lattice_complete = true;
    std::size_t bound = 0;
    std::vector<std::size_t> ext_dims;  // dim Ext^i for i <= bound (empty for the zero module)
};
GradeReport grade_report(const Module& m, std::size_t bound, std::size_t lattice_cap);

struct TorsionfreeReport {
    bool is_torsionfree = false;     // r.grade Tr M >= k+1
    Extent tr_reduced_grade;         // witness
};
TorsionfreeReport is_k_torsionfree(const Module& m, std::size_t k);

/// Omega^k M: the kernel at step k of the minimal projective resolution.
Module syzygy(const Module& m, std::size_t k);

struct InjResolution {
    Module target;
    std::vector<Module> terms;                    // I'_0 .. I'_n as direct sums
    std::vector<std::vector<std::size_t>> mults;  // multiplicity of each I_j per term
    std::vector<ModuleMap> embeddings;            // cosyzygy_i -> I'_i
    std::vector<Module> cosyzygies;               // cosyzygy_0 = target
    bool terminated = false;
    bool periodic = false;  // some cosyzygy recurred up to isomorphism

    Extent id() const;
};

/// Minimal injective resolution by iterated injective envelopes; the
/// embedding extending soc M -> soc E(M) is found by solving the lifting
/// linear system.
InjResolution min_inj_resolution(const Module& m, std::size_t cap);

struct DimsReport {
    Extent pd, id, fd;
    bool periodic = false;
};
DimsReport dims(const Module& m, std::size_t cap);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

Extent dominant_dimension(const AlgebraPtr& a, std::size_t cap);

/// I'_0 (+) I'_1 of the left regular module; pseudo-null means Hom into this
/// vanishes.
Module leading_injectives(const AlgebraPtr& a);

struct PurityReport {
    bool pseudo_null = false;
    Tri pure = Tri::unknown;
    std::optional<Mat> impure_witness;  // rows of an offending submodule
    bool lattice_complete = true;
};
PurityReport purity_classify(const Module& m, std::size_t lattice_cap, std::size_t grade_bound);

struct DClassStage {
    Module t;              // T_i, torsionless (verified)
    Module t_star;         // T_i^* over the opposite algebra
    ModuleMap sigma;       // T_i -> T_i^{**}
    ModuleMap embedding;   // T_i^{**} -> P_i (double dual embedding)
    ProjSum p;             // P_i, the dual of a projective cover of T_i^*
    // the recorded epimorphism whose dual is the embedding: the cover of
    // T_i^* sends the generator of the j-th summand to cover_images[j]
    std::vector<std::size_t> cover_types;
    std::vector<std::vector<uint32_t>> cover_images;
    Module next;           // T_{i+1} = coker(embedding)
};

struct DClassChain {
    std::vector<DClassStage> stages;  // k-1 stages
    Module top;                       // the stage-k module
    bool ok = true;
    std::size_t failed_stage = 0;  // 1-based index of a non-torsionless intermediate
};

/// Builds the chain of double dual embeddings bottom-up from a torsionless
/// module; fails with the stage index if an intermediate is not torsionless.
DClassChain d_class_chain(const Module& t, std::size_t k);

/// The canonical embedding of a torsionless module into the dual of a cover
/// of M^*: into the typed projective (fatten == false) or into a free module
/// with one regular summand per generator of M^* (fatten == true).
struct FreeEmbedding {
    ModuleMap g;       // M -> F, mono iff M torsionless
    Module f;
    Module coker;
    ModuleMap coker_proj;
};
FreeEmbedding torsionless_embedding(const Module& m, bool fatten_to_free);

}  // namespace homkit
