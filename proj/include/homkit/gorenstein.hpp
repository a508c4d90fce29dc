#pragma once

#include <string>
#include <vector>

#include "homkit/homology.hpp"

namespace homkit {

/// Condition levels read off the two minimal injective resolutions of the
/// regular module. Every fd entry is exact or cap-marked, never guessed.
struct GorensteinProfile {
    AlgebraPtr algebra;
    std::size_t cap = 0;
    std::vector<Extent> fd_left;   // fd of the terms of the left resolution
    std::vector<Extent> fd_right;  // same on the opposite side
    Extent id_left, id_right;
    Extent level_left, level_right;        // max k with fd term_i <= i for i < k
    Extent quasi_level_left, quasi_level_right;  // fd term_i <= i+1
    Extent dominant_dim;
    bool gorenstein_within_cap = false;  // level >= cap on both sides (or genuinely infinite)
    bool auslander_gorenstein = false;   // gorenstein within cap + both ids finite
    bool quasi_auslander_left = false;
    bool quasi_auslander_right = false;
};

GorensteinProfile gorenstein_profile(const AlgebraPtr& a, std::size_t cap);

enum class VerdictStatus { verified, refuted, inconclusive };

std::string to_string(VerdictStatus s);

struct TheoremVerdict {
    std::string id;
    VerdictStatus status = VerdictStatus::inconclusive;
    std::vector<std::pair<std::string, std::string>> evidence;
    std::vector<std::string> notes;  // hypotheses not met, witnesses, caps hit

    void note(std::string s) { notes.push_back(std::move(s)); }
    void put(std::string k, std::string v) { evidence.push_back({std::move(k), std::move(v)}); }
};

struct VerifyOptions {
    std::size_t cap = 6;
    std::size_t dim_cap = 4;
    std::size_t lattice_cap = (std::size_t)1 << 20;
    uint64_t seed = 0;
    std::size_t ses_samples = 100;
};

struct ShortExact {
    ModuleMap incl;  // M1 -> M2
    ModuleMap proj;  // M2 -> M3
};
ShortExact random_ses(const AlgebraPtr& a, Rng& rng, std::size_t dim_total);
ShortExact split_ses(const Module& m1, const Module& m3);

struct FinDimBounds {
    std::size_t lower = 0;  // max exact pd over the enumerated finite-pd modules
    Extent upper;           // id of the regular module
    bool exact = false;     // lower meets upper
};

// Theorem verifiers. Each returns a machine-checkable verdict; "refuted"
// always carries a replayable witness in the notes.
TheoremVerdict verify_profile_symmetry(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_eval_sequence(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_transpose_projectivity(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict auslander_crosscheck(const AlgebraPtr& a, std::size_t k, const VerifyOptions& opt);
TheoremVerdict verify_triple_ext(const Module& m, std::size_t report_bound,
                                 const VerifyOptions& opt);
TheoremVerdict verify_triple_ext_sweep(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_duality_grade_t(const AlgebraPtr& a, std::size_t t,
                                      const VerifyOptions& opt);
TheoremVerdict verify_grade_exact_seq(const ShortExact& ses, const VerifyOptions& opt);
TheoremVerdict verify_grade_exact_seq_sweep(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_torsionfree_closure(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict ideal_reflexivity_report(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict reflexive_implies_projective_scan(const AlgebraPtr& a, std::size_t k,
                                                 const VerifyOptions& opt);
TheoremVerdict findim_bounds(const AlgebraPtr& a, const VerifyOptions& opt,
                             FinDimBounds* out = nullptr);
TheoremVerdict nakayama_report(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_cokernel_family(const AlgebraPtr& a, const Module& t_module, std::size_t k,
                                      const VerifyOptions& opt);
TheoremVerdict verify_dclass_reduced_grade(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_ext_purity(const AlgebraPtr& a, const VerifyOptions& opt);
TheoremVerdict verify_pseudo_null_strong_grade(const AlgebraPtr& a, const VerifyOptions& opt);

/// Exploratory search for counterexamples to Ext-grade purity over quasi
/// Auslander-Gorenstein inputs; reports findings, never part of acceptance.
TheoremVerdict explore_purity_question(const AlgebraPtr& a, const VerifyOptions& opt);

std::vector<std::string> verify_ids();
TheoremVerdict run_verifier(const std::string& id, const AlgebraPtr& a, const VerifyOptions& opt);
std::vector<TheoremVerdict> verify_all(const AlgebraPtr& a, const VerifyOptions& opt);

}  // namespace homkit
