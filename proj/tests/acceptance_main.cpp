// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact arithmetic throughout) and prints one PASS/FAIL line per criterion.
// Usage: acceptance <fixtures-dir>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "homkit/algfile.hpp"
#include "homkit/gorenstein.hpp"
#include "homkit/report.hpp"
#include "testutil.hpp"

using namespace homkit;
using json = nlohmann::json;

namespace {

std::string g_fixtures = "fixtures";
int g_failures = 0;

void report(int num, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << std::endl;
    if (!ok) ++g_failures;
}

AlgebraPtr load(const std::string& name) {
    std::ifstream in(g_fixtures + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return algebra_from_text(ss.str());
}

struct Fixture {
    std::string name;
    AlgebraPtr alg;
};

std::vector<Fixture> five_fixtures() {
    return {{"semisimple_pair.alg", load("semisimple_pair.alg")},
            {"dual_numbers.alg", load("dual_numbers.alg")},
            {"a2.alg", load("a2.alg")},
            {"a3_fork.alg", load("a3_fork.alg")},
            {"a3_zero_composite.alg", load("a3_zero_composite.alg")}};
}

VerifyOptions default_opts() {
    VerifyOptions o;
    o.cap = 6;
    o.dim_cap = 4;
    o.lattice_cap = 1000000;
    o.seed = 0;
    return o;
}

struct MatLess {
    bool operator()(const Mat& x, const Mat& y) const {
        if (x.rows != y.rows) return x.rows < y.rows;
        return x.a < y.a;
    }
};

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

// ---- criteria -------------------------------------------------------------

void criterion_1() {
    std::ostringstream out, err;
    int code = run_cli({"profile", "--algebra", g_fixtures + "/a3_fork.alg"}, out, err);
    bool ok = code == 0;
    std::string detail = "fork fixture profile";
    if (ok) {
        json doc = json::parse(out.str());
        const auto& p = doc["results"][0];
        ok = p["id_left"]["str"] == "1" && p["id_right"]["str"] == "1" &&
             p["fd_injective_terms_left"][0] == "1" && p["fd_injective_terms_right"][0] == "1" &&
             p["auslander_gorenstein"] == false &&
             p["quasi_auslander_gorenstein_left"] == true &&
             p["quasi_auslander_gorenstein_right"] == true;
        detail = "id = 1/1, fd of the leading injective terms = 1/1, "
                 "not Auslander-Gorenstein, quasi on both sides";
    }
    report(1, ok, detail);
}

void criterion_2() {
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& fx : five_fixtures()) {
        Rng rng(42);
        std::vector<Module> mods = enumerate_modules(fx.alg, 4);
        for (int t = 0; t < 20; ++t) mods.push_back(random_module(fx.alg, 1 + rng.below(6), rng));
        for (const auto& m : mods) {
            if (m.dim == 0) continue;
            try {
                EvalReport r = eval_report(m);  // hard-checks internally as well
                if (r.ker_dim != r.ext1_tr_dim || r.coker_dim != r.ext2_tr_dim) ok = false;
            } catch (const std::logic_error&) {
                ok = false;
            }
            ++checked;
        }
    }
    ok = ok && checked >= 200;
    report(2, ok,
           "evaluation kernel/cokernel match Ext^{1,2} of the transpose on " +
               std::to_string(checked) + " modules (needs >= 200, exact)");
}

void criterion_3() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    for (const char* name : {"a2.alg", "dual_numbers.alg"}) {
        AlgebraPtr a = load(name);
        TheoremVerdict v = auslander_crosscheck(a, 3, opt);
        if (v.status != VerdictStatus::verified) ok = false;
        GorensteinProfile p = gorenstein_profile(a, opt.cap);
        if (extent_eq(p.level_left, p.level_right) != Tri::yes) ok = false;
    }
    report(3, ok, "strong grade of Ext^i bounded below by i for all modules of dim <= 4, i <= 3; "
                  "left/right Gorenstein levels agree exactly");
}

void criterion_4() {
    VerifyOptions opt = default_opts();
    AlgebraPtr a = load("a2.alg");
    bool ok = true, witness_seen = false;
    std::size_t checked = 0;
    for (const auto& m : enumerate_modules(a, 4)) {
        if (m.dim == 0) continue;
        Extent g = grade_of(m, opt.cap);
        if (!g.is_exact()) continue;
        TheoremVerdict v = verify_triple_ext(m, 4, opt);
        if (v.status != VerdictStatus::verified) ok = false;
        for (const auto& [k, val] : v.evidence)
            if (k == "double_ext_witness") witness_seen = true;
        ++checked;
    }
    ok = ok && checked > 0 && witness_seen;
    report(4, ok,
           "triple-Ext vanishes exactly away from the grade, grade of Ext^g is g, and the "
           "double-Ext isomorphism carries an explicit witness (" +
               std::to_string(checked) + " modules)");
}

void criterion_5() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    std::size_t count = 0;
    for (const char* name :
         {"semisimple_pair.alg", "dual_numbers.alg", "a2.alg", "a3_zero_composite.alg"}) {
        AlgebraPtr a = load(name);
        GorensteinProfile p = gorenstein_profile(a, opt.cap);
        if (!p.gorenstein_within_cap) {
            ok = false;
            continue;
        }
        Rng rng(opt.seed ^ 0x35);
        for (int s = 0; s < 30; ++s) {
            ShortExact ses = random_ses(a, rng, 1 + rng.below(5));
            Extent g1 = grade_of(ses.incl.src, opt.cap);
            Extent g2 = grade_of(ses.incl.tgt, opt.cap);
            Extent g3 = grade_of(ses.proj.tgt, opt.cap);
            // all grades must be exactly determined, and the min formula exact
            auto val = [](const Extent& e) { return e.is_infinite() ? SIZE_MAX : e.value; };
            if (!(g1.is_exact() || g1.is_infinite()) || !(g2.is_exact() || g2.is_infinite()) ||
                !(g3.is_exact() || g3.is_infinite())) {
                ok = false;
                continue;
            }
            if (val(g2) != std::min(val(g1), val(g3))) ok = false;
            ++count;
        }
    }
    ok = ok && count >= 100;
    report(5, ok,
           "grade of the middle term equals min of the ends on " + std::to_string(count) +
               " exact sequences over the Gorenstein fixtures (needs >= 100, exact)");
}

void criterion_6() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    for (const char* name : {"dual_numbers.alg", "a2.alg"}) {
        TheoremVerdict v = ideal_reflexivity_report(load(name), opt);
        if (v.status != VerdictStatus::verified) ok = false;
        bool saw_ideals = false;
        for (const auto& [k, val] : v.evidence)
            if (k == "ideals_checked" && val != "0") saw_ideals = true;
        if (!saw_ideals) ok = false;
    }
    report(6, ok, "ideal reflexivity biconditional and the pseudo-null cokernel property hold on "
                  "full ideal sweeps");
}

void criterion_7() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    {
        TheoremVerdict v = reflexive_implies_projective_scan(load("a2.alg"), 1, opt);
        if (v.status != VerdictStatus::verified) ok = false;
        // both formulations actually had non-vacuous populations
        for (const auto& [k, val] : v.evidence)
            if ((k == "k_torsionfree_modules" || k == "high_reduced_grade_modules") && val == "0")
                ok = false;
    }
    {
        TheoremVerdict v = reflexive_implies_projective_scan(load("a3_zero_composite.alg"), 2, opt);
        if (v.status != VerdictStatus::verified) ok = false;
    }
    report(7, ok, "torsionless modules over the hereditary fixture and reflexive modules over the "
                  "gl.dim-2 fixture are projective, on both formulations");
}

void criterion_8() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    FinDimBounds b;
    findim_bounds(load("dual_numbers.alg"), opt, &b);
    if (!(b.lower == 0 && b.upper == Extent::exact(0))) ok = false;
    findim_bounds(load("a2.alg"), opt, &b);
    if (!(b.lower == 1 && b.upper == Extent::exact(1))) ok = false;
    for (const auto& fx : five_fixtures()) {
        findim_bounds(fx.alg, opt, &b);
        if (b.upper.is_exact() && b.lower > b.upper.value) ok = false;
    }
    report(8, ok, "finitistic lower bound meets id on the self-injective (0) and hereditary (1) "
                  "fixtures and never exceeds it anywhere");
}

void criterion_9() {
    bool ok = true;
    std::size_t padded_checked = 0, lattice_checked = 0, hom_checked = 0;
    for (const auto& fx : five_fixtures()) {
        auto mods = enumerate_modules(fx.alg, 4);
        for (const auto& m : mods) {
            if (m.dim == 0) continue;
            auto minimal = min_proj_resolution(m, 5);
            auto padded = padded_resolution(m, 5);
            if (ext_dims_from_resolution(minimal, 4) != ext_dims_from_resolution(padded, 4))
                ok = false;
            ++padded_checked;

            auto lat = all_submodules(m, 1u << 20);
            if (!lat.complete) ok = false;
            auto brute = brute_force_invariant_subspaces(m);
            if (lat.subspaces.size() != brute.size()) ok = false;
            for (const auto& s : lat.subspaces)
                if (!brute.count(s)) ok = false;
            ++lattice_checked;
        }
        auto fund = fundamental_modules(fx.alg);
        Rng rng(9);
        for (int t = 0; t < 20; ++t) {
            Module m = random_module(fx.alg, 1 + rng.below(5), rng);
            for (std::size_t i = 0; i < fx.alg->idempotents.size(); ++i) {
                if (hom_space(fund.projectives[i], m).size() !=
                    rank(act(m, fx.alg->idempotents[i])))
                    ok = false;
                ++hom_checked;
            }
        }
    }
    report(9, ok,
           "padded-resolution Ext oracle (" + std::to_string(padded_checked) +
               " modules), brute-force lattice oracle (" + std::to_string(lattice_checked) +
               " modules), projective hom dimensions (" + std::to_string(hom_checked) +
               " checks) all agree exactly");
}

void criterion_10() {
    VerifyOptions opt = default_opts();
    bool ok = true;
    std::size_t checked = 0;
    for (const char* name : {"a2.alg", "dual_numbers.alg"}) {
        AlgebraPtr a = load(name);
        for (const auto& m : enumerate_modules(a, 4)) {
            if (m.dim == 0) continue;
            Extent g = grade_of(m, opt.cap);
            if (!g.is_exact()) {
                ok = false;
                continue;
            }
            Module e = ext_lambda(m, g.value).value;
            PurityReport pr = purity_classify(e, opt.lattice_cap, opt.cap);
            if (pr.pure != Tri::yes || !pr.lattice_complete) ok = false;
            ++checked;
        }
    }
    report(10, ok,
           "Ext^{grade}(M, Lambda) is pure with complete lattices for " + std::to_string(checked) +
               " modules of dim <= 4");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_fixtures = argv[1];
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
    } catch (const std::exception& e) {
        std::cout << "FAIL suite aborted: " << e.what() << std::endl;
        return 1;
    }
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed" << std::endl;
    return 1;
}
