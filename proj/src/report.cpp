#include "homkit/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homkit/algfile.hpp"
#include "homkit/gorenstein.hpp"

namespace homkit {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

json j_extent(const Extent& e) {
    json j;
    switch (e.kind) {
        case Extent::Kind::exact: j["kind"] = "exact"; break;
        case Extent::Kind::at_least: j["kind"] = "at_least"; break;
        default: j["kind"] = "infinite"; break;
    }
    if (!e.is_infinite()) j["value"] = e.value;
    j["str"] = e.str();
    return j;
}

std::string tri_str(Tri t) {
    return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown";
}

json j_verdict(const TheoremVerdict& v) {
    json j;
    j["id"] = v.id;
    j["status"] = to_string(v.status);
    json ev = json::object();
    for (const auto& [k, val] : v.evidence) ev[k] = val;
    j["evidence"] = ev;
    j["notes"] = v.notes;
    return j;
}

json j_profile(const GorensteinProfile& p) {
    json j;
    j["cap"] = p.cap;
    json fl = json::array(), fr = json::array();
    for (const auto& e : p.fd_left) fl.push_back(e.str());
    for (const auto& e : p.fd_right) fr.push_back(e.str());
    j["fd_injective_terms_left"] = fl;
    j["fd_injective_terms_right"] = fr;
    j["id_left"] = j_extent(p.id_left);
    j["id_right"] = j_extent(p.id_right);
    j["gorenstein_level_left"] = j_extent(p.level_left);
    j["gorenstein_level_right"] = j_extent(p.level_right);
    j["quasi_level_left"] = j_extent(p.quasi_level_left);
    j["quasi_level_right"] = j_extent(p.quasi_level_right);
    j["dominant_dimension"] = j_extent(p.dominant_dim);
    j["gorenstein_within_cap"] = p.gorenstein_within_cap;
    j["auslander_gorenstein"] = p.auslander_gorenstein;
    j["quasi_auslander_gorenstein_left"] = p.quasi_auslander_left;
    j["quasi_auslander_gorenstein_right"] = p.quasi_auslander_right;
    return j;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << v;
    return os.str();
}

int exit_from_statuses(const std::vector<VerdictStatus>& st) {
    bool inconclusive = false;
    for (auto s : st) {
        if (s == VerdictStatus::refuted) return 2;
        if (s == VerdictStatus::inconclusive) inconclusive = true;
    }
    return inconclusive ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"homological invariants of bound-quiver algebras over prime fields"};
    app.require_subcommand(1);

    std::string algebra_file;
    std::string module_expr = "regular";
    std::string module_file;
    std::string verify_target = "all";
    std::size_t cap = 6, dim_cap = 4, lattice_cap = 1000000, class_k = 2;
    uint64_t seed = 0;
    bool pretty = false, json_on = true;

    auto add_common = [&](CLI::App* sub, bool with_module) {
        sub->add_option("--algebra", algebra_file, "algebra file")->required();
        if (with_module) {
            sub->add_option("--module", module_expr,
                            "module expression (S<i>, P<i>, I<i>, regular, zero, D(...), "
                            "syzygy(k, ...), sums with +)");
            sub->add_option("--module-file", module_file, "explicit representation matrices");
        }
        sub->add_option("--cap", cap, "resolution/profile cap");
        sub->add_option("--dim-cap", dim_cap, "enumeration dimension cap");
        sub->add_option("--lattice-cap", lattice_cap, "submodule enumeration budget");
        sub->add_option("--seed", seed, "seed for randomized searches (recorded)");
        sub->add_flag("--json,!--no-json", json_on, "emit JSON (default on)");
        sub->add_flag("--pretty", pretty, "indent the JSON report");
    };

    CLI::App* c_profile = app.add_subcommand("profile", "Gorenstein condition profile");
    add_common(c_profile, false);
    CLI::App* c_dims = app.add_subcommand("dims", "projective/injective/flat dimensions");
    add_common(c_dims, true);
    CLI::App* c_grade = app.add_subcommand("grade", "grade, reduced grade, strong grade");
    add_common(c_grade, true);
    CLI::App* c_transpose = app.add_subcommand("transpose", "transpose of a module");
    add_common(c_transpose, true);
    CLI::App* c_eval = app.add_subcommand("eval", "evaluation map report");
    add_common(c_eval, true);
    CLI::App* c_injres = app.add_subcommand("inj-res", "minimal injective resolution");
    add_common(c_injres, true);
    CLI::App* c_projres = app.add_subcommand("proj-res", "minimal projective resolution");
    add_common(c_projres, true);
    CLI::App* c_dominant = app.add_subcommand("dominant", "dominant dimension");
    add_common(c_dominant, false);
    CLI::App* c_purity = app.add_subcommand("purity", "pseudo-null and purity classification");
    add_common(c_purity, true);
    CLI::App* c_dclass = app.add_subcommand("dclass", "double dual embedding chain");
    add_common(c_dclass, true);
    c_dclass->add_option("--class-k", class_k, "chain length target");
    CLI::App* c_verify = app.add_subcommand("verify", "run a theorem verifier (or all)");
    c_verify->add_option("target", verify_target, "verifier id or 'all'");
    add_common(c_verify, false);
    CLI::App* c_explore =
        app.add_subcommand("explore-purity-question", "hunt for purity counterexamples");
    add_common(c_explore, false);
    CLI::App* c_findim = app.add_subcommand("findim", "finitistic dimension bounds");
    add_common(c_findim, false);
    CLI::App* c_nakayama = app.add_subcommand("nakayama", "self-injectivity equivalence suite");
    add_common(c_nakayama, false);
    CLI::App* c_ideals = app.add_subcommand("ideals", "left ideal reflexivity sweep");
    add_common(c_ideals, false);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    json doc;
    doc["tool"] = "homkit";
    doc["version"] = kToolVersion;
    doc["report_version"] = 1;

    std::vector<VerdictStatus> statuses;
    int exit_code = 0;

    try {
        AlgebraPtr alg = algebra_from_path(algebra_file);
        CLI::App* sub = app.get_subcommands().front();
        std::string cmd = sub->get_name();

        doc["command"] = cmd;
        json jargs;
        jargs["algebra"] = algebra_file;
        if (sub == c_verify) jargs["target"] = verify_target;
        if (!module_file.empty())
            jargs["module_file"] = module_file;
        else if (sub == c_dims || sub == c_grade || sub == c_transpose || sub == c_eval ||
                 sub == c_injres || sub == c_projres || sub == c_purity || sub == c_dclass)
            jargs["module"] = module_expr;
        if (sub == c_dclass) jargs["class_k"] = class_k;
        jargs["cap"] = cap;
        jargs["dim_cap"] = dim_cap;
        jargs["lattice_cap"] = lattice_cap;
        jargs["seed"] = seed;
        doc["args"] = jargs;
        json jalg;
        jalg["digest"] = hex64(alg->digest);
        jalg["p"] = alg->p;
        jalg["dim"] = alg->dim;
        jalg["idempotents"] = alg->idempotents.size();
        doc["algebra"] = jalg;

        auto the_module = [&]() -> Module {
            if (!module_file.empty()) {
                std::ifstream in(module_file);
                if (!in) throw std::runtime_error("cannot open module file: " + module_file);
                std::ostringstream ss;
                ss << in.rdbuf();
                return parse_module_file(alg, ss.str());
            }
            return evaluate_module_expr(alg, module_expr);
        };

        VerifyOptions opt;
        opt.cap = cap;
        opt.dim_cap = dim_cap;
        opt.lattice_cap = lattice_cap;
        opt.seed = seed;

        json results = json::array();
        if (sub == c_profile) {
            results.push_back(j_profile(gorenstein_profile(alg, cap)));
        } else if (sub == c_dims) {
            DimsReport d = dims(the_module(), cap);
            json j;
            j["pd"] = j_extent(d.pd);
            j["id"] = j_extent(d.id);
            j["fd"] = j_extent(d.fd);
            j["fd_provenance"] = "finitely generated flat = projective over an Artinian algebra";
            j["periodic"] = d.periodic;
            results.push_back(j);
        } else if (sub == c_grade) {
            GradeReport g = grade_report(the_module(), cap, lattice_cap);
            json j;
            j["grade"] = j_extent(g.grade);
            j["reduced_grade"] = j_extent(g.reduced_grade);
            j["strong_grade"] = j_extent(g.strong_grade);
            j["lattice_complete"] = g.lattice_complete;
            j["ext_dims"] = g.ext_dims;
            results.push_back(j);
            if (!g.lattice_complete) statuses.push_back(VerdictStatus::inconclusive);
        } else if (sub == c_transpose) {
            Module m = the_module();
            Module tr = transpose_module(m);
            json j;
            j["module_dim"] = m.dim;
            j["transpose_dim"] = tr.dim;
            j["transpose_grade"] = j_extent(grade_of(tr, cap));
            j["transpose_reduced_grade"] = j_extent(reduced_grade_of(tr, cap));
            results.push_back(j);
        } else if (sub == c_eval) {
            EvalReport e = eval_report(the_module());
            json j;
            j["ker_dim"] = e.ker_dim;
            j["coker_dim"] = e.coker_dim;
            j["ext1_transpose_dim"] = e.ext1_tr_dim;
            j["ext2_transpose_dim"] = e.ext2_tr_dim;
            j["torsionless"] = e.torsionless;
            j["reflexive"] = e.reflexive;
            results.push_back(j);
        } else if (sub == c_injres) {
            InjResolution r = min_inj_resolution(the_module(), cap);
            json j;
            j["id"] = j_extent(r.id());
            j["periodic"] = r.periodic;
            json terms = json::array();
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                json t;
                t["dim"] = r.terms[i].dim;
                t["multiplicities"] = r.mults[i];
                terms.push_back(t);
            }
            j["terms"] = terms;
            results.push_back(j);
        } else if (sub == c_projres) {
            ProjResolution r = min_proj_resolution(the_module(), cap);
            json j;
            j["pd"] = j_extent(r.pd());
            j["periodic"] = r.periodic;
            json terms = json::array();
            for (const auto& term : r.terms) {
                json t;
                t["dim"] = term.dim();
                t["multiplicities"] = term.multiplicities();
                terms.push_back(t);
            }
            j["terms"] = terms;
            results.push_back(j);
        } else if (sub == c_dominant) {
            json j;
            j["dominant_dimension"] = j_extent(dominant_dimension(alg, cap));
            results.push_back(j);
        } else if (sub == c_purity) {
            PurityReport r = purity_classify(the_module(), lattice_cap, cap);
            json j;
            j["pseudo_null"] = r.pseudo_null;
            j["pure"] = tri_str(r.pure);
            j["lattice_complete"] = r.lattice_complete;
            if (r.impure_witness) j["impure_witness_dim"] = r.impure_witness->rows;
            results.push_back(j);
            if (r.pure == Tri::unknown) statuses.push_back(VerdictStatus::inconclusive);
        } else if (sub == c_dclass) {
            DClassChain chain = d_class_chain(the_module(), class_k);
            json j;
            j["ok"] = chain.ok;
            if (!chain.ok) j["failed_stage"] = chain.failed_stage;
            json stages = json::array();
            for (const auto& st : chain.stages) {
                json s;
                s["module_dim"] = st.t.dim;
                s["double_dual_dim"] = st.embedding.src.dim;
                s["projective_dim_total"] = st.p.dim();
                s["next_dim"] = st.next.dim;
                stages.push_back(s);
            }
            j["stages"] = stages;
            j["top_dim"] = chain.top.dim;
            if (chain.ok)
                j["top_reduced_grade"] = j_extent(reduced_grade_of(chain.top, cap));
            results.push_back(j);
            if (!chain.ok) statuses.push_back(VerdictStatus::inconclusive);
        } else if (sub == c_verify) {
            if (verify_target == "all") {
                for (const auto& v : verify_all(alg, opt)) {
                    statuses.push_back(v.status);
                    results.push_back(j_verdict(v));
                }
            } else {
                bool known = false;
                for (const auto& id : verify_ids()) known = known || id == verify_target;
                if (!known) throw CLI::ValidationError("unknown verifier id: " + verify_target);
                TheoremVerdict v = run_verifier(verify_target, alg, opt);
                statuses.push_back(v.status);
                results.push_back(j_verdict(v));
            }
        } else if (sub == c_explore) {
            TheoremVerdict v = explore_purity_question(alg, opt);
            statuses.push_back(v.status);
            results.push_back(j_verdict(v));
        } else if (sub == c_findim) {
            FinDimBounds b;
            TheoremVerdict v = findim_bounds(alg, opt, &b);
            statuses.push_back(v.status);
            json j = j_verdict(v);
            j["lower"] = b.lower;
            j["upper"] = j_extent(b.upper);
            j["exact"] = b.exact;
            results.push_back(j);
        } else if (sub == c_nakayama) {
            TheoremVerdict v = nakayama_report(alg, opt);
            statuses.push_back(v.status);
            results.push_back(j_verdict(v));
        } else if (sub == c_ideals) {
            TheoremVerdict v = ideal_reflexivity_report(alg, opt);
            statuses.push_back(v.status);
            results.push_back(j_verdict(v));
        }
        doc["results"] = results;
        exit_code = exit_from_statuses(statuses);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto t1 = std::chrono::steady_clock::now();
    doc["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (json_on) out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
    return exit_code;
}

}  // namespace homkit
