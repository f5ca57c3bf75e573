// Command-line front end: build named constructions, run check pipelines,
// search for multilinear identities, export tables.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcreg/constructions.hpp"
#include "qcreg/gradedgroup.hpp"
#include "qcreg/identities.hpp"
#include "qcreg/json_io.hpp"

using namespace qcreg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned long default_seed() {
    if (const char* env = std::getenv("QCREG_SEED")) return std::strtoul(env, nullptr, 10);
    return 0;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// "name:arg1:arg2" -> construction, e.g. "pauli:3", "grassmann-z2:6".
NamedConstruction construction_from_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw std::invalid_argument("empty construction spec");
    std::vector<long> args;
    for (size_t i = 1; i < parts.size(); ++i) args.push_back(std::stol(parts[i]));
    return make_construction(parts[0], args);
}

struct CheckRun {
    json reports = json::array();
    bool any_fail = false;
    void add(const std::string& name, bool pass, json cert) {
        reports.push_back(make_report(name, pass, std::move(cert)));
        if (!pass) any_fail = true;
    }
};

int run_pipeline(const Decomposition& d, const std::vector<std::string>& steps,
                 unsigned long seed, long budget, bool definitive, const std::string& report_path) {
    auto wants = [&](const std::string& s) {
        if (steps.empty()) return true;
        for (const auto& x : steps)
            if (x == s) return true;
        return false;
    };
    CheckRun run;

    bool ds = check_direct_sum(d);
    run.add("direct-sum", ds, json{{"component_count", d.components.size()}});
    if (!ds) {
        write_json(report_path, run.reports);
        return kExitFail;
    }

    DetectResult det = detect_theta(d);
    if (!det.ok()) {
        run.add("detect-theta", false,
                json{{"kind", static_cast<int>(det.failure->kind)},
                     {"components", {det.failure->i, det.failure->j}},
                     {"basis_pair", {det.failure->a, det.failure->b}},
                     {"message", det.failure->message}});
        write_json(report_path, run.reports);
        return kExitFail;
    }
    const ThetaTable& t = *det.table;
    run.add("detect-theta", true, json{{"m", t.m}, {"table", theta_to_json(t)}});

    if (wants("qc-relations")) {
        auto r = qc_relations_check(t);
        run.add("qc-relations", r.relations_ok,
                json{{"violations", r.violations},
                     {"diagonal_all_one", r.diagonal_all_one},
                     {"diagonal_not_one", r.diagonal_not_one}});
    }
    RegularityWitness w;
    if (wants("witness")) {
        w = find_witness(d, t, budget, seed, definitive);
        std::string status = w.status == RegularityWitness::Status::found     ? "found"
                             : w.status == RegularityWitness::Status::refuted ? "refuted"
                                                                              : "inconclusive";
        run.add("witness", w.status == RegularityWitness::Status::found,
                json{{"status", status}, {"note", w.note}});
    }
    bool constrained = t.all_constrained();
    if (wants("minimality")) {
        if (constrained) {
            auto r = is_minimal(t);
            json cert;
            if (r.duplicate_rows) cert["duplicate_rows"] = {r.duplicate_rows->first, r.duplicate_rows->second};
            run.add("minimality", r.minimal, cert);
        } else {
            run.add("minimality", false, json{{"error", "unconstrained entries"}});
        }
    }
    if (wants("determinant") && constrained) {
        CMatrix m(t.m, t.m);
        for (long i = 0; i < t.m; ++i)
            for (long j = 0; j < t.m; ++j) m.at(i, j) = t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
        Cyclotomic dtv = det_exact(m);
        run.add("determinant", !dtv.is_zero(), json{{"det", scalar_to_json(dtv)}});
    }
    if (wants("bahturin-regev") && constrained) {
        auto r = bahturin_regev_check(t);
        run.add("bahturin-regev", r.det_squared_matches,
                json{{"det", scalar_to_json(r.det)},
                     {"minimal", r.minimal},
                     {"equivalence_holds", r.equivalence_holds}});
    }
    if (wants("msquared") && constrained)
        run.add("msquared", msquared_check(t), json::object());
    if (wants("root-order")) {
        auto r = root_order_check(t, d.algebra->dim());
        json viol = json::array();
        for (const auto& [i, j, o] : r.violations) viol.push_back({i, j, o});
        run.add("root-order", r.pass, json{{"bound", d.algebra->dim()}, {"violations", viol}});
    }
    SetGradingResult sg;
    if (wants("set-grading") || wants("realizability")) {
        sg = set_grading_detect(d);
        if (wants("set-grading"))
            run.add("set-grading", sg.ok,
                    sg.ok ? json{{"table", sg.f}}
                          : json{{"components", {sg.i, sg.j}},
                                 {"components_hit", sg.components_hit},
                                 {"message", sg.message}});
    }
    if (wants("realizability")) {
        if (sg.ok) {
            auto r = realizability_check(sg.f, static_cast<long>(sg.f.size()));
            std::string verdict = r.verdict == RealizabilityReport::Verdict::realizable
                                      ? "realizable"
                                  : r.verdict == RealizabilityReport::Verdict::necessary_conditions_hold
                                      ? "necessary-conditions-hold"
                                      : "violated";
            run.add("realizability", r.verdict != RealizabilityReport::Verdict::violated,
                    json{{"verdict", verdict}, {"message", r.message}});
        } else {
            run.add("realizability", false, json{{"error", "not a set-grading"}});
        }
    }
    if (wants("reconstruct-group")) {
        if (w.status != RegularityWitness::Status::found)
            w = find_witness(d, t, budget, seed, definitive);
        auto r = reconstruct_group(d, t, w);
        if (r.ok()) {
            auto type = classify_abelian(*r.group);
            run.add("reconstruct-group", true,
                    json{{"group", cayley_to_json(*r.group)},
                         {"invariant_factors", type.invariant_factors}});
        } else {
            run.add("reconstruct-group", false, json{{"message", r.message}});
        }
    }
    write_json(report_path, run.reports);
    return run.any_fail ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum commutative decomposition toolkit"};
    app.require_subcommand(1);
    unsigned long seed = default_seed();
    app.add_option("--seed", seed, "random seed (env QCREG_SEED)");

    // build
    auto* build = app.add_subcommand("build", "emit algebra + decomposition JSON for a named construction");
    std::string build_name, out_prefix = "out";
    long bn = 0, bn1 = 0, bn2 = 0, bp = 0, bk = 0;
    std::vector<long> bexps;
    bool list = false;
    build->add_option("name", build_name, "construction name");
    build->add_flag("--list", list, "list known construction names");
    build->add_option("--n", bn, "size parameter");
    build->add_option("--n1", bn1, "first size");
    build->add_option("--n2", bn2, "second size");
    build->add_option("--p", bp, "prime");
    build->add_option("--exp", bexps, "exponent list");
    build->add_option("--k", bk, "generator count");
    build->add_option("--out", out_prefix, "output file prefix");

    // check
    auto* check = app.add_subcommand("check", "run the check pipeline on a decomposition");
    std::string check_input, report_path = "report.json";
    std::vector<std::string> steps;
    bool all_steps = false, definitive = false;
    long budget = 64;
    check->add_option("input", check_input, "decomposition JSON file or construction spec name:args")
        ->required();
    check->add_flag("--all", all_steps, "run every step");
    check->add_option("--step", steps, "step names to run");
    check->add_flag("--definitive", definitive, "use the symbolic witness phase");
    check->add_option("--budget", budget, "random witness attempts");
    check->add_option("--report", report_path, "report output path");

    // identity
    auto* identity = app.add_subcommand("identity", "find a multilinear identity for a theta table");
    long id_m = 0, id_n = 2, id_trials = 200;
    std::string id_theta, id_verify, id_out = "identity.json";
    bool id_large = false;
    identity->add_option("--m", id_m, "use the table zeta_m^{ij} on indices 0..m-1");
    identity->add_option("--theta", id_theta, "named table (grassmann) or theta JSON file");
    identity->add_option("--n", id_n, "degree");
    identity->add_flag("--large", id_large, "allow degree above 6");
    identity->add_option("--verify", id_verify, "construction spec to verify on");
    identity->add_option("--trials", id_trials, "verification trials");
    identity->add_option("--out", id_out, "identity output path");

    // export
    auto* exp = app.add_subcommand("export", "export a construction's table");
    std::string exp_name, exp_csv;
    exp->add_option("name", exp_name, "construction spec name:args")->required();
    exp->add_option("--csv", exp_csv, "CSV output path for the theta table")->required();

    for (auto* sub : {build, check, identity, exp}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            if (list) {
                for (const auto& n : construction_names()) std::cout << n << "\n";
                return kExitPass;
            }
            if (build_name.empty()) {
                std::cerr << "build: missing construction name\n";
                return kExitUsage;
            }
            std::vector<long> args;
            if (build_name == "pauli" || build_name == "grassmann-z2")
                args = {build_name == "pauli" ? bn : (bk ? bk : bn)};
            else if (build_name == "kronecker")
                args = {bn1, bn2};
            else if (build_name == "p-power") {
                args = {bp};
                for (long e : bexps) args.push_back(e);
            }
            NamedConstruction c = make_construction(build_name, args);
            write_json(out_prefix + ".algebra.json", algebra_to_json(*c.algebra));
            write_json(out_prefix + ".decomposition.json", decomposition_to_json(c.decomposition));
            std::cout << "wrote " << out_prefix << ".algebra.json and " << out_prefix
                      << ".decomposition.json\n";
            return kExitPass;
        }
        if (*check) {
            Decomposition d;
            if (check_input.size() > 5 &&
                check_input.substr(check_input.size() - 5) == ".json") {
                std::ifstream in(check_input);
                if (!in) {
                    std::cerr << "check: cannot open " << check_input << "\n";
                    return kExitUsage;
                }
                json j;
                in >> j;
                auto slash = check_input.find_last_of('/');
                std::string dir = slash == std::string::npos ? "." : check_input.substr(0, slash);
                d = decomposition_from_json(j, dir);
            } else {
                d = construction_from_spec(check_input).decomposition;
            }
            std::vector<std::string> effective = all_steps ? std::vector<std::string>{} : steps;
            return run_pipeline(d, effective, seed, budget, definitive, report_path);
        }
        if (*identity) {
            ThetaTable t;
            if (id_m > 0) {
                t.m = id_m;
                t.entries.assign(static_cast<size_t>(id_m),
                                 std::vector<Cyclotomic>(static_cast<size_t>(id_m)));
                t.constrained.assign(static_cast<size_t>(id_m),
                                     std::vector<bool>(static_cast<size_t>(id_m), true));
                for (long i = 0; i < id_m; ++i)
                    for (long j = 0; j < id_m; ++j)
                        t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            Cyclotomic::root(id_m, i * j);
            } else if (id_theta == "grassmann") {
                t.m = 2;
                t.entries = {{Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(-1)}};
                t.constrained = {{true, true}, {true, true}};
            } else if (!id_theta.empty()) {
                std::ifstream in(id_theta);
                if (!in) {
                    std::cerr << "identity: cannot open " << id_theta << "\n";
                    return kExitUsage;
                }
                json j;
                in >> j;
                t = theta_from_json(j);
            } else {
                std::cerr << "identity: need --m or --theta\n";
                return kExitUsage;
            }
            auto p = find_identity(t, id_n, id_large);
            if (!p) {
                std::cout << "none\n";
                write_json(id_out, json{{"n", id_n}, {"terms", nullptr}});
                return kExitPass;
            }
            write_json(id_out, poly_to_json(*p));
            std::cout << "identity with " << p->terms.size() << " terms written to " << id_out << "\n";
            if (!id_verify.empty()) {
                NamedConstruction c = construction_from_spec(id_verify);
                auto v = verify_identity(*p, c.decomposition, id_trials, seed);
                std::cout << "verification: " << (v.holds ? "zero on all substitutions" : "violated")
                          << " (" << v.trials_run << " trials"
                          << (v.exhaustive ? ", exhaustive basis sweep" : "") << ")\n";
                if (!v.holds) return kExitFail;
            }
            return kExitPass;
        }
        if (*exp) {
            NamedConstruction c = construction_from_spec(exp_name);
            DetectResult det = detect_theta(c.decomposition);
            if (!det.ok()) {
                std::cerr << "export: " << det.failure->message << "\n";
                return kExitFail;
            }
            std::ofstream out(exp_csv);
            if (!out) {
                std::cerr << "export: cannot write " << exp_csv << "\n";
                return kExitUsage;
            }
            out << theta_to_csv(*det.table);
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
