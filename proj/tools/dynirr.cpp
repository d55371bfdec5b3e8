/* dynirr: build the preperiodic-parameter polynomial families, run their
   structural and irreducibility checks, and persist polynomials,
   certificates and run manifests as JSON. */

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <thread>

#include "dynirr/cubic_family.hpp"
#include "dynirr/json_io.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/quad_family.hpp"
#include "dynirr/unicritical.hpp"

namespace fs = std::filesystem;
using dynirr::io::json;

namespace {

constexpr const char* TOOL_VERSION = "dynirr 1.0.0";

struct CheckResult {
    std::string family;
    json params;
    std::string check;
    bool pass = false;
    std::string witness;
    json payload;
    double ms = 0.0;
};

struct RunContext {
    std::string out_dir;
    long budget = dynirr::uni::default_budget();
    double tol = 1e-8;
    int jobs = 1;
    std::string emit = "text";
    std::vector<CheckResult> results;
};

long parse_range_lo(const std::string& s, long* hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(s);
        *hi = v;
        return v;
    }
    long lo = std::stol(s.substr(0, pos));
    *hi = std::stol(s.substr(pos + 2));
    if (*hi < lo) throw CLI::ValidationError("range upper bound below lower bound: " + s);
    return lo;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    for (const auto& tok : split_commas(s)) out.push_back(std::stol(tok));
    if (out.empty()) throw CLI::ValidationError("empty list: " + s);
    return out;
}

bool want(const std::vector<std::string>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c == name || c == "all") return true;
    return false;
}

template <class F>
CheckResult timed_check(std::string family, json params, std::string name, F&& body) {
    CheckResult r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.check = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.witness = std::string("error: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void run_tasks(std::vector<std::function<CheckResult()>>& tasks, RunContext& rc) {
    std::vector<CheckResult> results(tasks.size());
    int jobs = std::max(1, rc.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                results[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& r : results) rc.results.push_back(std::move(r));
}

void emit_results(RunContext& rc, const json& spec_echo) {
    bool all_pass = true;
    for (const auto& r : rc.results) all_pass = all_pass && r.pass;
    json checks = json::array();
    for (const auto& r : rc.results) {
        json c;
        c["family"] = r.family;
        c["params"] = r.params;
        c["check"] = r.check;
        c["verdict"] = r.pass ? "pass" : "fail";
        if (!r.witness.empty()) c["witness"] = r.witness;
        c["ms"] = r.ms;
        checks.push_back(c);
    }
    if (rc.emit == "json") {
        json out;
        out["schema"] = 1;
        out["tool"] = TOOL_VERSION;
        out["spec"] = spec_echo;
        out["checks"] = checks;
        out["all_pass"] = all_pass;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        for (const auto& r : rc.results) {
            std::printf("%-4s %s %s %s%s%s\n", r.pass ? "pass" : "FAIL", r.family.c_str(),
                        r.params.dump().c_str(), r.check.c_str(), r.witness.empty() ? "" : "  -- ",
                        r.witness.c_str());
        }
        std::printf("%zu checks, %s\n", rc.results.size(), all_pass ? "all passed" : "FAILURES");
    }
    if (!rc.out_dir.empty()) {
        fs::create_directories(rc.out_dir);
        json manifest;
        manifest["schema"] = 1;
        manifest["tool"] = TOOL_VERSION;
        manifest["spec"] = spec_echo;
        json full = json::array();
        for (std::size_t i = 0; i < rc.results.size(); ++i) {
            json c = checks[i];
            if (!rc.results[i].payload.is_null()) c["result"] = rc.results[i].payload;
            full.push_back(c);
        }
        manifest["checks"] = full;
        manifest["all_pass"] = all_pass;
        dynirr::io::write_file((fs::path(rc.out_dir) / "manifest.json").string(),
                               manifest.dump(2) + "\n");
    }
}

int exit_code(const RunContext& rc) {
    for (const auto& r : rc.results)
        if (!r.pass) return 1;
    return 0;
}

void export_artifact(const RunContext& rc, const std::string& stem, const json& j) {
    if (rc.out_dir.empty()) return;
    fs::create_directories(rc.out_dir);
    dynirr::io::write_file((fs::path(rc.out_dir) / (stem + ".json")).string(), j.dump(2) + "\n");
}

int run_cubic(RunContext& rc, long klo, long khi, const std::vector<std::string>& checks) {
    std::vector<std::function<CheckResult()>> tasks;
    for (long k = klo; k <= khi; ++k) {
        json params{{"k", k}};
        if (want(checks, "structure"))
            tasks.push_back([&rc, k, params]() {
                return timed_check("cubic", params, "structure", [&](CheckResult& r) {
                    dynirr::cubic::Instance inst = dynirr::cubic::build(k, rc.budget);
                    dynirr::StructureReport rep = dynirr::cubic::verify_structure(inst);
                    auto origin = dynirr::certify::origin_criterion_hypotheses(inst.R);
                    r.pass = rep.all_pass() && origin.hypotheses_hold;
                    r.payload = dynirr::io::to_json(rep);
                    r.payload["origin"] = dynirr::io::to_json(origin);
                    if (!r.pass && !rep.failures().empty()) r.witness = rep.failures().front();
                    export_artifact(rc, "cubic_R_k" + std::to_string(k), dynirr::io::to_json(inst.R));
                });
            });
        if (want(checks, "eisenstein"))
            tasks.push_back([&rc, k, params]() {
                return timed_check("cubic", params, "eisenstein", [&](CheckResult& r) {
                    dynirr::cubic::Slice slice = dynirr::cubic::build_slice(k, rc.budget);
                    auto cert = dynirr::cubic::certify_s(slice);
                    r.pass = cert.verdict == dynirr::certify::Verdict::irreducible;
                    r.payload = dynirr::io::to_json(cert);
                    if (!r.pass && !cert.failed.empty()) r.witness = cert.failed.front();
                    export_artifact(rc, "cubic_s_k" + std::to_string(k) + "_cert",
                                    dynirr::io::to_json(cert));
                });
            });
        if (want(checks, "oracle"))
            tasks.push_back([&rc, k, params]() {
                return timed_check("cubic", params, "oracle", [&](CheckResult& r) {
                    dynirr::cubic::Slice slice = dynirr::cubic::build_slice(k, rc.budget);
                    auto v = dynirr::oracle::validate_cubic_slice(slice.s, k, rc.tol);
                    r.pass = v.all_confirmed();
                    r.payload = dynirr::io::to_json(v);
                    if (!r.pass)
                        r.witness = std::to_string(v.confirmed) + "/" + std::to_string(v.total) +
                                    " roots confirmed";
                });
            });
    }
    run_tasks(tasks, rc);
    return 0;
}

int run_quadrat(RunContext& rc, long klo, long khi, const std::vector<std::string>& checks) {
    std::vector<std::function<CheckResult()>> tasks;
    for (long k = klo; k <= khi; ++k) {
        json params{{"k", k}};
        if (want(checks, "structure") && k >= 3)
            tasks.push_back([&rc, k, params]() {
                return timed_check("quadrat", params, "structure", [&](CheckResult& r) {
                    dynirr::quad::Instance inst = dynirr::quad::build(k, rc.budget);
                    dynirr::StructureReport rep = dynirr::quad::verify_structure(inst);
                    auto origin = dynirr::certify::origin_criterion_hypotheses(inst.R);
                    r.pass = rep.all_pass() && origin.hypotheses_hold;
                    r.payload = dynirr::io::to_json(rep);
                    r.payload["origin"] = dynirr::io::to_json(origin);
                    if (!r.pass && !rep.failures().empty()) r.witness = rep.failures().front();
                    export_artifact(rc, "quadrat_R_k" + std::to_string(k), dynirr::io::to_json(inst.R));
                });
            });
        if (want(checks, "eisenstein"))
            tasks.push_back([&rc, k, params]() {
                return timed_check("quadrat", params, "eisenstein", [&](CheckResult& r) {
                    dynirr::quad::Instance inst = dynirr::quad::build(k, rc.budget);
                    auto cert = dynirr::quad::certify_r(inst);
                    r.pass = cert.eisenstein.verdict == dynirr::certify::Verdict::irreducible &&
                             cert.exponent_equals_degree;
                    r.payload = dynirr::io::to_json(cert.eisenstein);
                    r.payload["mod2_exponent"] = cert.mod2_exponent;
                    r.payload["note"] = cert.note;
                    if (!r.pass && !cert.eisenstein.failed.empty())
                        r.witness = cert.eisenstein.failed.front();
                    export_artifact(rc, "quadrat_r_k" + std::to_string(k) + "_cert",
                                    dynirr::io::to_json(cert.eisenstein));
                });
            });
        if (want(checks, "oracle"))
            tasks.push_back([&rc, k, params]() {
                return timed_check("quadrat", params, "oracle", [&](CheckResult& r) {
                    dynirr::quad::Instance inst = dynirr::quad::build(k, rc.budget);
                    auto v = dynirr::oracle::validate_quad_slice(inst.r, k, rc.tol);
                    r.pass = v.all_confirmed();
                    r.payload = dynirr::io::to_json(v);
                    if (!r.pass)
                        r.witness = std::to_string(v.confirmed) + "/" + std::to_string(v.total) +
                                    " roots confirmed";
                });
            });
    }
    run_tasks(tasks, rc);
    return 0;
}

struct UniArgs {
    std::vector<long> Ds;
    long klo = 2, khi = 2;
    long nlo = 1, nhi = 1;
    std::vector<long> ds;
    bool survey = false;
};

std::vector<long> divisors_for(long D, const std::vector<long>& requested) {
    std::vector<long> out;
    for (long d : dynirr::divisors_of(D)) {
        if (d < 2) continue;
        if (requested.empty() || std::find(requested.begin(), requested.end(), d) != requested.end())
            out.push_back(d);
    }
    return out;
}

int run_uni(RunContext& rc, const UniArgs& args, const std::vector<std::string>& checks) {
    std::vector<std::function<CheckResult()>> tasks;
    if (args.survey || want(checks, "survey")) {
        long nhi = std::max(args.nhi, 2L);
        const UniArgs* ap = &args;
        tasks.push_back([&rc, ap, nhi]() {
            json params{{"D", ap->Ds}, {"n_max", nhi}};
            return timed_check("uni", params, "survey", [&](CheckResult& r) {
                auto rows = dynirr::uni::fp_survey(ap->Ds, nhi);
                r.pass = true;
                for (const auto& row : rows) r.pass = r.pass && row.matches && row.frobenius_ok;
                r.payload = dynirr::io::to_json(rows);
                export_artifact(rc, "survey", r.payload);
            });
        });
        if (args.survey) {  // survey-only invocation
            run_tasks(tasks, rc);
            return 0;
        }
    }
    for (long D : args.Ds) {
        auto ctx = std::make_shared<dynirr::uni::Context>(D, rc.budget);
        for (long k = args.klo; k <= args.khi; ++k)
            for (long n = args.nlo; n <= args.nhi; ++n) {
                for (long d : divisors_for(D, args.ds)) {
                    json params{{"D", D}, {"k", k}, {"n", n}, {"d", d}};
                    if (want(checks, "structure"))
                        tasks.push_back([&rc, ctx, k, n, d, params]() {
                            return timed_check("uni", params, "structure", [&](CheckResult& r) {
                                std::map<long, dynirr::uni::Factor> built;
                                std::map<long, const dynirr::uni::Factor*> lookup;
                                for (long m : dynirr::divisors_of(n)) {
                                    built.emplace(m, dynirr::uni::preperiodic_factor(*ctx, k, m, d));
                                    lookup.emplace(m, &built.at(m));
                                }
                                r.pass = dynirr::uni::verify_factorization_exact(*ctx, k, n, d, lookup);
                                r.payload = dynirr::io::to_json(built.at(n).poly);
                                export_artifact(rc,
                                                "uni_R_D" + std::to_string(ctx->D()) + "_k" +
                                                    std::to_string(k) + "_n" + std::to_string(n) +
                                                    "_d" + std::to_string(d),
                                                r.payload);
                            });
                        });
                    if (want(checks, "eisenstein"))
                        tasks.push_back([&rc, ctx, k, n, d, params]() {
                            return timed_check("uni", params, "eisenstein", [&](CheckResult& r) {
                                auto cert = dynirr::certify::theorem_pipeline(*ctx, k, n, d);
                                r.pass = cert.verdict == dynirr::certify::Verdict::irreducible;
                                r.payload = dynirr::io::to_json(cert);
                                if (!r.pass) r.witness = cert.detail;
                                export_artifact(rc,
                                                "uni_cert_D" + std::to_string(ctx->D()) + "_k" +
                                                    std::to_string(k) + "_n" + std::to_string(n) +
                                                    "_d" + std::to_string(d),
                                                r.payload);
                            });
                        });
                    if (want(checks, "resultant"))
                        for (long m = args.nlo; m <= args.nhi; ++m)
                            tasks.push_back([ctx, k, n, d, m]() {
                                json p{{"D", ctx->D()}, {"k", k}, {"m", m}, {"n", n}, {"d", d}};
                                return timed_check("uni", p, "resultant", [&](CheckResult& r) {
                                    auto w = dynirr::uni::check_resultant_lemma(*ctx, k, m, d, n);
                                    r.pass = w.matches;
                                    r.payload = dynirr::io::to_json(w);
                                    if (!r.pass)
                                        r.witness = "resultant " + w.value.to_string() +
                                                    ", expected |.| = " + w.expected_abs.to_string();
                                });
                            });
                    if (want(checks, "modp"))
                        tasks.push_back([ctx, k, n, d, params]() {
                            return timed_check("uni", params, "modp", [&](CheckResult& r) {
                                auto rep = dynirr::uni::check_modp_power(*ctx, k, n, d);
                                r.pass = rep.matches;
                                r.payload = dynirr::io::to_json(rep);
                            });
                        });
                    if (want(checks, "oracle"))
                        tasks.push_back([&rc, ctx, k, n, d, params]() {
                            return timed_check("uni", params, "oracle", [&](CheckResult& r) {
                                auto f = dynirr::uni::preperiodic_factor(*ctx, k, n, d);
                                auto v = dynirr::oracle::validate_unicritical(f.poly, ctx->D(), k, n,
                                                                              d, rc.tol);
                                r.pass = v.all_confirmed();
                                r.payload = dynirr::io::to_json(v);
                            });
                        });
                }
                if (want(checks, "modp")) {
                    json params{{"D", D}, {"k", k}, {"n", n}, {"d", "all"}};
                    tasks.push_back([ctx, k, n, params]() {
                        return timed_check("uni", params, "modp", [&](CheckResult& r) {
                            auto rep = dynirr::uni::check_modp_power(*ctx, k, n, std::nullopt);
                            r.pass = rep.matches;
                            r.payload = dynirr::io::to_json(rep);
                        });
                    });
                }
            }
    }
    run_tasks(tasks, rc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and irreducibility certification for "
                 "families of maps with a preperiodic critical point"};
    app.require_subcommand(1);

    RunContext rc;
    std::string k_range = "2..4", n_range = "1", check_list = "all", d_list;
    std::string D_list = "2";
    std::string cert_path;
    bool survey_flag = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", rc.out_dir, "output directory for the manifest and artifacts");
        cmd->add_option("--budget", rc.budget, "degree budget (env DYNIRR_BUDGET, default 5000)");
        cmd->add_option("--tol", rc.tol, "oracle tolerance");
        cmd->add_option("--jobs", rc.jobs, "parallel jobs");
        cmd->add_option("--emit", rc.emit, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--check", check_list,
                        "comma list: structure,eisenstein,resultant,modp,survey,oracle,all");
    };

    CLI::App* cubic = app.add_subcommand("cubic", "cubic polynomial family");
    cubic->add_option("--k", k_range, "preperiod range, e.g. 2..5");
    add_common(cubic);

    CLI::App* quadrat = app.add_subcommand("quadrat", "quadratic rational family");
    quadrat->add_option("--k", k_range, "preperiod range");
    add_common(quadrat);

    CLI::App* uni = app.add_subcommand("uni", "unicritical families a z^D + 1");
    uni->add_option("--D", D_list, "comma list of degrees");
    uni->add_option("--k", k_range, "preperiod range");
    uni->add_option("--n", n_range, "period range");
    uni->add_option("--d", d_list, "comma list of divisors (default: all d >= 2 dividing D)");
    uni->add_flag("--survey", survey_flag, "tabulate R_n mod p irreducibility");
    add_common(uni);

    CLI::App* verify = app.add_subcommand("verify-cert", "re-check a serialized certificate");
    verify->add_option("file", cert_path, "certificate JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            std::string text = dynirr::io::read_file(cert_path);
            bool ok = dynirr::io::verify_certificate_text(text);
            std::printf("%s %s\n", ok ? "pass" : "FAIL", cert_path.c_str());
            return ok ? 0 : 1;
        }
        std::vector<std::string> checks = split_commas(check_list);
        if (checks.empty()) throw CLI::ValidationError("--check must not be empty");
        long khi = 0, klo = parse_range_lo(k_range, &khi);
        json spec_echo;
        spec_echo["check"] = check_list;
        spec_echo["budget"] = rc.budget;
        spec_echo["tol"] = rc.tol;
        if (cubic->parsed()) {
            spec_echo["family"] = "cubic";
            spec_echo["k"] = k_range;
            run_cubic(rc, klo, khi, checks);
        } else if (quadrat->parsed()) {
            spec_echo["family"] = "quadrat";
            spec_echo["k"] = k_range;
            run_quadrat(rc, klo, khi, checks);
        } else if (uni->parsed()) {
            UniArgs ua;
            ua.Ds = parse_list(D_list);
            ua.klo = klo;
            ua.khi = khi;
            ua.nlo = parse_range_lo(n_range, &ua.nhi);
            if (!d_list.empty()) ua.ds = parse_list(d_list);
            ua.survey = survey_flag;
            spec_echo["family"] = "uni";
            spec_echo["D"] = ua.Ds;
            spec_echo["k"] = k_range;
            spec_echo["n"] = n_range;
            run_uni(rc, ua, checks);
        }
        emit_results(rc, spec_echo);
        return exit_code(rc);
    } catch (const dynirr::parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
