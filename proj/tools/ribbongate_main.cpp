#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define RG_ISATTY _isatty
#define RG_FILENO _fileno
#else
#include <unistd.h>
#define RG_ISATTY isatty
#define RG_FILENO fileno
#endif

#include <CLI11.hpp>

#include "ribbongate/selftest.hpp"

namespace rg = ribbongate;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // internal assertion / unmet verdict
constexpr int kExitBadInput = 2;

bool want_json(bool json_flag) { return json_flag || !RG_ISATTY(RG_FILENO(stdout)); }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json make_report(const std::string& command, json inputs, json outputs, double ms) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"timing_ms", ms},
                {"version", rg::kToolVersion}};
}

void print_report(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << "ribbongate " << report.at("command").get<std::string>() << " (v"
              << rg::kToolVersion << ", " << report.at("timing_ms").get<double>() << " ms)\n";
    std::cout << report.at("outputs").dump(2) << "\n";
}

// Diagram selection flags shared by the invariants subcommand.
struct DiagramFlags {
    std::string pretzel_arg, torus2_arg, sum_arg, pd_arg, spec_arg;
    bool unknot_flag = false;

    json to_spec() const {
        int set = !pretzel_arg.empty() + !torus2_arg.empty() + !sum_arg.empty() +
                  !pd_arg.empty() + !spec_arg.empty() + unknot_flag;
        if (set != 1)
            throw rg::MalformedInput(
                "choose exactly one of --pretzel/--torus2/--unknot/--sum/--pd/--spec");
        if (unknot_flag) return "unknot";
        if (!pretzel_arg.empty()) return rg::spec_from_text("pretzel:" + pretzel_arg);
        if (!torus2_arg.empty()) return rg::spec_from_text("torus2:" + torus2_arg);
        if (!sum_arg.empty()) {
            json s = rg::spec_from_text(sum_arg);
            if (!(s.is_object() && s.contains("sum")))
                throw rg::MalformedInput("--sum needs at least two comma-separated specs");
            return s;
        }
        if (!pd_arg.empty()) return json{{"pd", json::parse(pd_arg)}};
        return rg::spec_from_text(spec_arg);
    }
};

json laurent_to_json(const rg::LaurentPoly& p) {
    json coeffs = json::array();
    if (!p.is_zero())
        for (int e = p.min_exp(); e <= p.max_exp(); ++e) coeffs.push_back(p.coeff(e).str());
    return json{{"min_exp", p.is_zero() ? 0 : p.min_exp()},
                {"coefficients", coeffs},
                {"text", p.str()}};
}

json matrix_to_json(const rg::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_invariants(const DiagramFlags& flags, const std::vector<long long>& primes,
                   bool dump_goeritz, bool json_flag) {
    auto t0 = std::chrono::steady_clock::now();
    json spec = flags.to_spec();
    rg::KnotDiagram d = rg::diagram_from_spec(spec);
    if (!d.is_knot())
        throw rg::NotAKnot("invariants needs a knot, got " +
                           std::to_string(d.component_count()) + " components");

    rg::LaurentPoly delta = rg::alexander_poly(d);
    rg::Zint det = rg::determinant_knot(d);
    rg::DoubleCoverHomology h = rg::h1_double_cover(d);

    json factors = json::array();
    for (const rg::Zint& f : h.invariant_factors) factors.push_back(f.str());
    json betas = json::object();
    for (long long p : primes)
        betas[std::to_string(p)] = rg::beta1_mod_p(d, p);

    json outputs{{"crossings", d.crossing_count()},
                 {"writhe", d.writhe()},
                 {"alexander", laurent_to_json(delta)},
                 {"determinant", det.str()},
                 {"invariant_factors", factors},
                 {"beta1", betas}};
    if (dump_goeritz && d.crossing_count() > 0)
        outputs["goeritz"] = matrix_to_json(rg::goeritz_matrix(d));
    print_report(make_report("invariants", json{{"spec", spec}, {"p", primes}}, outputs,
                             ms_since(t0)),
                 want_json(json_flag));
    return kExitOk;
}

int cmd_obstruct(const std::string& k0_text, const std::string& k1_text, int g, int jobs,
                 bool json_flag) {
    auto t0 = std::chrono::steady_clock::now();
    json s0 = rg::spec_from_text(k0_text);
    json s1 = rg::spec_from_text(k1_text);
    rg::ObstructionCertificate cert =
        rg::ribbon_verdict(rg::diagram_from_spec(s0), rg::diagram_from_spec(s1), g, jobs);
    json outputs{{"certificate", rg::certificate_to_json(cert)}};
    print_report(make_report("obstruct", json{{"k0", s0}, {"k1", s1}, {"genus", g}}, outputs,
                             ms_since(t0)),
                 want_json(json_flag));
    return kExitOk;
}

int cmd_construct(const std::string& family_text, int g, int copies, int jobs,
                  bool json_flag) {
    auto t0 = std::chrono::steady_clock::now();
    json base = rg::spec_from_text(family_text);
    rg::FamilySpec family = rg::FamilySpec::from_spec(base);
    auto [recipe, cert] = rg::build_lg(family, g, copies, jobs);

    json outputs{{"copies", copies > 0 ? copies : rg::minimal_copies(g)},
                 {"genus", rg::genus(recipe)},
                 {"recipe", rg::recipe_to_json(recipe)},
                 {"certificate", rg::certificate_to_json(cert)}};
    print_report(make_report("construct",
                             json{{"family", base}, {"genus", g}, {"copies", copies}},
                             outputs, ms_since(t0)),
                 want_json(json_flag));
    return cert.verdict == rg::Verdict::OBSTRUCTED ? kExitOk : kExitFailure;
}

int cmd_selftest(int jobs, bool json_flag) {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = rg::selftest_seed();
    std::vector<rg::CheckResult> results = rg::run_acceptance_suite(seed, jobs);

    const bool as_json = want_json(json_flag);
    bool all_pass = true;
    std::string first_failure;
    json checks = json::array();
    for (const auto& r : results) {
        if (!r.pass && first_failure.empty()) first_failure = r.name;
        all_pass &= r.pass;
        checks.push_back(json{{"name", r.name},
                              {"pass", r.pass},
                              {"detail", r.detail},
                              {"ms", r.ms}});
        if (!as_json)
            std::printf("%s  %-28s %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str(), r.ms);
    }

    // Corpus tables: the determinant family and the dual-route comparison.
    json det_table = json::array();
    for (int k = 1; k <= 10; ++k) {
        rg::KnotDiagram d = rg::pretzel(3, -3, k);
        det_table.push_back(json{{"k", k}, {"det", rg::determinant_knot(d).str()}});
    }
    json cross_table = json::array();
    for (const auto& name : {"trefoil", "torus2:5", "torus2:7", "pretzel:3,-3,4"}) {
        rg::KnotDiagram d = rg::diagram_from_spec(rg::spec_from_text(name));
        rg::Zint alex = abs(rg::laurent_eval(rg::alexander_poly(d), -1));
        rg::Zint goe = abs(rg::det_exact(rg::goeritz_matrix(d)));
        cross_table.push_back(
            json{{"knot", name}, {"alexander_at_-1", alex.str()}, {"goeritz_det", goe.str()}});
    }
    if (!as_json) {
        std::printf("det(P(3,-3,k)) for k=1..10:");
        for (const auto& row : det_table) std::printf(" %s", row["det"].get<std::string>().c_str());
        std::printf("\n|Delta(-1)| vs |det Goeritz|:");
        for (const auto& row : cross_table)
            std::printf(" %s=%s/%s", row["knot"].get<std::string>().c_str(),
                        row["alexander_at_-1"].get<std::string>().c_str(),
                        row["goeritz_det"].get<std::string>().c_str());
        std::printf("\n");
    }

    json outputs{{"checks", checks},
                 {"det_table", det_table},
                 {"cross_check_table", cross_table},
                 {"seed", seed},
                 {"all_pass", all_pass}};
    if (!first_failure.empty()) outputs["first_failure"] = first_failure;
    if (as_json)
        print_report(make_report("selftest", json{{"seed", seed}}, outputs, ms_since(t0)),
                     true);
    else if (!all_pass)
        std::printf("FIRST FAILURE: %s\n", first_failure.c_str());
    return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact knot invariants, cobordism recipes and ribbon obstructions"};
    app.require_subcommand(1);

    DiagramFlags dflags;
    std::vector<long long> primes;
    bool json_flag = false;
    bool dump_goeritz = false;
    int genus_arg = 0, copies_arg = 0, jobs_arg = 1;
    std::string k0_text, k1_text, family_text;

    CLI::App* inv = app.add_subcommand("invariants", "Delta, det, H1 of the double cover");
    inv->add_option("--pretzel", dflags.pretzel_arg, "pretzel a,b,c");
    inv->add_option("--torus2", dflags.torus2_arg, "(2,n) torus knot");
    inv->add_flag("--unknot", dflags.unknot_flag, "round unknot");
    inv->add_option("--sum", dflags.sum_arg, "connected sum, e.g. trefoil,trefoil");
    inv->add_option("--pd", dflags.pd_arg, "raw PD code JSON");
    inv->add_option("--spec", dflags.spec_arg, "generator spec text");
    inv->add_option("--p", primes, "odd prime(s) for beta1");
    inv->add_flag("--goeritz", dump_goeritz, "dump the reduced Goeritz matrix");
    inv->add_flag("--json", json_flag, "force JSON output");

    CLI::App* obs = app.add_subcommand("obstruct", "ribbon obstruction certificate");
    obs->add_option("--k0", k0_text, "source knot spec")->required();
    obs->add_option("--k1", k1_text, "target knot spec")->required();
    obs->add_option("--genus", genus_arg, "cobordism genus")->required();
    obs->add_option("--jobs", jobs_arg, "parallel prime sweep");
    obs->add_flag("--json", json_flag, "force JSON output");

    CLI::App* con = app.add_subcommand("construct", "build the genus-g recipe + certificate");
    con->add_option("--family", family_text, "base knot spec, e.g. pretzel:3,-3,4")->required();
    con->add_option("--genus", genus_arg, "target genus")->required();
    con->add_option("--copies", copies_arg, "override the copy count n (default 2g+1)");
    con->add_option("--jobs", jobs_arg, "parallel prime sweep");
    con->add_flag("--json", json_flag, "force JSON output");

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_option("--jobs", jobs_arg, "parallelism for the suite");
    self->add_flag("--json", json_flag, "force JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(dflags, primes, dump_goeritz, json_flag);
        if (obs->parsed()) return cmd_obstruct(k0_text, k1_text, genus_arg, jobs_arg, json_flag);
        if (con->parsed())
            return cmd_construct(family_text, genus_arg, copies_arg, jobs_arg, json_flag);
        if (self->parsed()) return cmd_selftest(jobs_arg, json_flag);
    } catch (const rg::InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const rg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitBadInput;
}
