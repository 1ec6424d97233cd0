#include "cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/ranges.hpp"
#include "cli/report.hpp"
#include "njconst/closed_forms.hpp"
#include "njconst/constants.hpp"
#include "njconst/errors.hpp"
#include "njconst/lemma_audit.hpp"

namespace njconst::cli {

namespace {

struct GridFlags {
    int angles = SearchConfig{}.coarse_angles;
    int t_samples = SearchConfig{}.t_samples;
    int refine_rounds = SearchConfig{}.refine_rounds;
    unsigned workers = 0;

    void attach(CLI::App& app) {
        app.add_option("--angles", angles, "Coarse angle samples per sphere")->capture_default_str();
        app.add_option("--t-samples", t_samples, "Coarse samples of t on [0, 1]")->capture_default_str();
        app.add_option("--refine-rounds", refine_rounds, "Local refinement rounds")->capture_default_str();
        app.add_option("--workers", workers, "Worker threads for the coarse scan (0 = hardware)");
    }

    [[nodiscard]] SearchConfig config() const {
        SearchConfig c;
        c.coarse_angles = angles;
        c.t_samples = t_samples;
        c.refine_rounds = refine_rounds;
        c.workers = workers;
        c.validate();
        return c;
    }
};

// Writes to --out when given, otherwise to `fallback`.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        stream_ = &file_;
    }
    std::ostream& stream() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw std::runtime_error("failed writing output");
    }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool is_skew_family(const ConstantKind& constant) {
    return std::holds_alternative<kind::CNJskew>(constant) || std::holds_alternative<kind::CNJp>(constant) ||
           std::holds_alternative<kind::LYJ>(constant);
}

Estimate compute_estimate(const SpaceDescriptor& space, const ConstantKind& constant, Method method,
                          const SearchConfig& config) {
    if (method == Method::sphere) return estimate(space, constant, config);
    const auto* bf = std::get_if<BanasFraczek>(&space);
    if (bf == nullptr || !is_skew_family(constant)) {
        throw DomainError("--method extreme needs a bf space and a cnjskew, cnjp, or lyj constant");
    }
    if (const auto* k = std::get_if<kind::CNJskew>(&constant)) {
        return estimate_skew_extreme_bf(bf->lambda, k->p, k->xi, k->eta, config);
    }
    if (const auto* k = std::get_if<kind::CNJp>(&constant)) {
        return estimate_skew_extreme_bf(bf->lambda, k->p, 1.0, 1.0, config);
    }
    const auto& k = std::get<kind::LYJ>(constant);
    return estimate_skew_extreme_bf(bf->lambda, 2.0, k.xi, k.eta, config);
}

struct ComputeCommand {
    std::string space;
    std::string constant;
    std::string method = "sphere";
    std::string format = "text";
    std::string out;
    GridFlags grid;

    int run(std::ostream& stdout_stream) const {
        const SpaceDescriptor s = parse_space(space);
        const ConstantKind c = parse_constant(constant);
        const Method m = parse_method(method);
        const SearchConfig config = grid.config();
        Output output(out, stdout_stream);
        const Estimate e = compute_estimate(s, c, m, config);
        std::ostream& os = output.stream();
        if (format == "json") {
            Json j;
            j["space"] = njconst::to_string(s);
            j["constant"] = njconst::to_string(c);
            j["method"] = std::string(to_string(m));
            j["estimate"] = to_json(e);
            write_json(os, j);
        } else if (format == "csv") {
            os << "space,constant,method,value,witness_x1,witness_x2,witness_y1,witness_y2,witness_t\n";
            os << njconst::to_string(s) << ",\"" << njconst::to_string(c) << "\"," << to_string(m) << ',' << number(e.value) << ','
               << number(e.witness_x.a()) << ',' << number(e.witness_x.b()) << ',' << number(e.witness_y.a())
               << ',' << number(e.witness_y.b()) << ',' << number(e.witness_t) << '\n';
        } else {
            os << "space: " << njconst::to_string(s) << '\n'
               << "constant: " << njconst::to_string(c) << '\n'
               << "method: " << to_string(m) << '\n'
               << "value: " << number(e.value) << '\n'
               << "witness_x: " << number(e.witness_x.a()) << ' ' << number(e.witness_x.b()) << '\n'
               << "witness_y: " << number(e.witness_y.a()) << ' ' << number(e.witness_y.b()) << '\n'
               << "witness_t: " << number(e.witness_t) << '\n'
               << "weights_swapped: " << (e.weights_swapped ? "true" : "false") << '\n'
               << "evaluations: " << e.evaluations << '\n';
        }
        output.finish();
        return kExitOk;
    }
};

struct SweepCommand {
    std::string lambda = "2";
    std::string p = "2";
    std::string xi = "1";
    std::string eta = "1";
    std::string method = "sphere";
    std::string format = "csv";
    std::string out;
    GridFlags grid;

    int run(std::ostream& stdout_stream) const {
        const auto lambdas = parse_range(lambda);
        const auto ps = parse_range(p);
        const auto xis = parse_range(xi);
        const auto etas = parse_range(eta);
        const Method m = parse_method(method);
        const SearchConfig config = grid.config();

        // Validate every tuple before any search runs.
        for (double l : lambdas) {
            for (double pv : ps) {
                for (double x : xis) {
                    for (double e : etas) static_cast<void>(cf_skew_bf(l, pv, x, e));
                }
            }
        }

        Output output(out, stdout_stream);
        std::vector<SweepRow> rows;
        for (double l : lambdas) {
            for (double pv : ps) {
                for (double x : xis) {
                    for (double e : etas) {
                        const CaseSpec spec{CaseSpec::Target::skew, l, pv, x, e, m};
                        SweepRow row{l, pv, x, e, cf_skew_bf(l, pv, x, e), estimate_case(spec, config), 0.0};
                        row.abs_diff = std::abs(row.numeric.value - row.closed_form.value);
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        if (format == "json") {
            write_json(output.stream(), sweep_json(rows));
        } else {
            write_sweep_csv(output.stream(), rows);
        }
        output.finish();
        return kExitOk;
    }
};

struct VerifyCommand {
    std::string suite = "default";
    double tolerance = 1e-3;
    std::string format = "json";
    std::string out;
    GridFlags grid;

    int run(std::ostream& stdout_stream) const {
        const auto specs = suite_cases(suite);
        if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) throw DomainError("tolerance must be nonnegative");
        const SearchConfig config = grid.config();
        Output output(out, stdout_stream);
        std::vector<VerificationCase> cases;
        bool failed = false;
        for (const auto& spec : specs) {
            cases.push_back(run_case(spec, config, tolerance));
            failed = failed || cases.back().status == CaseStatus::fail;
        }
        if (format == "csv") {
            write_verification_csv(output.stream(), cases);
        } else {
            write_json(output.stream(), verification_report(suite, tolerance, cases));
        }
        output.finish();
        return failed ? kExitVerificationFailed : kExitOk;
    }
};

struct LemmasCommand {
    double lambda = 2.0;
    double p = 3.0;
    double xi = 1.0;
    double eta = 1.0;
    int resolution = AuditGrid{}.resolution;
    int t_samples = AuditGrid{}.t_samples;
    std::string audit = "all";
    std::string format = "text";
    std::string out;

    int run(std::ostream& stdout_stream) const {
        const AuditGrid grid{resolution, lambda, p, xi, eta, t_samples};
        struct Named {
            std::string name;
            AuditReport report;
        };
        std::vector<Named> reports;
        const bool all = audit == "all";
        if (all || audit == "lemma1") reports.push_back({"lemma1", audit_lemma1(grid)});
        // Under "all" the lemma2 audits run only where their p > 2 hypothesis holds.
        if (audit == "lemma2" || (all && p > 2.0)) {
            reports.push_back({"lemma2", audit_lemma2(grid, Lemma2Variant::scaled_lead)});
            reports.push_back({"lemma2_full_lead", audit_lemma2(grid, Lemma2Variant::full_lead)});
        }
        if (all || audit == "phi") reports.push_back({"phi_monotone", audit_phi_monotone(lambda, p, xi, eta, t_samples)});

        Output output(out, stdout_stream);
        std::ostream& os = output.stream();
        bool clean = true;
        for (const auto& r : reports) clean = clean && r.report.violations == 0;
        if (format == "json") {
            Json j;
            j["parameters"] = {{"lambda", round12(lambda)}, {"p", round12(p)}, {"xi", round12(xi)},
                               {"eta", round12(eta)}, {"resolution", resolution}, {"t_samples", t_samples}};
            j["audits"] = Json::array();
            for (const auto& r : reports) {
                j["audits"].push_back({{"name", r.name},
                                       {"min_slack", round12(r.report.min_slack)},
                                       {"argmin",
                                        {{"t", round12(r.report.argmin.t)},
                                         {"x1", round12(r.report.argmin.x1)},
                                         {"y1", round12(r.report.argmin.y1)}}},
                                       {"violations", r.report.violations},
                                       {"cases_audited", r.report.cases_audited}});
            }
            j["status"] = clean ? "pass" : "fail";
            write_json(os, j);
        } else {
            for (const auto& r : reports) {
                os << r.name << ": min_slack=" << number(r.report.min_slack)
                   << " violations=" << r.report.violations << " cases=" << r.report.cases_audited
                   << " argmin=(t=" << number(r.report.argmin.t) << ", x1=" << number(r.report.argmin.x1)
                   << ", y1=" << number(r.report.argmin.y1) << ")\n";
            }
            os << (clean ? "all audits passed" : "audit violations found") << '\n';
        }
        output.finish();
        return clean ? kExitOk : kExitVerificationFailed;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew generalized von Neumann-Jordan constants of planar normed spaces", "njconst"};
    app.require_subcommand(1);

    ComputeCommand compute;
    auto* compute_cmd = app.add_subcommand("compute", "Estimate one constant by supremum search");
    compute_cmd->add_option("--space", compute.space, "euclidean | lr:r=V | bf:lambda=V | gbf:lambda=V,p=V")->required();
    compute_cmd->add_option("--constant", compute.constant,
                            "cnj | cnjp:p=V | cnjskew:p=V,xi=V,eta=V | lyj:xi=V,eta=V | lyjprime:xi=V,eta=V")
        ->required();
    compute_cmd->add_option("--method", compute.method, "sphere | extreme")
        ->check(CLI::IsMember({"sphere", "extreme"}));
    compute_cmd->add_option("--format", compute.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    compute_cmd->add_option("--out", compute.out, "Output file (default stdout)");
    compute.grid.attach(*compute_cmd);

    SweepCommand sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Closed form versus numeric estimate over parameter ranges");
    sweep_cmd->add_option("--lambda", sweep.lambda, "Range: v | v1,v2 | start:step:stop | empty");
    sweep_cmd->add_option("--p", sweep.p, "Range of the constant exponent");
    sweep_cmd->add_option("--xi", sweep.xi, "Range of xi");
    sweep_cmd->add_option("--eta", sweep.eta, "Range of eta");
    sweep_cmd->add_option("--method", sweep.method, "sphere | extreme")->check(CLI::IsMember({"sphere", "extreme"}));
    sweep_cmd->add_option("--format", sweep.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep.out, "Output file (default stdout)");
    sweep.grid.attach(*sweep_cmd);

    VerifyCommand verify;
    auto* verify_cmd = app.add_subcommand("verify", "Compare numeric estimates with the closed forms");
    verify_cmd->add_option("--suite", verify.suite, "Case suite")->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--tolerance", verify.tolerance, "Absolute tolerance for pass")->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", verify.out, "Output file (default stdout)");
    verify.grid.attach(*verify_cmd);

    LemmasCommand lemmas;
    auto* lemmas_cmd = app.add_subcommand("lemmas", "Grid audits of the lemma inequalities");
    lemmas_cmd->add_option("--lambda", lemmas.lambda)->capture_default_str();
    lemmas_cmd->add_option("--p", lemmas.p)->capture_default_str();
    lemmas_cmd->add_option("--xi", lemmas.xi)->capture_default_str();
    lemmas_cmd->add_option("--eta", lemmas.eta)->capture_default_str();
    lemmas_cmd->add_option("--resolution", lemmas.resolution, "Samples per coordinate axis")->capture_default_str();
    lemmas_cmd->add_option("--t-samples", lemmas.t_samples, "Samples of t")->capture_default_str();
    lemmas_cmd->add_option("--audit", lemmas.audit, "all | lemma1 | lemma2 | phi")
        ->check(CLI::IsMember({"all", "lemma1", "lemma2", "phi"}));
    lemmas_cmd->add_option("--format", lemmas.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    lemmas_cmd->add_option("--out", lemmas.out, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (compute_cmd->parsed()) return compute.run(out);
        if (sweep_cmd->parsed()) return sweep.run(out);
        if (verify_cmd->parsed()) return verify.run(out);
        if (lemmas_cmd->parsed()) return lemmas.run(out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace njconst::cli
