#include "cli/report.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "njconst/errors.hpp"

namespace njconst::cli {

std::string_view to_string(Method method) { return method == Method::sphere ? "sphere" : "extreme"; }

std::string_view to_string(CaseStatus status) {
    switch (status) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::informational: return "informational";
    }
    return "fail";
}

Method parse_method(std::string_view text) {
    if (text == "sphere") return Method::sphere;
    if (text == "extreme") return Method::extreme;
    throw DomainError("unknown method '" + std::string(text) + "'");
}

CaseStatus classify(bool condition_met, double abs_diff, double tolerance) {
    if (!condition_met) return CaseStatus::informational;
    return abs_diff <= tolerance ? CaseStatus::pass : CaseStatus::fail;
}

namespace {

using Target = CaseSpec::Target;

std::vector<CaseSpec> skew_cases(Method method) {
    std::vector<CaseSpec> cases;
    for (const auto& [lambda, p, xi, eta] : std::vector<std::array<double, 4>>{
             {2, 2, 1, 1}, {2, 3, 1, 2}, {2, 4, 1, 1}, {2, 4, 2, 3}, {3, 3, 1, 1}, {1.5, 2, 1, 1}}) {
        cases.push_back({Target::skew, lambda, p, xi, eta, method});
    }
    return cases;
}

std::vector<CaseSpec> cnj_cases() {
    std::vector<CaseSpec> cases;
    for (double lambda : {1.5, 2.0, 3.0}) cases.push_back({Target::cnj, lambda, 2.0, 1.0, 1.0, Method::sphere});
    return cases;
}

std::vector<CaseSpec> cnjp_cases() {
    std::vector<CaseSpec> cases;
    for (const auto& [lambda, p] : std::vector<std::array<double, 2>>{{2, 3}, {2, 4}, {3, 4}}) {
        cases.push_back({Target::skew, lambda, p, 1.0, 1.0, Method::sphere});
    }
    return cases;
}

std::vector<CaseSpec> unmet_cases() {
    return {{Target::skew, 1.1, 4.0, 1.0, 1.0, Method::sphere},
            {Target::skew, 1.2, 3.0, 1.0, 1.0, Method::sphere},
            {Target::skew, 1.3, 4.0, 1.0, 2.0, Method::sphere}};
}

void append(std::vector<CaseSpec>& to, const std::vector<CaseSpec>& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"default", "skew", "cnj", "cnjp", "extreme", "unmet", "all"};
    return names;
}

std::vector<CaseSpec> suite_cases(std::string_view suite) {
    std::vector<CaseSpec> cases;
    if (suite == "skew") return skew_cases(Method::sphere);
    if (suite == "extreme") return skew_cases(Method::extreme);
    if (suite == "cnj") return cnj_cases();
    if (suite == "cnjp") return cnjp_cases();
    if (suite == "unmet") return unmet_cases();
    if (suite == "default" || suite == "all") {
        append(cases, skew_cases(Method::sphere));
        append(cases, cnj_cases());
        append(cases, cnjp_cases());
        if (suite == "all") {
            append(cases, skew_cases(Method::extreme));
            append(cases, unmet_cases());
        }
        return cases;
    }
    throw DomainError("unknown suite '" + std::string(suite) + "'");
}

Estimate estimate_case(const CaseSpec& spec, const SearchConfig& config) {
    if (spec.target == Target::cnj) return estimate_cnj(BanasFraczek{spec.lambda}, config);
    if (spec.method == Method::extreme) return estimate_skew_extreme_bf(spec.lambda, spec.p, spec.xi, spec.eta, config);
    return estimate_skew(BanasFraczek{spec.lambda}, spec.p, spec.xi, spec.eta, config);
}

VerificationCase run_case(const CaseSpec& spec, const SearchConfig& config, double tolerance) {
    VerificationCase c;
    c.spec = spec;
    if (spec.target == Target::cnj) {
        const ConditionResult condition = condition_bf(spec.lambda, 2.0);
        c.closed_form = {cf_cnj_bf(spec.lambda), condition.met, condition.value, "2-1/lambda^2"};
    } else {
        c.closed_form = cf_skew_bf(spec.lambda, spec.p, spec.xi, spec.eta);
    }
    c.numeric = estimate_case(spec, config);
    c.abs_diff = std::abs(c.numeric.value - c.closed_form.value);
    c.status = classify(c.closed_form.condition_met, c.abs_diff, tolerance);
    return c;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }
std::string number(double x) { return format_number(x); }

namespace {
Json vec(const Vector2& v) { return Json::array({round12(v.a()), round12(v.b())}); }

std::string constant_text(const CaseSpec& spec) {
    if (spec.target == Target::cnj) return njconst::to_string(ConstantKind{kind::CNJ{}});
    return njconst::to_string(ConstantKind{kind::CNJskew{spec.p, spec.xi, spec.eta}});
}
}  // namespace

Json to_json(const Estimate& e) {
    Json j;
    j["value"] = round12(e.value);
    j["witness_x"] = vec(e.witness_x);
    j["witness_y"] = vec(e.witness_y);
    j["witness_t"] = round12(e.witness_t);
    j["weights_swapped"] = e.weights_swapped;
    j["form_values"] = Json::array({round12(e.form_values[0]), round12(e.form_values[1])});
    j["evaluations"] = e.evaluations;
    j["config"] = {{"coarse_angles", e.config.coarse_angles},
                   {"t_samples", e.config.t_samples},
                   {"refine_rounds", e.config.refine_rounds},
                   {"shrink", round12(e.config.shrink)},
                   {"refine_points", e.config.refine_points}};
    return j;
}

Json to_json(const ClosedFormResult& c) {
    Json j;
    j["value"] = round12(c.value);
    j["condition_met"] = c.condition_met;
    j["condition_value"] = round12(c.condition_value);
    j["formula_name"] = c.formula_name;
    return j;
}

Json to_json(const VerificationCase& c) {
    Json j;
    j["space"] = njconst::to_string(SpaceDescriptor{BanasFraczek{c.spec.lambda}});
    j["constant"] = constant_text(c.spec);
    j["method"] = std::string(to_string(c.spec.method));
    j["p"] = round12(c.spec.p);
    j["xi"] = round12(c.spec.xi);
    j["eta"] = round12(c.spec.eta);
    j["numeric"] = to_json(c.numeric);
    j["closed_form"] = to_json(c.closed_form);
    j["abs_diff"] = round12(c.abs_diff);
    j["status"] = std::string(to_string(c.status));
    return j;
}

Json verification_report(std::string_view suite, double tolerance, const std::vector<VerificationCase>& cases) {
    Json report;
    report["suite"] = std::string(suite);
    report["tolerance"] = round12(tolerance);
    report["cases"] = Json::array();
    int pass = 0, fail = 0, informational = 0;
    for (const auto& c : cases) {
        report["cases"].push_back(to_json(c));
        switch (c.status) {
            case CaseStatus::pass: ++pass; break;
            case CaseStatus::fail: ++fail; break;
            case CaseStatus::informational: ++informational; break;
        }
    }
    report["summary"] = {{"pass", pass}, {"fail", fail}, {"informational", informational}};
    return report;
}

void write_verification_csv(std::ostream& out, const std::vector<VerificationCase>& cases) {
    out << "space,constant,method,p,xi,eta,condition_value,condition_met,closed_form,numeric_estimate,abs_diff,status\n";
    for (const auto& c : cases) {
        out << njconst::to_string(SpaceDescriptor{BanasFraczek{c.spec.lambda}}) << ",\"" << constant_text(c.spec) << "\","
            << to_string(c.spec.method) << ',' << number(c.spec.p) << ',' << number(c.spec.xi) << ','
            << number(c.spec.eta) << ',' << number(c.closed_form.condition_value) << ','
            << (c.closed_form.condition_met ? "true" : "false") << ',' << number(c.closed_form.value) << ','
            << number(c.numeric.value) << ',' << number(c.abs_diff) << ',' << to_string(c.status) << '\n';
    }
}

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> columns{"lambda",      "p",          "xi",         "eta",
                                                  "condition_value", "condition_met", "closed_form",
                                                  "numeric_estimate", "abs_diff", "witness_x1", "witness_y1",
                                                  "witness_t"};
    return columns;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    const auto& columns = sweep_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
        out << number(r.lambda) << ',' << number(r.p) << ',' << number(r.xi) << ',' << number(r.eta) << ','
            << number(r.closed_form.condition_value) << ',' << (r.closed_form.condition_met ? "true" : "false")
            << ',' << number(r.closed_form.value) << ',' << number(r.numeric.value) << ',' << number(r.abs_diff)
            << ',' << number(r.numeric.witness_x.a()) << ',' << number(r.numeric.witness_y.a()) << ','
            << number(r.numeric.witness_t) << '\n';
    }
}

Json sweep_json(const std::vector<SweepRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["lambda"] = round12(r.lambda);
        j["p"] = round12(r.p);
        j["xi"] = round12(r.xi);
        j["eta"] = round12(r.eta);
        j["condition_value"] = round12(r.closed_form.condition_value);
        j["condition_met"] = r.closed_form.condition_met;
        j["closed_form"] = round12(r.closed_form.value);
        j["numeric_estimate"] = round12(r.numeric.value);
        j["abs_diff"] = round12(r.abs_diff);
        j["witness_x1"] = round12(r.numeric.witness_x.a());
        j["witness_y1"] = round12(r.numeric.witness_y.a());
        j["witness_t"] = round12(r.numeric.witness_t);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace njconst::cli
