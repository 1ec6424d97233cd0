#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "njconst/closed_forms.hpp"
#include "njconst/constants.hpp"

namespace njconst::cli {

using Json = nlohmann::ordered_json;

enum class Method { sphere, extreme };
enum class CaseStatus { pass, fail, informational };

[[nodiscard]] std::string_view to_string(Method method);
[[nodiscard]] std::string_view to_string(CaseStatus status);
[[nodiscard]] Method parse_method(std::string_view text);

/// pass iff the condition holds and abs_diff <= tolerance; informational when
/// the condition fails, since no equality is claimed there.
[[nodiscard]] CaseStatus classify(bool condition_met, double abs_diff, double tolerance);

// One numeric-versus-closed-form comparison on the Banas-Fraczek space.
struct CaseSpec {
    enum class Target { skew, cnj };
    Target target = Target::skew;
    double lambda = 2.0;
    double p = 2.0;
    double xi = 1.0;
    double eta = 1.0;
    Method method = Method::sphere;
};

struct VerificationCase {
    CaseSpec spec;
    Estimate numeric;
    ClosedFormResult closed_form;
    double abs_diff = 0.0;
    CaseStatus status = CaseStatus::informational;
};

/// Known suites: default, skew, cnj, cnjp, extreme, unmet, all.
[[nodiscard]] std::vector<CaseSpec> suite_cases(std::string_view suite);
[[nodiscard]] const std::vector<std::string>& suite_names();

[[nodiscard]] VerificationCase run_case(const CaseSpec& spec, const SearchConfig& config, double tolerance);

/// Estimate for a skew-constant case using the requested method.
[[nodiscard]] Estimate estimate_case(const CaseSpec& spec, const SearchConfig& config);

// 12 significant digits, '.' separator, independent of locale.
[[nodiscard]] double round12(double x);
[[nodiscard]] std::string number(double x);

[[nodiscard]] Json to_json(const Estimate& e);
[[nodiscard]] Json to_json(const ClosedFormResult& c);
[[nodiscard]] Json to_json(const VerificationCase& c);

/// {suite, tolerance, cases: [...], summary: {pass, fail, informational}}
[[nodiscard]] Json verification_report(std::string_view suite, double tolerance,
                                       const std::vector<VerificationCase>& cases);
void write_verification_csv(std::ostream& out, const std::vector<VerificationCase>& cases);

struct SweepRow {
    double lambda;
    double p;
    double xi;
    double eta;
    ClosedFormResult closed_form;
    Estimate numeric;
    double abs_diff;
};

[[nodiscard]] const std::vector<std::string>& sweep_columns();
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
[[nodiscard]] Json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace njconst::cli
