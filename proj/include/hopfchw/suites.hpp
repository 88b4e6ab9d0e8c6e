// Named verification suites over fixture files, and machine-readable reports.
#pragma once

#include "hopfchw/chernweil.hpp"
#include "hopfchw/fixtures.hpp"

namespace hopfchw {

inline constexpr const char* kToolVersion = "hopfchw 0.1.0";

struct CheckResult {
    std::string name;
    std::string status;   // "pass" | "fail" | "skip"
    std::string witness;  // counterexample or context; empty when not needed
};

struct Report {
    std::string fixture;
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t count(const std::string& status) const;
    bool all_pass() const { return count("fail") == 0; }
};

/// The available suite names; "all" runs every suite the fixture supports.
std::vector<std::string> suite_names();

/// Runs one suite. Throws SpecError-style input errors (via std::runtime_error
/// subclasses) when the fixture lacks the needed ingredients.
Report run_suite(const Fixture& f, const std::string& suite);

/// The chw computation as a report: validates the cotrace, assembles the
/// class, embeds the chain representative and the HC dimensions.
Report compute_chw_report(const Fixture& f, const Vec& cotrace, int degree, bool use_solver);

Report homology_report(const Fixture& f, int degree, HomologyMode mode);

/// Deterministic JSON serialization; timing is attached only on request.
std::string report_to_json(const Report& r, bool with_timing = false, long timing_ms = 0);

/// Human-readable one-line-per-check rendering.
std::string report_to_text(const Report& r);

}  // namespace hopfchw
