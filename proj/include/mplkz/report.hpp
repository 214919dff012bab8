#pragma once

// Outcome of one numerical identity check, with JSON and CSV renderings.

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace mplkz {

enum class Verdict { Pass, Fail, Error };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::complex<double> lhs{};
    std::complex<double> rhs{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::Error;
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Fills errors and verdict: pass iff abs_err <= tol or rel_err <= tol.
VerificationReport make_report(std::string id, std::vector<std::pair<std::string, std::string>> params,
                               std::complex<double> lhs, std::complex<double> rhs, double tol,
                               std::string note = {});
/// A report for a check that could not be evaluated.
VerificationReport error_report(std::string id, std::vector<std::pair<std::string, std::string>> params,
                                std::string reason);

std::string to_json(const VerificationReport& r, int indent = -1);
std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent = 2);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
/// One line for terminal output.
std::string to_text(const VerificationReport& r);

}  // namespace mplkz
