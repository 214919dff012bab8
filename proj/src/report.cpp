#include "mplkz/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace mplkz {

namespace {

nlohmann::json to_json_value(const VerificationReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    auto num = [](double x) -> nlohmann::json {
        if (std::isfinite(x)) return x;
        return nullptr;
    };
    nlohmann::json j = {
        {"id", r.id},
        {"params", params},
        {"lhs", {num(r.lhs.real()), num(r.lhs.imag())}},
        {"rhs", {num(r.rhs.real()), num(r.rhs.imag())}},
        {"abs_err", num(r.abs_err)},
        {"rel_err", num(r.rel_err)},
        {"tol", r.tol},
        {"verdict", to_string(r.verdict)},
    };
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Error: return "error";
    }
    return "error";
}

VerificationReport make_report(std::string id, std::vector<std::pair<std::string, std::string>> params,
                               std::complex<double> lhs, std::complex<double> rhs, double tol,
                               std::string note) {
    VerificationReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tol = tol;
    r.note = std::move(note);
    r.abs_err = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    if (!std::isfinite(r.abs_err)) {
        r.verdict = Verdict::Error;
    } else {
        r.verdict = (r.abs_err <= tol || r.rel_err <= tol) ? Verdict::Pass : Verdict::Fail;
    }
    return r;
}

VerificationReport error_report(std::string id, std::vector<std::pair<std::string, std::string>> params,
                                std::string reason) {
    VerificationReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.abs_err = r.rel_err = std::nan("");
    r.lhs = r.rhs = {std::nan(""), std::nan("")};
    r.verdict = Verdict::Error;
    r.note = std::move(reason);
    return r;
}

std::string to_json(const VerificationReport& r, int indent) { return to_json_value(r).dump(indent); }

std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json_value(r));
    return arr.dump(indent);
}

std::string csv_header() { return "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,verdict,note"; }

std::string to_csv_row(const VerificationReport& r) {
    std::string params;
    for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ";";
        params += k + "=" + v;
    }
    return csv_escape(r.id) + "," + csv_escape(params) + "," + num(r.lhs.real()) + "," + num(r.lhs.imag()) + "," +
           num(r.rhs.real()) + "," + num(r.rhs.imag()) + "," + num(r.abs_err) + "," + num(r.rel_err) + "," +
           num(r.tol) + "," + to_string(r.verdict) + "," + csv_escape(r.note);
}

std::string to_text(const VerificationReport& r) {
    std::string params;
    for (const auto& [k, v] : r.params) params += " " + k + "=" + v;
    char buf[160];
    std::snprintf(buf, sizeof buf, "  lhs=%.12g%+.12gi rhs=%.12g%+.12gi abs_err=%.3g tol=%.1g", r.lhs.real(),
                  r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_err, r.tol);
    std::string line = "[" + to_string(r.verdict) + "] " + r.id + params + buf;
    if (!r.note.empty()) line += "  (" + r.note + ")";
    return line;
}

}  // namespace mplkz
