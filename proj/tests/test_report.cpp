#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <random>

#include "mplkz/parse.hpp"
#include "mplkz/report.hpp"

using namespace mplkz;

namespace {

using cplx = std::complex<double>;

std::size_t csv_fields(const std::string& row) {
    std::size_t n = 1;
    bool quoted = false;
    for (char c : row) {
        if (c == '"') quoted = !quoted;
        if (c == ',' && !quoted) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("verdict from absolute or relative error") {
    CHECK(make_report("a", {}, 1.0, 1.0 + 1e-10, 1e-9).passed());
    // Large values pass on relative error.
    const VerificationReport big = make_report("b", {}, 1e6, 1e6 + 1e-4, 1e-9);
    CHECK(big.abs_err == doctest::Approx(1e-4));
    CHECK(big.passed());
    const VerificationReport off = make_report("c", {}, 1.0, 1.1, 1e-9);
    CHECK(off.verdict == Verdict::Fail);
    CHECK(off.rel_err == doctest::Approx(0.1 / 1.1));
    CHECK(make_report("d", {}, 0.0, 0.0, 0.0).passed());
    CHECK(make_report("e", {}, std::nan(""), 1.0, 1.0).verdict == Verdict::Error);
    const VerificationReport err = error_report("f", {{"k", "1"}}, "degenerate");
    CHECK(err.verdict == Verdict::Error);
    CHECK(err.note == "degenerate");
}

TEST_CASE("JSON rendering") {
    const VerificationReport r = make_report("sum", {{"k", "3"}, {"n", "1"}}, cplx(1.5, -2.0), 1.5, 1e-9, "x");
    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["id"] == "sum");
    CHECK(j["params"]["k"] == "3");
    CHECK(j["lhs"][0] == 1.5);
    CHECK(j["lhs"][1] == -2.0);
    CHECK(j["rhs"][1] == 0.0);
    CHECK(j["abs_err"] == 2.0);
    CHECK(j["tol"] == 1e-9);
    CHECK(j["verdict"] == "fail");
    CHECK(j["note"] == "x");
    for (const char* key : {"rel_err", "params"}) CHECK(j.contains(key));
    // Non-finite numbers become null.
    const auto e = nlohmann::json::parse(to_json(error_report("g", {}, "why")));
    CHECK(e["abs_err"].is_null());
    CHECK(e["verdict"] == "error");
    const auto arr = nlohmann::json::parse(reports_to_json({r, r}));
    CHECK(arr.size() == 2);
}

TEST_CASE("CSV rendering") {
    const std::size_t columns = csv_fields(csv_header());
    CHECK(columns == 11);
    const VerificationReport r = make_report("id", {{"a", "1"}, {"b", "2"}}, 1.0, 1.0, 1e-9, "has, comma");
    const std::string row = to_csv_row(r);
    CHECK(csv_fields(row) == columns);
    CHECK(row.find("\"has, comma\"") != std::string::npos);
    CHECK(row.find("a=1;b=2") != std::string::npos);
    CHECK(to_text(r).find("[pass] id") == 0);
}

TEST_CASE("complex literals") {
    CHECK(parse_complex("0.5") == cplx(0.5, 0.0));
    CHECK(parse_complex("2i") == cplx(0.0, 2.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("0.5+1i") == cplx(0.5, 1.0));
    CHECK(parse_complex("1e-3-2.5i") == cplx(1e-3, -2.5));
    for (const char* bad : {"", "abc", "1+", "0.5+1", "1ii", "i2"}) CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
    const auto list = parse_complex_list("0.1,0.2,0.9");
    REQUIRE(list.size() == 3);
    CHECK(list[2] == cplx(0.9));
    CHECK_THROWS(parse_complex_list("0.1,,0.2"));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const cplx z(d(rng) * std::pow(10.0, i % 7 - 3), i % 5 == 0 ? 0.0 : d(rng));
        CHECK(parse_complex(format_complex(z)) == z);
    }
}
