#include "oddzeta/report.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

namespace oddzeta {

namespace {

// Sides of an identity are context for the residual, not certified output;
// 30 digits is comfortably past every gate tolerance in the suite.
constexpr unsigned kSideDigits = 30;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::ordered_json side_json(const Cplx& z) {
    return {{"re", format_value(z.re, kSideDigits)}, {"im", format_value(z.im, kSideDigits)}};
}

} // namespace

std::string format_bound(const Real& x) {
    if (mpfr_nan_p(x.raw())) return "nan";
    if (mpfr_inf_p(x.raw())) return mpfr_sgn(x.raw()) > 0 ? "inf" : "-inf";
    return x.to_string(6);
}

std::string format_value(const Real& x, unsigned digits) {
    if (mpfr_nan_p(x.raw())) return "nan";
    if (mpfr_inf_p(x.raw())) return mpfr_sgn(x.raw()) > 0 ? "inf" : "-inf";
    return x.to_string(digits);
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

nlohmann::ordered_json to_json(const EvalReport& er) {
    nlohmann::ordered_json j;
    j["kind"] = "eval";
    j["family"] = er.family.name();
    j["r"] = er.r;
    j["zeta_of"] = 2 * er.r + 1;
    j["value"] = format_value(er.value, er.certified_digits);
    j["certified_digits"] = er.certified_digits;
    j["terms_used"] = er.terms_used;
    j["tail_bound"] = format_bound(er.tail_bound);
    return j;
}

nlohmann::ordered_json to_json(const Residual& r) {
    nlohmann::ordered_json j;
    j["kind"] = "residual";
    j["id"] = r.id;
    j["params"] = r.params;
    j["lhs"] = side_json(r.lhs);
    j["rhs"] = side_json(r.rhs);
    j["abs_residual"] = format_bound(r.abs_residual);
    j["expected_bound"] = format_bound(r.expected_bound);
    j["pass"] = r.pass;
    j["endpoint_warning"] = r.endpoint_warning;
    if (r.cesaro_residual) j["cesaro_residual"] = format_bound(*r.cesaro_residual);
    return j;
}

nlohmann::ordered_json to_json(const ConvergenceTrace& tr) {
    nlohmann::ordered_json j;
    j["kind"] = "trace";
    j["family"] = tr.family.name();
    j["r"] = tr.r;
    j["k_lo"] = tr.k_lo;
    j["k_hi"] = tr.k_hi;
    nlohmann::ordered_json mags = nlohmann::ordered_json::array();
    for (const Real& t : tr.term_magnitudes) mags.push_back(format_bound(t));
    j["term_magnitudes"] = std::move(mags);
    j["fitted_ratio"] = format_bound(tr.fitted_ratio);
    j["raw_ratio"] = format_bound(tr.raw_ratio);
    j["expected_ratio"] = format_bound(tr.expected_ratio);
    return j;
}

nlohmann::ordered_json to_json(const BenchRow& row) {
    nlohmann::ordered_json j;
    j["kind"] = "bench";
    j["family"] = row.family.name();
    j["r"] = row.r;
    j["digits"] = row.digits;
    j["terms_used"] = row.terms_used;
    j["tail_bound"] = format_bound(row.tail_bound);
    j["wall_ms"] = format_ms(row.wall_ms);
    return j;
}

nlohmann::ordered_json registry_json() {
    nlohmann::ordered_json j;
    j["kind"] = "validity_table";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const IdentityInfo& row : identity_registry()) {
        nlohmann::ordered_json e;
        e["id"] = row.id;
        e["parameter"] = row.parameter;
        e["truncations"] = row.truncations;
        e["statement"] = row.statement;
        rows.push_back(std::move(e));
    }
    j["identities"] = std::move(rows);
    return j;
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_report(const std::string& command,
                          const std::vector<nlohmann::ordered_json>& results,
                          const std::string& timestamp) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["results"] = results;
    doc["timestamp"] = timestamp;
    return doc.dump(2) + "\n";
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "family,r,digits,terms_used,tail_bound,wall_ms\n";
    for (const BenchRow& row : rows)
        out << row.family.name() << ',' << row.r << ',' << row.digits << ','
            << row.terms_used << ',' << format_bound(row.tail_bound) << ','
            << format_ms(row.wall_ms) << '\n';
    return out.str();
}

std::string eval_csv(const std::vector<EvalReport>& rows) {
    std::ostringstream out;
    out << "family,r,certified_digits,terms_used,tail_bound,value\n";
    for (const EvalReport& er : rows)
        out << er.family.name() << ',' << er.r << ',' << er.certified_digits << ','
            << er.terms_used << ',' << format_bound(er.tail_bound) << ','
            << format_value(er.value, er.certified_digits) << '\n';
    return out.str();
}

std::string residual_csv(const std::vector<Residual>& rows) {
    std::ostringstream out;
    out << "id,params,abs_residual,expected_bound,pass,endpoint_warning,cesaro_residual\n";
    for (const Residual& r : rows) {
        out << r.id << ',' << csv_field(r.params) << ',' << format_bound(r.abs_residual)
            << ',' << format_bound(r.expected_bound) << ',' << (r.pass ? "true" : "false")
            << ',' << (r.endpoint_warning ? "true" : "false") << ','
            << (r.cesaro_residual ? format_bound(*r.cesaro_residual) : "") << '\n';
    }
    return out.str();
}

std::string registry_csv() {
    std::ostringstream out;
    out << "id,parameter,truncations,statement\n";
    for (const IdentityInfo& row : identity_registry())
        out << row.id << ',' << csv_field(row.parameter) << ',' << csv_field(row.truncations)
            << ',' << csv_field(row.statement) << '\n';
    return out.str();
}

} // namespace oddzeta
