#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "oddzeta/identities.hpp"
#include "oddzeta/series.hpp"

namespace oddzeta {

// Machine-readable run reports. Top level: schema_version "1", the command
// line echoed back, a results array, and an ISO 8601 UTC timestamp. Every
// numeric field is a decimal string, never a binary float; the same strings
// appear verbatim in the CSV renderings, so the two formats can be diffed
// against each other. Re-serializing a parsed report reproduces it byte for
// byte (the timestamp is the one field that moves between runs; bench rows
// also carry wall-clock times).

// One bench measurement: terms and wall time to reach `digits` for one
// family at one r.
struct BenchRow {
    SeriesFamily family;
    unsigned r;
    unsigned digits;
    long terms_used;
    Real tail_bound;
    double wall_ms;
};

// Bounds, residuals, ratios, term magnitudes: 6 significant digits.
// Infinities come out as "inf"/"-inf" (informational bounds only).
std::string format_bound(const Real& x);
// Certified values: exactly `digits` significant digits, nothing more.
std::string format_value(const Real& x, unsigned digits);
std::string format_ms(double ms);

nlohmann::ordered_json to_json(const EvalReport& er);
nlohmann::ordered_json to_json(const Residual& r);
nlohmann::ordered_json to_json(const ConvergenceTrace& tr);
nlohmann::ordered_json to_json(const BenchRow& row);

// Identity validity table (id, parameter interval, truncations, statement),
// emitted by the table verb so case grids can be generated mechanically.
nlohmann::ordered_json registry_json();

std::string iso8601_utc_now();

// Assembled report document, dump(2) plus trailing newline.
std::string render_report(const std::string& command,
                          const std::vector<nlohmann::ordered_json>& results,
                          const std::string& timestamp);

// CSV renderings. Headers are fixed:
//   bench:    family,r,digits,terms_used,tail_bound,wall_ms
//   eval:     family,r,certified_digits,terms_used,tail_bound,value
//   residual: id,params,abs_residual,expected_bound,pass,endpoint_warning,cesaro_residual
//   registry: id,parameter,truncations,statement
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string eval_csv(const std::vector<EvalReport>& rows);
std::string residual_csv(const std::vector<Residual>& rows);
std::string registry_csv();

} // namespace oddzeta
