// Command-line surface: compute / verify / bench / table / cache.
// Reports go to stdout as JSON (default) or CSV; identical runs produce
// identical bytes apart from the timestamp and wall-clock fields.
//
// Exit codes: 0 success, 1 verification or integrity failure, 2 precision
// shortfall, 64 usage, 65 domain precondition.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "oddzeta/bernoulli.hpp"
#include "oddzeta/errors.hpp"
#include "oddzeta/identities.hpp"
#include "oddzeta/report.hpp"
#include "oddzeta/series.hpp"

namespace {

using namespace oddzeta;

std::string echo_command(int argc, char** argv) {
    std::string out = "oddzeta";
    for (int i = 1; i < argc; ++i) {
        out += ' ';
        out += argv[i];
    }
    return out;
}

bool integer_token(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// "p" or "p/q", q > 0.
BigRational parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!integer_token(num) || !integer_token(den))
        throw ConfigError("expected an integer or p/q rational, got '" + s + "'");
    return BigRational::from_strings(num, den);
}

// "4", "-1.5", "2.5+1.5i", "1.5i", "i". Plain decimal parts only.
Cplx parse_s(const std::string& s, mpfr_prec_t prec) {
    if (s.empty()) throw ConfigError("empty --s value");
    if (s.back() != 'i') return Cplx(Real::from_string(s, prec));
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return Cplx(Real::from_string(re_part, prec), Real::from_string(im_part, prec));
}

std::vector<BigRational> full_grid() {
    return {BigRational(1, 6), BigRational(1, 4), BigRational(1, 3), BigRational(1, 2),
            BigRational(2, 3), BigRational(1),    BigRational(4, 3), BigRational(3, 2)};
}
std::vector<BigRational> sub_unit_grid() {
    return {BigRational(1, 6), BigRational(1, 4), BigRational(1, 3), BigRational(1, 2),
            BigRational(2, 3)};
}
// x/c = 2/m for the three composite bases.
std::vector<BigRational> m_grid() {
    return {BigRational(2, 3), BigRational(1, 2), BigRational(1, 3)};
}

struct VerifyOptions {
    std::string identity;
    std::string x;
    std::string s;
    bool all_m = false;
    unsigned r = 1;
    long N = 10000;
    long K = 60;
};

using CaseFn = std::function<std::vector<Residual>(const PrecisionContext&)>;

std::vector<BigRational> choose_grid(const VerifyOptions& opt, bool xc_scaled,
                                     std::vector<BigRational> fallback) {
    if (!opt.x.empty()) return {parse_rational(opt.x)};
    if (opt.all_m) {
        if (!xc_scaled)
            throw ConfigError("--all-m applies to the x/c parameterized identities");
        return m_grid();
    }
    return fallback;
}

std::vector<Cplx> choose_s(const VerifyOptions& opt, mpfr_prec_t prec,
                           std::vector<long> fallback) {
    if (!opt.s.empty()) return {parse_s(opt.s, prec)};
    std::vector<Cplx> out;
    out.reserve(fallback.size());
    for (long v : fallback) out.emplace_back(Real::from_long(v, prec));
    return out;
}

// Expands one selector into the ordered case list. Group ids (T3.5, L4.1,
// T4.9, L3.2) fan out; T4.3 is the theorem-4.2 arrangement pinned to the
// three x/c = 2/m points.
std::vector<CaseFn> build_cases(const VerifyOptions& opt, mpfr_prec_t prec) {
    const std::string& id = opt.identity;
    std::vector<CaseFn> jobs;
    auto one = [&jobs](std::function<Residual(const PrecisionContext&)> f) {
        jobs.push_back([f = std::move(f)](const PrecisionContext& ctx) {
            return std::vector<Residual>{f(ctx)};
        });
    };

    if (id == "T3.5" || id == "T3.5-cos" || id == "T3.5-sin") {
        for (TrigKind form : {TrigKind::Cos, TrigKind::Sin}) {
            if (id == "T3.5-cos" && form != TrigKind::Cos) continue;
            if (id == "T3.5-sin" && form != TrigKind::Sin) continue;
            for (const BigRational& x : choose_grid(opt, true, full_grid()))
                one([=, &opt](const PrecisionContext& ctx) {
                    return verify_theorem_3_5(form, opt.r, x, opt.N, opt.K, ctx);
                });
        }
    } else if (id == "L4.2") {
        for (const BigRational& x : choose_grid(opt, true, full_grid()))
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_lemma_4_2(opt.r, x, opt.N, opt.K, ctx);
            });
    } else if (id == "T4.1") {
        for (const BigRational& x : choose_grid(opt, true, full_grid()))
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_theorem_4_1(opt.r, x, opt.N, opt.K, ctx);
            });
    } else if (id == "T4.2") {
        for (const BigRational& x : choose_grid(opt, true, full_grid()))
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_theorem_4_2(x, opt.N, opt.K, ctx);
            });
    } else if (id == "T4.3") {
        if (!opt.x.empty())
            throw ConfigError("T4.3 fixes x/c = 2/m for m in {3,4,6}; "
                              "use T4.2 for a free abscissa");
        for (const BigRational& x : m_grid())
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_theorem_4_2(x, opt.N, opt.K, ctx);
            });
    } else if (id == "L4.1" || id == "L4.1-a" || id == "L4.1-b" || id == "L4.1-c") {
        if (opt.all_m) throw ConfigError("--all-m applies to the x/c parameterized identities");
        for (char variant : {'a', 'b', 'c'}) {
            if (id.size() == 6 && id.back() != variant) continue;
            for (const Cplx& s : choose_s(opt, prec, {2, 3, 4}))
                one([=, &opt](const PrecisionContext& ctx) {
                    return verify_lemma_4_1(s, variant, opt.N, ctx);
                });
        }
    } else if (id == "Ex2.17") {
        for (const BigRational& x :
             choose_grid(opt, false, {BigRational(1, 6), BigRational(1, 4)}))
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_example_2_17(x, opt.N, ctx);
            });
    } else if (id == "L3.2" || id == "L3.2-sin" || id == "L3.2-cos") {
        for (const BigRational& x : choose_grid(opt, false, sub_unit_grid())) {
            jobs.push_back([=, &opt](const PrecisionContext& ctx) {
                auto [sn, cs] = verify_lemma_3_2(x, opt.N, ctx);
                std::vector<Residual> out;
                if (id != "L3.2-cos") out.push_back(std::move(sn));
                if (id != "L3.2-sin") out.push_back(std::move(cs));
                return out;
            });
        }
    } else if (id == "L3.4") {
        for (const BigRational& x : choose_grid(opt, false, sub_unit_grid()))
            one([=, &opt](const PrecisionContext& ctx) {
                return verify_lemma_3_4(ctx.pi() * ctx.real(x), opt.K, ctx);
            });
    } else if (id == "T4.7" || id == "T4.8") {
        for (const Cplx& s : choose_s(opt, prec, {4}))
            for (const BigRational& x : choose_grid(opt, true, full_grid()))
                one([=, &opt](const PrecisionContext& ctx) {
                    return verify_complex(id, s, x, opt.N, opt.K, ctx);
                });
    } else if (id == "T4.9" || id == "T4.9-a" || id == "T4.9-b" || id == "T4.9-c") {
        if (opt.all_m && id != "T4.9")
            throw ConfigError("--all-m applies to the x/c parameterized identities");
        struct Fixed {
            const char* id;
            BigRational x;
        };
        const Fixed fixed[] = {{"T4.9-a", BigRational(2, 3)},
                               {"T4.9-b", BigRational(1, 2)},
                               {"T4.9-c", BigRational(1, 3)}};
        for (const Fixed& fx : fixed) {
            if (id != "T4.9" && id != fx.id) continue;
            BigRational x = opt.x.empty() ? fx.x : parse_rational(opt.x);
            for (const Cplx& s : choose_s(opt, prec, {4}))
                one([=, &opt, sub = std::string(fx.id)](const PrecisionContext& ctx) {
                    return verify_complex(sub, s, x, opt.N, opt.K, ctx);
                });
        }
    } else {
        throw ConfigError("unknown identity selector '" + id + "'; see the table verb");
    }
    return jobs;
}

// Cases run concurrently; results land in case order regardless of
// completion order, and the first exception (again in case order) wins.
std::vector<Residual> run_cases(const std::vector<CaseFn>& jobs,
                                const PrecisionContext& ctx) {
    std::vector<std::vector<Residual>> slots(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<size_t> next{0};
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                 static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
                try {
                    slots[i] = jobs[i](ctx);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    for (std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Residual> out;
    for (std::vector<Residual>& s : slots)
        for (Residual& r : s) out.push_back(std::move(r));
    return out;
}

EvalReport compute_level(SeriesFamily family, unsigned r, const PrecisionContext& ctx) {
    if (r == 1) {
        switch (family.tag) {
            case FamilyTag::Ewell: return ewell_zeta3(ctx);
            case FamilyTag::CK: return ck_recurrence(1, {}, ctx);
            default: return zeta3_family(family.m, ctx);
        }
    }
    return zeta_odd_ladder(r, family, ctx).back();
}

int emit_report(const std::string& command, const std::string& output,
                std::vector<nlohmann::ordered_json> results, const std::string& csv) {
    if (output == "csv")
        std::cout << csv;
    else
        std::cout << render_report(command, results, iso8601_utc_now());
    return 0;
}

struct ComputeOptions {
    std::string target;
    std::string family = "m6";
    unsigned digits = 50;
    unsigned r = 0;
    unsigned rmax = 0;
    std::string output = "json";
};

int run_compute(const ComputeOptions& opt, const std::string& command) {
    SeriesFamily family = SeriesFamily::parse(opt.family);
    PrecisionContext ctx = make_context(opt.digits);
    std::vector<EvalReport> evals;
    if (opt.target == "zeta3") {
        evals.push_back(compute_level(family, 1, ctx));
    } else if (opt.target == "zeta-odd") {
        if (opt.r == 0) throw ConfigError("zeta-odd needs --r >= 1");
        evals.push_back(compute_level(family, opt.r, ctx));
    } else if (opt.target == "ladder") {
        if (opt.rmax == 0) throw ConfigError("ladder needs --rmax >= 1");
        evals = zeta_odd_ladder(opt.rmax, family, ctx);
    } else {
        throw ConfigError("unknown compute target '" + opt.target +
                          "' (zeta3 | zeta-odd | ladder)");
    }
    std::vector<nlohmann::ordered_json> results;
    for (const EvalReport& er : evals) results.push_back(to_json(er));
    emit_report(command, opt.output, std::move(results), eval_csv(evals));
    for (const EvalReport& er : evals)
        if (er.certified_digits < opt.digits)
            throw PrecisionShortfall("certified " + std::to_string(er.certified_digits) +
                                     " of " + std::to_string(opt.digits) +
                                     " digits (family " + er.family.name() + ", r=" +
                                     std::to_string(er.r) + ")");
    return 0;
}

int run_verify(const VerifyOptions& opt, unsigned digits, const std::string& output,
               const std::string& command) {
    PrecisionContext ctx = make_context(digits);
    std::vector<CaseFn> jobs = build_cases(opt, ctx.working_bits);
    std::vector<Residual> residuals = run_cases(jobs, ctx);
    bool failed = false;
    for (const Residual& r : residuals)
        if (!r.pass && !r.endpoint_warning) failed = true;
    // A failing run prints the offending cases first.
    std::vector<Residual> ordered;
    ordered.reserve(residuals.size());
    if (failed) {
        for (const Residual& r : residuals)
            if (!r.pass && !r.endpoint_warning) ordered.push_back(r);
        for (const Residual& r : residuals)
            if (r.pass || r.endpoint_warning) ordered.push_back(r);
    } else {
        ordered = std::move(residuals);
    }
    std::vector<nlohmann::ordered_json> results;
    for (const Residual& r : ordered) results.push_back(to_json(r));
    emit_report(command, output, std::move(results), residual_csv(ordered));
    return failed ? 1 : 0;
}

int run_bench(const std::string& families, unsigned digits, const std::string& output,
              const std::string& command) {
    std::vector<SeriesFamily> list;
    std::string token;
    for (size_t pos = 0; pos <= families.size(); ++pos) {
        if (pos == families.size() || families[pos] == ',') {
            if (!token.empty()) list.push_back(SeriesFamily::parse(token));
            token.clear();
        } else {
            token += families[pos];
        }
    }
    if (list.empty()) throw ConfigError("--families is empty");
    PrecisionContext ctx = make_context(digits);
    std::vector<BenchRow> rows;
    for (SeriesFamily family : list) {
        auto t0 = std::chrono::steady_clock::now();
        EvalReport er = compute_level(family, 1, ctx);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back({family, 1, digits, er.terms_used, er.tail_bound, ms});
    }
    std::vector<nlohmann::ordered_json> results;
    for (const BenchRow& row : rows) results.push_back(to_json(row));
    emit_report(command, output, std::move(results), bench_csv(rows));
    // Faster geometric decay must show up as fewer terms: per base m, the
    // best term count strictly decreases as m grows.
    long best2 = -1, prev = -1;
    int prev_m = 0;
    for (const BenchRow& row : rows)
        if (row.family.m == 2 && (best2 < 0 || row.terms_used < best2))
            best2 = row.terms_used;
    prev = best2;
    prev_m = best2 >= 0 ? 2 : 0;
    for (int m : {3, 4, 6}) {
        long best = -1;
        for (const BenchRow& row : rows)
            if (row.family.m == m && (best < 0 || row.terms_used < best))
                best = row.terms_used;
        if (best < 0) continue;
        if (prev >= 0 && best >= prev) {
            std::cerr << "term-count ordering violated: m=" << m << " used " << best
                      << " terms, m=" << prev_m << " used " << prev << "\n";
            return 1;
        }
        prev = best;
        prev_m = m;
    }
    return 0;
}

int run_table(const std::string& output, const std::string& command) {
    return emit_report(command, output, {registry_json()}, registry_csv());
}

int run_cache(unsigned precompute, bool have_precompute, const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty())
        if (const char* env = std::getenv("ODDZETA_CACHE_PATH")) path = env;
    if (path.empty()) path = "bernoulli.cache";
    if (have_precompute) {
        BernoulliCache cache;
        cache.ensure(precompute);
        cache.save(path);
        std::cout << "saved B_0 .. B_" << (precompute / 2) * 2 << " ("
                  << precompute / 2 + 1 << " even-index records) to " << path << "\n";
        return 0;
    }
    BernoulliCache cache = BernoulliCache::load(path);
    std::cout << path << ": valid, high water B_" << cache.high_water() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd zeta constants by rapidly converging series, with "
                 "certified digits and Fourier-identity verification"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "evaluate zeta(2r+1)");
    compute->add_option("target", copt.target, "zeta3 | zeta-odd | ladder")->required();
    compute->add_option("--family", copt.family, "ewell | ck | m3 | m4 | m6");
    compute->add_option("--digits", copt.digits, "decimal digits to certify");
    compute->add_option("--r", copt.r, "level for zeta-odd");
    compute->add_option("--rmax", copt.rmax, "top level for ladder");
    compute->add_option("--output", copt.output)->check(CLI::IsMember({"json", "csv"}));

    VerifyOptions vopt;
    unsigned vdigits = 50;
    std::string voutput = "json";
    CLI::App* verify = app.add_subcommand("verify", "check an identity on a grid");
    verify->add_option("--identity", vopt.identity, "id from the table verb")->required();
    verify->add_option("--x", vopt.x, "abscissa as p/q, in the identity's own scale");
    verify->add_option("--s", vopt.s, "complex parameter, e.g. 4 or 2.5+1.5i");
    verify->add_flag("--all-m", vopt.all_m, "use the x/c = 2/m grid, m in {3,4,6}");
    verify->add_option("--r", vopt.r, "weight parameter");
    verify->add_option("--N", vopt.N, "trigonometric-sum truncation");
    verify->add_option("--K", vopt.K, "power-sum truncation");
    verify->add_option("--digits", vdigits, "working digit target");
    verify->add_option("--output", voutput)->check(CLI::IsMember({"json", "csv"}));

    std::string bfamilies = "ewell,ck,m3,m4,m6";
    unsigned bdigits = 50;
    std::string boutput = "json";
    CLI::App* bench = app.add_subcommand("bench", "terms and wall time to target digits");
    bench->add_option("--families", bfamilies, "comma list");
    bench->add_option("--digits", bdigits);
    bench->add_option("--output", boutput)->check(CLI::IsMember({"json", "csv"}));

    std::string toutput = "json";
    CLI::App* table = app.add_subcommand("table", "identity validity table");
    table->add_option("--output", toutput)->check(CLI::IsMember({"json", "csv"}));

    unsigned precompute = 0;
    std::string cache_path;
    CLI::App* cache = app.add_subcommand("cache", "Bernoulli snapshot maintenance");
    CLI::Option* pre_opt = cache->add_option("--precompute", precompute, "ensure B_0..B_n");
    cache->add_option("--cache-path", cache_path, "snapshot location");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    std::string command = echo_command(argc, argv);
    try {
        if (compute->parsed()) return run_compute(copt, command);
        if (verify->parsed()) return run_verify(vopt, vdigits, voutput, command);
        if (bench->parsed()) return run_bench(bfamilies, bdigits, boutput, command);
        if (table->parsed()) return run_table(toutput, command);
        if (cache->parsed())
            return run_cache(precompute, pre_opt->count() > 0, cache_path);
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const DomainError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 65;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionShortfall& e) {
        std::cerr << "precision shortfall: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
