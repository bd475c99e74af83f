#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "riffle/exactdist.hpp"
#include "riffle/genfunc.hpp"
#include "riffle/limitlaw.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/paths.hpp"

namespace riffle::cli
{

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace
{

struct RunConfig
{
    int n = 0;
    int m1 = 0;
    int m2 = 0;
    std::uint64_t samples = 50000;
    std::uint64_t seed = 1;
    int workers = 0;
    unsigned s_max = 5;
    int order = 20;
    int n_max = 12;
    int size_max = 12;
    double grid_min = 0;
    double grid_max = 5;
    double grid_step = 0.01;
    std::string suite = "all";
    std::string out = ".";
    std::string format = "csv";
    bool quiet = false;
};

class OutputSink
{
  public:
    OutputSink(const std::string& target, std::ostream& stdout_stream, std::ostream& log, bool quiet)
        : target_(target), stdout_(stdout_stream), log_(log), quiet_(quiet)
    {
    }

    void write(const std::string& name, const std::string& body)
    {
        if (target_ == "-") {
            stdout_ << "# " << name << '\n' << body;
            return;
        }
        std::filesystem::create_directories(target_);
        const auto path = std::filesystem::path(target_) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        f << body;
        if (!quiet_)
            log_ << "wrote " << path.string() << '\n';
    }

  private:
    std::string target_;
    std::ostream& stdout_;
    std::ostream& log_;
    bool quiet_;
};

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("RIFFLE_ORACLE_THREADS")) {
        int v = 0;
        auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc() && *p == '\0' && v > 0)
            return v;
    }
    return 1;
}

std::string pmf_csv(const ExactPmf& pmf)
{
    std::ostringstream s;
    s << "k,prob_num,prob_den,prob_float\n";
    const std::string den = pmf.denominator().get_str();
    for (std::size_t k = 0; k < pmf.size(); ++k)
        s << k << ',' << pmf.numerators()[k].get_str() << ',' << den << ','
          << format_double(ratio_to_double(pmf.numerators()[k], pmf.denominator())) << '\n';
    return s.str();
}

std::string moments_csv(int n, unsigned s_max)
{
    const auto fm = factorial_moments(n, s_max);
    const auto raw = raw_moments(n, s_max);
    std::ostringstream s;
    s << "s,factorial_num,factorial_den,raw_num,raw_den,raw_float,limit_mu_tilde,normalized_raw\n";
    for (unsigned k = 0; k <= s_max; ++k) {
        const double raw_float = to_double(raw[k]);
        const double normalized = raw_float / std::pow(static_cast<double>(n), k / 2.0);
        s << k << ',' << fm[k].get_num().get_str() << ',' << fm[k].get_den().get_str() << ','
          << raw[k].get_num().get_str() << ',' << raw[k].get_den().get_str() << ',' << format_double(raw_float)
          << ',' << format_double(limit_moment(k)) << ',' << format_double(normalized) << '\n';
    }
    return s.str();
}

void check_exact_capacity(int n)
{
    if (n > kDefaultMaxExactPmf)
        throw CapacityError("n=" + std::to_string(n) + " exceeds exact bound " + std::to_string(kDefaultMaxExactPmf));
}

int cmd_exact(const RunConfig& cfg, OutputSink& sink)
{
    check_exact_capacity(cfg.n);
    sink.write("pmf.csv", pmf_csv(pmf_x(cfg.n)));
    sink.write("moments.csv", moments_csv(cfg.n, cfg.s_max));
    return kOk;
}

int cmd_moments(const RunConfig& cfg, OutputSink& sink)
{
    if (cfg.n > 4 * kDefaultMaxGridSum)
        throw CapacityError("n=" + std::to_string(cfg.n) + " exceeds moment bound");
    sink.write("moments.csv", moments_csv(cfg.n, cfg.s_max));
    return kOk;
}

int cmd_pmf_y(const RunConfig& cfg, OutputSink& sink)
{
    sink.write("pmf_y.csv", pmf_csv(pmf_y(cfg.m1, cfg.m2)));
    return kOk;
}

int cmd_simulate(const RunConfig& cfg, OutputSink& sink)
{
    const auto report = simulate(cfg.n, cfg.samples, cfg.seed, resolve_workers(cfg.workers));
    std::ostringstream hist;
    hist << "k,count,empirical_prob\n";
    for (std::size_t k = 0; k < report.counts.size(); ++k)
        hist << k << ',' << report.counts[k] << ','
             << format_double(static_cast<double>(report.counts[k]) / static_cast<double>(report.samples)) << '\n';
    std::ostringstream fit;
    fit << "statistic,value\n";
    fit << "n," << report.n << '\n';
    fit << "samples," << report.samples << '\n';
    fit << "seed," << report.seed << '\n';
    fit << "mean," << format_double(report.mean) << '\n';
    fit << "variance," << format_double(report.variance) << '\n';
    fit << "ks_to_limit," << format_double(report.ks_to_limit) << '\n';
    if (report.tv_to_exact)
        fit << "tv_to_exact," << format_double(*report.tv_to_exact) << '\n';
    sink.write("hist.csv", hist.str());
    sink.write("fit.csv", fit.str());
    return kOk;
}

int cmd_limit(const RunConfig& cfg, OutputSink& sink)
{
    if (!(cfg.grid_step > 0) || !(cfg.grid_max >= cfg.grid_min) || cfg.grid_min < 0)
        throw std::invalid_argument("limit: need 0 <= grid-min <= grid-max and step > 0");
    const double span = (cfg.grid_max - cfg.grid_min) / cfg.grid_step;
    if (span > 1e7)
        throw CapacityError("limit: grid has more than 1e7 points");
    const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::ostringstream s;
    s << "x,density,cdf\n";
    for (long i = 0; i < count; ++i) {
        const double x = cfg.grid_min + static_cast<double>(i) * cfg.grid_step;
        s << format_double(x) << ',' << format_double(LimitLaw::density(x)) << ','
          << format_double(LimitLaw::cdf(x)) << '\n';
    }
    sink.write("limit.csv", s.str());
    return kOk;
}

// --- verify ---------------------------------------------------------------

struct CaseResult
{
    std::string suite;
    std::string label;
    bool pass;
    std::string detail;
};

using Results = std::vector<CaseResult>;

void suite_enum_vs_lemma(const RunConfig& cfg, Results& out)
{
    if (cfg.n_max > kDefaultMaxEnumeration)
        throw CapacityError("enum-vs-lemma: n-max exceeds enumeration bound " +
                            std::to_string(kDefaultMaxEnumeration));
    for (int n = kMinClosedFormDeck; n <= cfg.n_max; ++n) {
        const bool ok = pmf_x_closed_form(n) == pmf_x_enumerated(n);
        out.push_back({"enum-vs-lemma", "n=" + std::to_string(n), ok, ok ? "equal" : "differ"});
    }
}

void suite_dyck_vs_dp(const RunConfig& cfg, Results& out)
{
    if (cfg.size_max > kMaxPathLength)
        throw CapacityError("dyck-vs-dp: size-max exceeds path bound " + std::to_string(kMaxPathLength));
    const int workers = resolve_workers(cfg.workers);
    for (int total = 1; total <= cfg.size_max; ++total) {
        int bad = 0;
        for (int m1 = 0; m1 <= total; ++m1)
            bad += !(y_oracle_pmf(m1, total - m1, workers) == pmf_y(m1, total - m1));
        out.push_back({"dyck-vs-dp", "m1+m2=" + std::to_string(total), bad == 0,
                       std::to_string(bad) + " mismatches"});
    }
}

void suite_kernel_vs_dp(const RunConfig& cfg, Results& out)
{
    const auto G = tilde_G_series(cfg.order);
    for (int M = 0; M <= cfg.order; ++M) {
        const auto diag = g_antidiagonal(M);
        int bad = 0;
        for (int d = -G.width(); d <= G.width(); ++d) {
            QPolynomial expected;
            if (std::abs(d) <= M && (M - d) % 2 == 0)
                expected = diag[(M - d) / 2];
            bad += !(G.coefficient(M, d) == expected);
        }
        out.push_back({"kernel-vs-dp", "M=" + std::to_string(M), bad == 0, std::to_string(bad) + " mismatches"});
    }
    const int len_max = std::min(cfg.order, 14);
    for (int d = 2; d <= 4; ++d) {
        const auto gf = fixed_difference_gf(d, len_max);
        int bad = 0;
        for (int L = 0; L <= len_max; ++L) {
            QPolynomial expected;
            if (L >= d && (L - d) % 2 == 0)
                expected = y_oracle_poly((L + d) / 2, (L - d) / 2);
            bad += !(gf[L] == expected);
        }
        out.push_back({"kernel-vs-dp", "fixed d=" + std::to_string(d), bad == 0, std::to_string(bad) + " mismatches"});
    }
}

void suite_genfunc_vs_dp(const RunConfig& cfg, Results& out)
{
    const unsigned s_max = 5;
    const auto series = tilde_g_series(cfg.order, s_max);
    for (int M = 0; M <= cfg.order; ++M) {
        const auto taylor = g_row_sum_taylor(M, s_max);
        int bad = 0;
        for (unsigned s = 0; s <= s_max; ++s)
            bad += series[s][M] != taylor[s];
        out.push_back({"genfunc-vs-dp", "M=" + std::to_string(M), bad == 0, std::to_string(bad) + " mismatches"});
    }
}

void suite_moments_vs_limit(const RunConfig&, Results& out)
{
    double prev[6] = {0, 0, 0, 0, 0, 0};
    bool first = true;
    for (int n : {256, 1024, 4096}) {
        const auto raw = raw_moments(n, 5);
        for (unsigned s = 1; s <= 5; ++s) {
            const double mu = limit_moment(s);
            const double err = std::abs(to_double(raw[s]) / std::pow(n, s / 2.0) - mu);
            const double tol = 3 * mu / std::sqrt(static_cast<double>(n));
            const bool decreasing = first || err < prev[s];
            prev[s] = err;
            out.push_back({"moments-vs-limit", "n=" + std::to_string(n) + " s=" + std::to_string(s),
                           err <= tol && decreasing,
                           "err=" + format_double(err) + " tol=" + format_double(tol)});
        }
        first = false;
    }
}

void suite_linexp(const RunConfig&, Results& out)
{
    for (double t : {0.5, 1.0, 2.0}) {
        int best = 0;
        long best_gap = -1;
        for (int m1 = 900; m1 <= 1000; ++m1) {
            const int d = static_cast<int>(std::ceil(t * std::sqrt(static_cast<double>(m1))));
            const long gap = std::labs(2L * m1 - d - 1800);
            if (best_gap < 0 || gap < best_gap)
                best = m1, best_gap = gap;
        }
        const int m1 = best;
        const int m2 = m1 - static_cast<int>(std::ceil(t * std::sqrt(static_cast<double>(m1))));
        const auto p = pmf_y_float(m1, m2);
        const double root = std::sqrt(static_cast<double>(m1));
        double cum = 0, sup = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            cum += p[k];
            sup = std::max(sup, std::abs(cum - linexp_cdf(static_cast<double>(k) / root, t)));
        }
        out.push_back({"linexp", "t=" + format_double(t) + " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2),
                       sup <= 0.06, "sup=" + format_double(sup)});
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    static const std::vector<std::pair<std::string, std::function<void(const RunConfig&, Results&)>>> suites{
        {"enum-vs-lemma", suite_enum_vs_lemma},     {"dyck-vs-dp", suite_dyck_vs_dp},
        {"kernel-vs-dp", suite_kernel_vs_dp},       {"genfunc-vs-dp", suite_genfunc_vs_dp},
        {"moments-vs-limit", suite_moments_vs_limit}, {"linexp", suite_linexp},
    };
    Results results;
    for (const auto& [name, fn] : suites)
        if (cfg.suite == "all" || cfg.suite == name)
            fn(cfg, results);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        if (!cfg.quiet)
            out << (r.pass ? "PASS " : "FAIL ") << r.suite << ' ' << r.label << ' ' << r.detail << '\n';
    }
    if (!cfg.quiet)
        out << (all ? "verify: pass" : "verify: FAIL") << " (" << results.size() << " cases)\n";
    return all ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--out", cfg.out, "Output directory, or - for standard output");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv"}));
    sub->add_flag("--quiet", cfg.quiet, "Suppress progress messages");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact law, simulation and checks for card guessing after one riffle shuffle", "riffle"};
    app.require_subcommand(1);

    auto* exact = app.add_subcommand("exact", "Exact pmf and moments of X_n");
    exact->add_option("--n", cfg.n, "Deck size")->required()->check(CLI::PositiveNumber);
    exact->add_option("--s-max", cfg.s_max, "Largest moment order");
    add_common(exact, cfg);

    auto* moments = app.add_subcommand("moments", "Exact moments of X_n");
    moments->add_option("--n", cfg.n, "Deck size")->required()->check(CLI::PositiveNumber);
    moments->add_option("--s-max", cfg.s_max, "Largest moment order");
    add_common(moments, cfg);

    auto* pmfy = app.add_subcommand("pmf-y", "Exact law of Y_{m1,m2}");
    pmfy->add_option("--m1", cfg.m1, "First packet size")->required()->check(CLI::NonNegativeNumber);
    pmfy->add_option("--m2", cfg.m2, "Second packet size")->required()->check(CLI::NonNegativeNumber);
    add_common(pmfy, cfg);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo games");
    sim->add_option("--n", cfg.n, "Deck size")->required()->check(CLI::PositiveNumber);
    sim->add_option("--samples", cfg.samples, "Number of games")->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "Seed");
    sim->add_option("--workers", cfg.workers, "Threads (default RIFFLE_ORACLE_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    add_common(sim, cfg);

    auto* limit = app.add_subcommand("limit", "Limit density and CDF on a grid");
    limit->add_option("--grid-min", cfg.grid_min, "First grid point");
    limit->add_option("--grid-max", cfg.grid_max, "Last grid point");
    limit->add_option("--grid-step", cfg.grid_step, "Grid step");
    add_common(limit, cfg);

    auto* verify = app.add_subcommand("verify", "Cross-route equivalence suites");
    verify->add_option("--suite", cfg.suite, "Suite name or all")
        ->check(CLI::IsMember({"all", "enum-vs-lemma", "dyck-vs-dp", "kernel-vs-dp", "genfunc-vs-dp",
                               "moments-vs-limit", "linexp"}));
    verify->add_option("--n-max", cfg.n_max, "Largest deck for enum-vs-lemma")->check(CLI::PositiveNumber);
    verify->add_option("--size-max", cfg.size_max, "Largest m1+m2 for dyck-vs-dp")->check(CLI::PositiveNumber);
    verify->add_option("--order", cfg.order, "Series order")->check(CLI::NonNegativeNumber);
    verify->add_option("--workers", cfg.workers, "Threads")->check(CLI::PositiveNumber);
    add_common(verify, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "riffle: " << e.what() << '\n';
        return kInvalidArgs;
    }

    OutputSink sink(cfg.out, out, err, cfg.quiet);
    try {
        if (exact->parsed())
            return cmd_exact(cfg, sink);
        if (moments->parsed())
            return cmd_moments(cfg, sink);
        if (pmfy->parsed())
            return cmd_pmf_y(cfg, sink);
        if (sim->parsed())
            return cmd_simulate(cfg, sink);
        if (limit->parsed())
            return cmd_limit(cfg, sink);
        if (verify->parsed())
            return cmd_verify(cfg, out);
    } catch (const CapacityError& e) {
        err << "riffle: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::invalid_argument& e) {
        err << "riffle: " << e.what() << '\n';
        return kInvalidArgs;
    } catch (const std::domain_error& e) {
        err << "riffle: " << e.what() << '\n';
        return kInvalidArgs;
    } catch (const std::runtime_error& e) {
        err << "riffle: " << e.what() << '\n';
        return kInvalidArgs;
    }
    return kInvalidArgs;
}

} // namespace riffle::cli
