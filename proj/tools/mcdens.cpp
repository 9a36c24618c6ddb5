#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcdens/bench.hpp"
#include "mcdens/chains.hpp"
#include "mcdens/csv.hpp"
#include "mcdens/estimator.hpp"
#include "mcdens/version.hpp"

namespace fs = std::filesystem;
using namespace mcdens;

namespace {

// ---------------------------------------------------------------------------
// Flat key=value config files. '#' starts a comment; keys may be dotted for
// per-chain parameter overrides (e.g. "ar1.sigma2 = 0.5"). Manifests are valid
// config files, so a run can be replayed with --config <manifest>.
// ---------------------------------------------------------------------------

using Config = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Config read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    Config cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line without '=': " + line);
        cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

double to_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("bad numeric value for '" + key + "': " + s);
    }
}

long long to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("bad integer value for '" + key + "': " + s);
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

// Effective value resolution: command-line flag wins, then config key, then default.
std::string effective(const CLI::Option* opt, const std::string& v, const Config& cfg,
                      const std::string& key, const std::string& fb) {
    if (opt && opt->count() > 0) return v;
    if (auto it = cfg.find(key); it != cfg.end()) return it->second;
    return fb;
}

double effective(const CLI::Option* opt, double v, const Config& cfg, const std::string& key,
                 double fb) {
    if (opt && opt->count() > 0) return v;
    if (auto it = cfg.find(key); it != cfg.end()) return to_double(it->second, key);
    return fb;
}

long long effective(const CLI::Option* opt, long long v, const Config& cfg, const std::string& key,
                    long long fb) {
    if (opt && opt->count() > 0) return v;
    if (auto it = cfg.find(key); it != cfg.end()) return to_int(it->second, key);
    return fb;
}

void apply_chain_overrides(ChainSpec& spec, const Config& cfg) {
    const auto get = [&](const char* field) -> const std::string* {
        const auto it = cfg.find(spec.name + "." + field);
        return it == cfg.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("a")) spec.a = to_double(*v, "a");
    if (const auto* v = get("b")) spec.b = to_double(*v, "b");
    if (const auto* v = get("sigma2")) spec.sigma2 = to_double(*v, "sigma2");
    if (const auto* v = get("beta")) spec.beta = to_double(*v, "beta");
    if (const auto* v = get("delta")) spec.delta = static_cast<int>(to_int(*v, "delta"));
    if (const auto* v = get("c")) spec.domain.lo = to_double(*v, "c");
    if (const auto* v = get("d")) spec.domain.hi = to_double(*v, "d");
    if (const auto* v = get("burn_in")) spec.burn_in = static_cast<int>(to_int(*v, "burn_in"));
}

// ---------------------------------------------------------------------------
// Manifests: a resolved key=value record written next to every output.
// No timestamps, so a replay produces the identical file.
// ---------------------------------------------------------------------------

class Manifest {
public:
    explicit Manifest(std::string subcommand) {
        add("tool", std::string("mcdens ") + kVersion);
        add("subcommand", std::move(subcommand));
    }

    void add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
    void add(const std::string& key, double value) { add(key, format_g17(value)); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    void write(const fs::path& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write manifest '" + path.string() + "'");
        for (const auto& [k, v] : entries_) out << k << " = " << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file '" + path.string() + "'");
    return out;
}

void add_chain_params(Manifest& m, const ChainSpec& spec) {
    m.add(spec.name + ".a", spec.a);
    m.add(spec.name + ".b", spec.b);
    m.add(spec.name + ".sigma2", spec.sigma2);
    m.add(spec.name + ".beta", spec.beta);
    m.add(spec.name + ".delta", static_cast<long long>(spec.delta));
    m.add(spec.name + ".c", spec.domain.lo);
    m.add(spec.name + ".d", spec.domain.hi);
    m.add(spec.name + ".burn_in", static_cast<long long>(spec.burn_in));
}

// ---------------------------------------------------------------------------
// Subcommands. Raw flag storage plus the option handles needed to tell
// "explicitly set" apart from "defaulted".
// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string config_path;
    std::string out;
    long long seed = 0;
    long long jobs = 1;
    CLI::Option* config_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* jobs_opt = nullptr;

    void attach(CLI::App* app, const char* default_out) {
        config_opt = app->add_option("--config", config_path, "key=value config file (flags win)");
        out_opt = app->add_option("--out", out, std::string("output path (default: ") + default_out + ")");
        seed_opt = app->add_option("--seed", seed, "base RNG seed (default 0)");
        jobs_opt = app->add_option("--jobs", jobs, "worker threads (default 1; results identical)");
    }

    Config load() const {
        if (config_opt->count() > 0) return read_config(config_path);
        return {};
    }
};

int cmd_simulate(const CommonFlags& common, const CLI::Option* chain_opt, const std::string& chain_flag,
                 const CLI::Option* n_opt, long long n_flag) {
    const Config cfg = common.load();
    const std::string chain_name = effective(chain_opt, chain_flag, cfg, "chain", std::string());
    if (chain_name.empty()) throw std::runtime_error("simulate: --chain is required");
    ChainSpec spec = ChainSpec::by_name(chain_name);
    apply_chain_overrides(spec, cfg);
    const long long n = effective(n_opt, n_flag, cfg, "n", 1000LL);
    const long long seed = effective(common.seed_opt, common.seed, cfg, "seed", 0LL);
    const std::string out = effective(common.out_opt, common.out, cfg, "out", std::string("sample.csv"));
    if (n < 2) throw std::runtime_error("simulate: need n >= 2");

    const ChainSample sample =
        simulate(spec, static_cast<std::size_t>(n), static_cast<std::uint64_t>(seed));
    {
        auto os = open_output(out);
        write_sample_csv(os, sample.values);
    }
    Manifest m("simulate");
    m.add("chain", spec.name);
    add_chain_params(m, spec);
    m.add("n", n);
    m.add("seed", seed);
    m.add("out", out);
    m.add("output.sample", out);
    m.write(out + ".manifest");
    std::cout << "wrote " << n << " values to " << out << "\n";
    return 0;
}

struct FitFlags {
    std::string input, family, mode;
    double c = 0.0, d = 1.0, k1 = 5.0, k2 = 0.02, trunc = 0.1;
    CLI::Option *input_opt = nullptr, *family_opt = nullptr, *mode_opt = nullptr, *c_opt = nullptr,
                *d_opt = nullptr, *k1_opt = nullptr, *k2_opt = nullptr, *trunc_opt = nullptr;
};

int cmd_fit(const CommonFlags& common, const FitFlags& f) {
    const Config cfg = common.load();
    const std::string input = effective(f.input_opt, f.input, cfg, "in", std::string());
    if (input.empty()) throw std::runtime_error("fit: --in is required");
    const std::string family_id = effective(f.family_opt, f.family, cfg, "family", std::string("hist"));
    const std::string mode = effective(f.mode_opt, f.mode, cfg, "mode", std::string("f"));
    const double c = effective(f.c_opt, f.c, cfg, "c", 0.0);
    const double d = effective(f.d_opt, f.d, cfg, "d", 1.0);
    const PenaltyConfig pen{effective(f.k1_opt, f.k1, cfg, "k1", 5.0),
                            effective(f.k2_opt, f.k2, cfg, "k2", 0.02)};
    const double trunc = effective(f.trunc_opt, f.trunc, cfg, "trunc_exponent", 0.1);
    const std::string out = effective(common.out_opt, common.out, cfg, "out", std::string("fit"));
    if (!(c < d)) throw std::runtime_error("fit: need c < d");
    if (mode != "f" && mode != "g" && mode != "pi")
        throw std::runtime_error("fit: mode must be f, g or pi");

    std::ifstream in(input);
    if (!in) throw std::runtime_error("fit: cannot open input '" + input + "'");
    const std::vector<double> sample = read_sample_csv(in);
    const std::size_t n = sample.size();
    const BasisFamily family = BasisFamily::parse(family_id);
    const Interval domain{c, d};

    Manifest m("fit");
    m.add("in", input);
    m.add("family", family.id());
    m.add("mode", mode);
    m.add("c", c);
    m.add("d", d);
    m.add("k1", pen.k_1d);
    m.add("k2", pen.k_2d);
    m.add("trunc_exponent", trunc);
    m.add("out", out);

    const int grid_1d = 200;
    const int grid_2d = 100;
    if (mode == "f") {
        const DensityEstimate1D est =
            select_model_1d(sample, make_collection(family, n, CapRule::OneD, domain), pen);
        const double crit = contrast_1d(est) + pen.k_1d * est.model.dimension / static_cast<double>(n);
        std::cout << "selected D=" << est.model.dimension << " criterion=" << format_shortest(crit)
                  << "\n";
        auto coef = open_output(out + ".coef.csv");
        write_estimate_csv(coef, est);
        auto grid = open_output(out + ".grid.csv");
        grid << "x,value\n";
        for (int i = 0; i < grid_1d; ++i) {
            const double x = c + (d - c) * (i + 0.5) / grid_1d;
            grid << format_g17(x) << "," << format_g17(est(x)) << "\n";
        }
        m.add("output.coef", out + ".coef.csv");
        m.add("output.grid", out + ".grid.csv");
    } else if (mode == "g") {
        const DensityEstimate2D est =
            select_model_2d(sample, make_collection(family, n, CapRule::TwoD, domain), pen);
        const double dim = est.model.dimension;
        const double crit = contrast_2d(est) + pen.k_2d * dim * dim / static_cast<double>(n);
        std::cout << "selected D=" << est.model.dimension << " criterion=" << format_shortest(crit)
                  << "\n";
        auto coef = open_output(out + ".coef.csv");
        write_estimate_csv(coef, est);
        auto grid = open_output(out + ".grid.csv");
        grid << "x,y,value\n";
        for (int i = 0; i < grid_2d; ++i) {
            const double x = c + (d - c) * (i + 0.5) / grid_2d;
            for (int j = 0; j < grid_2d; ++j) {
                const double y = c + (d - c) * (j + 0.5) / grid_2d;
                grid << format_g17(x) << "," << format_g17(y) << "," << format_g17(est(x, y)) << "\n";
            }
        }
        m.add("output.coef", out + ".coef.csv");
        m.add("output.grid", out + ".grid.csv");
    } else {
        DensityEstimate1D f_est =
            select_model_1d(sample, make_collection(family, n, CapRule::OneD, domain), pen);
        DensityEstimate2D g_est =
            select_model_2d(sample, make_collection(family, n, CapRule::TwoD, domain), pen);
        const double crit_f =
            contrast_1d(f_est) + pen.k_1d * f_est.model.dimension / static_cast<double>(n);
        const double dim_g = g_est.model.dimension;
        const double crit_g = contrast_2d(g_est) + pen.k_2d * dim_g * dim_g / static_cast<double>(n);
        std::cout << "selected f: D=" << f_est.model.dimension
                  << " criterion=" << format_shortest(crit_f) << "\n";
        std::cout << "selected g: D=" << g_est.model.dimension
                  << " criterion=" << format_shortest(crit_g) << "\n";
        {
            auto coef_f = open_output(out + ".f.coef.csv");
            write_estimate_csv(coef_f, f_est);
            auto coef_g = open_output(out + ".g.coef.csv");
            write_estimate_csv(coef_g, g_est);
        }
        const TransitionEstimate pi_est =
            quotient_transition(std::move(f_est), std::move(g_est), n, trunc);
        auto grid = open_output(out + ".grid.csv");
        grid << "x,y,value\n";
        for (int i = 0; i < grid_2d; ++i) {
            const double x = c + (d - c) * (i + 0.5) / grid_2d;
            for (int j = 0; j < grid_2d; ++j) {
                const double y = c + (d - c) * (j + 0.5) / grid_2d;
                grid << format_g17(x) << "," << format_g17(y) << "," << format_g17(pi_est(x, y))
                     << "\n";
            }
        }
        m.add("output.coef_f", out + ".f.coef.csv");
        m.add("output.coef_g", out + ".g.coef.csv");
        m.add("output.grid", out + ".grid.csv");
    }
    m.write(out + ".manifest");
    return 0;
}

struct BenchFlags {
    std::string chains, families, sizes;
    long long replications = 200, grid1d = 256, grid2d = 128;
    double k1 = 5.0, k2 = 0.02, trunc = 0.1;
    CLI::Option *chains_opt = nullptr, *families_opt = nullptr, *sizes_opt = nullptr,
                *reps_opt = nullptr, *g1_opt = nullptr, *g2_opt = nullptr, *k1_opt = nullptr,
                *k2_opt = nullptr, *trunc_opt = nullptr;
};

BenchConfig resolve_bench_config(const CommonFlags& common, const BenchFlags& b, const Config& cfg,
                                 long long* seed_out) {
    BenchConfig bc;
    const std::string chains =
        effective(b.chains_opt, b.chains, cfg, "chains", std::string("ar1,ar2,sqrtcir,cir3,cir4,arch"));
    bc.chains.clear();
    for (const std::string& name : split_list(chains)) {
        ChainSpec spec = ChainSpec::by_name(name);
        apply_chain_overrides(spec, cfg);
        bc.chains.push_back(std::move(spec));
    }
    const std::string families =
        effective(b.families_opt, b.families, cfg, "families", std::string("hist,trig"));
    for (const std::string& id : split_list(families)) bc.families.push_back(BasisFamily::parse(id));
    const std::string sizes =
        effective(b.sizes_opt, b.sizes, cfg, "sizes", std::string("50,100,250,500,1000"));
    bc.sizes.clear();
    for (const std::string& s : split_list(sizes)) {
        bc.sizes.push_back(static_cast<std::size_t>(to_int(s, "sizes")));
    }
    bc.replications = static_cast<int>(effective(b.reps_opt, b.replications, cfg, "replications", 200LL));
    bc.grid_1d = static_cast<int>(effective(b.g1_opt, b.grid1d, cfg, "grid1d", 256LL));
    bc.grid_2d = static_cast<int>(effective(b.g2_opt, b.grid2d, cfg, "grid2d", 128LL));
    bc.penalty = {effective(b.k1_opt, b.k1, cfg, "k1", 5.0), effective(b.k2_opt, b.k2, cfg, "k2", 0.02)};
    bc.trunc_exponent = effective(b.trunc_opt, b.trunc, cfg, "trunc_exponent", 0.1);
    const long long seed = effective(common.seed_opt, common.seed, cfg, "seed", 0LL);
    bc.seed_base = static_cast<std::uint64_t>(seed);
    bc.jobs = static_cast<int>(effective(common.jobs_opt, common.jobs, cfg, "jobs", 1LL));
    *seed_out = seed;
    return bc;
}

void add_bench_manifest(Manifest& m, const BenchConfig& bc, long long seed) {
    std::string chains, families, sizes;
    for (const auto& c : bc.chains) chains += (chains.empty() ? "" : ",") + c.name;
    for (const auto& f : bc.families) families += (families.empty() ? "" : ",") + f.id();
    for (auto n : bc.sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
    m.add("chains", chains);
    m.add("families", families);
    m.add("sizes", sizes);
    m.add("replications", static_cast<long long>(bc.replications));
    m.add("grid1d", static_cast<long long>(bc.grid_1d));
    m.add("grid2d", static_cast<long long>(bc.grid_2d));
    m.add("k1", bc.penalty.k_1d);
    m.add("k2", bc.penalty.k_2d);
    m.add("trunc_exponent", bc.trunc_exponent);
    m.add("seed", seed);
    m.add("jobs", static_cast<long long>(bc.jobs));
    for (const auto& c : bc.chains) add_chain_params(m, c);
}

int cmd_bench(const CommonFlags& common, const BenchFlags& b) {
    const Config cfg = common.load();
    long long seed = 0;
    const BenchConfig bc = resolve_bench_config(common, b, cfg, &seed);
    bc.validate();  // fail before any computation
    const std::string out_dir =
        effective(common.out_opt, common.out, cfg, "out", std::string("bench_out"));

    const BenchResult result = run_bench(bc, &std::cerr);
    const fs::path csv_path = fs::path(out_dir) / "bench.csv";
    {
        auto os = open_output(csv_path);
        write_bench_csv(os, result);
    }
    Manifest m("bench");
    add_bench_manifest(m, bc, seed);
    m.add("out", out_dir);
    m.add("output.csv", csv_path.string());
    m.write(fs::path(out_dir) / "bench.manifest");
    std::cout << "wrote " << result.rows.size() << " rows to " << csv_path.string() << "\n";
    return 0;
}

struct RateFlags {
    std::string chain, family, sizes;
    long long replications = 100;
    double k1 = 5.0, k2 = 0.02;
    CLI::Option *chain_opt = nullptr, *family_opt = nullptr, *sizes_opt = nullptr,
                *reps_opt = nullptr, *k1_opt = nullptr, *k2_opt = nullptr;
};

int cmd_rate(const CommonFlags& common, const RateFlags& r) {
    const Config cfg = common.load();
    const std::string chain_name = effective(r.chain_opt, r.chain, cfg, "chain", std::string("ar1"));
    ChainSpec spec = ChainSpec::by_name(chain_name);
    apply_chain_overrides(spec, cfg);
    const std::string family_id = effective(r.family_opt, r.family, cfg, "family", std::string("hist"));
    const BasisFamily family = BasisFamily::parse(family_id);
    const std::string sizes_str =
        effective(r.sizes_opt, r.sizes, cfg, "sizes", std::string("100,300,1000,3000"));
    std::vector<std::size_t> sizes;
    for (const std::string& s : split_list(sizes_str)) {
        sizes.push_back(static_cast<std::size_t>(to_int(s, "sizes")));
    }
    if (sizes.size() < 4) throw std::runtime_error("rate: need at least 4 sizes");
    const long long reps = effective(r.reps_opt, r.replications, cfg, "replications", 100LL);
    const PenaltyConfig pen{effective(r.k1_opt, r.k1, cfg, "k1", 5.0),
                            effective(r.k2_opt, r.k2, cfg, "k2", 0.02)};
    const long long seed = effective(common.seed_opt, common.seed, cfg, "seed", 0LL);
    const long long jobs = effective(common.jobs_opt, common.jobs, cfg, "jobs", 1LL);
    const std::string out = effective(common.out_opt, common.out, cfg, "out", std::string("rate.csv"));

    const RateReport report =
        rate_experiment(spec, family, sizes, static_cast<int>(reps), pen,
                        static_cast<std::uint64_t>(seed), static_cast<int>(jobs), &std::cerr);
    {
        auto os = open_output(out);
        os << "n,mise_f\n";
        for (std::size_t i = 0; i < report.sizes.size(); ++i) {
            os << report.sizes[i] << "," << format_shortest(report.mise_means[i]) << "\n";
        }
        os << "slope," << format_shortest(report.slope) << "\n";
    }
    Manifest m("rate");
    m.add("chain", spec.name);
    add_chain_params(m, spec);
    m.add("family", family.id());
    m.add("sizes", sizes_str);
    m.add("replications", reps);
    m.add("k1", pen.k_1d);
    m.add("k2", pen.k_2d);
    m.add("seed", seed);
    m.add("jobs", jobs);
    m.add("out", out);
    m.add("output.report", out);
    m.write(out + ".manifest");
    std::cout << "slope=" << format_shortest(report.slope) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive projection estimation of Markov chain densities"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "simulate a benchmark chain to CSV");
    CommonFlags sim_common;
    sim_common.attach(sim, "sample.csv");
    std::string sim_chain;
    long long sim_n = 1000;
    auto* sim_chain_opt = sim->add_option("--chain", sim_chain, "ar1|ar2|sqrtcir|cir3|cir4|arch");
    auto* sim_n_opt = sim->add_option("--n", sim_n, "sample length after burn-in");

    auto* fit = app.add_subcommand("fit", "fit density estimates to a sample CSV");
    CommonFlags fit_common;
    fit_common.attach(fit, "fit");
    FitFlags fitf;
    fitf.input_opt = fit->add_option("--in", fitf.input, "input sample CSV");
    fitf.family_opt = fit->add_option("--family", fitf.family, "hist|trig|haar|poly<r>");
    fitf.mode_opt = fit->add_option("--mode", fitf.mode, "f|g|pi");
    fitf.c_opt = fit->add_option("--c", fitf.c, "domain lower end");
    fitf.d_opt = fit->add_option("--d", fitf.d, "domain upper end");
    fitf.k1_opt = fit->add_option("--k1", fitf.k1, "1-D penalty constant (default 5)");
    fitf.k2_opt = fit->add_option("--k2", fitf.k2, "2-D penalty constant (default 0.02)");
    fitf.trunc_opt = fit->add_option("--trunc-exponent", fitf.trunc, "quotient truncation exponent");

    auto* bench = app.add_subcommand("bench", "Monte-Carlo MISE benchmark");
    CommonFlags bench_common;
    bench_common.attach(bench, "bench_out");
    BenchFlags benchf;
    benchf.chains_opt = bench->add_option("--chains", benchf.chains, "comma list of chains");
    benchf.families_opt = bench->add_option("--families", benchf.families, "comma list of bases");
    benchf.sizes_opt = bench->add_option("--sizes", benchf.sizes, "comma list of sample sizes");
    benchf.reps_opt = bench->add_option("--replications", benchf.replications, "replications per cell");
    benchf.g1_opt = bench->add_option("--grid1d", benchf.grid1d, "1-D MISE grid");
    benchf.g2_opt = bench->add_option("--grid2d", benchf.grid2d, "2-D MISE grid per axis");
    benchf.k1_opt = bench->add_option("--k1", benchf.k1, "1-D penalty constant");
    benchf.k2_opt = bench->add_option("--k2", benchf.k2, "2-D penalty constant");
    benchf.trunc_opt = bench->add_option("--trunc-exponent", benchf.trunc, "truncation exponent");

    auto* rate = app.add_subcommand("rate", "empirical convergence-rate experiment");
    CommonFlags rate_common;
    rate_common.attach(rate, "rate.csv");
    RateFlags ratef;
    ratef.chain_opt = rate->add_option("--chain", ratef.chain, "chain name");
    ratef.family_opt = rate->add_option("--family", ratef.family, "basis family");
    ratef.sizes_opt = rate->add_option("--sizes", ratef.sizes, ">= 4 sizes spanning a decade");
    ratef.reps_opt = rate->add_option("--replications", ratef.replications, "replications per size");
    ratef.k1_opt = rate->add_option("--k1", ratef.k1, "1-D penalty constant");
    ratef.k2_opt = rate->add_option("--k2", ratef.k2, "2-D penalty constant");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(sim_common, sim_chain_opt, sim_chain, sim_n_opt, sim_n);
        if (fit->parsed()) return cmd_fit(fit_common, fitf);
        if (bench->parsed()) return cmd_bench(bench_common, benchf);
        if (rate->parsed()) return cmd_rate(rate_common, ratef);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
