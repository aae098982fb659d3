#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../cur.hpp"
#include "../error.hpp"
#include "../matgen.hpp"
#include "../matrix_io.hpp"
#include "../selection.hpp"

namespace cursel::bench {

inline constexpr std::size_t full_scale_size = 1000;

struct GeneratorConfig {
    std::string name = "bivariate"; // bivariate | inverse_quadratic | cross | block | gaussian | assumption | file
    std::size_t n = 200;
    std::size_t m = 0; // 0: same as n
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string path; // for "file"
    matgen::AssumptionSpec assumption;
};

struct AlgorithmConfig {
    std::string name = "alg2"; // alg1 | alg2
    std::size_t ell_0 = 6;
    std::size_t ell_a = 3;
    std::size_t ell_b = 3;
    std::size_t iterations = 1;
    std::vector<std::size_t> ell_srrqr_col{3};
    std::vector<std::size_t> ell_new_col{3};
    std::vector<std::size_t> ell_srrqr_row{3};
    std::vector<std::size_t> ell_new_row{3};
    double eta = default_eta;
    bool accumulate_union = false;

    bool iterative() const { return name == "alg2"; }
    std::size_t reported_iterations() const { return iterative() ? iterations : 1; }
};

struct ExperimentConfig {
    GeneratorConfig generator;
    AlgorithmConfig algorithm;
    std::optional<AlgorithmConfig> baseline; // rendered as a constant line
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    NormKind metric = NormKind::Spectral;
    std::string csv_path;
    std::string plot_path;
    bool full_scale = false;
};

struct TrialRecord {
    std::size_t trial_id = 0;
    std::uint64_t seed = 0;
    std::vector<double> errors; // one per iteration
    std::vector<IndexSet> rows;
    std::vector<IndexSet> cols;
    double wall_seconds = 0.0;
};

struct IterationSummary {
    std::size_t iteration = 0;
    double mean = 0.0;
    double p05 = 0.0;
    double p95 = 0.0;
    std::string algorithm;
};

struct ExperimentResult {
    ExperimentConfig config;
    double norm_a = 0.0;
    std::vector<TrialRecord> trials;
    std::vector<TrialRecord> baseline_trials;
    std::vector<IterationSummary> summary; // CSV rows, baseline first
};

struct RunOptions {
    std::size_t threads = 0;                   // 0: hardware concurrency
    std::optional<std::uint64_t> shuffle_seed; // permute trial execution order
};

// ---------------------------------------------------------------- config

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] inline void config_error(const std::string& field, const std::string& what)
{
    fail(ErrorKind::ConfigError, field + ": " + what);
}

class ConfigMap {
public:
    void set(const std::string& key, std::string value, std::size_t line)
    {
        if (entries_.count(key))
            config_error(key, "duplicate key (line " + std::to_string(line) + ")");
        entries_[key] = {std::move(value), false};
    }

    std::optional<std::string> take(const std::string& key)
    {
        auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    void reject_unused() const
    {
        for (const auto& [key, e] : entries_)
            if (!e.used)
                config_error(key, "unknown key");
    }

private:
    struct Entry {
        std::string value;
        bool used = false;
    };
    std::map<std::string, Entry> entries_;
};

inline std::string unquote(const std::string& v)
{
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
        return v.substr(1, v.size() - 2);
    return v;
}

inline std::uint64_t parse_uint(const std::string& field, const std::string& raw)
{
    const std::string v = unquote(raw);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        config_error(field, "expected a non-negative integer, got '" + raw + "'");
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        config_error(field, "integer out of range: '" + raw + "'");
    }
}

inline double parse_double(const std::string& field, const std::string& raw)
{
    const std::string v = unquote(raw);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        config_error(field, "expected a number, got '" + raw + "'");
    }
    if (used != v.size() || !std::isfinite(out))
        config_error(field, "expected a finite number, got '" + raw + "'");
    return out;
}

inline bool parse_bool(const std::string& field, const std::string& raw)
{
    const std::string v = unquote(raw);
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    config_error(field, "expected true or false, got '" + raw + "'");
}

/// "3" or "[3, 4, 5]"
inline std::vector<std::size_t> parse_counts(const std::string& field, const std::string& raw)
{
    std::string v = trim(raw);
    if (v.empty())
        config_error(field, "empty value");
    if (v.front() != '[')
        return {static_cast<std::size_t>(parse_uint(field, v))};
    if (v.back() != ']')
        config_error(field, "unterminated list");
    std::vector<std::size_t> out;
    std::stringstream ss(v.substr(1, v.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(static_cast<std::size_t>(parse_uint(field, trim(item))));
    if (out.empty())
        config_error(field, "empty list");
    return out;
}

inline ConfigMap parse_key_values(std::istream& in)
{
    ConfigMap map;
    std::string section;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string t = trim(line);
        if (t.empty())
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                config_error("line " + std::to_string(lineno), "malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section != "generator" && section != "algorithm" && section != "baseline" && section != "output")
                config_error(section, "unknown section");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            config_error("line " + std::to_string(lineno), "expected key = value");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty())
            config_error("line " + std::to_string(lineno), "missing key");
        map.set(section.empty() ? key : section + "." + key, trim(t.substr(eq + 1)), lineno);
    }
    return map;
}

template <typename T, typename Parse>
void assign(ConfigMap& map, const std::string& key, T& target, Parse parse)
{
    if (auto v = map.take(key))
        target = parse(key, *v);
}

inline AlgorithmConfig parse_algorithm(ConfigMap& map, const std::string& prefix)
{
    AlgorithmConfig a;
    auto size = [](const std::string& f, const std::string& v) { return std::size_t(parse_uint(f, v)); };
    if (auto v = map.take(prefix + ".name"))
        a.name = unquote(*v);
    if (a.name != "alg1" && a.name != "alg2")
        config_error(prefix + ".name", "expected alg1 or alg2, got '" + a.name + "'");
    assign(map, prefix + ".ell_0", a.ell_0, size);
    assign(map, prefix + ".ell_a", a.ell_a, size);
    assign(map, prefix + ".ell_b", a.ell_b, size);
    assign(map, prefix + ".iterations", a.iterations, size);
    assign(map, prefix + ".ell_srrqr_col", a.ell_srrqr_col, parse_counts);
    assign(map, prefix + ".ell_new_col", a.ell_new_col, parse_counts);
    assign(map, prefix + ".ell_srrqr_row", a.ell_srrqr_row, parse_counts);
    assign(map, prefix + ".ell_new_row", a.ell_new_row, parse_counts);
    assign(map, prefix + ".eta", a.eta, parse_double);
    assign(map, prefix + ".union", a.accumulate_union, parse_bool);

    if (a.eta <= 1.0)
        config_error(prefix + ".eta", "must exceed 1");
    if (a.iterative()) {
        if (a.iterations < 1)
            config_error(prefix + ".iterations", "must be at least 1");
        for (const auto& [field, counts] :
             {std::pair{".ell_srrqr_col", &a.ell_srrqr_col}, std::pair{".ell_new_col", &a.ell_new_col},
              std::pair{".ell_srrqr_row", &a.ell_srrqr_row}, std::pair{".ell_new_row", &a.ell_new_row}})
            if (counts->size() != 1 && counts->size() != a.iterations)
                config_error(prefix + field, "list length must be 1 or the iteration count");
    } else if (a.ell_a < 1 || a.ell_0 < a.ell_a) {
        config_error(prefix + ".ell_0", "need ell_0 >= ell_a >= 1");
    }
    return a;
}

} // namespace detail

/// Parses the key-value config format (see configs/ for samples).
inline ExperimentConfig parse_config(std::istream& in)
{
    detail::ConfigMap map = detail::parse_key_values(in);
    ExperimentConfig cfg;
    auto size = [](const std::string& f, const std::string& v) { return std::size_t(detail::parse_uint(f, v)); };
    auto text = [](const std::string&, const std::string& v) { return detail::unquote(v); };

    detail::assign(map, "trials", cfg.trials, size);
    detail::assign(map, "seed", cfg.seed, detail::parse_uint);
    detail::assign(map, "full_scale", cfg.full_scale, detail::parse_bool);
    if (auto v = map.take("metric")) {
        const std::string m = detail::unquote(*v);
        if (m == "spectral")
            cfg.metric = NormKind::Spectral;
        else if (m == "frobenius")
            cfg.metric = NormKind::Frobenius;
        else
            detail::config_error("metric", "expected spectral or frobenius, got '" + m + "'");
    }
    if (cfg.trials < 1)
        detail::config_error("trials", "must be at least 1");

    auto& g = cfg.generator;
    detail::assign(map, "generator.name", g.name, text);
    detail::assign(map, "generator.n", g.n, size);
    detail::assign(map, "generator.m", g.m, size);
    detail::assign(map, "generator.noise", g.noise, detail::parse_double);
    detail::assign(map, "generator.seed", g.seed, detail::parse_uint);
    detail::assign(map, "generator.path", g.path, text);
    detail::assign(map, "generator.k1", g.assumption.k1, size);
    detail::assign(map, "generator.k2", g.assumption.k2, size);
    detail::assign(map, "generator.k3", g.assumption.k3, size);
    detail::assign(map, "generator.beta", g.assumption.beta, size);
    detail::assign(map, "generator.epsilon", g.assumption.epsilon, detail::parse_double);
    detail::assign(map, "generator.kappa", g.assumption.kappa, detail::parse_double);
    static const char* known[] = {"bivariate", "inverse_quadratic", "cross", "block", "gaussian", "assumption", "file"};
    if (std::find(std::begin(known), std::end(known), g.name) == std::end(known))
        detail::config_error("generator.name", "unknown generator '" + g.name + "'");
    if (g.name == "file" && g.path.empty())
        detail::config_error("generator.path", "required for the file generator");
    if (g.name != "file" && g.n < 1)
        detail::config_error("generator.n", "must be positive");
    if (g.noise < 0.0)
        detail::config_error("generator.noise", "must be non-negative");

    cfg.algorithm = detail::parse_algorithm(map, "algorithm");
    if (auto name = map.take("baseline.name")) {
        AlgorithmConfig b;
        b.name = detail::unquote(*name);
        if (b.name != "alg1")
            detail::config_error("baseline.name", "baseline must be alg1");
        detail::assign(map, "baseline.ell_0", b.ell_0, size);
        detail::assign(map, "baseline.ell_a", b.ell_a, size);
        detail::assign(map, "baseline.ell_b", b.ell_b, size);
        detail::assign(map, "baseline.eta", b.eta, detail::parse_double);
        if (b.ell_a < 1 || b.ell_0 < b.ell_a)
            detail::config_error("baseline.ell_0", "need ell_0 >= ell_a >= 1");
        if (b.eta <= 1.0)
            detail::config_error("baseline.eta", "must exceed 1");
        cfg.baseline = b;
    }

    detail::assign(map, "output.csv", cfg.csv_path, text);
    detail::assign(map, "output.plot", cfg.plot_path, text);
    map.reject_unused();
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::IoError, "cannot open config '" + path + "'");
    return parse_config(in);
}

// ---------------------------------------------------------------- execution

inline DenseMatrix make_matrix(const GeneratorConfig& g, bool full_scale = false)
{
    const std::size_t n = full_scale ? full_scale_size : g.n;
    const std::size_t m = full_scale ? full_scale_size : (g.m == 0 ? g.n : g.m);
    if (g.name == "bivariate")
        return matgen::gen_bivariate(n, g.noise, g.seed);
    if (g.name == "inverse_quadratic")
        return matgen::gen_inverse_quadratic(n, m);
    if (g.name == "cross")
        return matgen::gen_cross(n);
    if (g.name == "block")
        return matgen::gen_block_example(n);
    if (g.name == "gaussian")
        return matgen::gen_gaussian(n, m, g.seed);
    if (g.name == "assumption") {
        matgen::AssumptionSpec spec = g.assumption;
        spec.n = n;
        spec.m = m;
        spec.seed = g.seed;
        return matgen::gen_assumption_matrix(spec).a;
    }
    if (g.name == "file")
        return io::load(g.path);
    detail::config_error("generator.name", "unknown generator '" + g.name + "'");
}

/// Worker count: requested (or hardware) capped by CURBENCH_THREADS.
inline std::size_t resolve_threads(std::size_t requested)
{
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CURBENCH_THREADS"); env && *env) {
        const std::size_t cap = std::size_t(detail::parse_uint("CURBENCH_THREADS", env));
        if (cap < 1)
            detail::config_error("CURBENCH_THREADS", "must be at least 1");
        n = std::min(n, cap);
    }
    return n;
}

inline TrialRecord run_trial(const DenseMatrix& a, const AlgorithmConfig& alg, NormKind metric, std::size_t trial_id,
                             std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial_id = trial_id;
    rec.seed = seed;
    if (alg.iterative()) {
        Algorithm2Params p;
        p.ell_0 = alg.ell_0;
        p.iterations = alg.iterations;
        p.ell_srrqr_col = alg.ell_srrqr_col;
        p.ell_new_col = alg.ell_new_col;
        p.ell_srrqr_row = alg.ell_srrqr_row;
        p.ell_new_row = alg.ell_new_row;
        p.eta = alg.eta;
        p.seed = seed;
        p.accumulate_union = alg.accumulate_union;
        const SelectionResult res = run_algorithm2(a, p);
        for (auto& [rows, cols] : iteration_sets(res.trace, alg.accumulate_union)) {
            rec.errors.push_back(projection_cur_error(a, rows, cols, metric));
            rec.rows.push_back(std::move(rows));
            rec.cols.push_back(std::move(cols));
        }
    } else {
        const SelectionResult res = run_algorithm1(a, Algorithm1Params{alg.ell_0, alg.ell_a, alg.ell_b, alg.eta, seed});
        rec.errors.push_back(projection_cur_error(a, res.rows, res.cols, metric));
        rec.rows.push_back(res.rows);
        rec.cols.push_back(res.cols);
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

/// Linear interpolation between order statistics (q in [0, 1]).
inline double percentile(std::vector<double> values, double q)
{
    require(!values.empty(), ErrorKind::InvalidInput, "percentile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * double(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - double(lo)) * (values[hi] - values[lo]);
}

inline std::vector<IterationSummary> summarize(const std::vector<TrialRecord>& trials, const std::string& algorithm,
                                               std::size_t first_iteration)
{
    std::vector<IterationSummary> out;
    if (trials.empty())
        return out;
    const std::size_t iters = trials.front().errors.size();
    for (std::size_t h = 0; h < iters; ++h) {
        std::vector<double> v;
        v.reserve(trials.size());
        for (const auto& t : trials)
            v.push_back(t.errors.at(h)); // trials are stored in id order, so the sum is order-fixed
        IterationSummary s;
        s.iteration = first_iteration + h;
        s.mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
        s.p05 = percentile(v, 0.05);
        s.p95 = percentile(v, 0.95);
        s.algorithm = algorithm;
        out.push_back(s);
    }
    return out;
}

namespace detail {

inline std::vector<TrialRecord> run_trials(const DenseMatrix& a, const AlgorithmConfig& alg, const ExperimentConfig& cfg,
                                           const RunOptions& opt)
{
    std::vector<std::size_t> order(cfg.trials);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (opt.shuffle_seed) {
        Rng rng = make_rng(*opt.shuffle_seed, 7);
        std::shuffle(order.begin(), order.end(), rng);
    }

    std::vector<TrialRecord> out(cfg.trials);
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        for (std::size_t slot; (slot = next.fetch_add(1)) < order.size();) {
            const std::size_t id = order[slot];
            try {
                out[id] = run_trial(a, alg, cfg.metric, id, cfg.seed + id);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(resolve_threads(opt.threads), cfg.trials);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

} // namespace detail

inline void write_csv(const ExperimentResult& res, std::ostream& os)
{
    os << "iteration,mean,p05,p95,metric,algorithm,trials,seed\n";
    for (const auto& s : res.summary)
        os << s.iteration << ',' << io::format_double(s.mean) << ',' << io::format_double(s.p05) << ','
           << io::format_double(s.p95) << ',' << to_string(res.config.metric) << ',' << s.algorithm << ','
           << res.config.trials << ',' << res.config.seed << '\n';
}

inline std::string csv_string(const ExperimentResult& res)
{
    std::ostringstream os;
    write_csv(res, os);
    return os.str();
}

//
// Error vs. iteration on a log-y axis: the iterative algorithm as a shaded
// 5-95% band with dashed mean, the one-shot baseline as a constant dotted line
// with its own band.
//
inline std::string render_svg(const ExperimentResult& res, const std::string& title = {})
{
    constexpr double width = 640, height = 400, left = 80, right = 20, top = 40, bottom = 55;
    std::vector<const IterationSummary*> main, base;
    for (const auto& s : res.summary)
        (s.algorithm == res.config.algorithm.name && res.config.algorithm.iterative() ? main : base).push_back(&s);

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& s : res.summary)
        for (double v : {s.p05, s.mean, s.p95})
            if (v > 0.0) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
    if (!(hi > 0.0)) {
        lo = 1e-16;
        hi = 1.0;
    }
    const double floor_value = lo; // zero errors are drawn at the lowest positive value
    double y0 = std::floor(std::log10(lo)), y1 = std::ceil(std::log10(hi));
    if (y1 <= y0)
        y1 = y0 + 1;
    const double x_max = main.empty() ? 1.0 : double(std::max<std::size_t>(main.back()->iteration, 1));
    const double x_min = main.empty() ? 0.0 : double(main.front()->iteration);

    auto px = [&](double x) {
        const double span = std::max(x_max - x_min, 1.0);
        return left + (x - x_min) / span * (width - left - right);
    };
    auto py = [&](double v) {
        const double l = std::log10(std::max(v, floor_value));
        return top + (y1 - l) / (y1 - y0) * (height - top - bottom);
    };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title
           << "</text>\n";

    // axes and decade grid
    os << "<g stroke=\"black\"><line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
       << "\" y2=\"" << height - bottom << "\"/><line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
       << "\" y2=\"" << height - bottom << "\"/></g>\n";
    for (double d = y0; d <= y1 + 1e-9; d += 1.0) {
        const double y = py(std::pow(10.0, d));
        os << "<line x1=\"" << left << "\" y1=\"" << num(y) << "\" x2=\"" << width - right << "\" y2=\"" << num(y)
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << left - 6 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">1e" << int(d)
           << "</text>\n";
    }
    for (double x = x_min; x <= x_max + 1e-9; x += 1.0)
        os << "<text x=\"" << num(px(x)) << "\" y=\"" << height - bottom + 18 << "\" text-anchor=\"middle\">" << x
           << "</text>\n";
    os << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\">iteration</text>\n";
    os << "<text transform=\"translate(18," << (top + height - bottom) / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << to_string(res.config.metric) << " error</text>\n";

    if (!base.empty()) {
        const auto& b = *base.front();
        const double xa = px(x_min), xb = px(x_max);
        os << "<rect x=\"" << num(xa) << "\" y=\"" << num(py(b.p95)) << "\" width=\"" << num(xb - xa)
           << "\" height=\"" << num(std::max(py(b.p05) - py(b.p95), 0.5))
           << "\" fill=\"#e377c2\" fill-opacity=\"0.2\"/>\n";
        os << "<line x1=\"" << num(xa) << "\" y1=\"" << num(py(b.mean)) << "\" x2=\"" << num(xb) << "\" y2=\""
           << num(py(b.mean)) << "\" stroke=\"#c2185b\" stroke-width=\"2\" stroke-dasharray=\"2,4\"/>\n";
    }
    if (!main.empty()) {
        os << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.2\" points=\"";
        for (const auto* s : main)
            os << num(px(double(s->iteration))) << ',' << num(py(s->p95)) << ' ';
        for (auto it = main.rbegin(); it != main.rend(); ++it)
            os << num(px(double((*it)->iteration))) << ',' << num(py((*it)->p05)) << ' ';
        os << "\"/>\n<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"8,5\" points=\"";
        for (const auto* s : main)
            os << num(px(double(s->iteration))) << ',' << num(py(s->mean)) << ' ';
        os << "\"/>\n";
    }

    // legend
    double ly = top + 10;
    if (!main.empty()) {
        os << "<line x1=\"" << width - 190 << "\" y1=\"" << ly << "\" x2=\"" << width - 160 << "\" y2=\"" << ly
           << "\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"8,5\"/><text x=\"" << width - 154
           << "\" y=\"" << ly + 4 << "\">" << res.config.algorithm.name << " mean (5-95%)</text>\n";
        ly += 18;
    }
    if (!base.empty())
        os << "<line x1=\"" << width - 190 << "\" y1=\"" << ly << "\" x2=\"" << width - 160 << "\" y2=\"" << ly
           << "\" stroke=\"#c2185b\" stroke-width=\"2\" stroke-dasharray=\"2,4\"/><text x=\"" << width - 154
           << "\" y=\"" << ly + 4 << "\">" << base.front()->algorithm << " mean (5-95%)</text>\n";
    os << "</svg>\n";
    return os.str();
}

namespace detail {

inline void write_text(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        fail(ErrorKind::IoError, "write to '" + path + "' failed");
}

} // namespace detail

/// Runs every trial, aggregates per iteration, and writes the configured outputs.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opt = {})
{
    if (cfg.trials < 1)
        detail::config_error("trials", "must be at least 1");
    ExperimentResult res;
    res.config = cfg;
    const DenseMatrix a = make_matrix(cfg.generator, cfg.full_scale);
    res.norm_a = cfg.metric == NormKind::Spectral ? spectral_norm(a) : frobenius_norm(a);

    if (cfg.baseline) {
        res.baseline_trials = detail::run_trials(a, *cfg.baseline, cfg, opt);
        res.summary = summarize(res.baseline_trials, cfg.baseline->name, 0);
    }
    res.trials = detail::run_trials(a, cfg.algorithm, cfg, opt);
    const auto main = summarize(res.trials, cfg.algorithm.name, cfg.algorithm.iterative() ? 1 : 0);
    res.summary.insert(res.summary.end(), main.begin(), main.end());

    if (!cfg.csv_path.empty())
        detail::write_text(cfg.csv_path, csv_string(res));
    if (!cfg.plot_path.empty())
        detail::write_text(cfg.plot_path, render_svg(res, cfg.generator.name + " " + std::to_string(a.rows()) + "x" +
                                                              std::to_string(a.cols())));
    return res;
}

} // namespace cursel::bench
