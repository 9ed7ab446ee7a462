#pragma once

// Batch experiment runner. A config is a flat key-value text file:
//
//   # grid over path lengths, exact solver
//   family = path
//   param n = 4
//   param n = 9
//   seed = 1
//   algorithm = exact
//   exact_threshold = 20
//   epsilon = 0.5
//   out = results.csv
//
// Repeated `param <name>` / `seed` / `algorithm` lines form grid axes; the
// grid is their cartesian product (params outermost, algorithm innermost).
// Every grid point is one independent run and one CSV row. Rows are written
// in grid order no matter how many worker threads run them, so output is
// byte-stable except for the wall_time_ms column.

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "gburn/domination.hpp"
#include "gburn/edgelist.hpp"
#include "gburn/generators.hpp"

namespace gburn {

struct ExperimentConfig {
    std::string family;
    std::vector<std::string> param_names;  // first-appearance order
    std::map<std::string, std::vector<long long>> param_values;
    std::vector<uint64_t> seeds{0};
    std::vector<std::string> algorithms{"exact"};
    int exact_threshold = 20;
    double epsilon = 0.5;
    std::string out_path = "experiment.csv";
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline const std::vector<std::string>& known_families() {
    static const std::vector<std::string> fams{"path",     "cycle",    "complete",
                                               "star",     "spider",   "necklace",
                                               "random-regular", "random-connected"};
    return fams;
}

inline std::vector<std::string> required_params(const std::string& family) {
    if (family == "path" || family == "cycle" || family == "complete") return {"n"};
    if (family == "star") return {"leaves"};
    if (family == "spider") return {"legs", "leglen"};
    if (family == "necklace") return {"block_order", "blocks"};
    if (family == "random-regular") return {"n", "k"};
    if (family == "random-connected") return {"n", "extra"};
    throw std::runtime_error("unknown family: " + family);
}

inline Graph make_family_graph(const std::string& family,
                               const std::map<std::string, long long>& p, uint64_t seed) {
    auto get = [&](const std::string& name) {
        auto it = p.find(name);
        if (it == p.end()) throw std::runtime_error("missing param " + name);
        return static_cast<int>(it->second);
    };
    if (family == "path") return path(get("n"));
    if (family == "cycle") return cycle(get("n"));
    if (family == "complete") return complete(get("n"));
    if (family == "star") return star(get("leaves"));
    if (family == "spider") return spider(get("legs"), get("leglen"));
    if (family == "necklace") return necklace(get("block_order"), get("blocks"));
    if (family == "random-regular") return random_regular(get("n"), get("k"), seed);
    if (family == "random-connected") return random_connected(get("n"), get("extra"), seed);
    throw std::runtime_error("unknown family: " + family);
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig cfg;
    bool saw_seed = false, saw_algorithm = false;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("config line " + std::to_string(line_no) + ": " + msg);
    };
    auto parse_ll = [&](const std::string& text) {
        size_t pos = 0;
        long long x;
        try {
            x = std::stoll(text, &pos);
        } catch (...) {
            throw fail("expected an integer, got \"" + text + "\"");
        }
        if (pos != text.size()) throw fail("expected an integer, got \"" + text + "\"");
        return x;
    };
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw fail("expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw fail("expected key = value");

        if (key == "family") {
            const auto& fams = detail::known_families();
            if (std::find(fams.begin(), fams.end(), value) == fams.end())
                throw fail("unknown family \"" + value + "\"");
            if (!cfg.family.empty()) throw fail("family given twice");
            cfg.family = value;
        } else if (key.rfind("param ", 0) == 0) {
            std::string name = detail::trim(key.substr(6));
            if (name.empty()) throw fail("param needs a name");
            if (!cfg.param_values.count(name)) cfg.param_names.push_back(name);
            cfg.param_values[name].push_back(parse_ll(value));
        } else if (key == "seed") {
            if (!saw_seed) {
                cfg.seeds.clear();
                saw_seed = true;
            }
            long long s = parse_ll(value);
            if (s < 0) throw fail("seed must be nonnegative");
            cfg.seeds.push_back(static_cast<uint64_t>(s));
        } else if (key == "algorithm") {
            static const std::vector<std::string> algos{"exact", "greedy", "mindeg-pipeline",
                                                        "weakdeg-pipeline"};
            if (std::find(algos.begin(), algos.end(), value) == algos.end())
                throw fail("unknown algorithm \"" + value + "\"");
            if (!saw_algorithm) {
                cfg.algorithms.clear();
                saw_algorithm = true;
            }
            cfg.algorithms.push_back(value);
        } else if (key == "exact_threshold") {
            cfg.exact_threshold = static_cast<int>(parse_ll(value));
        } else if (key == "epsilon") {
            try {
                size_t pos = 0;
                cfg.epsilon = std::stod(value, &pos);
                if (pos != value.size()) throw std::invalid_argument("");
            } catch (...) {
                throw fail("expected a number for epsilon");
            }
        } else if (key == "out") {
            cfg.out_path = value;
        } else {
            throw fail("unknown key \"" + key + "\"");
        }
    }
    if (cfg.family.empty()) throw std::runtime_error("config: missing family");
    // unknown params are config errors; absent param axes just give an empty grid
    for (const std::string& name : cfg.param_names) {
        auto req = detail::required_params(cfg.family);
        if (std::find(req.begin(), req.end(), name) == req.end())
            throw std::runtime_error("config: family " + cfg.family + " does not take param " +
                                     name);
    }
    return cfg;
}

inline ExperimentConfig parse_experiment_config(const std::string& text) {
    std::istringstream ss(text);
    return parse_experiment_config(ss);
}

inline ExperimentConfig read_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_experiment_config(in);
}

inline const char* experiment_csv_header() {
    return "family,params,seed,n,min_degree,algorithm,result,twohop_bound,sqrt_ceil,"
           "mindeg_ref,general_upper,wall_time_ms,valid,error";
}

namespace detail {

struct GridPoint {
    std::map<std::string, long long> params;
    std::string params_text;  // "n=9" / "legs=3 leglen=2"
    uint64_t seed;
    std::string algorithm;
};

inline std::vector<GridPoint> build_grid(const ExperimentConfig& cfg) {
    std::vector<GridPoint> grid;
    const auto req = required_params(cfg.family);
    for (const std::string& name : req)
        if (!cfg.param_values.count(name)) return grid;  // empty axis, empty grid

    std::vector<size_t> idx(req.size(), 0);
    while (true) {
        std::map<std::string, long long> params;
        std::string text;
        for (size_t i = 0; i < req.size(); ++i) {
            long long v = cfg.param_values.at(req[i])[idx[i]];
            params[req[i]] = v;
            if (!text.empty()) text += ' ';
            text += req[i] + "=" + std::to_string(v);
        }
        for (uint64_t seed : cfg.seeds)
            for (const std::string& algo : cfg.algorithms)
                grid.push_back({params, text, seed, algo});
        // odometer over param axes, last axis fastest
        size_t i = req.size();
        while (i > 0) {
            --i;
            if (++idx[i] < cfg.param_values.at(req[i]).size()) break;
            idx[i] = 0;
            if (i == 0) return grid;
        }
        if (req.empty()) return grid;
    }
}

inline std::string csv_sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',') c = ';';
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

inline std::string run_grid_point(const ExperimentConfig& cfg, const GridPoint& pt) {
    std::ostringstream row;
    row << cfg.family << ',' << pt.params_text << ',' << pt.seed << ',';
    try {
        Graph g = make_family_graph(cfg.family, pt.params, pt.seed);
        int n = g.vertex_count();
        int k = min_degree(g);

        auto start = std::chrono::steady_clock::now();
        BurningSchedule schedule;
        if (pt.algorithm == "exact") schedule = burning_number_exact(g).second;
        else if (pt.algorithm == "greedy") schedule = greedy_burning(g);
        else if (pt.algorithm == "mindeg-pipeline")
            schedule = burn_via_mindeg(g, cfg.exact_threshold).first;
        else schedule = burn_via_weakdeg(g, cfg.epsilon, cfg.exact_threshold).first;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        bool valid = verify_schedule(g, schedule);

        row << n << ',' << k << ',' << pt.algorithm << ',' << schedule.length() << ',';
        if (k >= 1 && k < n) {
            BoundsReport b = reference_bounds(n, k);
            row << b.twohop_bound << ',' << b.sqrt_ceil << ',' << b.mindeg_ref << ','
                << b.general_upper << ',';
        } else {
            row << ",,,,";
        }
        row << elapsed << ',' << (valid ? "true" : "false") << ',';
        if (!valid) row << "internal verification failure";
    } catch (const std::exception& e) {
        row << ",," << pt.algorithm << ",,,,,,,," << csv_sanitize(e.what());
    }
    return row.str();
}

}  // namespace detail

/// Runs the whole grid and returns the CSV content. Rows appear in grid
/// order regardless of thread count.
inline std::string run_experiment(const ExperimentConfig& cfg, int threads = 1) {
    std::vector<detail::GridPoint> grid = detail::build_grid(cfg);
    std::vector<std::string> rows(grid.size());
    if (threads <= 1 || grid.size() <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) rows[i] = detail::run_grid_point(cfg, grid[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= grid.size()) return;
                rows[i] = detail::run_grid_point(cfg, grid[i]);
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(threads, static_cast<int>(grid.size()));
        pool.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::string csv = experiment_csv_header();
    csv += '\n';
    for (const std::string& r : rows) {
        csv += r;
        csv += '\n';
    }
    return csv;
}

}  // namespace gburn
