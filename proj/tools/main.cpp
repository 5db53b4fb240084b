// morphclust command-line tool: cluster CSV point sets with the
// dilation-based method or the K-means baseline, generate synthetic
// datasets, render SVG scatter plots, and run the benchmark protocol.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "morphclust/csv_io.hpp"
#include "morphclust/datagen.hpp"
#include "morphclust/engine.hpp"
#include "morphclust/errors.hpp"
#include "morphclust/kmeans.hpp"
#include "morphclust/metrics.hpp"
#include "morphclust/svg_plot.hpp"

namespace {

using namespace morphclust;

struct CommonOpts {
    int k = 3;
    int range = 100;
    int max_iter = 0; // 0 = R/2
    std::string se = "auto";
    std::string connectivity = "full";
    std::string noise = "none";
    std::string assign = "bruteforce";
};

void add_common_flags(CLI::App* app, CommonOpts& o)
{
    app->add_option("--k", o.k, "target cluster count");
    app->add_option("--range", o.range, "grid resolution R (cells per dimension)");
    app->add_option("--max-iter", o.max_iter, "dilation iteration cap (default R/2)");
    app->add_option("--se", o.se, "structuring element: disk|sphere|square3|cube3 (default per dimension)")
        ->check(CLI::IsMember({"auto", "disk", "sphere", "square3", "cube3"}));
    app->add_option("--connectivity", o.connectivity, "component adjacency: face|full")
        ->check(CLI::IsMember({"face", "full"}));
    app->add_option("--noise", o.noise, "noise policy: none|auto-paper|auto-robust|<float T_d>");
    app->add_option("--assign", o.assign, "point assignment path: bruteforce|grid")
        ->check(CLI::IsMember({"bruteforce", "grid"}));
}

ClusterConfig to_config(const CommonOpts& o)
{
    ClusterConfig cfg;
    cfg.k = o.k;
    cfg.res = o.range;
    cfg.max_iter = o.max_iter;

    if (o.se == "disk")
        cfg.se_kind = SEKind::disk;
    else if (o.se == "sphere")
        cfg.se_kind = SEKind::sphere;
    else if (o.se == "square3")
        cfg.se_kind = SEKind::square3;
    else if (o.se == "cube3")
        cfg.se_kind = SEKind::cube3;

    cfg.connectivity = o.connectivity == "face" ? Connectivity::face : Connectivity::full;
    cfg.assign_mode = o.assign == "grid" ? AssignMode::grid_transform : AssignMode::bruteforce;

    if (o.noise == "none") {
        cfg.noise_policy = NoisePolicy::none;
    } else if (o.noise == "auto-paper") {
        cfg.noise_policy = NoisePolicy::auto_paper;
    } else if (o.noise == "auto-robust") {
        cfg.noise_policy = NoisePolicy::auto_robust;
    } else {
        try {
            cfg.noise_threshold = std::stod(o.noise);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--noise",
                                       "expected none|auto-paper|auto-robust|<float>");
        }
        cfg.noise_policy = NoisePolicy::fixed;
    }
    return cfg;
}

// "1-20" or "1,2,7-9"
std::vector<std::uint64_t> parse_seed_list(const std::string& text)
{
    std::vector<std::uint64_t> seeds;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) {
            seeds.push_back(std::stoull(token));
        } else {
            const auto lo = std::stoull(token.substr(0, dash));
            const auto hi = std::stoull(token.substr(dash + 1));
            for (auto s = lo; s <= hi; ++s)
                seeds.push_back(s);
        }
    }
    if (seeds.empty())
        throw CLI::ValidationError("--seeds", "empty seed list");
    return seeds;
}

std::vector<std::array<double, 3>> parse_centers(const std::string& text, int& dim)
{
    std::vector<std::array<double, 3>> centers;
    dim = 0;
    std::string group;
    std::istringstream groups(text);
    while (std::getline(groups, group, ';')) {
        std::array<double, 3> c{{0, 0, 0}};
        int d = 0;
        std::string coord;
        std::istringstream coords(group);
        while (std::getline(coords, coord, ',')) {
            if (d >= 3)
                throw CLI::ValidationError("--centers", "at most 3 coordinates per center");
            c[static_cast<std::size_t>(d++)] = std::stod(coord);
        }
        if (dim == 0)
            dim = d;
        else if (dim != d)
            throw CLI::ValidationError("--centers", "centers differ in dimension");
        centers.push_back(c);
    }
    if (centers.empty() || (dim != 2 && dim != 3))
        throw CLI::ValidationError("--centers", "expected 'x,y[,z];x,y[,z];...'");
    return centers;
}

void print_accuracy_line(const char* name, const AccuracyReport& report, int k)
{
    std::printf("%s accuracy %.4f (counts", name, report.accuracy);
    for (int g = 0; g < k; ++g)
        std::printf(" %d", report.matched_counts[static_cast<std::size_t>(g)]);
    if (report.noise_count > 0)
        std::printf(", noise %d", report.noise_count);
    std::printf(")\n");
}

int run_cluster(const std::string& in, const std::string& out, const std::string& plot,
                const CommonOpts& opts)
{
    const auto [data, gt] = read_csv(in);
    const ClusterConfig cfg = to_config(opts);
    const ClusterOutput result = cluster(data, cfg);

    std::printf("points %zu dim %d R %d\n", data.size(), data.dim, cfg.res);
    std::printf("iterations %d trace", result.result.iterations_used);
    for (int c : result.result.component_count_trace)
        std::printf(" %d", c);
    std::printf("\n");

    const ClusterCounts counts = cluster_counts(result.result.labels, cfg.k);
    std::printf("cluster sizes");
    for (int c : counts.per_cluster)
        std::printf(" %d", c);
    if (counts.noise > 0)
        std::printf(" (noise %d)", counts.noise);
    std::printf("\n");
    if (result.result.noise_threshold_used)
        std::printf("T_d %.6g\n", *result.result.noise_threshold_used);

    if (gt)
        print_accuracy_line("proposed", accuracy_tp(result.result.labels, *gt, opts.k), opts.k);

    if (!out.empty())
        write_csv(out, result.points, result.result.labels);
    if (!plot.empty())
        emit_svg_scatter(plot, result.points, result.result.labels);
    return 0;
}

int run_kmeans(const std::string& in, const std::string& out, const std::string& plot,
               int k, std::uint64_t seed, int max_iter)
{
    const auto [data, gt] = read_csv(in);
    const LabelVector labels = kmeans(data, k, seed, max_iter);

    const ClusterCounts counts = cluster_counts(labels, k);
    std::printf("cluster sizes");
    for (int c : counts.per_cluster)
        std::printf(" %d", c);
    std::printf("\n");
    if (gt)
        print_accuracy_line("kmeans", accuracy_tp(labels, *gt, k), k);

    if (!out.empty())
        write_csv(out, data, labels);
    if (!plot.empty())
        emit_svg_scatter(plot, data, labels);
    return 0;
}

int run_bench(const std::string& seeds_text, int points, double spread,
              const std::string& centers_text, const CommonOpts& opts,
              std::uint64_t kmeans_seed)
{
    const auto seeds = parse_seed_list(seeds_text);
    int dim = 0;
    const auto centers = parse_centers(centers_text, dim);
    const int k = static_cast<int>(centers.size());

    CommonOpts run_opts = opts;
    run_opts.k = k;
    const ClusterConfig cfg = to_config(run_opts);

    std::printf("seed |");
    for (int g = 1; g <= k; ++g)
        std::printf(" gt%d", g);
    std::printf(" | proposed counts + acc | kmeans counts + acc\n");

    double sum_prop = 0.0, sum_km = 0.0;
    for (const auto seed : seeds) {
        BlobSpec spec;
        spec.dim = dim;
        spec.centers = centers;
        spec.spread = spread;
        spec.points_per_blob = points;
        spec.seed = seed;
        const auto [data, gt] = generate_blobs(spec);

        const ClusterOutput prop = cluster(data, cfg);
        const AccuracyReport pr = accuracy_tp(prop.result.labels, gt, k);
        const LabelVector km = kmeans(data, k, kmeans_seed);
        const AccuracyReport kr = accuracy_tp(km, gt, k);

        std::printf("%4llu |", static_cast<unsigned long long>(seed));
        for (int g = 0; g < k; ++g)
            std::printf(" %d", points);
        std::printf(" |");
        for (int g = 0; g < k; ++g)
            std::printf(" %d", pr.matched_counts[static_cast<std::size_t>(g)]);
        std::printf(" %.4f |", pr.accuracy);
        for (int g = 0; g < k; ++g)
            std::printf(" %d", kr.matched_counts[static_cast<std::size_t>(g)]);
        std::printf(" %.4f\n", kr.accuracy);

        sum_prop += pr.accuracy;
        sum_km += kr.accuracy;
    }
    const auto n = static_cast<double>(seeds.size());
    std::printf("mean | proposed %.4f | kmeans %.4f\n", sum_prop / n, sum_km / n);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"morphological-dilation clustering for 2D/3D point sets"};
    app.require_subcommand(1);

    // cluster
    CommonOpts cluster_opts;
    std::string in_path, out_path, plot_path;
    auto* cmd_cluster = app.add_subcommand("cluster", "cluster a CSV point set");
    cmd_cluster->add_option("--in", in_path, "input CSV")->required();
    cmd_cluster->add_option("--out", out_path, "labeled output CSV");
    cmd_cluster->add_option("--plot", plot_path, "SVG scatter output (2D only)");
    add_common_flags(cmd_cluster, cluster_opts);

    // kmeans
    int km_k = 3, km_max_iter = 100;
    std::uint64_t km_seed = 1;
    std::string km_in, km_out, km_plot;
    auto* cmd_kmeans = app.add_subcommand("kmeans", "K-means baseline on a CSV point set");
    cmd_kmeans->add_option("--in", km_in, "input CSV")->required();
    cmd_kmeans->add_option("--out", km_out, "labeled output CSV");
    cmd_kmeans->add_option("--plot", km_plot, "SVG scatter output (2D only)");
    cmd_kmeans->add_option("--k", km_k, "cluster count");
    cmd_kmeans->add_option("--seed", km_seed, "seeding RNG seed");
    cmd_kmeans->add_option("--max-iter", km_max_iter, "Lloyd iteration cap");

    // generate
    std::string gen_type = "blobs", gen_out, gen_centers = "1,1;-1,-1;1,-1";
    int gen_points = 250;
    double gen_spread = 0.6, gen_radius = 1.0, gen_gap = 0.3, gen_jitter = 0.05;
    std::uint64_t gen_seed = 1;
    auto* cmd_generate = app.add_subcommand("generate", "write a synthetic dataset CSV");
    cmd_generate->add_option("--type", gen_type, "blobs|moons")
        ->check(CLI::IsMember({"blobs", "moons"}));
    cmd_generate->add_option("--out", gen_out, "output CSV")->required();
    cmd_generate->add_option("--centers", gen_centers, "blob centers 'x,y[,z];...'");
    cmd_generate->add_option("--points", gen_points, "points per blob / per moon");
    cmd_generate->add_option("--spread", gen_spread, "blob per-axis standard deviation");
    cmd_generate->add_option("--radius", gen_radius, "moon radius");
    cmd_generate->add_option("--gap", gen_gap, "moon vertical gap");
    cmd_generate->add_option("--jitter", gen_jitter, "moon jitter standard deviation");
    cmd_generate->add_option("--seed", gen_seed, "generator seed");

    // plot
    std::string plot_in, plot_out;
    auto* cmd_plot = app.add_subcommand("plot", "render a labeled CSV as an SVG scatter");
    cmd_plot->add_option("--in", plot_in, "labeled CSV")->required();
    cmd_plot->add_option("--out", plot_out, "output SVG")->required();

    // bench
    CommonOpts bench_opts;
    std::string bench_seeds = "1-20", bench_centers = "1,1;-1,-1;1,-1";
    int bench_points = 250;
    double bench_spread = 0.6;
    std::uint64_t bench_kmeans_seed = 1;
    auto* cmd_bench = app.add_subcommand(
        "bench", "blob benchmark: proposed vs K-means over a seed list");
    cmd_bench->add_option("--seeds", bench_seeds, "seed list, e.g. 1-20 or 1,2,9");
    cmd_bench->add_option("--points", bench_points, "points per blob");
    cmd_bench->add_option("--spread", bench_spread, "blob per-axis standard deviation");
    cmd_bench->add_option("--centers", bench_centers, "blob centers 'x,y[,z];...'");
    cmd_bench->add_option("--kmeans-seed", bench_kmeans_seed, "seed for the baseline");
    add_common_flags(cmd_bench, bench_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // usage error
    }

    try {
        if (cmd_cluster->parsed())
            return run_cluster(in_path, out_path, plot_path, cluster_opts);
        if (cmd_kmeans->parsed())
            return run_kmeans(km_in, km_out, km_plot, km_k, km_seed, km_max_iter);
        if (cmd_generate->parsed()) {
            if (gen_type == "blobs") {
                BlobSpec spec;
                spec.centers = parse_centers(gen_centers, spec.dim);
                spec.spread = gen_spread;
                spec.points_per_blob = gen_points;
                spec.seed = gen_seed;
                const auto [data, labels] = generate_blobs(spec);
                write_csv(gen_out, data, labels);
                std::printf("wrote %zu points to %s\n", data.size(), gen_out.c_str());
            } else {
                MoonsSpec spec;
                spec.points_per_moon = gen_points;
                spec.radius = gen_radius;
                spec.gap = gen_gap;
                spec.jitter = gen_jitter;
                spec.seed = gen_seed;
                const auto [data, labels] = generate_moons(spec);
                write_csv(gen_out, data, labels);
                std::printf("wrote %zu points to %s\n", data.size(), gen_out.c_str());
            }
            return 0;
        }
        if (cmd_plot->parsed()) {
            const auto [data, labels] = read_csv(plot_in);
            if (!labels)
                throw InvalidData(plot_in + " has no label column");
            emit_svg_scatter(plot_out, data, *labels);
            return 0;
        }
        if (cmd_bench->parsed())
            return run_bench(bench_seeds, bench_points, bench_spread, bench_centers,
                             bench_opts, bench_kmeans_seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const AlgorithmError& e) {
        std::cerr << "algorithm error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
