#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ewi/benzenoid.hpp"
#include "ewi/cut_method.hpp"
#include "ewi/edge_list.hpp"
#include "ewi/errors.hpp"
#include "ewi/generators.hpp"
#include "ewi/oracle.hpp"
#include "ewi/parallel.hpp"
#include "ewi/polyacene.hpp"
#include "ewi/verify.hpp"

namespace ewi::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

// Domain rejection other than NotPartialCube (wrong shape for a method,
// failed verification).
struct Rejected : Error {
    using Error::Error;
};

struct Input {
    Graph graph;
    std::optional<Benzenoid> benzenoid;
};

Input load(const std::string& path, const std::string& format) {
    Input in;
    if (format == "benzenoid") {
        in.benzenoid = build_benzenoid(read_hexes_file(path));
        in.graph = in.benzenoid->graph;
    } else {
        in.graph = read_edge_list_file(path);
    }
    return in;
}

double to_ms(std::chrono::nanoseconds ns) { return std::chrono::duration<double, std::milli>(ns).count(); }

template <class F>
IndexReport timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    IndexReport r = f();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

IndexReport compute_with(const Input& in, const std::string& method, std::size_t oracle_limit) {
    if (method == "naive") return timed([&] { return edge_indices_naive(in.graph, oracle_limit); });
    if (method == "cut") return timed([&] { return edge_hyper_wiener_cut(in.graph); });
    if (method == "benzenoid") {
        if (!in.benzenoid) throw UsageError("--method benzenoid needs --format benzenoid input");
        return timed([&] { return algorithm1_edge_hyper_wiener(*in.benzenoid); });
    }
    if (method == "tree") {
        if (!is_tree(in.graph)) throw Rejected("input is not a tree");
        return timed([&] { return tree_edge_hyper_wiener(in.graph); });
    }
    // auto
    if (in.benzenoid) return compute_with(in, "benzenoid", oracle_limit);
    if (is_tree(in.graph)) return compute_with(in, "tree", oracle_limit);
    return compute_with(in, "cut", oracle_limit);
}

const std::vector<std::string> kIndexFields{"edge_wiener", "edge_wiener_hat", "ww_star", "edge_hyper_wiener"};

u64 field(const IndexReport& r, const std::string& name) {
    if (name == "edge_wiener") return r.w_e;
    if (name == "edge_wiener_hat") return r.w_e_hat;
    if (name == "ww_star") return r.ww_star;
    return r.ww_e;
}

// Short aliases accepted by --indices.
std::string canonical_index(const std::string& s) {
    if (s == "w_e" || s == "we") return "edge_wiener";
    if (s == "w_e_hat") return "edge_wiener_hat";
    if (s == "ww_e" || s == "wwe") return "edge_hyper_wiener";
    if (s == "ww_e_star") return "ww_star";
    return s;
}

json report_json(const IndexReport& r, const std::vector<std::string>& fields, bool timing) {
    json j;
    j["m"] = r.m;
    for (const auto& f : fields) j[f] = field(r, f);
    j["method"] = to_string(r.method);
    j["elapsed_ms"] = timing ? json(to_ms(r.elapsed)) : json(nullptr);
    return j;
}

void emit(std::ostream& out, const IndexReport& r, const std::vector<std::string>& fields, const std::string& format,
          bool timing) {
    const json j = report_json(r, fields, timing);
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        bool first = true;
        for (const auto& [k, v] : j.items()) out << (first ? "" : ",") << k, first = false;
        out << '\n';
        first = true;
        for (const auto& [k, v] : j.items()) {
            out << (first ? "" : ",");
            first = false;
            if (v.is_string()) out << v.get<std::string>();
            else if (!v.is_null()) out << v.dump();
        }
        out << '\n';
        return;
    }
    for (const auto& [k, v] : j.items()) {
        out << k << ": ";
        if (v.is_string()) out << v.get<std::string>();
        else if (v.is_null()) out << "-";
        else out << v.dump();
        out << '\n';
    }
}

json counterexample_json(const Counterexample& c) {
    json j;
    j["case"] = c.case_name;
    j["detail"] = c.detail;
    j["input_format"] = c.input_format;
    j["input"] = c.input;
    j["reports"] = json::array();
    for (const auto& r : c.reports) j["reports"].push_back(report_json(r, kIndexFields, false));
    return j;
}

template <class Write>
void write_output(const std::string& path, std::ostream& out, Write&& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    write(f);
    if (!f) throw UsageError("write failed for " + path);
}

std::vector<std::size_t> parse_h_list(const std::string& s) {
    std::vector<std::size_t> hs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v == 0) throw UsageError("bad --h entry '" + item + "'");
        hs.push_back(v);
    }
    if (hs.empty()) throw UsageError("--h needs at least one value");
    return hs;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-Wiener and edge-hyper-Wiener indices of partial cubes and benzenoid systems", "ewi"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker threads (0: EWI_THREADS or hardware concurrency)");

    // compute
    auto* compute = app.add_subcommand("compute", "Compute indices of one graph");
    std::string input, format, method = "auto", output = "json", indices;
    std::size_t oracle_limit = kDefaultOracleEdgeLimit;
    bool no_timing = false;
    compute->add_option("input", input, "Edge list or hexagon file")->required();
    compute->add_option("--format", format, "edgelist or benzenoid (default: benzenoid for .hex files)")
        ->check(CLI::IsMember({"edgelist", "benzenoid"}));
    compute->add_option("--method", method)->check(CLI::IsMember({"auto", "naive", "cut", "benzenoid", "tree"}));
    compute->add_option("--output", output)->check(CLI::IsMember({"json", "csv", "text"}));
    compute->add_option("--indices", indices, "Comma list of edge_wiener,edge_wiener_hat,ww_star,edge_hyper_wiener");
    compute->add_option("--max-oracle-edges", oracle_limit, "Edge limit for --method naive");
    compute->add_flag("--no-timing", no_timing, "Emit elapsed_ms as null");

    // generate
    auto* generate = app.add_subcommand("generate", "Write a generated input file");
    generate->require_subcommand(1);
    std::string out_path;
    std::size_t gen_h = 1, gen_hexes = 1, gen_n = 1;
    std::uint64_t gen_seed = 1;
    std::string gen_kind;
    auto* gen_poly = generate->add_subcommand("polyacene", "Linear polyacene L_h as a hexagon file");
    gen_poly->set_help_flag("--help", "Print this help message and exit");
    gen_poly->add_option("--h", gen_h)->required()->check(CLI::PositiveNumber);
    gen_poly->add_option("-o,--output", out_path);
    auto* gen_random = generate->add_subcommand("random-benzenoid", "Random catacondensed system");
    gen_random->add_option("--hexes", gen_hexes)->required()->check(CLI::PositiveNumber);
    gen_random->add_option("--seed", gen_seed);
    gen_random->add_option("-o,--output", out_path);
    auto* gen_family = generate->add_subcommand("family", "Path, even cycle, hypercube, star or random tree");
    gen_family->add_option("--kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "even-cycle", "hypercube", "star", "tree"}));
    gen_family->add_option("--n", gen_n, "Vertices (path, cycle, tree), dimension (hypercube) or leaves (star)")
        ->required();
    gen_family->add_option("--seed", gen_seed);
    gen_family->add_option("-o,--output", out_path);

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-method agreement and formula suites");
    std::string suite = "all";
    std::size_t max_h = 20, naive_max_h = 8, max_hexes = 12, samples = 50, trees = 500, max_n = 60;
    std::uint64_t seed = 1;
    verify->add_option("--suite", suite)->check(CLI::IsMember({"polyacene", "partial-cubes", "benzenoid", "all"}));
    verify->add_option("--max-h", max_h);
    verify->add_option("--naive-max-h", naive_max_h);
    verify->add_option("--hexes", max_hexes);
    verify->add_option("--samples", samples);
    verify->add_option("--trees", trees);
    verify->add_option("--max-n", max_n);
    verify->add_option("--seed", seed);

    // bench
    auto* bench = app.add_subcommand("bench", "Timings of naive, generic cut and benzenoid pipeline on L_h");
    std::string h_list = "50,100,200";
    std::size_t bench_limit = kDefaultOracleEdgeLimit;
    bench->set_help_flag("--help", "Print this help message and exit");
    bench->add_option("--h", h_list, "Comma list of h");
    bench->add_option("--max-oracle-edges", bench_limit);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        set_thread_count(threads);

        if (*compute) {
            if (format.empty()) format = input.ends_with(".hex") ? "benzenoid" : "edgelist";
            std::vector<std::string> fields;
            if (indices.empty()) {
                fields = kIndexFields;
            } else {
                std::stringstream ss(indices);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    const std::string name = canonical_index(item);
                    if (std::find(kIndexFields.begin(), kIndexFields.end(), name) == kIndexFields.end())
                        throw UsageError("unknown index '" + item + "'");
                    fields.push_back(name);
                }
            }
            const Input in = load(input, format);
            const IndexReport r = compute_with(in, method, oracle_limit);
            r.validate();
            emit(out, r, fields, output, !no_timing);
            return kOk;
        }

        if (*generate) {
            if (*gen_poly) {
                const Benzenoid b = generate_polyacene(gen_h);
                write_output(out_path, out, [&](std::ostream& o) { write_hexes(o, b.hexes); });
            } else if (*gen_random) {
                const Benzenoid b = random_catacondensed(gen_hexes, gen_seed);
                write_output(out_path, out, [&](std::ostream& o) { write_hexes(o, b.hexes); });
            } else {
                const Graph g =
                    gen_kind == "tree" ? random_tree(gen_n, gen_seed) : generate_family(parse_family(gen_kind), gen_n);
                write_output(out_path, out, [&](std::ostream& o) { write_edge_list(o, g); });
            }
            return kOk;
        }

        if (*verify) {
            std::vector<SuiteResult> results;
            if (suite == "polyacene" || suite == "all") results.push_back(verify_polyacene_suite(max_h, naive_max_h));
            if (suite == "partial-cubes" || suite == "all")
                results.push_back(verify_partial_cube_suite(trees, max_n, seed));
            if (suite == "benzenoid" || suite == "all")
                results.push_back(verify_benzenoid_suite(max_hexes, samples, seed));
            json j;
            bool ok = true;
            j["suites"] = json::array();
            for (const auto& r : results) {
                json s;
                s["suite"] = r.suite;
                s["cases"] = r.cases;
                s["passed"] = r.passed();
                if (r.failure) s["counterexample"] = counterexample_json(*r.failure);
                ok = ok && r.passed();
                j["suites"].push_back(s);
            }
            j["passed"] = ok;
            out << j.dump(2) << '\n';
            return ok ? kOk : kRejected;
        }

        if (*bench) {
            out << "h,m,edge_wiener,edge_hyper_wiener,naive_ms,cut_ms,algorithm1_ms,agree\n";
            bool all_agree = true;
            for (std::size_t h : parse_h_list(h_list)) {
                const Benzenoid b = generate_polyacene(h);
                const IndexReport alg = timed([&] { return algorithm1_edge_hyper_wiener(b); });
                const IndexReport cut = timed([&] { return edge_hyper_wiener_cut(b.graph); });
                std::optional<IndexReport> naive;
                if (b.graph.edge_count() <= bench_limit)
                    naive = timed([&] { return edge_indices_naive(b.graph, bench_limit); });
                const bool agree = alg.same_indices(cut) && (!naive || naive->same_indices(alg));
                all_agree = all_agree && agree;
                out << h << ',' << alg.m << ',' << alg.w_e << ',' << alg.ww_e << ',';
                out << std::fixed << std::setprecision(3);
                if (naive) out << to_ms(naive->elapsed);
                out << ',' << to_ms(cut.elapsed) << ',' << to_ms(alg.elapsed) << ',' << (agree ? "yes" : "no") << '\n';
                out << std::defaultfloat;
            }
            return all_agree ? kOk : kRejected;
        }
    } catch (const NotPartialCube& e) {
        err << "error: " << e.what() << '\n';
        return kRejected;
    } catch (const Rejected& e) {
        err << "error: " << e.what() << '\n';
        return kRejected;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace ewi::cli
