// Command-line surface: generate, assemble, extract, verify, compare and
// export crystals of types A, B, C.
//
// Exit codes: 0 success, 1 domain error, 2 verification/isomorphism failure,
// 3 resource cap exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <crystals/assemble.hpp>
#include <crystals/crossing_model.hpp>
#include <crystals/crystal.hpp>
#include <crystals/extract.hpp>
#include <crystals/json_io.hpp>
#include <crystals/lattice.hpp>
#include <crystals/sail.hpp>
#include <crystals/verify.hpp>
#include <crystals/worm.hpp>

namespace {

using namespace crystals;

std::vector<int> parse_c(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty()) throw input_error("--c must not be empty");
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw input_error("--c expects comma-separated nonnegative integers, got '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::size_t vertex_cap() {
    if (const char* env = std::getenv("CRYSTAL_MAX_VERTICES")) {
        try {
            const long long cap = std::stoll(env);
            if (cap > 0) return static_cast<std::size_t>(cap);
        } catch (const std::exception&) {
        }
        throw input_error("CRYSTAL_MAX_VERTICES must be a positive integer");
    }
    return 5'000'000;
}

struct OutputOptions {
    std::string out;    // empty: stdout
    std::string format = "json";
    bool annotate_subcrystals = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool with_subcrystals = false) {
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
    cmd->add_option("--format", opts.format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    if (with_subcrystals)
        cmd->add_flag("--annotate-subcrystals", opts.annotate_subcrystals,
                      "include the upper/lower subcrystal decomposition in the JSON");
}

nlohmann::ordered_json subcrystal_annotations(const Crystal& k) {
    nlohmann::ordered_json ann;
    for (const Side side : {Side::Upper, Side::Lower}) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& h : decompose(k, side)) {
            nlohmann::ordered_json hj;
            hj["locus"] = h.locus;
            hj["parameter"] = h.parameter;
            hj["heart"] = h.heart;
            hj["vertices"] = h.vertices;
            arr.push_back(std::move(hj));
        }
        ann[side == Side::Upper ? "upper" : "lower"] = std::move(arr);
    }
    return ann;
}

void emit(const Crystal& k, const OutputOptions& opts,
          const nlohmann::ordered_json* extra = nullptr) {
    std::string payload;
    if (opts.format == "dot") {
        payload = to_dot(k);
    } else {
        nlohmann::ordered_json j = to_crystal_json(k);
        if (opts.annotate_subcrystals) j["subcrystals"] = subcrystal_annotations(k);
        if (extra)
            for (const auto& [key, value] : extra->items()) j[key] = value;
        payload = j.dump() + "\n";
    }
    if (opts.out.empty())
        std::cout << payload;
    else
        write_file(opts.out, payload);
}

Family parse_family(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    throw input_error("--family must be A, B or C");
}

// B_n and C_n crystals are generated through their symmetric A-crystals
std::vector<int> palindromic_base(const std::vector<int>& c, Family fam) {
    std::vector<int> base(c);
    if (fam == Family::B) {
        for (std::size_t t = c.size() - 1; t-- > 0;) base.push_back(c[t]);
    } else {
        for (std::size_t t = c.size(); t-- > 0;) base.push_back(c[t]);
    }
    return base;
}

int run_gen(const std::string& c_arg, const std::string& family, int threads,
            const OutputOptions& opts) {
    const std::vector<int> c = parse_c(c_arg);
    GenerateOptions gopts;
    gopts.max_vertices = vertex_cap();
    gopts.threads = threads;
    const Family fam = parse_family(family);
    Crystal k = fam == Family::A ? generate(c, gopts)
                                 : (fam == Family::B
                                        ? extract_B(complementarity(generate(palindromic_base(c, fam), gopts)))
                                        : extract_C(complementarity(generate(palindromic_base(c, fam), gopts))));
    emit(k, opts);
    return 0;
}

int run_assemble(const std::string& c_arg, const OutputOptions& opts) {
    AssembleOptions aopts;
    aopts.max_vertices = vertex_cap();
    AssembleStats stats;
    Crystal k = assemble(parse_c(c_arg), aopts, &stats);
    std::cerr << "templates=" << stats.templates_built << " cache_hits=" << stats.cache_hits
              << " peak_vertices=" << stats.peak_vertices << "\n";
    emit(k, opts);
    return 0;
}

int run_worm(const std::string& c_arg, const OutputOptions& opts) {
    const auto c = parse_c(c_arg);
    if (c.size() != 2) throw input_error("worm expects --c c1,c2");
    emit(worm_generate(c[0], c[1]), opts);
    return 0;
}

int run_sail(const std::string& c_arg, const OutputOptions& opts) {
    const auto c = parse_c(c_arg);
    if (c.size() != 2) throw input_error("sail expects --c c1,c2");
    emit(sail_build(c[0], c[1]), opts);
    return 0;
}

int run_extract(const std::string& input, const std::string& kind, bool annotate,
                const OutputOptions& opts) {
    const Crystal base = read_crystal_file(input);
    const int m = base.colors();
    if (kind == "B" && m % 2 != 1)
        throw input_error("extract --kind B needs a (2n-1)-colored crystal, got " +
                          std::to_string(m) + " colors");
    if (kind == "C" && m % 2 != 0)
        throw input_error("extract --kind C needs a 2n-colored crystal, got " + std::to_string(m) +
                          " colors");
    const SymmetricCrystal sym = complementarity(base);
    const ExtractResult res = kind == "B" ? extract_B_indexed(sym) : extract_C_indexed(sym);
    nlohmann::ordered_json extra;
    if (annotate) {
        auto arr = nlohmann::ordered_json::array();
        if (kind == "B") {
            if (m != 3) throw input_error("--annotate-descriptions requires a symmetric A_3 input");
            const auto table = describe_all_B(sym);
            for (VertexId v = 0; v < res.crystal.vertex_count(); ++v) {
                const auto& d = *table[res.to_base[v]];
                arr.push_back({d.a1, d.a2, d.delta, d.ell});
            }
        } else {
            if (m != 4) throw input_error("--annotate-descriptions requires a symmetric A_4 input");
            const auto table = describe_all_C(sym);
            for (VertexId v = 0; v < res.crystal.vertex_count(); ++v) {
                const auto& d = *table[res.to_base[v]];
                arr.push_back({d.a1, d.a2, d.delta, d.rho});
            }
        }
        extra["descriptions"] = std::move(arr);
    }
    emit(res.crystal, opts, annotate ? &extra : nullptr);
    return 0;
}

int run_verify(const std::string& input, std::string family) {
    const Crystal k = read_crystal_file(input);
    if (family.empty()) {
        if (!k.meta()) throw input_error("raw crystal: specify --family A|B|C");
        family = family_name(k.meta()->family);
    }
    const Family fam = parse_family(family);
    const VerificationReport report =
        fam == Family::A ? verify_A(k) : verify_BC(k, fam);
    std::cout << report_to_json(report).dump() << "\n";
    return report.summary ? 0 : 2;
}

int run_iso(const std::string& first, const std::string& second) {
    const bool same = isomorphic(read_crystal_file(first), read_crystal_file(second));
    std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
    return same ? 0 : 2;
}

int run_stats(const std::string& input) {
    const auto t0 = std::chrono::steady_clock::now();
    const Crystal k = read_crystal_file(input);
    std::vector<std::size_t> per_color(k.colors(), 0);
    for (const Edge& e : k.edges()) ++per_color[e.color - 1];
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cout << "vertices=" << k.vertex_count() << " edges=" << k.edge_count() << "\n";
    for (Color i = 1; i <= k.colors(); ++i)
        std::cout << "color[" << i << "]=" << per_color[i - 1] << (i == k.colors() ? "\n" : " ");
    std::cout << "elapsed_ms=" << ms << "\n";
    return 0;
}

int run_export(const std::string& input, const OutputOptions& opts) {
    emit(read_crystal_file(input), opts);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular crystals of types A, B and C as edge-colored digraphs"};
    app.require_subcommand(1);

    std::string c_arg, family = "A", kind, input, second;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    bool annotate = false;
    OutputOptions out;

    auto* gen = app.add_subcommand("gen", "generate K(c) (crossing model for A; extracts for B/C)");
    gen->add_option("--c", c_arg, "parameter tuple, comma separated")->required();
    gen->add_option("--family", family, "A|B|C")->check(CLI::IsMember({"A", "B", "C"}));
    gen->add_option("--threads", threads, "worker threads for generation");
    add_output_options(gen, out, true);

    auto* asmb = app.add_subcommand("assemble", "build K(c) by recursive subcrystal gluing");
    asmb->add_option("--c", c_arg, "parameter tuple, comma separated")->required();
    add_output_options(asmb, out, true);

    auto* worm = app.add_subcommand("worm", "the B_2 worm graph W(c1,c2)");
    worm->add_option("--c", c_arg, "c1,c2")->required();
    add_output_options(worm, out);

    auto* sail = app.add_subcommand("sail", "the A_2 sail-model crystal K(c1,c2)");
    sail->add_option("--c", c_arg, "c1,c2")->required();
    add_output_options(sail, out);

    auto* extr = app.add_subcommand("extract", "symmetric extract of a palindromic A-crystal");
    extr->add_option("input", input, "crystal-v1 JSON file")->required();
    extr->add_option("--kind", kind, "B|C")->required()->check(CLI::IsMember({"B", "C"}));
    extr->add_flag("--annotate-descriptions", annotate,
                   "write per-vertex description quadruples into the JSON");
    add_output_options(extr, out);

    auto* veri = app.add_subcommand("verify", "check the defining axioms, print a report");
    veri->add_option("input", input, "crystal-v1 JSON file")->required();
    std::string verify_family;
    veri->add_option("--family", verify_family, "A|B|C (default: from the file)");

    auto* iso = app.add_subcommand("iso", "color-preserving isomorphism test");
    iso->add_option("first", input, "crystal-v1 JSON file")->required();
    iso->add_option("second", second, "crystal-v1 JSON file")->required();

    auto* stat = app.add_subcommand("stats", "vertex/edge counts per color and timing");
    stat->add_option("input", input, "crystal-v1 JSON file")->required();

    auto* expo = app.add_subcommand("export", "re-serialize a crystal (json or dot)");
    expo->add_option("input", input, "crystal-v1 JSON file")->required();
    add_output_options(expo, out, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(c_arg, family, threads, out);
        if (asmb->parsed()) return run_assemble(c_arg, out);
        if (worm->parsed()) return run_worm(c_arg, out);
        if (sail->parsed()) return run_sail(c_arg, out);
        if (extr->parsed()) return run_extract(input, kind, annotate, out);
        if (veri->parsed()) return run_verify(input, verify_family);
        if (iso->parsed()) return run_iso(input, second);
        if (stat->parsed()) return run_stats(input);
        if (expo->parsed()) return run_export(input, out);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const malformed_crystal_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
