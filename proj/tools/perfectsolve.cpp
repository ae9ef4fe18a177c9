// perfectsolve: exact maximum weighted stable sets and optimal colorings of
// Berge graphs (and trigraphs) without balanced skew-partition, by 2-join
// decomposition, with verifiable certificates outside the class.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "perfect/color.hpp"
#include "perfect/generator.hpp"
#include "perfect/io.hpp"
#include "perfect/json_out.hpp"
#include "perfect/oracle.hpp"
#include "perfect/solve.hpp"

using namespace perfect;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertificate = 2;

std::optional<Trigraph> load(const std::string& path, std::string format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return std::nullopt;
    }
    if (format == "auto") {
        auto ext = std::filesystem::path(path).extension().string();
        format = (ext == ".dimacs" || ext == ".col") ? "dimacs" : "tri";
    }
    ParseResult r = format == "dimacs" ? parse_dimacs(in) : parse_trigraph(in);
    if (!r) {
        std::cerr << path << ":" << r.err->line << ": " << r.err->msg << "\n";
        return std::nullopt;
    }
    return r.t;
}

void print_set(const VertexSet& s) {
    VertexSet v = s;
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i] + 1;
    std::cout << "\n";
}

int cmd_alpha(const Trigraph& t, bool as_json, bool emit_cert) {
    SolveOutcome r = alpha(t);
    if (as_json) {
        std::cout << solve_to_json(r).dump(2) << "\n";
        return r.ok ? kExitSolved : kExitCertificate;
    }
    if (r.ok) {
        std::cout << "alpha " << r.alpha << "\n";
        std::cout << "set ";
        print_set(r.stable_set);
        return kExitSolved;
    }
    std::cout << "not-in-class\n";
    if (emit_cert && r.trace) std::cout << trace_to_json(*r.trace).dump(2) << "\n";
    return kExitCertificate;
}

int cmd_color(const Trigraph& t, bool as_json, bool emit_cert) {
    if (!t.is_graph()) {
        std::cerr << "color requires a graph input (no switchable pairs)\n";
        return kExitUsage;
    }
    ColorOutcome out = color(t);
    if (as_json) {
        std::cout << color_outcome_to_json(out).dump(2) << "\n";
        return std::holds_alternative<ColoringResult>(out) ? kExitSolved : kExitCertificate;
    }
    if (const auto* c = std::get_if<ColoringResult>(&out)) {
        std::cout << "colors " << c->num_colors << "\n";
        for (int v = 0; v < t.n; ++v)
            std::cout << "color " << v + 1 << " " << c->color_of[v] << "\n";
        return kExitSolved;
    }
    std::cout << "certificate\n";
    if (emit_cert) std::cout << color_outcome_to_json(out).dump(2) << "\n";
    return kExitCertificate;
}

int cmd_basic(const Trigraph& t, bool as_json) {
    auto rep = recognize_basic(t);
    if (!rep) {
        std::cout << (as_json ? "{\"basic\": false}" : "not-basic") << "\n";
        return kExitCertificate;
    }
    StableSetResult r = alpha_basic(t, *rep);
    if (as_json) {
        json j;
        j["basic"] = true;
        j["class"] = basic_class_name(rep->cls);
        j["alpha"] = r.value;
        j["stableSet"] = set_to_json(r.set);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "class " << basic_class_name(rep->cls) << "\n";
        std::cout << "alpha " << r.value << "\n";
        std::cout << "set ";
        print_set(r.set);
    }
    return kExitSolved;
}

int cmd_find_2join(const Trigraph& t, bool as_json) {
    auto s = find_proper_2join(t);
    if (!s) s = find_proper_complement_2join(t);
    if (!s) {
        std::cout << (as_json ? "{\"found\": false}" : "none") << "\n";
        return kExitCertificate;
    }
    if (as_json) {
        json j;
        j["found"] = true;
        j["split"] = split_to_json(*s);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (s->complemented ? "complement-2-join " : "2-join ")
                  << (s->parity == Parity::odd ? "odd" : "even") << "\n";
        std::cout << "X1 ";
        print_set(s->side(1));
    }
    return kExitSolved;
}

int cmd_find_end(const Trigraph& t, bool as_json) {
    auto end = find_end(t);
    if (!end) {
        std::cout << (as_json ? "{\"found\": false}" : "none") << "\n";
        return kExitCertificate;
    }
    if (as_json) {
        json j;
        j["found"] = true;
        j["kind"] = end->end.kind == FragmentKind::two_join
                        ? "two-join"
                        : (end->end.kind == FragmentKind::complement_two_join
                               ? "complement-two-join"
                               : "homogeneous-pair");
        j["fragment"] = set_to_json(end->end.fragment);
        j["block"] = trigraph_to_json(end->block.t);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "end ";
        print_set(end->end.fragment);
        std::cout << "block vertices " << end->block.t.n << "\n";
    }
    return kExitSolved;
}

int cmd_oracle(const Trigraph& t, int cap, bool as_json) {
    try {
        Weight a = alpha_bf(t, cap);
        int om = omega_bf(t, cap), ch = chi_bf(t, cap);
        bool bsp = has_bsp_bf(t, cap);
        if (as_json) {
            json j{{"alpha", a}, {"omega", om}, {"chi", ch}, {"hasBsp", bsp}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "alpha_bf " << a << "\nomega_bf " << om << "\nchi_bf " << ch
                      << "\nhas_bsp " << (bsp ? "yes" : "no") << "\n";
        }
        return kExitSolved;
    } catch (const SizeCapError& e) {
        std::cerr << e.what << "\n";
        return kExitUsage;
    }
}

int cmd_check(const std::string& dir, int cap) {
    int files = 0, mismatches = 0, certs = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto t = load(entry.path().string(), "auto");
        if (!t) return kExitUsage;
        ++files;
        SolveOutcome r = alpha(*t);
        if (!r.ok) {
            ++certs;
            continue;
        }
        if (t->n <= cap && r.alpha != alpha_bf(*t, cap)) {
            std::cout << "MISMATCH " << entry.path().string() << " solver=" << r.alpha
                      << " bf=" << alpha_bf(*t, cap) << "\n";
            ++mismatches;
        }
    }
    std::cout << "checked " << files << " files, " << certs << " certificates, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? kExitSolved : kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stable sets and colorings of Berge graphs without balanced skew-partition"};
    app.require_subcommand(1);

    std::string file, format = "auto", out_path;
    bool as_json = false, emit_cert = false;
    int bf_cap = bf_cap_default();
    GeneratorSpec gspec;

    auto add_common = [&](CLI::App* sub, bool needs_file = true) {
        if (needs_file) sub->add_option("file", file, "input file")->required();
        sub->add_option("--format", format, "input format: tri, dimacs, auto")
            ->check(CLI::IsMember({"tri", "dimacs", "auto"}));
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_flag("--emit-certificate", emit_cert, "print the certificate");
    };

    auto* sc_alpha = app.add_subcommand("alpha", "maximum weighted stable set");
    add_common(sc_alpha);
    auto* sc_color = app.add_subcommand("color", "optimal coloring");
    add_common(sc_color);
    auto* sc_basic = app.add_subcommand("basic", "basic-class recognition and alpha");
    add_common(sc_basic);
    auto* sc_2join = app.add_subcommand("find-2join", "find a proper (complement) 2-join");
    add_common(sc_2join);
    auto* sc_end = app.add_subcommand("find-end", "find an end and its block");
    add_common(sc_end);
    auto* sc_oracle = app.add_subcommand("oracle", "brute-force reference values");
    add_common(sc_oracle);
    sc_oracle->add_option("--bf-cap", bf_cap, "max n for the brute-force oracles");

    auto* sc_gen = app.add_subcommand("gen", "generate an instance");
    sc_gen->add_option("--seed", gspec.seed, "random seed");
    sc_gen->add_option("--n", gspec.target_size, "target size");
    sc_gen->add_option("--max-weight", gspec.max_weight, "maximum vertex weight");
    sc_gen->add_option("--recipe", gspec.recipe, "mixed, chain or basic")
        ->check(CLI::IsMember({"mixed", "chain", "basic"}));
    sc_gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* sc_check = app.add_subcommand("check", "sweep a corpus directory against the oracle");
    sc_check->add_option("dir", file, "corpus directory")->required();
    sc_check->add_option("--bf-cap", bf_cap, "max n for the brute-force comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (sc_gen->parsed()) {
        Trigraph t = generate(gspec);
        if (out_path.empty()) {
            emit_trigraph(std::cout, t);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return kExitUsage;
            }
            emit_trigraph(out, t);
        }
        return kExitSolved;
    }
    if (sc_check->parsed()) return cmd_check(file, bf_cap);

    auto t = load(file, format);
    if (!t) return kExitUsage;
    try {
        if (sc_alpha->parsed()) return cmd_alpha(*t, as_json, emit_cert);
        if (sc_color->parsed()) return cmd_color(*t, as_json, emit_cert);
        if (sc_basic->parsed()) return cmd_basic(*t, as_json);
        if (sc_2join->parsed()) return cmd_find_2join(*t, as_json);
        if (sc_end->parsed()) return cmd_find_end(*t, as_json);
        if (sc_oracle->parsed()) return cmd_oracle(*t, bf_cap, as_json);
    } catch (const ContractViolation& e) {
        std::cerr << e.what << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
