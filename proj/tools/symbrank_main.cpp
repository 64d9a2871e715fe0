#include <CLI11.hpp>

#include "symbrank/bratteli.hpp"
#include "symbrank/construction.hpp"
#include "symbrank/io.hpp"
#include "symbrank/parsing.hpp"
#include "symbrank/sadic.hpp"
#include "symbrank/transforms.hpp"
#include "symbrank/words.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace symbrank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// File specs accept "gallery:NAME" for the built-in examples.
RankConstruction load_construction(const std::string& spec,
                                   std::size_t budget_bytes) {
    RankConstruction c;
    if (spec.rfind("gallery:", 0) == 0)
        c = gallery(spec.substr(8));
    else
        c = construction_from_json(read_file(spec));
    if (budget_bytes > 0) c.set_budget_bytes(budget_bytes);
    auto violations = validate(c);
    if (!violations.empty())
        throw std::invalid_argument(spec + ": " + violations.front().message);
    return c;
}

SlidingBlockCode named_code(const std::string& name) {
    if (name == "identity") return identity_code();
    if (name == "bit-flip") return bit_flip_code();
    if (name == "majority3") return majority3_code();
    throw std::invalid_argument("unknown code: " + name);
}

struct Options {
    std::string command;
    std::string sub;
    std::string file;
    std::string file_b;
    std::string check_kind;
    std::string code_name;
    std::string window_bits;
    std::string name;
    int level = 1;
    int word = 0;
    int depth = 6;
    int max_level = 1;
    int rank = 2;
    int levels = 2;
    int top_vertex = 1;
    long long origin = 0;
    long long at = 0;
    std::size_t max_n = 20;
    std::size_t budget_bytes = 0;
    std::size_t cap = 64;
    std::size_t window_len = 16;
    std::size_t budget = 256;
    std::size_t steps = 24;
    bool strict_good = false;
    bool assume_good = false;
    bool partial_edges = false;
    bool recognizable = false;
    bool full = false;
};

int run_generate(const Options& o) {
    RankConstruction c = load_construction(o.file, o.budget_bytes);
    int lo = o.word > 0 ? o.word : 1;
    int hi = o.word > 0 ? o.word : c.arity(o.level);
    for (int j = lo; j <= hi; ++j)
        std::cout << "v[" << o.level << "," << j << "] = "
                  << render_word(c.expand(o.level, j), o.full) << "\n";
    return kExitOk;
}

int run_check(const Options& o) {
    RankConstruction c = load_construction(o.file, o.budget_bytes);
    if (o.check_kind == "validate") {
        auto violations = validate(c);
        if (violations.empty()) {
            std::cout << "valid: true\n";
            return kExitOk;
        }
        for (const auto& v : violations)
            std::cout << "violation (step " << v.step << ", building "
                      << v.building << "): " << v.message << "\n";
        return kExitFailed;
    }
    if (o.check_kind == "proper") {
        ProperReport report = check_proper(c, o.depth);
        std::cout << "proper: " << (report.proper ? "true" : "false") << "\n";
        if (!report.proper) {
            std::cout << "reason: " << report.reason << "\n";
            return kExitFailed;
        }
        return kExitOk;
    }
    if (o.check_kind == "good") {
        GoodReport report = check_good(c, o.level, o.strict_good);
        std::cout << "good: " << (report.good ? "true" : "false") << "\n";
        if (!report.good) {
            std::cout << "witness: word " << report.witness->word_index << " = "
                      << render_word(report.witness->word, o.full) << "\n"
                      << "decomposition: " << report.witness->decomposition << "\n";
            return kExitFailed;
        }
        return kExitOk;
    }
    if (o.check_kind == "spacer") {
        SpacerStats stats = spacer_stats(c, o.depth);
        std::cout << "max_spacer: " << stats.max_spacer << "\n";
        std::cout << "certified: " << (stats.certified ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < stats.per_step_max.size(); ++i)
            std::cout << "step " << i << ": " << stats.per_step_max[i] << "\n";
        return kExitOk;
    }
    if (o.check_kind == "minimal") {
        MinimalityReport report = minimality_verdict(c, o.depth);
        switch (report.verdict) {
            case MinimalityVerdict::MinimalCertified:
                std::cout << "minimal: certified\n";
                break;
            case MinimalityVerdict::MinimalEvidence:
                std::cout << "minimal: evidence\n";
                break;
            case MinimalityVerdict::NotMinimalEvidence:
                std::cout << "minimal: counter-evidence\n";
                break;
        }
        std::cout << "reason: " << report.reason << "\n";
        return report.verdict == MinimalityVerdict::NotMinimalEvidence
                   ? kExitFailed
                   : kExitOk;
    }
    throw std::invalid_argument("unknown check: " + o.check_kind);
}

int run_parse(const Options& o) {
    RankConstruction c = load_construction(o.file, o.budget_bytes);
    if (o.sub == "window") {
        WindowContext ctx{Word(o.window_bits), o.origin};
        ParseResult result =
            parse_window(ctx, c, o.max_level, o.cap,
                         o.partial_edges ? EdgeMode::Partial : EdgeMode::Exact);
        std::cout << "candidates: " << result.candidates.size()
                  << (result.overflow ? " (capped)" : "") << "\n";
        for (std::size_t i = 0; i < result.candidates.size(); ++i) {
            const ParseCandidate& cand = result.candidates[i];
            std::cout << "candidate " << i + 1
                      << (cand.has_partial_edges ? " (partial edges)" : "") << "\n";
            for (const ReadingLayer& layer : cand.layers) {
                std::cout << "  level " << layer.level << ":";
                for (const Mark& m : layer.marks) {
                    std::cout << " " << m.pos << ":w" << m.word_index;
                    if (m.left_partial) std::cout << "<";
                    if (m.right_partial) std::cout << ">";
                }
                std::cout << "\n";
            }
        }
        return kExitOk;
    }
    if (o.sub == "expected") {
        WindowContext ctx{Word(o.window_bits), o.origin};
        Clopen verdict =
            expected_occurrence(ctx, c, o.level, o.word, o.at, o.assume_good);
        switch (verdict) {
            case Clopen::True:
                std::cout << "expected: true\n";
                return kExitOk;
            case Clopen::False:
                std::cout << "expected: false\n";
                return kExitFailed;
            case Clopen::WindowTooSmall:
                std::cout << "expected: WINDOW_TOO_SMALL\n";
                return kExitFailed;
        }
        return kExitFailed;
    }
    if (o.sub == "readability") {
        ReadabilityReport report =
            unique_readability_probe(c, o.level, o.window_len, o.budget);
        std::cout << "windows_inspected: " << report.windows_inspected << "\n";
        if (report.violation) {
            std::cout << "violation: true\n"
                      << "detail: " << report.detail << "\n"
                      << "window: "
                      << render_word(report.counterexample->word, o.full) << "\n";
            return kExitFailed;
        }
        std::cout << "violation: false\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown parse subcommand");
}

int run_convert(const Options& o) {
    if (o.sub == "bratteli") {
        OrderedBratteliDiagram d = diagram_from_json(read_file(o.file));
        RankConstruction c = bratteli_to_rank_construction(d, o.rank);
        std::cout << construction_to_json(c) << "\n";
        return kExitOk;
    }
    if (o.sub == "sadic") {
        DirectiveSequence ds = sadic_from_json(read_file(o.file));
        SadicConversion conv =
            sadic_to_rank_construction(ds, o.rank, o.recognizable);
        std::cout << construction_to_json(conv.construction) << "\n";
        if (!conv.recognizable_declared)
            std::cerr << "note: recognizability not declared; containment only\n";
        return kExitOk;
    }
    if (o.sub == "good-cover") {
        RankConstruction c = load_construction(o.file, o.budget_bytes);
        GoodCoverResult result = good_cover(c, o.levels);
        std::cerr << "trace:";
        for (int i : result.trace) std::cerr << " " << i;
        std::cerr << "\n";
        std::cout << construction_to_json(result.cover) << "\n";
        return kExitOk;
    }
    if (o.sub == "factor-code") {
        RankConstruction c = load_construction(o.file, o.budget_bytes);
        FactorResult result = factor_construction(c, named_code(o.code_name), o.depth);
        std::cerr << "k1: " << result.k1 << "\n";
        std::cout << construction_to_json(result.construction) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown convert subcommand");
}

int run_distance(const Options& o) {
    RankConstruction a = load_construction(o.file, o.budget_bytes);
    RankConstruction b = load_construction(o.file_b, o.budget_bytes);
    auto pa = language_profile(a, o.max_n, o.depth);
    auto pb = language_profile(b, o.max_n, o.depth);
    DistanceReport report = language_distance(pa, pb, o.max_n);
    std::cout << "d_L " << (report.exact ? "= " : "") << report.to_string() << "\n";
    return kExitOk;
}

int run_vershik(const Options& o) {
    OrderedBratteliDiagram d = diagram_from_json(read_file(o.file));
    auto violations = validate_diagram(d);
    if (!violations.empty())
        throw std::invalid_argument(o.file + ": " + violations.front());
    if (o.sub == "orbit") {
        PathPrefix p = minimal_path(d, o.depth, o.top_vertex);
        for (std::size_t s = 0; s < o.steps; ++s) {
            std::cout << "path";
            for (auto [v, pos] : p.picks) std::cout << " (" << v << "," << pos << ")";
            auto [next, wrapped] = vershik_successor(d, p);
            if (wrapped) std::cout << " [wrap]";
            std::cout << "\n";
            p = next;
        }
        return kExitOk;
    }
    if (o.sub == "tower") {
        std::vector<int> coding = tower_coding(d, o.depth, o.level, o.steps);
        std::cout << "coding:";
        for (int v : coding) std::cout << " " << v;
        std::cout << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown vershik subcommand");
}

int run_gallery(const Options& o) {
    std::cout << construction_to_json(gallery(o.name)) << "\n";
    return kExitOk;
}

int run_bounds(const Options& o) {
    RankConstruction c = load_construction(o.file, o.budget_bytes);
    RankBoundReport report = rank_bounds(c, o.depth);
    std::cout << "declared_rank: " << report.declared_rank << "\n"
              << "spacer_bound: " << report.spacer_bound
              << (report.spacer_certified ? " (certified)" : " (evidence)") << "\n"
              << "one_run_bound: " << report.one_run_bound << "\n"
              << "upper_a: " << report.upper_a << "\n"
              << "upper_b: " << report.upper_b << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subshift rank-construction toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--budget-bytes", o.budget_bytes, "expansion budget");
        cmd->add_flag("--full", o.full, "print words without elision");
    };

    CLI::App* generate = app.add_subcommand("generate", "expand level words");
    generate->add_option("--file", o.file, "construction file")->required();
    generate->add_option("--level", o.level, "level to expand")->required();
    generate->add_option("--word", o.word, "word index (default: all)");
    add_common(generate);

    CLI::App* check = app.add_subcommand("check", "run a checker");
    check->add_option("--file", o.file, "construction file")->required();
    check->add_option("kind", o.check_kind, "proper|good|spacer|minimal|validate")
        ->required();
    check->add_option("--depth", o.depth, "inspection depth");
    check->add_option("--level", o.level, "level for goodness");
    check->add_flag("--strict-good", o.strict_good, "strict goodness variant");
    add_common(check);

    CLI::App* parse = app.add_subcommand("parse", "window parsing");
    parse->require_subcommand(1);
    CLI::App* pwindow = parse->add_subcommand("window", "enumerate readings");
    pwindow->add_option("--file", o.file)->required();
    pwindow->add_option("--window", o.window_bits)->required();
    pwindow->add_option("--origin", o.origin);
    pwindow->add_option("--max-level", o.max_level);
    pwindow->add_option("--cap", o.cap);
    pwindow->add_flag("--partial-edges", o.partial_edges);
    add_common(pwindow);
    CLI::App* pexpected = parse->add_subcommand("expected", "expected-occurrence query");
    pexpected->add_option("--file", o.file)->required();
    pexpected->add_option("--window", o.window_bits)->required();
    pexpected->add_option("--origin", o.origin);
    pexpected->add_option("--level", o.level)->required();
    pexpected->add_option("--word", o.word)->required();
    pexpected->add_option("--at", o.at)->required();
    pexpected->add_flag("--assume-good", o.assume_good);
    add_common(pexpected);
    CLI::App* pread = parse->add_subcommand("readability", "unique readability probe");
    pread->add_option("--file", o.file)->required();
    pread->add_option("--level", o.level)->required();
    pread->add_option("--window-len", o.window_len);
    pread->add_option("--budget", o.budget);
    add_common(pread);

    CLI::App* convert = app.add_subcommand("convert", "format conversions");
    convert->require_subcommand(1);
    CLI::App* cbrat = convert->add_subcommand("bratteli", "diagram to construction");
    cbrat->add_option("--file", o.file)->required();
    cbrat->add_option("--rank", o.rank)->required();
    CLI::App* csadic = convert->add_subcommand("sadic", "directive sequence to construction");
    csadic->add_option("--file", o.file)->required();
    csadic->add_option("--rank", o.rank)->required();
    csadic->add_flag("--recognizable", o.recognizable);
    CLI::App* ccover = convert->add_subcommand("good-cover", "proper to good cover");
    ccover->add_option("--file", o.file)->required();
    ccover->add_option("--levels", o.levels);
    add_common(ccover);
    CLI::App* cfactor = convert->add_subcommand("factor-code", "sliding-block factor");
    cfactor->add_option("--file", o.file)->required();
    cfactor->add_option("--code", o.code_name, "identity|bit-flip|majority3")
        ->required();
    cfactor->add_option("--depth", o.depth);
    add_common(cfactor);

    CLI::App* distance = app.add_subcommand("distance", "language distance");
    distance->add_option("file_a", o.file)->required();
    distance->add_option("file_b", o.file_b)->required();
    distance->add_option("--max-n", o.max_n);
    distance->add_option("--depth", o.depth);
    add_common(distance);

    CLI::App* vershik = app.add_subcommand("vershik", "successor dynamics");
    vershik->require_subcommand(1);
    CLI::App* vorbit = vershik->add_subcommand("orbit", "successor orbit");
    vorbit->add_option("--file", o.file)->required();
    vorbit->add_option("--depth", o.depth)->required();
    vorbit->add_option("--steps", o.steps);
    vorbit->add_option("--top", o.top_vertex);
    CLI::App* vtower = vershik->add_subcommand("tower", "tower coding");
    vtower->add_option("--file", o.file)->required();
    vtower->add_option("--depth", o.depth)->required();
    vtower->add_option("--level", o.level)->required();
    vtower->add_option("--steps", o.steps);

    CLI::App* gal = app.add_subcommand("gallery", "named examples");
    gal->add_option("name", o.name, "example name")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "rank bounds");
    bounds->add_option("--file", o.file)->required();
    bounds->add_option("--depth", o.depth);
    add_common(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(o);
        if (check->parsed()) return run_check(o);
        if (parse->parsed()) {
            o.sub = parse->get_subcommands().front()->get_name();
            return run_parse(o);
        }
        if (convert->parsed()) {
            o.sub = convert->get_subcommands().front()->get_name();
            return run_convert(o);
        }
        if (distance->parsed()) return run_distance(o);
        if (vershik->parsed()) {
            o.sub = vershik->get_subcommands().front()->get_name();
            return run_vershik(o);
        }
        if (gal->parsed()) return run_gallery(o);
        if (bounds->parsed()) return run_bounds(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        // malformed inputs are usage errors; checked preconditions fail
        std::string msg = e.what();
        bool format = msg.find("malformed") != std::string::npos ||
                      msg.find("cannot open") != std::string::npos ||
                      msg.find("field") != std::string::npos ||
                      msg.find("expected \"kind\"") != std::string::npos ||
                      msg.find("unknown") != std::string::npos;
        return format ? kExitUsage : kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
