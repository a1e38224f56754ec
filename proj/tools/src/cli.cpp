#include "klrc_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "klrc/binf.hpp"
#include "klrc/cartan.hpp"
#include "klrc/character.hpp"
#include "klrc/cyclotomic.hpp"
#include "klrc/errors.hpp"
#include "klrc/io.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc/verify.hpp"
#include "klrc/word.hpp"

namespace klrc_cli {

namespace {

using namespace klrc;

std::vector<int> parse_coefficients(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(value);
        } catch (const std::exception&) {
            throw Error(ErrorCode::UsageError,
                        std::string(what) + " has a non-integer entry: " + item);
        }
    }
    if (values.empty()) {
        throw Error(ErrorCode::UsageError, std::string(what) + " must not be empty");
    }
    return values;
}

RootVector parse_nu(const CartanDatum& d, const std::string& text) {
    std::vector<int> values = parse_coefficients(text, "--nu");
    if (static_cast<int>(values.size()) != d.rank()) {
        throw Error(ErrorCode::UsageError, "--nu must list one coefficient per vertex");
    }
    for (int v : values) {
        if (v < 0) throw Error(ErrorCode::UsageError, "--nu has a negative root coefficient");
    }
    return RootVector(std::move(values));
}

DominantWeight parse_lambda(const CartanDatum& d, const std::string& text) {
    std::vector<int> values = parse_coefficients(text, "--lambda");
    if (static_cast<int>(values.size()) != d.rank()) {
        throw Error(ErrorCode::UsageError, "--lambda must list one coefficient per vertex");
    }
    for (int v : values) {
        if (v < 0) throw Error(ErrorCode::UsageError, "--lambda has a negative coefficient");
    }
    return DominantWeight(std::move(values));
}

Word parse_word(const CartanDatum& d, const std::string& text) {
    Word word;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        word.push_back(d.index_of(item));
    }
    return word;
}

// Shared flag storage for all subcommands; each leaf uses the subset it
// declared.
struct Options {
    std::string datum_path;
    std::string nu_text;
    std::string lambda_text;
    std::string vertex_i;
    std::string vertex_j;
    int c = 0;
    int n = 0;
    int depth = -1;
    long long max_degree = 6;
    std::string format = "text";
    std::string output_path;
    std::string lhs_path;
    std::string rhs_path;
    std::string input_path;
    std::string left_text;
    std::string right_text;
    std::string suite = "C";
    bool have_c = false;
    bool have_n = false;
};

CartanDatum require_datum(const Options& options) {
    if (options.datum_path.empty()) {
        throw Error(ErrorCode::UsageError, "missing required --datum");
    }
    return load_datum(options.datum_path);
}

void emit(const Options& options, std::ostream& out, const std::string& text) {
    if (options.output_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream file(options.output_path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::UsageError, "cannot write file: " + options.output_path);
    }
    file << text;
    if (!text.empty() && text.back() != '\n') file << "\n";
}

std::string character_text(const CartanDatum& d, const Character& ch, const std::string& format) {
    if (format == "json") return character_to_json(d, ch);
    if (ch.is_zero()) return "0";
    return ch.to_string(d);
}

int run_datum_validate(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    if (options.format == "json") {
        emit(options, out, datum_to_json(d));
    } else {
        std::ostringstream text;
        text << "valid rank=" << d.rank() << " labels=";
        for (int i = 0; i < d.rank(); ++i) text << (i ? "," : "") << d.label(i);
        emit(options, out, text.str());
    }
    return 0;
}

int run_char_simple(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    const Character ch = char_simple_ci_j(d, d.index_of(options.vertex_i),
                                          d.index_of(options.vertex_j), options.c, options.n);
    emit(options, out, character_text(d, ch, options.format));
    return 0;
}

int run_char_shuffle(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    Character lhs = options.lhs_path.empty()
                        ? Character::single(word_content(parse_word(d, options.left_text), d.rank()),
                                            parse_word(d, options.left_text), LaurentPoly::one())
                        : load_character(d, options.lhs_path);
    Character rhs = options.rhs_path.empty()
                        ? Character::single(word_content(parse_word(d, options.right_text), d.rank()),
                                            parse_word(d, options.right_text), LaurentPoly::one())
                        : load_character(d, options.rhs_path);
    emit(options, out, character_text(d, shuffle(d, lhs, rhs), options.format));
    return 0;
}

int run_char_stats(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    Character ch(RootVector::zero(d.rank()));
    if (!options.input_path.empty()) {
        ch = load_character(d, options.input_path);
    } else if (options.have_c && options.have_n && !options.vertex_i.empty() &&
               !options.vertex_j.empty()) {
        ch = char_simple_ci_j(d, d.index_of(options.vertex_i), d.index_of(options.vertex_j),
                              options.c, options.n);
    } else {
        throw Error(ErrorCode::UsageError,
                    "char stats needs --input or the full --i/--j/--c/--n quadruple");
    }
    std::optional<DominantWeight> lambda;
    if (!options.lambda_text.empty()) lambda = parse_lambda(d, options.lambda_text);
    const CharStats stats = char_stats(d, ch, lambda ? &*lambda : nullptr);
    if (options.format == "json") {
        std::ostringstream text;
        text << "{";
        for (int i = 0; i < d.rank(); ++i) {
            if (i) text << ",";
            text << "\"" << d.label(i) << "\":{\"eps\":" << stats.eps[i]
                 << ",\"eps_vee\":" << stats.eps_vee[i] << ",\"wt\":" << stats.wt[i]
                 << ",\"jump\":" << stats.jump[i];
            if (stats.phi_lambda) text << ",\"phi_lambda\":" << (*stats.phi_lambda)[i];
            text << "}";
        }
        text << "}";
        emit(options, out, text.str());
    } else {
        std::ostringstream text;
        for (int i = 0; i < d.rank(); ++i) {
            text << "i=" << d.label(i) << " eps=" << stats.eps[i] << " eps_vee="
                 << stats.eps_vee[i] << " wt=" << stats.wt[i] << " jump=" << stats.jump[i];
            if (stats.phi_lambda) text << " phi_lambda=" << (*stats.phi_lambda)[i];
            text << "\n";
        }
        emit(options, out, text.str());
    }
    return 0;
}

int run_char_serre(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    const int i = d.index_of(options.vertex_i);
    const int j = d.index_of(options.vertex_j);
    const Character ch = char_simple_ci_j(d, i, j, options.c, options.n);
    emit(options, out, character_text(d, serre_apply(d, ch, i, j, options.c), options.format));
    return 0;
}

int run_klr_multiply(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    if (options.lhs_path.empty() || options.rhs_path.empty()) {
        throw Error(ErrorCode::UsageError, "klr multiply needs --lhs and --rhs element files");
    }
    const KlrAlgebra algebra(d);
    const KlrElement product = algebra.multiply(load_klr_element(d, options.lhs_path),
                                                load_klr_element(d, options.rhs_path));
    emit(options, out, klr_element_to_json(d, product));
    return 0;
}

int run_klr_dim(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    if (options.nu_text.empty()) {
        throw Error(ErrorCode::UsageError, "missing required --nu");
    }
    const RootVector nu = parse_nu(d, options.nu_text);
    const KlrAlgebra algebra(d);
    LaurentPoly series;
    if (!options.left_text.empty() || !options.right_text.empty()) {
        if (options.left_text.empty() || options.right_text.empty()) {
            throw Error(ErrorCode::UsageError, "--src and --dst must be given together");
        }
        const Word src = parse_word(d, options.left_text);
        const Word dst = parse_word(d, options.right_text);
        if (word_content(src, d.rank()) != nu || word_content(dst, d.rank()) != nu) {
            throw Error(ErrorCode::ContentMismatch, "--src/--dst content differs from --nu");
        }
        series = algebra.graded_dim_series(src, dst, options.max_degree);
    } else {
        for (const Word& src : words_of_content(nu)) {
            for (const Word& dst : words_of_content(nu)) {
                series += algebra.graded_dim_series(src, dst, options.max_degree);
            }
        }
    }
    if (options.format == "json") {
        emit(options, out, laurent_to_json(series));
    } else if (options.format == "csv") {
        std::ostringstream text;
        text << "degree,dim\n";
        for (const auto& [degree, dim] : series.terms()) {
            text << degree << "," << dim << "\n";
        }
        emit(options, out, text.str());
    } else {
        emit(options, out, compact_laurent(series));
    }
    return 0;
}

CyclotomicPresentation build_presentation(const Options& options, const CartanDatum& d) {
    if (options.nu_text.empty() || options.lambda_text.empty()) {
        throw Error(ErrorCode::UsageError, "missing required --nu or --lambda");
    }
    const KlrAlgebra algebra(d);
    return cyclotomic_build(algebra, parse_nu(d, options.nu_text),
                            parse_lambda(d, options.lambda_text));
}

int run_klr_cyclotomic_dim(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    const CyclotomicPresentation presentation = build_presentation(options, d);
    if (options.format == "json") {
        emit(options, out, presentation_to_json(d, presentation));
    } else if (options.format == "csv") {
        emit(options, out, presentation_to_csv(presentation));
    } else {
        emit(options, out, std::to_string(presentation.total_dimension));
    }
    return 0;
}

int run_klr_nilpotency(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    const CyclotomicPresentation presentation = build_presentation(options, d);
    if (options.format == "json") {
        std::ostringstream text;
        text << "{\"witness\":" << presentation.nilpotency_witness << ",\"strands\":[";
        for (size_t r = 0; r < presentation.strand_nilpotency.size(); ++r) {
            if (r) text << ",";
            text << presentation.strand_nilpotency[r];
        }
        text << "]}";
        emit(options, out, text.str());
    } else if (options.format == "csv") {
        std::ostringstream text;
        text << "strand,nilpotency\n";
        for (size_t r = 0; r < presentation.strand_nilpotency.size(); ++r) {
            text << (r + 1) << "," << presentation.strand_nilpotency[r] << "\n";
        }
        emit(options, out, text.str());
    } else {
        std::ostringstream text;
        for (size_t r = 0; r < presentation.strand_nilpotency.size(); ++r) {
            if (r) text << ",";
            text << presentation.strand_nilpotency[r];
        }
        emit(options, out, text.str());
    }
    return 0;
}

CrystalGraph build_graph(const Options& options, const CartanDatum& d, int default_depth) {
    const int depth = options.depth >= 0 ? options.depth : default_depth;
    if (options.lambda_text.empty()) {
        return binf_generate(d, depth);
    }
    return blambda_generate(d, parse_lambda(d, options.lambda_text), depth);
}

int run_crystal_graph(const Options& options, std::ostream& out, std::ostream& err) {
    const CartanDatum d = require_datum(options);
    if (options.depth < 0) {
        throw Error(ErrorCode::UsageError, "missing required --depth");
    }
    const CrystalGraph graph = build_graph(options, d, options.depth);
    if (!graph.complete && graph.lambda) {
        err << "WARNING IncompleteCrystal depth cap " << graph.depth_cap
            << " cut off reachable members\n";
    }
    if (options.format == "json") {
        emit(options, out, graph_to_json(graph));
    } else if (options.format == "csv") {
        emit(options, out, multiplicities_to_csv(graph));
    } else {
        emit(options, out, to_dot(graph));
    }
    return 0;
}

int run_crystal_mult(const Options& options, std::ostream& out, std::ostream& err) {
    const CartanDatum d = require_datum(options);
    if (options.nu_text.empty()) {
        throw Error(ErrorCode::UsageError, "missing required --nu");
    }
    const RootVector nu = parse_nu(d, options.nu_text);
    const CrystalGraph graph = build_graph(options, d, nu.height());
    if (!graph.complete && graph.lambda &&
        graph.depth_cap < nu.height()) {
        err << "WARNING IncompleteCrystal depth cap " << graph.depth_cap
            << " is below |nu|\n";
    }
    if (options.format == "csv") {
        emit(options, out, multiplicities_to_csv(graph));
        return 0;
    }
    const auto table = weight_multiplicities(graph);
    const auto it = table.find(nu);
    const long long count = it == table.end() ? 0 : it->second;
    if (options.format == "json") {
        std::ostringstream text;
        text << "{\"count\":" << count << "}";
        emit(options, out, text.str());
    } else {
        emit(options, out, std::to_string(count));
    }
    return 0;
}

int run_crystal_verify(const Options& options, std::ostream& out) {
    const CartanDatum d = require_datum(options);
    if (options.depth < 0) {
        throw Error(ErrorCode::UsageError, "missing required --depth");
    }
    const CrystalGraph graph = build_graph(options, d, options.depth);
    const VerificationReport report = verify_axioms(graph, suite_from_string(options.suite));
    if (options.format == "json") {
        std::ostringstream text;
        text << "{\"suite\":\"" << to_string(report.suite) << "\",\"checks\":" << report.checks
             << ",\"violations\":" << report.violations
             << ",\"passed\":" << (report.passed ? "true" : "false") << "}";
        emit(options, out, text.str());
    } else {
        std::ostringstream text;
        text << report.summary() << "\n";
        for (const std::string& witness : report.witnesses) {
            text << "witness: " << witness << "\n";
        }
        emit(options, out, text.str());
    }
    return report.passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact KLR algebra, character, and crystal computations"};
    app.require_subcommand(1);

    Options options;
    int exit_code = 0;
    std::function<int()> action;

    auto add_common = [&](CLI::App* cmd, bool with_output_formats = true) {
        cmd->add_option("--datum", options.datum_path, "Cartan datum JSON file");
        if (with_output_formats) {
            cmd->add_option("--format", options.format, "Output format")
                ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
            cmd->add_option("--output", options.output_path, "Write output to a file");
        }
    };

    CLI::App* datum = app.add_subcommand("datum", "Cartan datum operations");
    datum->require_subcommand(1);
    CLI::App* datum_validate = datum->add_subcommand("validate", "Validate a datum file");
    add_common(datum_validate);
    datum_validate->callback([&] { action = [&] { return run_datum_validate(options, out); }; });

    CLI::App* chr = app.add_subcommand("char", "Character calculus");
    chr->require_subcommand(1);

    CLI::App* char_simple = chr->add_subcommand("simple", "Character of the simple module ci+j");
    add_common(char_simple);
    char_simple->add_option("--i", options.vertex_i, "Vertex label i")->required();
    char_simple->add_option("--j", options.vertex_j, "Vertex label j")->required();
    char_simple->add_option("--c", options.c, "Multiplicity of i in the content")->required();
    char_simple->add_option("--n", options.n, "eps_i of the module")->required();
    char_simple->callback([&] { action = [&] { return run_char_simple(options, out); }; });

    CLI::App* char_shuffle = chr->add_subcommand("shuffle", "Quantum shuffle product");
    add_common(char_shuffle);
    char_shuffle->add_option("--left", options.left_text, "Left word (comma-joined labels)");
    char_shuffle->add_option("--right", options.right_text, "Right word (comma-joined labels)");
    char_shuffle->add_option("--lhs", options.lhs_path, "Left character JSON file");
    char_shuffle->add_option("--rhs", options.rhs_path, "Right character JSON file");
    char_shuffle->callback([&] { action = [&] { return run_char_shuffle(options, out); }; });

    CLI::App* char_stats = chr->add_subcommand("stats", "eps/eps_vee/wt/jump statistics");
    add_common(char_stats);
    char_stats->add_option("--input", options.input_path, "Character JSON file");
    char_stats->add_option("--i", options.vertex_i, "Vertex label i");
    char_stats->add_option("--j", options.vertex_j, "Vertex label j");
    char_stats->add_option("--c", options.c, "Multiplicity of i")->each([&](const std::string&) {
        options.have_c = true;
    });
    char_stats->add_option("--n", options.n, "eps_i")->each([&](const std::string&) {
        options.have_n = true;
    });
    char_stats->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    char_stats->callback([&] { action = [&] { return run_char_stats(options, out); }; });

    CLI::App* char_serre = chr->add_subcommand("serre", "Apply the degree-c Serre operator");
    add_common(char_serre);
    char_serre->add_option("--i", options.vertex_i, "Vertex label i")->required();
    char_serre->add_option("--j", options.vertex_j, "Vertex label j")->required();
    char_serre->add_option("--c", options.c, "Operator degree and i-multiplicity")->required();
    char_serre->add_option("--n", options.n, "eps_i of the module")->required();
    char_serre->callback([&] { action = [&] { return run_char_serre(options, out); }; });

    CLI::App* klr = app.add_subcommand("klr", "KLR algebra arithmetic");
    klr->require_subcommand(1);

    CLI::App* klr_multiply = klr->add_subcommand("multiply", "Multiply two elements");
    add_common(klr_multiply);
    klr_multiply->add_option("--lhs", options.lhs_path, "Left element JSON file");
    klr_multiply->add_option("--rhs", options.rhs_path, "Right element JSON file");
    klr_multiply->callback([&] { action = [&] { return run_klr_multiply(options, out); }; });

    CLI::App* klr_dim = klr->add_subcommand("dim", "Graded dimensions of R(nu)");
    add_common(klr_dim);
    klr_dim->add_option("--nu", options.nu_text, "Content coefficients");
    klr_dim->add_option("--src", options.left_text, "Source word (comma-joined labels)");
    klr_dim->add_option("--dst", options.right_text, "Target word (comma-joined labels)");
    klr_dim->add_option("--max-deg", options.max_degree, "Largest degree reported");
    klr_dim->callback([&] { action = [&] { return run_klr_dim(options, out); }; });

    CLI::App* klr_cyc = klr->add_subcommand("cyclotomic-dim", "Dimension of R^Lambda(nu)");
    add_common(klr_cyc);
    klr_cyc->add_option("--nu", options.nu_text, "Content coefficients");
    klr_cyc->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    klr_cyc->callback([&] { action = [&] { return run_klr_cyclotomic_dim(options, out); }; });

    CLI::App* klr_nil = klr->add_subcommand("nilpotency", "Dot nilpotency in R^Lambda(nu)");
    add_common(klr_nil);
    klr_nil->add_option("--nu", options.nu_text, "Content coefficients");
    klr_nil->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    klr_nil->callback([&] { action = [&] { return run_klr_nilpotency(options, out); }; });

    CLI::App* crystal = app.add_subcommand("crystal", "Crystal graphs");
    crystal->require_subcommand(1);

    CLI::App* crystal_graph = crystal->add_subcommand("graph", "Generate a crystal graph");
    add_common(crystal_graph);
    crystal_graph->add_option("--depth", options.depth, "Generation depth");
    crystal_graph->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    crystal_graph->callback(
        [&] { action = [&] { return run_crystal_graph(options, out, err); }; });

    CLI::App* crystal_mult = crystal->add_subcommand("mult", "Weight multiplicity");
    add_common(crystal_mult);
    crystal_mult->add_option("--nu", options.nu_text, "Content coefficients");
    crystal_mult->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    crystal_mult->add_option("--depth", options.depth, "Generation depth (default |nu|)");
    crystal_mult->callback(
        [&] { action = [&] { return run_crystal_mult(options, out, err); }; });

    CLI::App* crystal_verify = crystal->add_subcommand("verify", "Run an axiom suite");
    add_common(crystal_verify);
    crystal_verify->add_option("--suite", options.suite, "C, KS, PSI, JUMP, or EPSJUMP");
    crystal_verify->add_option("--depth", options.depth, "Generation depth");
    crystal_verify->add_option("--lambda", options.lambda_text, "Dominant weight coefficients");
    crystal_verify->callback([&] { action = [&] { return run_crystal_verify(options, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "ERROR UsageError " << error.what() << "\n";
        return 1;
    }

    try {
        if (!action) {
            err << "ERROR UsageError no command selected\n";
            return 1;
        }
        exit_code = action();
    } catch (const Error& error) {
        err << "ERROR " << to_string(error.code()) << " " << error.detail() << "\n";
        return (error.code() == ErrorCode::CapExceeded ||
                error.code() == ErrorCode::TruncationExceeded)
                   ? 2
                   : 1;
    } catch (const std::exception& error) {
        err << "ERROR UsageError " << error.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace klrc_cli
