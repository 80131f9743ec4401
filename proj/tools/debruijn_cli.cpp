// Command-line surface: basis export, closed-form spectra, circular-string
// decomposition, dense operator export, de Bruijn graph drawing, word-algebra
// calculus, and the cross-module invariant suite.  Every command is
// deterministic given its flags and seed; identical invocations produce
// byte-identical output.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "debruijn/errors.hpp"
#include "debruijn/fourier.hpp"
#include "debruijn/hopf.hpp"
#include "debruijn/kmer.hpp"
#include "debruijn/operators.hpp"
#include "debruijn/report.hpp"
#include "debruijn/serialize.hpp"
#include "debruijn/spectral.hpp"
#include "debruijn/tensor.hpp"
#include "debruijn/word.hpp"

namespace {

using namespace debruijn;

struct GlobalOptions {
    int q = 0; // 0 = take the size of --alphabet (default alphabet "ab")
    int k = 3;
    std::string alphabet_glyphs;
    std::string format = "json";
    std::string transform = "dft";
    std::string normalization = "paper";
    std::string out;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    Index dense_limit = kDefaultDenseLimit;
};

Alphabet resolve_alphabet(const GlobalOptions& opt) {
    if (!opt.alphabet_glyphs.empty()) {
        Alphabet a(opt.alphabet_glyphs);
        if (opt.q != 0 && opt.q != a.q())
            throw DomainError("--q disagrees with the size of --alphabet");
        return a;
    }
    return Alphabet::standard(opt.q == 0 ? 2 : opt.q);
}

void emit(const GlobalOptions& opt, const std::string& payload) {
    if (opt.out.empty())
        std::cout << payload;
    else
        write_file_atomic(std::filesystem::path(opt.out), payload);
}

std::string complex_json(Complex c) {
    return "\"re\": " + format_real(c.real()) + ", \"im\": " + format_real(c.imag());
}

int cmd_basis(const GlobalOptions& opt, const std::string& space_name) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const BasisSpace space = parse_basis_space(space_name);
    const ExportFormat format = parse_export_format(opt.format);
    const std::vector<BasisElement> elements = basis_elements(alphabet.q(), opt.k, space);
    std::string payload;
    switch (format) {
    case ExportFormat::json: payload = basis_json(alphabet.q(), opt.k, elements); break;
    case ExportFormat::csv: payload = basis_csv(elements); break;
    default: throw DomainError("basis: format must be json or csv");
    }
    emit(opt, payload);
    return 0;
}

int cmd_spectrum(const GlobalOptions& opt, const std::string& which_name) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const LaplacianKind which = parse_laplacian_kind(which_name);
    const ExportFormat format = parse_export_format(opt.format);
    const std::vector<double> values = closed_form_spectrum(alphabet.q(), opt.k, which);
    std::string payload;
    if (format == ExportFormat::json) {
        payload = "{\n  \"q\": " + std::to_string(alphabet.q()) +
                  ",\n  \"k\": " + std::to_string(opt.k) + ",\n  \"laplacian\": \"" +
                  to_string(which) + "\",\n  \"count\": " + std::to_string(values.size()) +
                  ",\n  \"eigenvalues\": [";
        for (std::size_t i = 0; i < values.size(); ++i)
            payload += (i ? ", " : "") + format_real(values[i]);
        payload += "]\n}\n";
    } else if (format == ExportFormat::csv) {
        payload = "eigenvalue\n";
        for (double v : values) payload += format_real(v) + "\n";
    } else {
        throw DomainError("spectrum: format must be json or csv");
    }
    emit(opt, payload);
    return 0;
}

// Sequence input: plain text, one circular string per line, letters drawn
// from the alphabet; '#' comment lines and blank lines are skipped.
std::vector<std::pair<std::size_t, Word>> read_sequences(const Alphabet& alphabet,
                                                         const std::string& input) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw IoError("decompose: cannot open input file " + input);
        in = &file;
    }
    std::vector<std::pair<std::size_t, Word>> sequences;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        sequences.emplace_back(line_no, alphabet.parse(line));
    }
    return sequences;
}

int cmd_decompose(const GlobalOptions& opt, const std::string& input) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const TransformKind transform = parse_transform_kind(opt.transform);
    const ExportFormat format = parse_export_format(opt.format);
    if (format != ExportFormat::json && format != ExportFormat::csv)
        throw DomainError("decompose: format must be json or csv");
    constexpr double kDropTol = 1e-12; // entries below this are omitted

    std::string json = "{\n  \"q\": " + std::to_string(alphabet.q()) +
                       ",\n  \"k\": " + std::to_string(opt.k) + ",\n  \"transform\": \"" +
                       std::string(to_string(transform)) + "\",\n  \"sequences\": [";
    std::string csv = "line,length,basis_index,re,im,residual\n";
    bool first_seq = true;
    for (const auto& [line_no, letters] : read_sequences(alphabet, input)) {
        const CircularString s = circular_string(alphabet.q(), letters);
        const CountTensor counts = count_kmers(s, opt.k);
        const Decomposition d = decompose(counts.to_tensor(), alphabet.q(), opt.k, transform);
        json += first_seq ? "\n    {" : ",\n    {";
        first_seq = false;
        json += "\"line\": " + std::to_string(line_no) +
                ", \"length\": " + std::to_string(counts.n) +
                ", \"residual\": " + format_real(d.residual) + ", \"entries\": [";
        bool first_entry = true;
        for (const auto& entry : d.entries) {
            if (std::abs(entry.coefficient) < kDropTol) continue;
            json += first_entry ? "\n      {" : ",\n      {";
            first_entry = false;
            json += "\"basis_index\": " + std::to_string(entry.basis_index) + ", " +
                    complex_json(entry.coefficient) + "}";
            csv += std::to_string(line_no) + "," + std::to_string(counts.n) + "," +
                   std::to_string(entry.basis_index) + "," +
                   format_real(entry.coefficient.real()) + "," +
                   format_real(entry.coefficient.imag()) + "," + format_real(d.residual) + "\n";
        }
        json += first_entry ? "]}" : "\n    ]}";
    }
    json += first_seq ? "]\n}\n" : "\n  ]\n}\n";
    emit(opt, format == ExportFormat::json ? json : csv);
    return 0;
}

int cmd_check(const GlobalOptions& opt) {
    const Alphabet alphabet = resolve_alphabet(opt);
    ToleranceConfig tolerances;
    tolerances.float_tol = opt.tolerance;
    const RunReport report =
        run_invariant_suite(alphabet.q(), opt.k, opt.seed, tolerances, opt.dense_limit);
    std::cout << report_text(report);
    if (!opt.out.empty()) write_file_atomic(std::filesystem::path(opt.out), report_json(report));
    return report.all_pass() ? 0 : 1;
}

int cmd_materialize(const GlobalOptions& opt, const std::string& kind_name) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const OperatorKind kind = parse_operator_kind(kind_name);
    const MatrixNormalization normalization = parse_normalization(opt.normalization);
    const ExportFormat format = parse_export_format(opt.format);
    const DenseMatrix m = materialize(kind, opt.k, alphabet.q(), normalization, opt.dense_limit);
    std::string payload;
    switch (format) {
    case ExportFormat::mm: payload = matrix_mm(m); break;
    case ExportFormat::csv: payload = matrix_csv(m); break;
    case ExportFormat::json: payload = matrix_json(m); break;
    default: throw DomainError("materialize: format must be mm, csv, or json");
    }
    emit(opt, payload);
    return 0;
}

int cmd_graph(const GlobalOptions& opt) {
    const Alphabet alphabet = resolve_alphabet(opt);
    emit(opt, graph_dot(opt.k, alphabet, opt.dense_limit));
    return 0;
}

std::string terms_payload(const GlobalOptions& opt, const Alphabet& alphabet, const WordSum& z) {
    const ExportFormat format = parse_export_format(opt.format);
    if (format == ExportFormat::csv) {
        std::string csv = "word,re,im\n";
        for (const auto& [w, c] : z)
            csv += alphabet.format(w) + "," + format_real(c.real()) + "," +
                   format_real(c.imag()) + "\n";
        return csv;
    }
    if (format != ExportFormat::json) throw DomainError("hopf: format must be json or csv");
    std::string json = "{\n  \"terms\": [";
    bool first = true;
    for (const auto& [w, c] : z) {
        json += first ? "\n    {" : ",\n    {";
        first = false;
        json += "\"word\": \"" + alphabet.format(w) + "\", " + complex_json(c) + "}";
    }
    json += first ? "]\n}\n" : "\n  ]\n}\n";
    return json;
}

std::string pairs_payload(const GlobalOptions& opt, const Alphabet& alphabet, const PairSum& z) {
    const ExportFormat format = parse_export_format(opt.format);
    if (format == ExportFormat::csv) {
        std::string csv = "left,right,re,im\n";
        for (const auto& [p, c] : z)
            csv += alphabet.format(p.first) + "," + alphabet.format(p.second) + "," +
                   format_real(c.real()) + "," + format_real(c.imag()) + "\n";
        return csv;
    }
    if (format != ExportFormat::json) throw DomainError("hopf: format must be json or csv");
    std::string json = "{\n  \"terms\": [";
    bool first = true;
    for (const auto& [p, c] : z) {
        json += first ? "\n    {" : ",\n    {";
        first = false;
        json += "\"left\": \"" + alphabet.format(p.first) + "\", \"right\": \"" +
                alphabet.format(p.second) + "\", " + complex_json(c) + "}";
    }
    json += first ? "]\n}\n" : "\n  ]\n}\n";
    return json;
}

int cmd_hopf_product(const GlobalOptions& opt, bool use_shuffle, const std::string& left,
                     const std::string& right) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const WordSum z = word_sum(alphabet.parse(left));
    const WordSum zp = word_sum(alphabet.parse(right));
    emit(opt, terms_payload(opt, alphabet, use_shuffle ? shuffle(z, zp) : concat_words(z, zp)));
    return 0;
}

int cmd_hopf_coproduct(const GlobalOptions& opt, bool use_deconcat, const std::string& word) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const WordSum z = word_sum(alphabet.parse(word));
    emit(opt, pairs_payload(opt, alphabet, use_deconcat ? deconcatenate(z) : deshuffle(z)));
    return 0;
}

int cmd_hopf_antipode(const GlobalOptions& opt, const std::string& word) {
    const Alphabet alphabet = resolve_alphabet(opt);
    emit(opt, terms_payload(opt, alphabet, antipode(word_sum(alphabet.parse(word)))));
    return 0;
}

int cmd_hopf_factor(const GlobalOptions& opt, const std::string& word) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const std::vector<Word> factors = primitive_factorize(alphabet.parse(word));
    const ExportFormat format = parse_export_format(opt.format);
    std::string payload;
    if (format == ExportFormat::csv) {
        payload = "factor\n";
        for (const Word& f : factors) payload += alphabet.format(f) + "\n";
    } else if (format == ExportFormat::json) {
        payload = "{\n  \"factors\": [";
        for (std::size_t i = 0; i < factors.size(); ++i)
            payload += (i ? ", \"" : "\"") + alphabet.format(factors[i]) + "\"";
        payload += "]\n}\n";
    } else {
        throw DomainError("hopf factor: format must be json or csv");
    }
    emit(opt, payload);
    return 0;
}

// Exhaustive desk-scale axiom battery over raw letter words (no RNG).
int cmd_hopf_axioms(const GlobalOptions& opt) {
    const Alphabet alphabet = resolve_alphabet(opt);
    const int q = alphabet.q();
    struct Row {
        std::string name;
        double residual;
    };
    std::vector<Row> rows;

    std::vector<Word> words; // all words over min(q,2) letters, lengths 0..3
    for (int len = 0; len <= 3; ++len) {
        Word w(static_cast<std::size_t>(len), 0);
        while (true) {
            words.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && ++w[static_cast<std::size_t>(pos)] == 2) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }

    double antipode_worst = 0.0;
    for (const Word& w : words)
        for (HopfPair pair : {HopfPair::shuffle_deconcat, HopfPair::concat_deshuffle})
            antipode_worst = std::max(antipode_worst, antipode_axiom_residual(pair, word_sum(w)));
    rows.push_back({"antipode", antipode_worst});

    double leibniz_worst = 0.0;
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.empty() || v.empty()) continue;
            for (Side side : {Side::left, Side::right})
                leibniz_worst =
                    std::max(leibniz_worst, leibniz_residual(side, word_sum(u), word_sum(v), q));
        }
    rows.push_back({"leibniz", leibniz_worst});

    double pairing_worst = 0.0;
    for (const Word& z : words)
        for (const Word& zp : words)
            for (const Word& w : words)
                for (const Word& wp : words) {
                    if (z.size() > 2 || zp.size() > 2 || w.size() > 2 || wp.size() > 2) continue;
                    pairing_worst =
                        std::max(pairing_worst, dual_pairing_residual(word_sum(z), word_sum(zp),
                                                                      word_sum(w), word_sum(wp)));
                }
    rows.push_back({"dual-pairing", pairing_worst});

    bool all_pass = true;
    std::string text, json = "{\n  \"checks\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool pass = rows[i].residual <= 1e-12;
        all_pass = all_pass && pass;
        text += rows[i].name + ": residual " + format_real(rows[i].residual) +
                (pass ? " pass" : " FAIL") + "\n";
        json += (i ? ",\n    {" : "\n    {") + std::string("\"name\": \"") + rows[i].name +
                "\", \"residual\": " + format_real(rows[i].residual) +
                ", \"pass\": " + (pass ? "true" : "false") + "}";
    }
    json += "\n  ],\n  \"all_pass\": " + std::string(all_pass ? "true" : "false") + "\n}\n";
    emit(opt, parse_export_format(opt.format) == ExportFormat::json ? json : text);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for de Bruijn graphs: tensor-space graph operators, "
                 "closed-form Laplacian eigenbases, cycle/cut bases, circular-string k-mer "
                 "decomposition, and the graded word algebra."};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--q", opt.q, "Alphabet size (default: size of --alphabet, or 2)");
    app.add_option("--k", opt.k, "Word length / tensor order (default 3)");
    app.add_option("--alphabet", opt.alphabet_glyphs,
                   "Glyphs for letters 0..q-1 (default ab, abcd for q=4); the first glyph is "
                   "the flat letter");
    app.add_option("--transform", opt.transform, "Unitary transform: dft|hadamard (default dft)");
    app.add_option("--normalization", opt.normalization,
                   "Matrix normalization: paper|combinatorial (default paper)");
    app.add_option("--format", opt.format, "Output format: json|csv|mm|dot (default json)");
    app.add_option("--seed", opt.seed, "RNG seed for the invariant suite (default 42)");
    app.add_option("--tolerance", opt.tolerance,
                   "Float tolerance for suite checks (default 1e-9)");
    app.add_option("--dense-limit", opt.dense_limit,
                   "Largest dense dimension materialized (default 65536)");
    app.add_option("--out", opt.out, "Write output to this file (atomic) instead of stdout");

    std::string basis_space = "all";
    auto* basis = app.add_subcommand("basis", "Export the orthonormal cycle/cut basis");
    basis->add_option("space", basis_space, "cycle|cut|all (default all)");

    std::string spectrum_kind = "vertex";
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form Laplacian spectrum");
    spectrum->add_option("laplacian", spectrum_kind, "vertex|edge (default vertex)");

    std::string decompose_input = "-";
    auto* decomp = app.add_subcommand(
        "decompose", "Count k-mers of circular strings and expand over the cycle basis");
    decomp->add_option("input", decompose_input,
                       "Input file, one circular string per line ('-' = stdin, '#' comments)");

    auto* check = app.add_subcommand("check", "Run the cross-module invariant suite");

    std::string materialize_kind;
    auto* mat = app.add_subcommand("materialize", "Export a dense operator matrix");
    mat->add_option("operator", materialize_kind,
                    "delete-left|delete-right|insert-left|insert-right|adjacency|incidence|"
                    "incidence-adjoint|vertex-laplacian|edge-laplacian")
        ->required();

    auto* graph = app.add_subcommand("graph", "Emit the order-k de Bruijn graph in dot format");

    auto* hopf = app.add_subcommand("hopf", "Word-algebra calculus");
    hopf->require_subcommand(1);
    std::vector<std::string> hopf_words;
    auto add_words = [&](CLI::App* sub, int count, const char* help) {
        sub->add_option("words", hopf_words, help)->expected(count);
    };
    add_words(hopf->add_subcommand("shuffle", "Shuffle product of two words"), 2, "two words");
    add_words(hopf->add_subcommand("concat", "Concatenation product of two words"), 2,
              "two words");
    add_words(hopf->add_subcommand("deconcat", "All prefix/suffix splits of a word"), 1,
              "one word");
    add_words(hopf->add_subcommand("deshuffle", "All subset/complement splits of a word"), 1,
              "one word");
    add_words(hopf->add_subcommand("antipode", "Signed reversal of a word"), 1, "one word");
    add_words(hopf->add_subcommand("factor", "Primitive factorization of a word"), 1, "one word");
    hopf->add_subcommand("axioms", "Exhaustive desk-scale word-algebra axiom checks");

    // The shared options above live on the root command; let every
    // subcommand pass unmatched options up so "basis all --q 3" parses.
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(basis)) return cmd_basis(opt, basis_space);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(opt, spectrum_kind);
        if (app.got_subcommand(decomp)) return cmd_decompose(opt, decompose_input);
        if (app.got_subcommand(check)) return cmd_check(opt);
        if (app.got_subcommand(mat)) return cmd_materialize(opt, materialize_kind);
        if (app.got_subcommand(graph)) return cmd_graph(opt);
        if (app.got_subcommand(hopf)) {
            if (hopf->got_subcommand("shuffle"))
                return cmd_hopf_product(opt, true, hopf_words.at(0), hopf_words.at(1));
            if (hopf->got_subcommand("concat"))
                return cmd_hopf_product(opt, false, hopf_words.at(0), hopf_words.at(1));
            if (hopf->got_subcommand("deconcat"))
                return cmd_hopf_coproduct(opt, true, hopf_words.at(0));
            if (hopf->got_subcommand("deshuffle"))
                return cmd_hopf_coproduct(opt, false, hopf_words.at(0));
            if (hopf->got_subcommand("antipode")) return cmd_hopf_antipode(opt, hopf_words.at(0));
            if (hopf->got_subcommand("factor")) return cmd_hopf_factor(opt, hopf_words.at(0));
            if (hopf->got_subcommand("axioms")) return cmd_hopf_axioms(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command selected\n";
    return 1;
}
