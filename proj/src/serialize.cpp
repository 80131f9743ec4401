#include "debruijn/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace debruijn {

const char* to_string(BasisSpace space) {
    switch (space) {
        case BasisSpace::cycle: return "cycle";
        case BasisSpace::cut: return "cut";
        case BasisSpace::all: return "all";
    }
    return "?";
}

BasisSpace parse_basis_space(const std::string& name) {
    if (name == "cycle") return BasisSpace::cycle;
    if (name == "cut") return BasisSpace::cut;
    if (name == "all") return BasisSpace::all;
    throw DomainError("unknown basis space: " + name);
}

const char* to_string(ExportFormat format) {
    switch (format) {
        case ExportFormat::json: return "json";
        case ExportFormat::csv: return "csv";
        case ExportFormat::mm: return "mm";
        case ExportFormat::dot: return "dot";
    }
    return "?";
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::json;
    if (name == "csv") return ExportFormat::csv;
    if (name == "mm") return ExportFormat::mm;
    if (name == "dot") return ExportFormat::dot;
    throw DomainError("unknown export format: " + name);
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<BasisElement> basis_elements(int q, int k, BasisSpace space) {
    switch (space) {
        case BasisSpace::cycle: return cycle_basis(q, k);
        case BasisSpace::cut: return cut_basis(q, k);
        case BasisSpace::all: return full_basis(q, k);
    }
    throw DomainError("basis_elements: unknown space");
}

namespace {

constexpr double kCoeffExportTol = 1e-12;

void append_word(std::string& out, const Word& w) {
    out += '[';
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) out += ',';
        out += std::to_string(w[p]);
    }
    out += ']';
}

} // namespace

std::string basis_json(int q, int k, const std::vector<BasisElement>& elements) {
    // Hand-rolled writer: emits reals at full 17-digit precision with a
    // fixed field order, which keeps identical invocations byte-identical.
    std::string out;
    out += "{\n";
    out += "  \"q\": " + std::to_string(q) + ",\n";
    out += "  \"k\": " + std::to_string(k) + ",\n";
    out += "  \"frame\": \"fourier\",\n";
    out += "  \"elements\": [";
    for (std::size_t e = 0; e < elements.size(); ++e) {
        const BasisElement& el = elements[e];
        out += e ? ",\n    {" : "\n    {";
        out += "\"kind\": \"";
        out += to_string(el.kind);
        out += "\", \"i\": " + std::to_string(el.i) + ", \"j\": " + std::to_string(el.j) +
               ", \"h\": " + std::to_string(el.h);
        out += ", \"x_word\": ";
        append_word(out, el.x);
        out += ", \"eigenvalue\": " + format_real(el.eigenvalue);
        out += ", \"coeffs\": [";
        bool first = true;
        for (const auto& [index, value] : el.coeffs) {
            if (std::abs(value) < kCoeffExportTol) continue;
            if (!first) out += ", ";
            first = false;
            out += "{\"index\": " + std::to_string(index) + ", \"re\": " + format_real(value.real()) +
                   ", \"im\": " + format_real(value.imag()) + "}";
        }
        out += "]}";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string basis_csv(const std::vector<BasisElement>& elements) {
    std::string out = "kind,i,j,h,x_word,eigenvalue,coeffs\n";
    for (const BasisElement& el : elements) {
        out += to_string(el.kind);
        out += ',' + std::to_string(el.i) + ',' + std::to_string(el.j) + ',' +
               std::to_string(el.h) + ',';
        for (std::size_t p = 0; p < el.x.size(); ++p) {
            if (p) out += '.';
            out += std::to_string(el.x[p]);
        }
        out += ',' + format_real(el.eigenvalue) + ',';
        bool first = true;
        for (const auto& [index, value] : el.coeffs) {
            if (std::abs(value) < kCoeffExportTol) continue;
            if (!first) out += ';';
            first = false;
            out += std::to_string(index) + ':' + format_real(value.real()) + ':' +
                   format_real(value.imag());
        }
        out += '\n';
    }
    return out;
}

void export_basis(const std::filesystem::path& path, int q, int k, BasisSpace space,
                  ExportFormat format) {
    const std::vector<BasisElement> elements = basis_elements(q, k, space);
    std::string content;
    switch (format) {
        case ExportFormat::json:
            content = basis_json(q, k, elements);
            break;
        case ExportFormat::csv:
            content = basis_csv(elements);
            break;
        default:
            throw DomainError(std::string("export_basis: unsupported format ") + to_string(format));
    }
    write_file_atomic(path, content);
}

ImportedBasis import_basis_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("import_basis_json: cannot open " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("import_basis_json: " + std::string(e.what()));
    }
    try {
        ImportedBasis basis;
        basis.q = doc.at("q").get<int>();
        basis.k = doc.at("k").get<int>();
        for (const auto& jel : doc.at("elements")) {
            BasisElement el;
            el.kind = parse_basis_kind(jel.at("kind").get<std::string>());
            el.i = jel.at("i").get<int>();
            el.j = jel.at("j").get<int>();
            el.h = jel.at("h").get<int>();
            for (const auto& letter : jel.at("x_word")) el.x.push_back(letter.get<Letter>());
            el.eigenvalue = jel.at("eigenvalue").get<double>();
            el.q = basis.q;
            el.k = basis.k;
            el.scale = 1.0; // the schema stores unit-norm coefficients only
            for (const auto& jc : jel.at("coeffs"))
                el.coeffs.emplace_back(jc.at("index").get<Index>(),
                                       Complex(jc.at("re").get<double>(), jc.at("im").get<double>()));
            basis.elements.push_back(std::move(el));
        }
        return basis;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("import_basis_json: malformed basis file: " + std::string(e.what()));
    }
}

namespace {

std::string matrix_entries(const DenseMatrix& m, char sep, bool with_header_names) {
    std::string body;
    Index nnz = 0;
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r)
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            const Complex v = m.entries(r, c);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            ++nnz;
            body += std::to_string(r);
            body += sep;
            body += std::to_string(c);
            body += sep;
            body += format_real(v.real());
            body += sep;
            body += format_real(v.imag());
            body += '\n';
        }
    std::string out;
    if (with_header_names)
        out = "row,col,re,im\n";
    else
        out = std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + ' ' +
              std::to_string(nnz) + '\n';
    out += body;
    return out;
}

} // namespace

std::string matrix_mm(const DenseMatrix& m) { return matrix_entries(m, ' ', false); }

std::string matrix_csv(const DenseMatrix& m) { return matrix_entries(m, ',', true); }

std::string matrix_json(const DenseMatrix& m) {
    std::string out = "{\n";
    out += "  \"rows\": " + std::to_string(m.rows()) + ",\n";
    out += "  \"cols\": " + std::to_string(m.cols()) + ",\n";
    out += "  \"normalization\": \"" + std::string(to_string(m.normalization)) + "\",\n";
    out += "  \"entries\": [";
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        out += r ? ",\n    [" : "\n    [";
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            if (c) out += ", ";
            const Complex v = m.entries(r, c);
            out += "{\"re\": " + format_real(v.real()) + ", \"im\": " + format_real(v.imag()) + "}";
        }
        out += ']';
    }
    out += "\n  ]\n}\n";
    return out;
}

void export_matrix(const std::filesystem::path& path, const DenseMatrix& m, ExportFormat format) {
    switch (format) {
        case ExportFormat::mm:
            write_file_atomic(path, matrix_mm(m));
            return;
        case ExportFormat::csv:
            write_file_atomic(path, matrix_csv(m));
            return;
        case ExportFormat::json:
            write_file_atomic(path, matrix_json(m));
            return;
        default:
            throw DomainError("export_matrix: unsupported format dot");
    }
}

std::string graph_dot(int k, const Alphabet& alphabet, Index dense_limit) {
    const int q = alphabet.q();
    std::string out = "digraph debruijn {\n";
    out += "  // order " + std::to_string(k) + ", alphabet \"" + alphabet.glyphs() + "\"\n";
    for (const DeBruijnEdge& e : debruijn_edges(k, q, dense_limit)) {
        out += "  \"" + alphabet.format(e.source) + "\" -> \"" + alphabet.format(e.target) +
               "\" [label=\"" + alphabet.format(e.edge) + "\"];\n";
    }
    out += "}\n";
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec); // best effort; open reports failure
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

} // namespace debruijn
