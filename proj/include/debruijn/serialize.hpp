#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "debruijn/operators.hpp"
#include "debruijn/spectral.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

enum class BasisSpace { cycle, cut, all };
const char* to_string(BasisSpace space);
BasisSpace parse_basis_space(const std::string& name);

enum class ExportFormat { json, csv, mm, dot };
const char* to_string(ExportFormat format);
ExportFormat parse_export_format(const std::string& name);

// Shortest text that round-trips the double exactly (17 significant
// digits); used for every real emitted by the exporters so identical
// invocations produce byte-identical files.
std::string format_real(double value);

// Collects the requested basis blocks in their deterministic order.
std::vector<BasisElement> basis_elements(int q, int k, BasisSpace space);

// JSON schema:
// { "q": int, "k": int, "frame": "fourier", "elements": [
//   { "kind": "cycle"|"cut", "i": int, "j": int, "h": int,
//     "x_word": [ints], "eigenvalue": real,
//     "coeffs": [ { "index": int, "re": real, "im": real } ] } ] }
// Coefficients with magnitude below 1e-12 are omitted.
std::string basis_json(int q, int k, const std::vector<BasisElement>& elements);

// CSV: header then one row per element;
// columns kind,i,j,h,x_word,eigenvalue,coeffs with the x_word letters
// joined by '.' and coeffs as ';'-separated index:re:im triples.
std::string basis_csv(const std::vector<BasisElement>& elements);

void export_basis(const std::filesystem::path& path, int q, int k, BasisSpace space,
                  ExportFormat format);

struct ImportedBasis {
    int q = 0;
    int k = 0;
    std::vector<BasisElement> elements;
};
ImportedBasis import_basis_json(const std::filesystem::path& path);

// Matrix exports. mm is coordinate text: a "rows cols nnz" header line and
// one "row col re im" line (0-based) per exactly-nonzero entry, row-major.
// csv carries the same entries as "row,col,re,im" rows under a header.
std::string matrix_mm(const DenseMatrix& m);
std::string matrix_csv(const DenseMatrix& m);
std::string matrix_json(const DenseMatrix& m);
void export_matrix(const std::filesystem::path& path, const DenseMatrix& m, ExportFormat format);

// Graphviz digraph of the order-k de Bruijn graph: one edge per k-mer,
// labeled with the edge word, vertices labeled with (k-1)-mer glyphs.
std::string graph_dot(int k, const Alphabet& alphabet, Index dense_limit = kDefaultDenseLimit);

// Writes via a temp file in the target directory plus rename, so partial
// output is never observed at the final path.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace debruijn
