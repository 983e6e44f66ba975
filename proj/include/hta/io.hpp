#pragma once

#include "hta/periods.hpp"
#include "hta/words.hpp"

#include <string>

namespace hta {

// Built-in algebra names: laurent, de_rham, polylog, crys, phi_line, st, free_xy, plain:a,b,...
AlgPtr builtin_algebra(const std::string& name);
bool is_builtin_algebra(const std::string& name);
// A built-in name, or else a path to an algebra file.
AlgPtr resolve_algebra(const std::string& ref);

// Algebra file, one directive per line, '#' starts a comment:
//   mode plain|dg|phi|phi_dg
//   commutative true|false
//   symbol <name> [deg <k>] [phi <k>] [invertible]
//   d <name> = <expr>
AlgPtr parse_algebra(const std::string& text);
std::string render_algebra(const Algebra& alg);

// Word combinations: terms like 2/3*[x*t^-1 | t] separated by + and -. Slots are
// element expressions, expanded multilinearly; [] is the empty word.
HopfElement parse_words(const AlgPtr& alg, const std::string& src, bool coset = true, int line = 1, int col0 = 1);

struct WordFile {
    std::string algebra; // reference as written, may be empty
    HopfElement value;
};
// Optional "algebra <ref>" and "raw" lines, then the combination (may span lines).
WordFile parse_word_file(const std::string& text, const AlgPtr& fallback);
std::string render_word_file(const WordFile& w);

// Matrix file:
//   algebra <ref>              (optional)
//   weights <n>
//   blocks <d0> ... <dn>
//   entry <q> <p> <row> <col> = <expr>
//   v0 = <rationals>           (default: first basis vector)
//   fn = <rationals>
// Diagonal entries may be given but must match t^p * Id.
struct MatrixFile {
    std::string algebra;
    FramedHTMatrix h;
};
MatrixFile parse_matrix_file(const std::string& text, const AlgPtr& fallback);
std::string render_matrix_file(const MatrixFile& m);

std::string read_file(const std::string& path);

} // namespace hta
