#pragma once

#include <string>
#include <vector>

#include "qwe/constructions.hpp"
#include "qwe/pauli.hpp"

namespace qwe {

struct SignedPauli {
    bool negative = false;
    PauliError error;

    std::string str() const { return (negative ? "-" : "") + error.str(); }
};

/// "XZZXI" / "-YYII" / "+IZ"; one word, optional leading sign.
SignedPauli parse_pauli_word(const std::string& text);

/// Stabilizer generator list: one generator per line (commas also accepted
/// as separators), '#' starts a comment.
struct StabilizerSpec {
    std::vector<SignedPauli> generators;
    int n() const { return generators.empty() ? 0 : generators[0].error.n(); }
};

StabilizerSpec parse_stabilizer_spec(const std::string& text);

/// Signed group elements generated by the list; size 2^g for g independent
/// commuting generators.  Throws naming the offending pair/generator on
/// anticommutation or dependence.
std::vector<SignedPauli> stabilizer_group(const StabilizerSpec& spec);

/// Exact projector P = 2^{-g} sum of the signed group elements.
Op<GRat> stabilizer_projector(const StabilizerSpec& spec);

/// Orthogonal codeword basis of the stabilizer code, rank 2^{n-g}.
CodeStates<GRat> parse_stabilizer(const std::string& text);

/// Built-in named codes: "bell", "[[4,2,2]]" (alias "422"),
/// "[[5,1,3]]" (alias "513").
CodeStates<GRat> builtin_code(const std::string& name);

/// Canonical encoder isometry for a built-in code with exactly representable
/// unit codewords ("[[5,1,3]]"; "identity" gives the trivial 1-factor
/// qubit encoder).
Isometry<GRat> builtin_encoder(const std::string& name);

}  // namespace qwe
