#include "qwe/stabilizer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qwe {
namespace {

// product of single-qubit Paulis: a*b = i^k * c
struct LetterProduct {
    PauliLetter letter;
    int phase;  // power of i, mod 4
};

LetterProduct letter_mul(PauliLetter a, PauliLetter b) {
    if (a == PauliLetter::I) return {b, 0};
    if (b == PauliLetter::I) return {a, 0};
    if (a == b) return {PauliLetter::I, 0};
    // cyclic: X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order flips the sign
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    PauliLetter c = static_cast<PauliLetter>(6 - ia - ib);
    bool forward = (ib - ia + 3) % 3 == 1;
    return {c, forward ? 1 : 3};
}

bool commutes(const PauliError& a, const PauliError& b) {
    int anti = 0;
    for (int i = 0; i < a.n(); ++i) {
        PauliLetter la = a.letters[i], lb = b.letters[i];
        if (la != PauliLetter::I && lb != PauliLetter::I && la != lb) ++anti;
    }
    return anti % 2 == 0;
}

}  // namespace

SignedPauli parse_pauli_word(const std::string& text) {
    SignedPauli out;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        out.negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("empty Pauli word");
    for (; pos < text.size(); ++pos)
        out.error.letters.push_back(
            letter_from_char(static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])))));
    return out;
}

StabilizerSpec parse_stabilizer_spec(const std::string& text) {
    StabilizerSpec spec;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            spec.generators.push_back(parse_pauli_word(token));
            token.clear();
        }
    };
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        if (comment) continue;
        if (c == '\n' || c == ',' || c == ' ' || c == '\t' || c == '\r')
            flush();
        else
            token += c;
    }
    flush();
    if (spec.generators.empty()) throw std::invalid_argument("no stabilizer generators given");
    for (const auto& g : spec.generators)
        if (g.error.n() != spec.n())
            throw std::invalid_argument("generators have unequal lengths (" + g.str() + ")");
    return spec;
}

std::vector<SignedPauli> stabilizer_group(const StabilizerSpec& spec) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i)
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j)
            if (!commutes(spec.generators[i].error, spec.generators[j].error))
                throw std::invalid_argument("generators anticommute: " + spec.generators[i].str() +
                                            " vs " + spec.generators[j].str());

    struct Element {
        PauliError error;
        int phase;  // power of i mod 4; must end up 0 or 2
    };
    std::vector<Element> elements;
    Element identity;
    identity.error.letters.assign(spec.n(), PauliLetter::I);
    identity.phase = 0;
    elements.push_back(identity);
    for (const auto& gen : spec.generators) {
        std::size_t count = elements.size();
        for (std::size_t k = 0; k < count; ++k) {
            Element prod;
            prod.phase = elements[k].phase + (gen.negative ? 2 : 0);
            prod.error.letters.resize(spec.n());
            for (int q = 0; q < spec.n(); ++q) {
                auto lp = letter_mul(elements[k].error.letters[q], gen.error.letters[q]);
                prod.error.letters[q] = lp.letter;
                prod.phase += lp.phase;
            }
            prod.phase %= 4;
            elements.push_back(std::move(prod));
        }
    }
    std::map<std::string, int> seen;
    for (const auto& e : elements) {
        if (e.phase % 2 != 0)
            throw std::invalid_argument("stabilizer group closed with imaginary phase; generators invalid");
        auto [it, fresh] = seen.emplace(e.error.str(), e.phase);
        if (!fresh) {
            if (it->second != e.phase)
                throw std::invalid_argument("generators produce -1 in the group (dependent with sign clash)");
            throw std::invalid_argument("dependent generator set: word " + e.error.str() +
                                        " produced twice");
        }
    }
    std::vector<SignedPauli> out;
    out.reserve(elements.size());
    for (auto& e : elements) out.push_back({e.phase == 2, std::move(e.error)});
    return out;
}

Op<GRat> stabilizer_projector(const StabilizerSpec& spec) {
    auto group = stabilizer_group(spec);
    Factorization fact(std::vector<int>(spec.n(), 2));
    long dim = fact.total_dim();
    Matrix<GRat> p(dim, dim);
    GRat inv(Rational(1, static_cast<long>(group.size())));
    for (const auto& el : group) {
        for (long b = 0; b < dim; ++b) {
            long img;
            GRat ph;
            el.error.column_action(b, fact, img, ph);
            if (el.negative) ph = -ph;
            p(img, b) += ph * inv;
        }
    }
    return Op<GRat>(fact, std::move(p));
}

CodeStates<GRat> parse_stabilizer(const std::string& text) {
    auto spec = parse_stabilizer_spec(text);
    auto proj = stabilizer_projector(spec);
    long rank = 1L << (spec.n() - static_cast<long>(spec.generators.size()));
    auto code = codewords_from_projector(proj, rank);
    code.validate();
    return code;
}

CodeStates<GRat> builtin_code(const std::string& name) {
    if (name == "bell") {
        CodeStates<GRat> code;
        code.fact = Factorization({2, 2});
        std::vector<GRat> v(4);
        v[0] = GRat(1);
        v[3] = GRat(1);
        code.columns.push_back(std::move(v));
        code.norm2.push_back(Rational(2));
        return code;
    }
    if (name == "[[4,2,2]]" || name == "422") return parse_stabilizer("XXXX\nZZZZ");
    if (name == "[[5,1,3]]" || name == "513")
        return parse_stabilizer("XZZXI\nIXZZX\nXIXZZ\nZXIXZ");
    throw std::invalid_argument("unknown built-in code: " + name);
}

Isometry<GRat> builtin_encoder(const std::string& name) {
    if (name == "identity") {
        Isometry<GRat> iso;
        iso.block_fact = Factorization({2});
        iso.mat = Matrix<GRat>::identity(2);
        return iso;
    }
    if (name == "[[5,1,3]]" || name == "513") {
        // |0L> = 4 P|00000>, |1L> = X^5 |0L>
        auto proj = stabilizer_projector(parse_stabilizer_spec("XZZXI\nIXZZX\nXIXZZ\nZXIXZ"));
        long dim = proj.fact.total_dim();
        Matrix<GRat> enc(dim, 2);
        for (long r = 0; r < dim; ++r) enc(r, 0) = proj.mat(r, 0) * GRat(4);
        PauliError flip;
        flip.letters.assign(5, PauliLetter::X);
        for (long b = 0; b < dim; ++b) {
            long img;
            GRat ph;
            flip.column_action(b, proj.fact, img, ph);
            enc(img, 1) = ph * enc(b, 0);
        }
        Isometry<GRat> iso;
        iso.block_fact = proj.fact;
        iso.mat = std::move(enc);
        iso.validate();
        return iso;
    }
    throw std::invalid_argument("no built-in encoder named: " + name);
}

}  // namespace qwe
