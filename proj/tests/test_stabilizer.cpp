#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwe/stabilizer.hpp"

using namespace qwe;

TEST_CASE("pauli word parsing") {
    auto w = parse_pauli_word("-YYII");
    CHECK(w.negative);
    CHECK(w.error.str() == "YYII");
    CHECK(parse_pauli_word("+IZ").str() == "IZ");
    CHECK(parse_pauli_word("xzi").str() == "XZI");
    CHECK_THROWS_AS(parse_pauli_word(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pauli_word("XQ"), std::invalid_argument);
}

TEST_CASE("spec parsing with comments and separators") {
    auto spec = parse_stabilizer_spec("# bell pair\nXX\nZZ\n");
    CHECK(spec.generators.size() == 2);
    CHECK(spec.n() == 2);

    auto spec2 = parse_stabilizer_spec("XX, ZZ");
    CHECK(spec2.generators.size() == 2);

    CHECK_THROWS_AS(parse_stabilizer_spec("XX\nZZZ"), std::invalid_argument);
    CHECK_THROWS_AS(parse_stabilizer_spec("   \n# nothing\n"), std::invalid_argument);
}

TEST_CASE("group generation") {
    auto spec = parse_stabilizer_spec("XX\nZZ");
    auto group = stabilizer_group(spec);
    CHECK(group.size() == 4);
    bool has_minus_yy = false;
    for (const auto& g : group) has_minus_yy = has_minus_yy || g.str() == "-YY";
    CHECK(has_minus_yy);
}

TEST_CASE("anticommuting and dependent generators are rejected") {
    CHECK_THROWS_WITH_AS(static_cast<void>(stabilizer_group(parse_stabilizer_spec("XI\nZI"))),
                         doctest::Contains("anticommute"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(static_cast<void>(stabilizer_group(parse_stabilizer_spec("XX\nZZ\n-YY"))),
                         doctest::Contains("dependent"), std::invalid_argument);
    // -I in the group: generators consistent only as signs
    CHECK_THROWS_AS(static_cast<void>(stabilizer_group(parse_stabilizer_spec("XX\n-XX"))),
                    std::invalid_argument);
}

TEST_CASE("bell projector from generators") {
    auto p = stabilizer_projector(parse_stabilizer_spec("XX\nZZ"));
    CHECK(p.mat.is_projector());
    CHECK(p.mat.trace() == GRat(1));
    CHECK(p.mat(0, 3) == GRat(Rational(1, 2)));
    CHECK(p.mat(1, 1) == GRat(0));
}

TEST_CASE("codeword extraction reproduces the projector") {
    for (const char* text : {"XX\nZZ", "XZZXI\nIXZZX\nXIXZZ\nZXIXZ",
                             "XXXX\nZZZZ"}) {
        auto code = parse_stabilizer(text);
        code.validate();
        auto spec = parse_stabilizer_spec(text);
        auto p = stabilizer_projector(spec);
        CHECK(code.projector().mat == p.mat);
        long expected = 1;
        for (int i = 0; i < code.fact.n() - static_cast<int>(spec.generators.size()); ++i)
            expected *= 2;
        CHECK(code.dim_code() == expected);
    }
}

TEST_CASE("negative signs change the code space") {
    auto plus = parse_stabilizer("ZZ");
    auto minus = parse_stabilizer("-ZZ");
    CHECK(plus.dim_code() == 2);
    CHECK(minus.dim_code() == 2);
    // spaces are orthogonal: P+ P- = 0
    auto prod = plus.projector().mat * minus.projector().mat;
    CHECK(prod == Matrix<GRat>(4, 4));
}

TEST_CASE("builtin codes") {
    auto bell = builtin_code("bell");
    CHECK(bell.fact.n() == 2);
    CHECK(bell.dim_code() == 1);

    auto c422 = builtin_code("[[4,2,2]]");
    CHECK(c422.fact.n() == 4);
    CHECK(c422.dim_code() == 4);
    CHECK(builtin_code("422").projector().mat == c422.projector().mat);

    auto c513 = builtin_code("[[5,1,3]]");
    CHECK(c513.fact.n() == 5);
    CHECK(c513.dim_code() == 2);

    CHECK_THROWS_AS(builtin_code("nope"), std::invalid_argument);
}

TEST_CASE("builtin encoders validate as isometries") {
    auto id = builtin_encoder("identity");
    id.validate();
    CHECK(id.block_fact.total_dim() == 2);
    CHECK(id.mat.rows() == 2);

    auto enc = builtin_encoder("[[5,1,3]]");
    enc.validate();
    CHECK(enc.block_fact.n() == 5);
    CHECK(enc.mat.rows() == 32);
    CHECK(enc.mat.cols() == 2);

    CHECK_THROWS_AS(builtin_encoder("nope"), std::invalid_argument);
}

TEST_CASE("five qubit encoder image lies in the code space") {
    auto enc = builtin_encoder("[[5,1,3]]");
    auto code = builtin_code("513");
    auto p = code.projector();
    // P E = E
    CHECK(p.mat * enc.mat == enc.mat);
}
