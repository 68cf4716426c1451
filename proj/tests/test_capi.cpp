#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "qwe.h"

using Json = nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { qwe_string_free(p); }
    Json json() const { return Json::parse(std::string(p ? p : "null")); }
};

struct Code {
    qwe_code* p = nullptr;
    ~Code() { qwe_code_free(p); }
};

struct Operator {
    qwe_operator* p = nullptr;
    ~Operator() { qwe_operator_free(p); }
};

const char* kBellOperator = R"({
  "dims": [2, 2],
  "entries": [
    ["1/2","0"], ["0","0"], ["0","0"], ["1/2","0"],
    ["0","0"],  ["0","0"], ["0","0"], ["0","0"],
    ["0","0"],  ["0","0"], ["0","0"], ["0","0"],
    ["1/2","0"], ["0","0"], ["0","0"], ["1/2","0"]
  ]
})";

}  // namespace

TEST_CASE("version and error text") {
    CHECK(qwe_version() != nullptr);
    Code c;
    CHECK(qwe_code_builtin("no-such-code", &c.p) == QWE_ERR_CONTRACT);
    CHECK(std::strlen(qwe_last_error()) > 0);
}

TEST_CASE("builtin code report") {
    Code c;
    REQUIRE(qwe_code_builtin("[[5,1,3]]", &c.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_code_report(c.p, 0, &rep.p) == QWE_OK);
    Json j = rep.json();
    CHECK(j["n"] == 5);
    CHECK(j["K"] == 2);
    CHECK(j["distance"] == 3);
    CHECK(j["pure"] == true);
    CHECK(j["backend"] == "exact");
    CHECK(j["weights"]["A"] == Json({"4", "0", "0", "0", "60", "0"}));
    CHECK(j["weights"]["B"] == Json({"2", "0", "0", "60", "30", "36"}));
}

TEST_CASE("stabilizer text round trip") {
    Code c;
    REQUIRE(qwe_code_from_stabilizer("XX\nZZ\n", &c.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_code_distance(c.p, 0, &rep.p) == QWE_OK);
    Json j = rep.json();
    CHECK(j["d"] == 2);
    CHECK(j["K"] == 1);
    CHECK(j["pure"] == true);

    Code bad;
    CHECK(qwe_code_from_stabilizer("XI\nZI\n", &bad.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("vectors json ingestion") {
    const char* doc = R"({
      "dims": [2, 2],
      "vectors": [[["1","0"], ["0","0"], ["0","0"], ["1","0"]]]
    })";
    Code c;
    REQUIRE(qwe_code_from_vectors_json(doc, &c.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_code_report(c.p, 0, &rep.p) == QWE_OK);
    Json j = rep.json();
    CHECK(j["polynomials"]["Aprime"] == Json({"1", "1", "1"}));
    CHECK(j["backend"] == "exact");

    Code bad;
    CHECK(qwe_code_from_vectors_json("{\"dims\":[2]}", &bad.p) == QWE_ERR_CONTRACT);
    CHECK(qwe_code_from_vectors_json("not json", &bad.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("erasures endpoint") {
    Code c;
    REQUIRE(qwe_code_builtin("513", &c.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_code_erasures(c.p, 3, 0, &rep.p) == QWE_OK);
    Json j = rep.json();
    int correctable_pairs = 0;
    for (const auto& s : j["correctable"])
        if (s.size() == 2) ++correctable_pairs;
    CHECK(correctable_pairs == 10);
    for (const auto& s : j["uncorrectable"]) CHECK(s.size() == 3);

    CHECK(qwe_code_erasures(c.p, 9, 0, &rep.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("construction endpoints") {
    Code c513;
    REQUIRE(qwe_code_builtin("513", &c513.p) == QWE_OK);

    Code shorter;
    REQUIRE(qwe_code_shorten(c513.p, 1, &shorter.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_code_distance(shorter.p, 0, &rep.p) == QWE_OK);
    Json j = rep.json();
    CHECK(j["n"] == 4);
    CHECK(j["K"] == 4);
    CHECK(j["d"] == 2);

    Code longer;
    REQUIRE(qwe_code_extend(c513.p, &longer.p) == QWE_OK);
    Str rep2;
    REQUIRE(qwe_code_distance(longer.p, 0, &rep2.p) == QWE_OK);
    CHECK(rep2.json()["d"] == 4);

    Code bell, big;
    REQUIRE(qwe_code_builtin("bell", &bell.p) == QWE_OK);
    REQUIRE(qwe_code_concat(bell.p, "[[5,1,3]]", &big.p) == QWE_OK);
    Str rep3;
    REQUIRE(qwe_code_distance(big.p, 0, &rep3.p) == QWE_OK);
    CHECK(rep3.json()["n"] == 10);

    Code fail;
    CHECK(qwe_code_shorten(bell.p, 3, &fail.p) == QWE_ERR_CONTRACT);
    CHECK(qwe_code_extend(bell.p, &fail.p) == QWE_ERR_CONTRACT);
    CHECK(qwe_code_concat(bell.p, "no-such-encoder", &fail.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("operator pair enumeration") {
    Operator m;
    REQUIRE(qwe_operator_from_json(kBellOperator, &m.p) == QWE_OK);
    Str rep;
    REQUIRE(qwe_pair_enumerate(m.p, m.p, &rep.p) == QWE_OK);
    Json j = rep.json();
    CHECK(j["backend"] == "exact");
    CHECK(j["weights"]["A"] == Json({"1", "0", "3"}));
    CHECK(j["subsets"]["Aprime"]["[1]"] == "1/2");

    Operator bad;
    CHECK(qwe_operator_from_json("{\"dims\":[2],\"entries\":[[1,0]]}", &bad.p) ==
          QWE_ERR_CONTRACT);
}

TEST_CASE("transforms") {
    Str out;
    REQUIRE(qwe_transform("1,0,3", 2, "to-primed", &out.p) == QWE_OK);
    CHECK(std::string(out.p) == "1,1,1");

    Str out2;
    REQUIRE(qwe_transform("1,1,1", 2, "shadow", &out2.p) == QWE_OK);
    CHECK(std::string(out2.p) == "1,0,3");

    Str out3;
    REQUIRE(qwe_transform("4,0,0,0,60,0", 2, "macwilliams", &out3.p) == QWE_OK);
    CHECK(std::string(out3.p) == "2,0,0,60,30,36");

    Str bad;
    CHECK(qwe_transform("1,2", 2, "nope", &bad.p) == QWE_ERR_CONTRACT);
    CHECK(qwe_transform("", 2, "shadow", &bad.p) == QWE_ERR_CONTRACT);
    CHECK(qwe_transform("1,x", 2, "shadow", &bad.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("fuzz endpoint") {
    Str out;
    REQUIRE(qwe_fuzz_shadow(2, 2, 25, 99, &out.p) == QWE_OK);
    Json j = out.json();
    REQUIRE(j.is_array());
    CHECK(j.size() == 25u);
    for (const auto& rec : j) {
        CHECK(rec.contains("min_shadow"));
        CHECK(rec["exact_violation"] == false);
    }
    Str bad;
    CHECK(qwe_fuzz_shadow(9, 2, 5, 1, &bad.p) == QWE_ERR_CONTRACT);
}

TEST_CASE("haar endpoint") {
    Operator m;
    REQUIRE(qwe_operator_from_json(kBellOperator, &m.p) == QWE_OK);
    int subset[] = {1};
    Str out;
    REQUIRE(qwe_haar_check(m.p, m.p, subset, 1, "Bprime", 2000, 5, &out.p) == QWE_OK);
    Json j = out.json();
    CHECK(j["exact"].get<double>() == doctest::Approx(0.5));
    CHECK(j["sigma_distance"].get<double>() < 5.0);

    Str bad;
    CHECK(qwe_haar_check(m.p, m.p, subset, 1, "Cprime", 100, 5, &bad.p) == QWE_ERR_CONTRACT);
}
