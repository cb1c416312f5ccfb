#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fhsforge/error.hpp"
#include "fhsforge/io.hpp"

using namespace fhsforge;

namespace {

FhsSet small_set()
{
    // Deliberately unsorted.
    std::vector<FhsSequence> seqs = {{{2, 0, 1}}, {{0, 0, 1}}, {{1, 2, 2}}};
    return FhsSet(3, std::move(seqs), Provenance{"B", 3, 0, 3});
}

ErrorKind kind_of(const Json& j)
{
    try {
        fhs_set_from_json(j);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("FHS set round trip")
{
    auto set = small_set();
    set.record_lambda(max_nontrivial(set));
    const auto j = to_json(set);
    CHECK(j["n"] == 3);
    CHECK(j["ell"] == 3);
    CHECK(j["N"] == 3);
    CHECK(j["lambda"] == *set.lambda());
    CHECK(j["provenance"]["family"] == "B");
    CHECK(j["sequences"] == Json::parse("[[0,0,1],[1,2,2],[2,0,1]]"));

    const auto back = fhs_set_from_json(Json::parse(dump(j)));
    CHECK(back.length() == 3);
    CHECK(back.alphabet_size() == 3);
    CHECK(back.lambda() == set.lambda());
    CHECK(back.provenance() == set.provenance());
    CHECK(to_json(back) == j);

    CHECK(to_csv(set) == "0,0,1\n1,2,2\n2,0,1\n");
    CHECK(to_json(small_set())["lambda"].is_null());
}

TEST_CASE("malformed FHS documents")
{
    const auto good = to_json(small_set());
    CHECK(kind_of(Json::array()) == ErrorKind::ParseError);
    auto j = good;
    j.erase("sequences");
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["ell"] = -3;
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["sequences"][0][0] = "x";
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["N"] = 7;
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["n"] = 4;
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["lambda"] = 1.5;
    CHECK(kind_of(j) == ErrorKind::ParseError);
    j = good;
    j["provenance"] = 5;
    CHECK(kind_of(j) == ErrorKind::ParseError);

    // Structurally fine but not a valid set: symbol out of range.
    j = good;
    j["sequences"][0][0] = 9;
    CHECK(kind_of(j) != ErrorKind::ParseError);

    CHECK_THROWS_AS(read_fhs_set("/nonexistent/fhs.json"), Error);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/out.json", "x"), Error);
}

TEST_CASE("big integers")
{
    CHECK(big_to_json(BigInt(42)) == 42);
    const BigInt huge = BigInt(1) << 70;
    CHECK(big_to_json(huge) == "1180591620717411303424");
    CHECK(big_from_json(big_to_json(huge)) == huge);
    CHECK(big_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(big_from_json(Json("12a")), Error);
}

TEST_CASE("bound report")
{
    const auto j = to_json(optimality_report(26, 600, 25, 2, true));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"n", "N", "ell", "lambda", "lambda_verified", "I", "J", "pf1", "pf2",
                      "singleton_max_N", "sphere_max_N", "meets"});
    CHECK(j["N"] == "600");
    CHECK(j["I"] == "624");
    CHECK(j["J"] == "0");
    CHECK(j["pf2"] == "2");
    CHECK(j["singleton_max_N"] == "600");
    CHECK(j["meets"]["peng_fan"] == true);
    CHECK(j["meets"]["singleton"] == true);

    const auto none = to_json(optimality_report(3, 2, 2, 3, false));
    CHECK(none["singleton_max_N"].is_null());
}

TEST_CASE("instance documents")
{
    const auto a = to_json(build_family(family_a_params(3, 1)));
    CHECK(a["family"] == "A");
    CHECK(a["q"] == 8);
    CHECK(a["m"] == 3);
    CHECK(a["n"] == 9);
    CHECK(a["k"] == 1);
    CHECK(a["p"] == 3);
    CHECK_FALSE(a.contains("M"));
    CHECK(a["claimed"]["N"] == 56);
    CHECK(a["claimed"]["lambda"] == 2);
    CHECK(a["verified"]["class_count"] == true);
    CHECK(a["verified"]["correlation"] == "exhaustive");
    CHECK(a["verified"]["lambda"] == 2);
    CHECK(a["verified"]["min_distance"] == 7);

    VerificationPolicy params_only;
    params_only.params_only = true;
    const auto c = to_json(build_family(family_c_params(32, 11, 0), params_only));
    CHECK(c["family"] == "C");
    CHECK(c["M"] == 0);
    CHECK(c["claimed"]["N"] == 93);
    CHECK(c["verified"]["materialized"] == false);
    CHECK(c["verified"]["correlation"] == "none");
    CHECK_FALSE(c["verified"].contains("lambda"));

    // Claimed sizes beyond 64 bits become strings.
    const auto big = to_json(build_family(family_a_params(8, 5), params_only));
    CHECK(big["claimed"]["N"].is_string());
}

TEST_CASE("pretty printer")
{
    const Json j = Json::parse(R"({"a": [1, 2], "b": {"c": []}, "d": [[1], [2]]})");
    CHECK(dump(j) == "{\n  \"a\": [1, 2],\n  \"b\": {\n    \"c\": []\n  },\n  \"d\": [\n    [1],\n    [2]\n  ]\n}\n");
    CHECK(Json::parse(dump(j)) == j);
}
