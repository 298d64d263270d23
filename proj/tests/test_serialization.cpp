#include <catch2/catch_amalgamated.hpp>

#include "tlwg/jones_wenzl.hpp"
#include "tlwg/serialization.hpp"

using namespace tlwg;

TEST_CASE("element serialization", "[json]") {
    const auto q2 = jw_wenzl_recursion(2);
    REQUIRE(to_json(q2).dump() ==
            R"({"k":2,"terms":[{"pairing":"{1,2}{3,4}","num":"-1","den":"d"},)"
            R"({"pairing":"{1,4}{2,3}","num":"1","den":"1"}]})");

    REQUIRE(to_json(tl_element(2)).dump() == R"({"k":2,"terms":[]})");
}

TEST_CASE("expansion serialization", "[json]") {
    const auto s = laurent_series(parse_pairing("{1,2}"), parse_pairing("{1,2}"), 2);
    REQUIRE(to_json(s).dump() ==
            R"({"k":1,"p":"{1,2}","q":"{1,2}","sign":1,"L":1,"m":["1","0","0"]})");

    const auto mixed =
        laurent_series(parse_pairing("{1,2}{3,4}"), parse_pairing("{1,4}{2,3}"), 1);
    REQUIRE(to_json(mixed).dump() ==
            R"({"k":2,"p":"{1,2}{3,4}","q":"{1,4}{2,3}","sign":-1,"L":3,"m":["1","1"]})");
}

TEST_CASE("matrix serialization", "[json]") {
    REQUIRE(to_json(weingarten_numeric(1, big_rational(3))).dump() ==
            R"({"k":1,"mode":"numeric","d":"3","ordering":["{1,2}"],"entries":[["1/3"]]})");

    REQUIRE(to_json(weingarten_symbolic(2)).dump() ==
            R"js({"k":2,"mode":"symbolic","ordering":["{1,2}{3,4}","{1,4}{2,3}"],)js"
            R"js("entries":[["(1)/(d^2 - 1)","(-1)/(d^3 - d)"],)js"
            R"js(["(-1)/(d^3 - d)","(1)/(d^2 - 1)"]]})js");
}

TEST_CASE("serialization is deterministic", "[json][property]") {
    const auto first = to_json(weingarten_symbolic(3)).dump(2);
    const auto second = to_json(weingarten_symbolic(3)).dump(2);
    REQUIRE(first == second);
    REQUIRE(to_json(jw_wenzl_recursion(4)).dump() ==
            to_json(jw_via_weingarten(4)).dump());
}
