#include "descent/errors.hpp"
#include "descent/json_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <functional>

using namespace descent;
using namespace testing_support;

namespace {

std::string location_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.location;
    }
    return "<no error>";
}

} // namespace

TEST_CASE("field elements round trip") {
    std::mt19937_64 rng(61);
    for (int p : {3, 5})
        for (int trial = 0; trial < 20; ++trial) {
            Cyclo x = random_cyclo(rng, p, 1000, 50);
            CHECK(cyclo_from_json(to_json(x), p, "x") == x);
            CHECK(cyclo_from_json(json::parse(to_json(x).dump()), p, "x") == x);
            CHECK(parse_field_arg(to_json(x).dump(), p, "x") == x);
        }
    CHECK(parse_field_arg("3/2", 3, "x") == Cyclo(3, Rational(3, 2)));
    CHECK(parse_field_arg("[\"1\", 2]", 3, "x") == Cyclo(3, 1L) + Cyclo::zeta(3) * Rational(2));
    CHECK(cyclo_from_json(json::parse("\"-4/6\""), 5, "x") == Cyclo(5, Rational(-2, 3)));
    CHECK(to_json(Cyclo(3, Rational(6, 4))) == json::parse("[\"3/2\", \"0\"]"));
}

TEST_CASE("parse errors carry their location") {
    CHECK(location_of([] { cyclo_from_json(json::parse("[\"1\", \"x\"]"), 3, "model.lambda"); }) ==
          "model.lambda[1]");
    CHECK(location_of([] { cyclo_from_json(json::parse("[1, 2, 3]"), 3, "a"); }) == "a");
    CHECK(location_of([] { cyclo_from_json(json::parse("[1.5, 2]"), 3, "a"); }) == "a[0]");
    CHECK(location_of([] { parse_json_text("[1, ", "--beta"); }) == "--beta");
    CHECK(location_of([] { point_from_json(json::parse("[[1,0],[0,0],[\"1/0\",0]]"), 3, 3, "--point"); }) ==
          "--point[2][0]");
    CHECK(location_of([] { point_from_json(json::parse("[0, 0, 0]"), 3, 3, "P"); }) == "P");
    CHECK(location_of([] { form_from_json(json::parse("{\"3,0,0\": 1, \"1,1,0\": 1}"), 3, 3, "f"); }) != "<no error>");
    CHECK_THROWS_AS(parse_field_arg("1//2", 3, "x"), ParseError);
}

TEST_CASE("models round trip") {
    auto alg3 = KummerAlgebra::make(Cyclo(3, 2L));
    CubicTorsor c = build_cubic(Cyclo(3, 2L), Cyclo(3, 2L),
                                KummerElement(alg3, {Cyclo(3, 3L), Cyclo(3, 1L), Cyclo(3)}));
    json jc = model_to_json(c);
    CHECK(jc["schema"] == kSchema);
    Model mc = model_from_json(json::parse(jc.dump()));
    REQUIRE(std::holds_alternative<CubicTorsor>(mc));
    const CubicTorsor& c2 = std::get<CubicTorsor>(mc);
    CHECK(c2.form == c.form);
    CHECK(c2.M_T == c.M_T);
    CHECK(c2.beta == c.beta);
    CHECK(model_to_json(c2).dump() == jc.dump());
    CHECK(verify_torsor(c2).all_pass());

    auto alg5 = KummerAlgebra::make(Cyclo(5, 2L));
    QuinticTorsor q = build_quintic(Cyclo(5, 1L), Cyclo(5, 2L),
                                    KummerElement(alg5, {Cyclo(5, 2L), Cyclo(5, 1L), Cyclo(5), Cyclo(5), Cyclo(5)}));
    json jq = model_to_json(q);
    Model mq = model_from_json(jq);
    REQUIRE(std::holds_alternative<QuinticTorsor>(mq));
    CHECK(std::get<QuinticTorsor>(mq).quadrics == q.quadrics);
    CHECK(model_to_json(std::get<QuinticTorsor>(mq)).dump() == jq.dump());

    json wrong = jc;
    wrong["schema"] = "other/0";
    CHECK(location_of([&] { model_from_json(wrong); }) == "model.schema");
    json nop = jc;
    nop["p"] = 7;
    CHECK(location_of([&] { model_from_json(nop); }) == "model.p");
    json nolambda = jc;
    nolambda.erase("lambda");
    CHECK(location_of([&] { model_from_json(nolambda); }) == "model");
}

TEST_CASE("forms, matrices and reports as JSON") {
    Form F = hesse_form(Cyclo(3, 2L));
    CHECK(form_from_json(to_json(F), 3, 3, "f") == F);
    CMatrix M = shift_matrix(5, Cyclo(5, Rational(3, 7)));
    CHECK(matrix_from_json(to_json(M), 5, 5, "m") == M);
    Report r;
    r.add("one", true, "fine");
    r.add("two", false);
    json j = to_json(r);
    CHECK(j["pass"] == false);
    CHECK(j["checks"][1]["name"] == "two");
    CHECK(j.dump() == to_json(r).dump());
}
