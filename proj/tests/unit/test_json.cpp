#include "tca/json_io.hpp"

#include <doctest.h>

using namespace tca;

TEST_CASE("SymFunc JSON roundtrip") {
    SymFunc f(Basis::schur, 8);
    f.add_term(Partition({2, 1}), 1);
    f.add_term(Partition({3}), Rational(-1, 2));
    const Json j = to_json(f);
    CHECK(j.dump() == R"({"basis":"s","truncation":8,"terms":{"[3]":"-1/2","[2,1]":"1"}})");
    CHECK(symfunc_from_json(j) == f);
    CHECK(symfunc_from_json(Json::parse(R"({"basis":"p","truncation":null,"terms":{}})")).is_zero());
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"s"})")), ParseError);
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"s","terms":{"[1]":"1/0"}})")), ParseError);
}

TEST_CASE("other roundtrips") {
    SigmaExpr e = SigmaExpr::sigma(2) + SigmaExpr::monomial(Partition({1}), {1, 0}, Rational(3, 2));
    CHECK(sigma_from_json(to_json(e)) == e);

    ExpPoly h = ExpPoly::exp(0, UPoly({1, 2})) + ExpPoly::exp(1, UPoly({0, Rational(1, 2)}));
    CHECK(to_json(h).dump() == R"({"0":["1","2"],"1":["0","1/2"]})");
    CHECK(exppoly_from_json(to_json(h)) == h);

    TSeries s(4);
    s.add_term(Partition({2}), Rational(1, 3));
    CHECK(tseries_from_json(to_json(s)) == s);

    OdeOperator op{{UPoly({0, 0, -4}), UPoly({0, 3}), UPoly({0, 0, 1})}};
    CHECK(to_json(op).dump() == R"([["0","0","-4"],["0","3"],["0","0","1"]])");
    CHECK(ode_from_json(to_json(op)) == op);

    GrClass g(4, 2);
    g.add_term(Partition({1}), 1);
    g.add_term(Partition(), -1);
    CHECK(to_json(g).dump() == R"({"d":4,"r":2,"terms":{"[]":-1,"[1]":1}})");
    CHECK(grclass_from_json(to_json(g)) == g);
    LambdaGrClass lg(4, 2);
    lg.add(Partition({1}), g);
    CHECK(lambda_grclass_from_json(to_json(lg)).terms() == lg.terms());

    LaurentPoly f = LaurentPoly::monomial({1, -1});
    CHECK(to_json(f).dump() == R"({"d":2,"terms":{"1,-1":"1"}})");
    CHECK(laurent_from_json(to_json(f)) == f);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"d":2,"terms":{"1":"1"}})")), ParseError);

    CoeffSeries c{1, 1, Rational(1, 2)};
    CHECK(to_json(c).dump() == R"(["1","1","1/2"])");
    CHECK(coeffs_from_json(to_json(c)) == c);
    CHECK(coeffs_from_json(Json::parse("[1, \"2/4\"]")) == CoeffSeries{1, Rational(1, 2)});
}
