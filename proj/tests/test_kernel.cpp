#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sheafres/ideal.hpp"
#include "sheafres/parse.hpp"

using namespace sheafres;

namespace {

RingPtr plane_ring() {
    return Ring::make({"x0", "x1", "x2"}, {{1}, {1}, {1}}, {}, {}, {{0, 1, 2}});
}

RingPtr dual_numbers_xy() {
    // k[x,y,eps]/(eps^2), deg eps = 1 so that x+eps is homogeneous
    RingPtr tmp = Ring::make({"x", "y", "eps"}, {{1}, {1}, {1}});
    Poly e2 = parse_poly(tmp, "eps^2");
    return Ring::make({"x", "y", "eps"}, {{1}, {1}, {1}}, {}, {e2.terms()});
}

} // namespace

TEST_CASE("scalar arithmetic stays canonical") {
    Scalar a = Scalar::parse("2/4");
    CHECK(a.str() == "1/2");
    CHECK((a + Scalar::parse("1/2")).str() == "1");
    CHECK((Scalar(1, 3) * Scalar(3)).is_one());
    CHECK((Scalar(-2, 4)).str() == "-1/2");
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK(Scalar::parse("-7").den() == 1);
}

TEST_CASE("poly arithmetic and printing round-trip") {
    auto R = plane_ring();
    Poly p = parse_poly(R, "x0^2 - 2*x1*x2 + 1/3");
    CHECK(p.nterms() == 3);
    CHECK(parse_poly(R, p.str()) == p);
    Poly q = parse_poly(R, "(x0 + x1)^2");
    CHECK(q == parse_poly(R, "x0^2 + 2*x0*x1 + x1^2"));
    CHECK((p - p).is_zero());
    CHECK(parse_poly(R, "x0*x1 - x1*x0").is_zero());
    CHECK(p.is_homogeneous() == false);
    CHECK(parse_poly(R, "x0^3 + x1*x2^2").is_homogeneous());
}

TEST_CASE("parser diagnostics carry position and expectation") {
    auto R = plane_ring();
    try {
        parse_poly(R, "x0^");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.col == 4);
        CHECK(e.expected == "integer");
    }
    CHECK_THROWS_AS(parse_poly(R, "x0 + zz"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x0 x1"), ParseError); // juxtaposition is not a product
}

TEST_CASE("groebner basics") {
    auto R = plane_ring();
    Ideal I(R, {parse_poly(R, "x0"), parse_poly(R, "x1")});
    auto basis = I.basis();
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].str() == "x0");
    CHECK(basis[1].str() == "x1");

    // idempotence: recomputing over the basis returns the same reduced basis
    Ideal I2(R, basis);
    CHECK(I == I2);

    // unit ideal
    Ideal U(R, {parse_poly(R, "1 + x0"), parse_poly(R, "1 - x0")});
    CHECK(U.is_unit());
    CHECK(U.basis().size() == 1);
}

TEST_CASE("twisted cubic elimination in lex") {
    MonomialOrder lex{MonomialOrder::Kind::Lex, {}, {}};
    auto R = Ring::make({"x", "y", "z"}, {{1}, {1}, {1}}, lex);
    Ideal I(R, {parse_poly(R, "y - x^2"), parse_poly(R, "z - x^3")});
    Poly target = parse_poly(R, "y^3 - z^2");
    CHECK(I.contains(target));
    bool found = false;
    for (const auto& b : I.basis())
        if (b == target) found = true;
    CHECK(found);
}

TEST_CASE("normal forms") {
    auto R = plane_ring();
    Ideal I(R, {parse_poly(R, "x0"), parse_poly(R, "x1")});
    CHECK(I.normal_form(parse_poly(R, "x0^2")).is_zero());
    CHECK(I.normal_form(parse_poly(R, "x2^2")) == parse_poly(R, "x2^2"));

    Ideal J(R, {parse_poly(R, "x0 - x1")});
    CHECK(J.normal_form(parse_poly(R, "x0*x2 + x2^2")) ==
          parse_poly(R, "x1*x2 + x2^2"));

    // f - nf(f) always reduces to zero
    Poly f = parse_poly(R, "x0^3 + x1*x2 - x2^3 + 5");
    CHECK(J.normal_form(f - J.normal_form(f)).is_zero());
}

TEST_CASE("elimination") {
    auto R = Ring::make({"u", "y", "z", "x0", "x1"}, {{0}, {1}, {1}, {1}, {1}});
    Ideal I(R, {parse_poly(R, "y - u*x0"), parse_poly(R, "z - u*x1")});
    Ideal E = eliminate_in_ring(I, {0});
    Ideal expect(R, {parse_poly(R, "y*x1 - z*x0")});
    CHECK(E == expect);

    // variable absent from the ideal
    auto P = plane_ring();
    Ideal J(P, {parse_poly(P, "x0")});
    CHECK(eliminate_in_ring(J, {1}) == J);

    // substitution
    auto R2 = Ring::make({"u", "y"}, {{0}, {0}});
    Ideal K(R2, {parse_poly(R2, "u - 1"), parse_poly(R2, "y - u")});
    Ideal E2 = eliminate_in_ring(K, {0});
    CHECK(E2 == Ideal(R2, {parse_poly(R2, "y - 1")}));

    // membership descends
    for (const auto& g : E.gens()) CHECK(I.contains(g));
}

TEST_CASE("colon and saturation") {
    auto R = plane_ring();
    Ideal I(R, {parse_poly(R, "x0^2*x1")});
    Ideal J(R, {parse_poly(R, "x0")});
    CHECK(ideal_colon(I, J) == Ideal(R, {parse_poly(R, "x0*x1")}));
    auto sat = ideal_saturate(I, J);
    CHECK(sat.ideal == Ideal(R, {parse_poly(R, "x1")}));
    CHECK(sat.steps <= 2);

    // saturate((y*x1 - z*x0, x0*y, x0*z), (x0)) stabilizes within 2 steps
    auto R3 = Ring::make({"x0", "y", "z"}, {{1}, {1}, {1}});
    Ideal I3(R3, {parse_poly(R3, "y*x0 - z*x0"), parse_poly(R3, "x0*y"),
                  parse_poly(R3, "x0*z")});
    auto s3 = ideal_saturate(I3, Ideal(R3, {parse_poly(R3, "x0")}));
    CHECK(s3.steps <= 2);
    // chain: saturation contains colon contains ideal
    Ideal c3 = ideal_colon(I3, Ideal(R3, {parse_poly(R3, "x0")}));
    CHECK(s3.ideal.contains_ideal(c3));
    CHECK(c3.contains_ideal(I3));
}

TEST_CASE("nonzerodivisors in quotient rings") {
    auto R = dual_numbers_xy();
    CHECK(is_nonzerodivisor(parse_poly(R, "x + eps"), R));
    CHECK(!is_nonzerodivisor(parse_poly(R, "eps"), R));
    auto P = plane_ring();
    CHECK(is_nonzerodivisor(parse_poly(P, "x0"), P));
    CHECK_THROWS(is_nonzerodivisor(Poly::zero(P), P));
    CHECK_THROWS(is_nonzerodivisor(parse_poly(R, "eps^2"), R)); // zero in R/Q

    // product of nonzerodivisors is a nonzerodivisor
    Poly a = parse_poly(R, "x + eps"), b = parse_poly(R, "y");
    CHECK(is_nonzerodivisor(a * b, R));
}

TEST_CASE("zero-dimensional tools") {
    auto R = Ring::make({"x", "y"}, {{1}, {1}});
    // two reduced points (0,0) and (1,0)
    Ideal I(R, {parse_poly(R, "y"), parse_poly(R, "x^2 - x")});
    CHECK(geometric_point_count(I) == 2);
    // fat point of length 2 counts once
    Ideal F(R, {parse_poly(R, "y"), parse_poly(R, "x^2")});
    CHECK(geometric_point_count(F) == 1);
    // conjugate pair x^2 - 2 counts two geometric points
    Ideal C(R, {parse_poly(R, "y"), parse_poly(R, "x^2 - 2")});
    CHECK(geometric_point_count(C) == 2);

    CHECK(lt_dimension(I) == 0);
    Ideal L(R, {parse_poly(R, "x")});
    CHECK(lt_dimension(L) == 1);
    CHECK(support_codim(L) == 1);
}

TEST_CASE("resource caps fail loudly") {
    auto R = Ring::make({"x", "y"}, {{1}, {1}});
    long saved = caps().max_total_degree;
    caps().max_total_degree = 3;
    Ideal I(R, {parse_poly(R, "x^5 + y"), parse_poly(R, "y^5 + x")});
    CHECK_THROWS_AS((void)I.basis(), ResourceLimit);
    caps().max_total_degree = saved;
}
