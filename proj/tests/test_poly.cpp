#include "caplink/hompoly.hpp"

#include "caplink/errors.hpp"
#include "caplink/rng.hpp"

#include <doctest.h>

using namespace caplink;

namespace {

GaussianRational g(long n) { return GaussianRational(rat(n)); }

HomPoly random_real_form(uint64_t& state, int degree) {
    HomPoly h(degree);
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) {
            long v = rand_range(state, -5, 5);
            if (v != 0) h.set_coeff({a, b, degree - a - b}, g(v));
        }
    if (h.is_zero()) h.set_coeff({degree, 0, 0}, g(1));
    return h;
}

std::array<GaussianRational, 3> random_point(uint64_t& state) {
    return {g(rand_range(state, -9, 9)), g(rand_range(state, -9, 9)), g(rand_range(state, -9, 9))};
}

} // namespace

TEST_CASE("parse: basic forms") {
    HomPoly p = parse_poly("x^2 + y^2 - z^2");
    CHECK(p.degree() == 2);
    CHECK(p.term_count() == 3);
    CHECK(p.coeff({2, 0, 0}) == g(1));
    CHECK(p.coeff({0, 0, 2}) == g(-1));

    CHECK_THROWS_AS(parse_poly("x^2 + y - z^2"), NotHomogeneous);

    HomPoly q = parse_poly("x^2 + i*x*y");
    CHECK(q.degree() == 2);
    CHECK(q.coeff({1, 1, 0}) == GaussianRational(rat(0), rat(1)));
}

TEST_CASE("parse: coefficients, implicit products, whitespace") {
    CHECK(parse_poly("3/4*x*y") == parse_poly("3/4 x y"));
    CHECK(parse_poly("2x^2") == parse_poly("2*x^2"));
    CHECK(parse_poly("(1/2+3/4*i)*x") == parse_poly("1/2x + 3/4i x"));
    CHECK(parse_poly("x*x*x") == parse_poly("x^3"));
    CHECK(parse_poly("-x + x").is_zero());
    CHECK(parse_poly("-x + x").degree() == 1);
    CHECK_THROWS_AS(parse_poly(""), MalformedInput);
    CHECK_THROWS_AS(parse_poly("x +"), MalformedInput);
    CHECK_THROWS_AS(parse_poly("x^"), MalformedInput);
    CHECK_THROWS_AS(parse_poly("w^2"), MalformedInput);
    CHECK_THROWS_AS(parse_poly("x - x", true), ZeroPolynomial);
}

TEST_CASE("canonical serialization round-trips") {
    uint64_t state = 11;
    for (int trial = 0; trial < 40; ++trial) {
        HomPoly p = random_real_form(state, static_cast<int>(rand_range(state, 0, 5)));
        if (trial % 3 == 0) p = complexify(p, random_real_form(state, p.degree()));
        HomPoly q = parse_poly(p.str());
        CHECK(q == p);
    }
}

TEST_CASE("evaluate: points on and off the zero set") {
    HomPoly conic = parse_poly("x^2+y^2-z^2");
    CHECK(evaluate(conic, {g(0), g(1), g(1)}).is_zero());
    CHECK(evaluate(conic, {g(1), imag_unit(), g(0)}).is_zero());
    CHECK(evaluate(parse_poly("x*y"), {g(1), g(0), g(1)}).is_zero());
    CHECK(evaluate(conic, {g(1), g(1), g(1)}) == g(1));
}

TEST_CASE("gradient examples") {
    auto grad = gradient(parse_poly("x^2+y^2-z^2"));
    CHECK(grad[0] == parse_poly("2x"));
    CHECK(grad[1] == parse_poly("2y"));
    CHECK(grad[2] == parse_poly("-2z"));

    auto gxy = gradient(parse_poly("x*y"));
    CHECK(gxy[0] == parse_poly("y"));
    CHECK(gxy[1] == parse_poly("x"));
    CHECK(gxy[2].is_zero());

    auto gx3 = gradient(parse_poly("x^3"));
    CHECK(gx3[0] == parse_poly("3x^2"));
    CHECK(gx3[1].is_zero());

    CHECK_THROWS_AS(gradient(parse_poly("5")), DegreeZero);
}

TEST_CASE("pencil_member") {
    HomPoly x = parse_poly("x"), y = parse_poly("y");
    CHECK(pencil_member(x, y, rat(1), rat(0)) == x);
    CHECK(pencil_member(x, y, rat(1), rat(1)) == parse_poly("x+y"));
    CHECK_THROWS_AS(pencil_member(x, y, rat(0), rat(0)), BothZero);
    CHECK_THROWS_AS(pencil_member(x, parse_poly("y^2"), rat(1), rat(1)), DegreeMismatch);
}

TEST_CASE("complexify and realify") {
    HomPoly x = parse_poly("x"), y = parse_poly("y");
    CHECK(complexify(x, y) == parse_poly("x + i*y"));
    CHECK(complexify(parse_poly("x^2+y^2-z^2"), parse_poly("x*y")) ==
          parse_poly("x^2+y^2-z^2+i*x*y"));
    HomPoly r = parse_poly("x^2-z^2");
    CHECK(complexify(r, HomPoly(2)) == r);

    auto [re1, im1] = realify(parse_poly("x + i*y"));
    CHECK(re1 == x);
    CHECK(im1 == y);
    auto [re2, im2] = realify(parse_poly("(1+i)*x^2"));
    CHECK(re2 == parse_poly("x^2"));
    CHECK(im2 == parse_poly("x^2"));
    auto [re3, im3] = realify(parse_poly("x^2"));
    CHECK(re3 == parse_poly("x^2"));
    CHECK(im3.is_zero());
}

TEST_CASE("sum_of_squares") {
    CHECK(sum_of_squares(parse_poly("x"), parse_poly("y")) == parse_poly("x^2+y^2"));
    HomPoly conic = parse_poly("x^2+y^2-z^2");
    CHECK(sum_of_squares(conic, parse_poly("x*y")) == conic * conic + parse_poly("x^2*y^2"));
}

TEST_CASE("restrict_to_line examples") {
    Vec3Q u{rat(1), rat(0), rat(0)}, v{rat(0), rat(1), rat(0)};
    BinaryForm p = restrict_to_line(parse_poly("x^2+y^2-z^2+i*x*y"), u, v);
    // t0^2 + t1^2 + i t0 t1
    CHECK(p.degree == 2);
    CHECK(p.coeffs[2] == g(1));
    CHECK(p.coeffs[0] == g(1));
    CHECK(p.coeffs[1] == GaussianRational(rat(0), rat(1)));

    BinaryForm q = restrict_to_line(parse_poly("x + i*y"), u, v);
    CHECK(q.coeffs[1] == g(1));
    CHECK(q.coeffs[0] == GaussianRational(rat(0), rat(1)));

    CHECK_THROWS_AS(restrict_to_line(parse_poly("z"), u, v), IdenticallyZero);
    CHECK_THROWS_AS(restrict_to_line(parse_poly("z"), u, u), DependentPoints);
}

TEST_CASE("property: homogeneous scaling") {
    uint64_t state = 21;
    for (int trial = 0; trial < 30; ++trial) {
        HomPoly p = random_real_form(state, static_cast<int>(rand_range(state, 1, 5)));
        auto pt = random_point(state);
        GaussianRational s(rat(rand_range(state, 1, 7), rand_range(state, 1, 7)));
        GaussianRational lhs = evaluate(p, {s * pt[0], s * pt[1], s * pt[2]});
        GaussianRational rhs = evaluate(p, pt);
        for (int k = 0; k < p.degree(); ++k) rhs *= s;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: Euler identity") {
    uint64_t state = 22;
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rand_range(state, 1, 5));
        HomPoly p = random_real_form(state, d);
        auto grad = gradient(p);
        HomPoly euler = parse_poly("x") * grad[0] + parse_poly("y") * grad[1] +
                        parse_poly("z") * grad[2];
        CHECK(euler == GaussianRational(rat(d)) * p);
    }
}

TEST_CASE("property: realify and complexify invert each other") {
    uint64_t state = 23;
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rand_range(state, 0, 4));
        HomPoly r = random_real_form(state, d), s = random_real_form(state, d);
        HomPoly p = complexify(r, s);
        auto [rr, ss] = realify(p);
        CHECK(rr == r);
        CHECK(ss == s);
        CHECK(complexify(rr, ss) == p);
    }
}

TEST_CASE("property: sum_of_squares evaluates to the square sum") {
    uint64_t state = 24;
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rand_range(state, 1, 4));
        HomPoly r = random_real_form(state, d), s = random_real_form(state, d);
        HomPoly q = sum_of_squares(r, s);
        auto pt = random_point(state);
        GaussianRational vr = evaluate(r, pt), vs = evaluate(s, pt);
        CHECK(evaluate(q, pt) == vr * vr + vs * vs);
    }
}

TEST_CASE("property: restriction commutes with evaluation") {
    uint64_t state = 25;
    for (int trial = 0; trial < 5; ++trial) {
        HomPoly p = random_real_form(state, static_cast<int>(rand_range(state, 1, 4)));
        Vec3Q u{rat(rand_range(state, -5, 5)), rat(rand_range(state, -5, 5)), rat(1)};
        Vec3Q v{rat(rand_range(state, -5, 5)), rat(1), rat(0)};
        BinaryForm bf;
        try {
            bf = restrict_to_line(p, u, v);
        } catch (const IdenticallyZero&) {
            continue;
        }
        for (int k = 0; k < 20; ++k) {
            GaussianRational t0(rat(rand_range(state, -9, 9)));
            GaussianRational t1(rat(rand_range(state, -9, 9)));
            std::array<GaussianRational, 3> pt;
            for (int c = 0; c < 3; ++c)
                pt[static_cast<size_t>(c)] = t0 * GaussianRational(u[static_cast<size_t>(c)]) +
                                             t1 * GaussianRational(v[static_cast<size_t>(c)]);
            CHECK(bf.evaluate(t0, t1) == evaluate(p, pt));
        }
    }
}

TEST_CASE("hom_gcd finds shared factors") {
    CHECK(hom_gcd(parse_poly("x^2"), parse_poly("x*y")) == parse_poly("x"));
    CHECK(hom_gcd(parse_poly("x^2+y^2-z^2"), parse_poly("x*y")).degree() == 0);
    HomPoly common = parse_poly("x+y-z");
    HomPoly a = common * parse_poly("x^2+z^2");
    HomPoly b = common * parse_poly("y*z");
    HomPoly got = hom_gcd(a, b);
    CHECK(got.degree() == 1);
    // normalized gcd equals the normalized common factor
    CHECK(got == GaussianRational(rat(1)) * common);
    CHECK(hom_gcd(parse_poly("z*x"), parse_poly("z*y")) == parse_poly("z"));
}
