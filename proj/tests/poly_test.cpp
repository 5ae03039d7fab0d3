#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvelab/poly.hpp>

#include <random>

using namespace curvelab;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5), nt(1, max_terms);
    Poly p;
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
        int a = deg(rng), b = deg(rng), c = deg(rng);
        p.add_term(Monomial{a, b, c}, Rat(coef(rng)));
    }
    return p;
}

Poly random_homogeneous(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> split(0, d), coef(-5, 5);
    Poly p;
    for (int i = 0; i < 6; ++i) {
        int a = split(rng), b = std::uniform_int_distribution<int>(0, d - a)(rng);
        p.add_term(Monomial{a, b, d - a - b}, Rat(coef(rng)));
    }
    if (p.is_zero()) p.add_term(Monomial{d, 0, 0}, Rat(1));
    return p;
}

}  // namespace

TEST_CASE("parser basics") {
    Poly p = parse_poly("y^5+x^4*z");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(Monomial{0, 5, 0}) == Rat(1));
    CHECK(p.coeff(Monomial{4, 0, 1}) == Rat(1));
    CHECK(p.degree() == 5);
    CHECK(p.is_homogeneous());

    Poly q = parse_poly("x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)");
    CHECK(q.term_count() == 6);
    CHECK(q.coeff(Monomial{2, 2, 0}) == Rat(1));
    CHECK(q.coeff(Monomial{2, 1, 1}) == Rat(-2));
    CHECK(q.coeff(Monomial{1, 1, 2}) == Rat(-2));

    CHECK(parse_poly("(x-y)^2 - (x^2-2*x*y+y^2)").is_zero());
}

TEST_CASE("parser rationals, signs, errors") {
    Poly p = parse_poly("-3/2*x+1/2*y");
    CHECK(p.coeff(Monomial{1, 0, 0}) == Rat(-3, 2));
    CHECK(p.coeff(Monomial{0, 1, 0}) == Rat(1, 2));

    CHECK_THROWS_AS(parse_poly("x+w"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x y"), ParseError);  // multiplication is explicit
    CHECK_THROWS_AS(parse_poly(""), ParseError);

    try {
        parse_poly("x+*y");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("parse then print then parse is identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly p = random_poly(rng, 4, 8);
        CHECK(parse_poly(p.str()) == p);
    }
}

TEST_CASE("partial derivatives") {
    Poly f = parse_poly("y^5+x^4*z");
    CHECK(f.partial(0) == parse_poly("4*x^3*z"));
    CHECK(f.partial(1) == parse_poly("5*y^4"));
    CHECK(f.partial(2) == parse_poly("x^4"));
    CHECK(f.partial(0).degree() == 4);
}

TEST_CASE("euler relation") {
    CHECK(euler_check(parse_poly("y^5+x^4*z")));
    CHECK(euler_check(parse_poly("x*y*z")));
    CHECK(euler_check(parse_poly("x^9+z*(x*z^3+y^4)^2")));
    std::mt19937 rng(11);
    for (int d = 2; d <= 6; ++d)
        for (int i = 0; i < 10; ++i) CHECK(euler_check(random_homogeneous(rng, d)));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        Poly f = random_poly(rng, 3, 5), g = random_poly(rng, 3, 5), h = random_poly(rng, 3, 5);
        CHECK((f + g) * h == f * h + g * h);
    }
    for (int i = 0; i < 20; ++i) {
        int df = 1 + i % 4, dg = 1 + (i / 4) % 4;
        Poly f = random_homogeneous(rng, df), g = random_homogeneous(rng, dg);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).degree() == df + dg);
    }
}

TEST_CASE("homogenize / dehomogenize") {
    Poly f = parse_poly("y^5+x^4*z");
    Poly affine = f.dehomogenize(2);
    CHECK(affine == parse_poly("y^5+x^4"));
    CHECK(affine.homogenize(2, 5) == f);
    CHECK_THROWS_AS(parse_poly("x^3").homogenize(2, 2), DegreeError);

    UniPoly u = parse_unipoly("3*t^2+2*t+1", 't');
    BinaryForm b = BinaryForm::from_unipoly(u, 2);
    CHECK(b == parse_binary_form("s^2+2*s*t+3*t^2"));
}

TEST_CASE("binary form reversal matches the X->Y recursion example") {
    // X_5(u) = -u^6+u^5+u^4  =>  Y_5(t) = t^6 X_5(1/t) = t^2+t-1
    UniPoly x5 = parse_unipoly("-u^6+u^5+u^4", 'u');
    std::vector<Rat> y(7, Rat(0));
    for (int i = 0; i <= x5.degree(); ++i) y[static_cast<size_t>(6 - i)] = x5.coeff(i);
    UniPoly y5{y};
    CHECK(y5 == parse_unipoly("t^2+t-1", 't'));
}

TEST_CASE("univariate exact division") {
    UniPoly num = parse_unipoly("3*t^4-4*t^3+1", 't');
    UniPoly den = parse_unipoly("(t-1)^2", 't');
    CHECK(exact_div(num, den) == parse_unipoly("3*t^2+2*t+1", 't'));

    // u^4 (X_4(u) - X_4(1)) / (u - 1) with X_4 = 2u^2 - u^3
    UniPoly x4 = parse_unipoly("2*u^2-u^3", 'u');
    UniPoly shifted = (x4 - UniPoly::constant(x4.eval(Rat(1)))) * UniPoly::monomial(4);
    CHECK(exact_div(shifted, parse_unipoly("u-1", 'u')) == parse_unipoly("-u^6+u^5+u^4", 'u'));

    CHECK_THROWS_AS(exact_div(parse_unipoly("t^2+1", 't'), parse_unipoly("t-1", 't')),
                    ExactDivisionError);
}

TEST_CASE("multivariate exact division") {
    CHECK(exact_div(parse_poly("x^2"), parse_poly("x")) == parse_poly("x"));
    std::mt19937 rng(17);
    for (int i = 0; i < 30; ++i) {
        Poly f = random_poly(rng, 3, 4), g = random_poly(rng, 3, 4);
        if (g.is_zero()) continue;
        CHECK(exact_div(f * g, g) == f);
    }
    CHECK_THROWS_AS(exact_div(parse_poly("x^2+y"), parse_poly("x+y")), ExactDivisionError);
}

TEST_CASE("binary form arithmetic and gcd") {
    BinaryForm a = parse_binary_form("s^2*t^3");
    CHECK(a.s_order() == 2);
    CHECK(a.t_order() == 3);
    CHECK(a.div_s_power(2) == parse_binary_form("t^3"));
    CHECK_THROWS_AS(a.div_s_power(3), ExactDivisionError);

    BinaryForm f = parse_binary_form("s^2-t^2"), g = parse_binary_form("(s-t)^2");
    CHECK(gcd(f, g) == parse_binary_form("s-t"));
    CHECK(coprime3(parse_binary_form("s^2"), parse_binary_form("s*t"), parse_binary_form("t^2")));
    CHECK_FALSE(coprime3(parse_binary_form("s^2"), parse_binary_form("s*t"),
                         parse_binary_form("s^2+s*t")));
}

TEST_CASE("compose3 substitution") {
    Poly conic = parse_poly("x*z-y^2");
    BinaryForm A = parse_binary_form("s^2"), B = parse_binary_form("s*t"),
               C = parse_binary_form("t^2");
    CHECK(compose3(conic, A, B, C).is_zero());
    CHECK_FALSE(compose3(parse_poly("x*z-y^2+x^2"), A, B, C).is_zero());
}
