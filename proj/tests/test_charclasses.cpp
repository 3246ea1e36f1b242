#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rwgraph/chern.hpp"
#include "rwgraph/homology.hpp"
#include "rwgraph/series.hpp"
#include "rwgraph/spoly.hpp"

using namespace rwg;

namespace {

SPolynomial spoly(int weight, std::vector<std::pair<Partition, Rat>> terms) {
    SPolynomial p(weight);
    for (auto& [part, c] : terms) p.add(part, c);
    return p;
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
    TruncSeries f(6);
    f[0] = 1;
    f[1] = frac(1, 2);
    f[3] = -3;
    TruncSeries g = f * f;
    CHECK(g[0] == 1);
    CHECK(g[1] == 1);
    CHECK(g[2] == frac(1, 4));
    CHECK(g[3] == -6);
    CHECK(g.order() == 6);

    // exp and log are mutually inverse
    TruncSeries h(8);
    h[1] = 1;
    h[2] = frac(-2, 3);
    h[5] = frac(7, 11);
    TruncSeries e = h.exp();
    CHECK(e[0] == 1);
    CHECK(e.log() == h);

    // division matches multiplication
    TruncSeries q = g.divided_by(f);
    CHECK(q == f);
}

TEST_CASE("series composition is evaluation of the outer polynomial") {
    TruncSeries outer(5);
    outer[0] = 2;
    outer[1] = 1;
    outer[2] = 3;
    TruncSeries inner(5);
    inner[1] = 1;
    inner[2] = -1;
    TruncSeries c = outer.compose(inner);
    // 2 + (x - x^2) + 3 (x - x^2)^2
    CHECK(c[0] == 2);
    CHECK(c[1] == 1);
    CHECK(c[2] == 2);
    CHECK(c[3] == -6);
    CHECK(c[4] == 3);
}

TEST_CASE("sinh(x/2)/(x/2) and the square-root Todd logarithm") {
    TruncSeries f = sinh_half_over_half(10);
    CHECK(f[0] == 1);
    CHECK(f[2] == frac(1, 24));
    CHECK(f[4] == frac(1, 1920));
    CHECK(f[1] == 0);
    CHECK(f[3] == 0);

    // log of the pair contribution of the square-root Todd class
    TruncSeries lg = td_half_log(10);
    CHECK(lg[0] == 0);
    CHECK(lg[2] == frac(-1, 48));
    CHECK(lg[4] == frac(1, 5760));
    TruncSeries ng = td_neg_half_log(10);
    CHECK(ng[2] == frac(1, 48));
    CHECK(ng[4] == frac(-1, 5760));
}

TEST_CASE("multiplicative sequence terms of the logarithm series") {
    TruncSeries lg = td_half_log(12);
    SPolynomial k1 = mult_sequence_term(lg, 1);
    CHECK(k1.coeff({2}) == frac(-1, 48));

    SPolynomial k2 = mult_sequence_term(lg, 2);
    CHECK(k2.coeff({2, 2}) == frac(1, 2) * frac(-1, 48) * frac(-1, 48));
    CHECK(k2.coeff({4}) == frac(1, 5760));

    // a logarithm supported on one term exponentiates to plain powers
    TruncSeries single(9);
    single[2] = frac(1, 7);
    SPolynomial k3 = mult_sequence_term(single, 3);
    CHECK(k3.coeff({2, 2, 2}) == frac(1, 6) * rat_pow(frac(1, 7), 3));
    CHECK(k3.coeff({4, 2}) == 0);
    CHECK(k3.coeff({6}) == 0);

    TruncSeries odd(6);
    odd[3] = 1;
    CHECK_THROWS(mult_sequence_term(odd, 2));
}

TEST_CASE("integrals of the square-root Todd class give the wheel-power polynomials") {
    // 48^k k! * [integral of the degree-k part] written in the s-monomials
    SPolynomial b1 = b_theta_power_polynomial(1);
    CHECK(b1 == spoly(2, {{{2}, -1}}));

    SPolynomial b2 = b_theta_power_polynomial(2);
    CHECK(b2 == spoly(4, {{{2, 2}, 1}, {{4}, frac(4, 5)}}));

    SPolynomial b3 = b_theta_power_polynomial(3);
    CHECK(b3 == spoly(6, {{{2, 2, 2}, -1}, {{4, 2}, frac(-12, 5)}, {{6}, frac(-64, 35)}}));

    SPolynomial b4 = b_theta_power_polynomial(4);
    CHECK(b4 == spoly(8, {{{2, 2, 2, 2}, 1},
                          {{4, 2, 2}, frac(24, 5)},
                          {{4, 4}, frac(48, 25)},
                          {{6, 2}, frac(256, 35)},
                          {{8}, frac(1152, 175)}}));
}

TEST_CASE("theta powers expand over the polywheels with inverse Todd coefficients") {
    auto t1 = theta_power_in_polywheels(1);
    CHECK(t1.at({1}) == 1);
    CHECK(t1.size() == 1);

    auto t2 = theta_power_in_polywheels(2);
    CHECK(t2.at({1, 1}) == 1);
    CHECK(t2.at({2}) == frac(-4, 5));

    auto t4 = theta_power_in_polywheels(4);
    CHECK(t4.at({1, 1, 1, 1}) == 1);
    CHECK(t4.at({2, 1, 1}) == frac(-24, 5));
    CHECK(t4.at({2, 2}) == frac(48, 25));
    CHECK(t4.at({3, 1}) == frac(256, 35));
    CHECK(t4.at({4}) == frac(-1152, 175));

    auto t5 = theta_power_in_polywheels(5);
    CHECK(t5.at({1, 1, 1, 1, 1}) == 1);
    CHECK(t5.at({2, 1, 1, 1}) == -8);
    CHECK(t5.at({2, 2, 1}) == frac(48, 5));
    CHECK(t5.at({3, 1, 1}) == frac(128, 7));
    CHECK(t5.at({3, 2}) == frac(-512, 35));
    CHECK(t5.at({4, 1}) == frac(-1152, 35));
    CHECK(t5.at({5}) == frac(12288, 385));
}

TEST_CASE("the polywheel combination reduces to the theta power in graph homology") {
    for (int k = 1; k <= 4; ++k) {
        const HomologyBasis& b = basis(k);
        GraphVector combo(k);
        for (const auto& [parts, c] : theta_power_in_polywheels(k)) {
            Partition doubled;
            for (int m : parts) doubled.push_back(2 * m);
            GraphVector cl = closure(doubled);
            cl *= c;
            combo += cl;
        }
        GraphVector theta_k(k);
        theta_k.add_graph(necklace_union(Partition(k, 1)), Rat(1));
        CHECK(b.reduce_to_vector(combo).terms() == b.reduce_to_vector(theta_k).terms());
    }
}

TEST_CASE("power sums and elementary classes of the squared roots convert both ways") {
    SPolynomial s2 = s_class_in_c(1);
    CHECK(s2 == spoly(2, {{{2}, -2}}));
    SPolynomial s4 = s_class_in_c(2);
    CHECK(s4 == spoly(4, {{{2, 2}, 2}, {{4}, -4}}));
    SPolynomial c4 = c_class_in_s(2);
    CHECK(c4 == spoly(4, {{{2, 2}, frac(1, 8)}, {{4}, frac(-1, 4)}}));

    std::map<Partition, Rat> cvals{{{2, 2}, 828}, {{4}, 324}};
    ChernVector cv = chern_from_c(2, cvals);
    CHECK(cv.s_values.at({2, 2}) == 3312);
    CHECK(cv.s_values.at({4}) == 360);
    ChernVector back = chern_from_s(2, cv.s_values);
    CHECK(back.c_values == cvals);
}

TEST_CASE("random characteristic data round-trips through both bases") {
    std::mt19937 rng(577);
    std::uniform_int_distribution<int> num(-40, 40);
    for (int k = 1; k <= 4; ++k) {
        for (int trial = 0; trial < 5; ++trial) {
            std::map<Partition, Rat> s;
            for (const auto& lam : even_partitions_of(2 * k)) s[lam] = frac(num(rng), 3);
            ChernVector cv = chern_from_s(k, s);
            ChernVector rt = chern_from_c(k, cv.c_values);
            CHECK(rt.s_values == s);
        }
    }
}

TEST_CASE("evaluation of monomial polynomials against characteristic data") {
    ChernVector k3 = chern_from_c(1, {{{2}, 24}});
    CHECK(k3.s_values.at({2}) == -48);
    CHECK(evaluate_s_poly(spoly(2, {{{2}, 1}}), k3) == -48);
    CHECK(evaluate_s_poly(b_theta_power_polynomial(1), k3) == 48);

    ChernVector s2 = chern_from_s(2, {{{2, 2}, 3312}, {{4}, 360}});
    CHECK(evaluate_s_poly(b_theta_power_polynomial(2), s2) == 3600);
    CHECK(evaluate_c_poly(spoly(4, {{{2, 2}, 3}, {{4}, -1}}), s2) == 3 * 828 - 324);

    SPolynomial needs8(8);
    needs8.add({8}, Rat(1));
    CHECK_THROWS(evaluate_s_poly(needs8, s2));
}

TEST_CASE("monomial names and printing") {
    CHECK(monomial_name("s", {2, 2, 4}) == "s2^2*s4");
    CHECK(monomial_name("c", {6}) == "c6");
    CHECK(polywheel_name({4, 2, 2}) == "<w2^2*w4>");
    SPolynomial p = spoly(4, {{{2, 2}, 1}, {{4}, frac(-4, 5)}});
    CHECK(spoly_to_string(p, "s") == "s2^2 - 4/5*s4");
}
