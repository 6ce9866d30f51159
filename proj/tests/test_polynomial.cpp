#include <doctest.h>

#include "hqp/polynomial.hpp"
#include "hqp/random.hpp"

using namespace hqp;

namespace {

// Random multilinear polynomial with integer coefficients in [-4, 4].
BinaryPolynomial random_poly(int num_vars, int num_terms, int max_degree, std::uint64_t seed) {
    rng::Prng prng(seed);
    BinaryPolynomial poly(num_vars);
    for (int t = 0; t < num_terms; ++t) {
        const int deg = static_cast<int>(prng.below(max_degree + 1));
        BinaryPolynomial::Term vars;
        for (int d = 0; d < deg; ++d)
            vars.push_back(static_cast<int>(prng.below(num_vars)));
        poly.add_term(std::move(vars), static_cast<double>(prng.below(9)) - 4.0);
    }
    return poly;
}

Assignment random_assignment(int num_vars, rng::Prng &prng) {
    Assignment x(num_vars);
    for (auto &b : x)
        b = static_cast<std::uint8_t>(prng.coin());
    return x;
}

} // namespace

TEST_CASE("evaluate") {
    BinaryPolynomial poly(2);
    poly.add_term({0}, 1.0);
    poly.add_term({1}, 1.0);
    poly.add_term({0, 1}, -1.0);
    CHECK(poly.evaluate({1, 1}) == 1.0);
    CHECK(poly.evaluate({1, 0}) == 1.0);
    CHECK(poly.evaluate({0, 0}) == 0.0);

    BinaryPolynomial constant(3);
    constant.add_constant(2.5);
    CHECK(constant.evaluate({0, 1, 0}) == 2.5);
    CHECK_THROWS_AS(poly.evaluate({1}), std::invalid_argument);
}

TEST_CASE("multilinearity and pruning on insertion") {
    BinaryPolynomial poly(3);
    poly.add_term({1, 1, 0}, 2.0); // x1^2 x0 = x0 x1
    CHECK(poly.coefficient({0, 1}) == 2.0);
    poly.add_term({0, 1}, -2.0);
    CHECK(poly.empty());
    CHECK_THROWS_AS(poly.add_term({3}, 1.0), std::out_of_range);
}

TEST_CASE("flip_delta basic cases") {
    BinaryPolynomial linear(1);
    linear.add_term({0}, 1.0);
    CHECK(linear.flip_delta({0}, 0) == 1.0);
    CHECK(linear.flip_delta({1}, 0) == -1.0);

    BinaryPolynomial pair(2);
    pair.add_term({0, 1}, 1.0);
    CHECK(pair.flip_delta({1, 0}, 1) == 1.0);
    CHECK(pair.flip_delta({0, 0}, 1) == 0.0);
    CHECK_THROWS_AS(pair.flip_delta({0, 0}, 2), std::out_of_range);
}

TEST_CASE("flip_delta agrees with double evaluation") {
    rng::Prng prng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto poly = random_poly(8, 20, 4, 1000 + trial);
        Assignment x = random_assignment(8, prng);
        const int i = static_cast<int>(prng.below(8));
        const double before = poly.evaluate(x);
        Assignment y = x;
        y[i] ^= 1u;
        CHECK(poly.flip_delta(x, i) == doctest::Approx(poly.evaluate(y) - before).epsilon(1e-12));
    }
}

TEST_CASE("times computes the multilinear product") {
    BinaryPolynomial a(2), b(2);
    a.add_term({0}, 1.0);
    a.add_constant(-1.0);
    b.add_term({0}, 1.0);
    b.add_term({1}, 2.0);
    const auto ab = a.times(b);
    rng::Prng prng(3);
    for (int mask = 0; mask < 4; ++mask) {
        const Assignment x = assignment_from_index(mask, 2);
        CHECK(ab.evaluate(x) == doctest::Approx(a.evaluate(x) * b.evaluate(x)));
    }
    // x0 * x0 = x0
    BinaryPolynomial x0(1);
    x0.add_term({0}, 1.0);
    CHECK(x0.times(x0).coefficient({0}) == 1.0);
}

TEST_CASE("degree") {
    BinaryPolynomial poly(5);
    CHECK(poly.degree() == 0);
    poly.add_constant(4.0);
    CHECK(poly.degree() == 0);
    poly.add_term({0, 2, 4}, 1.0);
    CHECK(poly.degree() == 3);
}

TEST_CASE("add_scaled is pointwise linear combination") {
    const auto a = random_poly(6, 15, 3, 1);
    const auto b = random_poly(6, 15, 3, 2);
    BinaryPolynomial combined(6);
    combined.add_scaled(a, 2.0);
    combined.add_scaled(b, -0.5);
    rng::Prng prng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Assignment x = random_assignment(6, prng);
        CHECK(combined.evaluate(x) ==
              doctest::Approx(2.0 * a.evaluate(x) - 0.5 * b.evaluate(x)).epsilon(1e-12));
    }
}
