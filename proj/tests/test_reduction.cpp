#include <doctest.h>

#include "hqp/encode.hpp"
#include "hqp/exact.hpp"
#include "hqp/quadratize.hpp"
#include "hqp/text_io.hpp"

using namespace hqp;

namespace {

// Minimum of a quadratized polynomial over its auxiliaries at a fixed setting
// of the original variables.
double min_over_aux(const BinaryPolynomial &poly, const Assignment &original) {
    const int extra = poly.num_vars() - static_cast<int>(original.size());
    REQUIRE(extra >= 0);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (1ull << extra); ++mask) {
        Assignment x = original;
        for (int a = 0; a < extra; ++a)
            x.push_back(static_cast<std::uint8_t>((mask >> a) & 1u));
        best = std::min(best, poly.evaluate(x));
    }
    return best;
}

BinaryPolynomial random_hubo(int num_vars, int num_terms, int max_degree, std::uint64_t seed) {
    rng::Prng prng(seed);
    BinaryPolynomial poly(num_vars);
    for (int t = 0; t < num_terms; ++t) {
        const int deg = 1 + static_cast<int>(prng.below(max_degree));
        BinaryPolynomial::Term vars;
        for (int d = 0; d < deg; ++d)
            vars.push_back(static_cast<int>(prng.below(num_vars)));
        poly.add_term(std::move(vars), static_cast<double>(prng.below(11)) - 5.0);
    }
    return poly;
}

} // namespace

TEST_CASE("quadratization of a single cubic term") {
    BinaryPolynomial cubic(3);
    cubic.add_term({0, 1, 2}, -2.0);
    const auto result = quadratize_rosenberg(cubic);
    CHECK(result.poly.degree() <= 2);
    CHECK(result.num_auxiliary == 1);
    CHECK(result.poly.num_vars() == 4);
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        const Assignment x = assignment_from_index(idx, 3);
        CHECK(min_over_aux(result.poly, x) == doctest::Approx(cubic.evaluate(x)).epsilon(1e-12));
    }
}

TEST_CASE("quadratization leaves quadratics untouched") {
    BinaryPolynomial quad(3);
    quad.add_term({0, 1}, 1.5);
    quad.add_term({2}, -1.0);
    const auto result = quadratize_rosenberg(quad);
    CHECK(result.num_auxiliary == 0);
    CHECK(result.poly == quad);
}

TEST_CASE("quadratization preserves minima over auxiliaries on random instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto hubo = random_hubo(6, 12, 5, 300 + seed);
        const auto result = quadratize_rosenberg(hubo);
        CHECK(result.poly.degree() <= 2);
        for (std::uint64_t idx = 0; idx < (1u << 6); ++idx) {
            const Assignment x = assignment_from_index(idx, 6);
            CHECK(min_over_aux(result.poly, x) ==
                  doctest::Approx(hubo.evaluate(x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadratization of an encoded 4-edge energy keeps the balanced minimum") {
    const Hypergraph h(4, {{0, 1, 2, 3}});
    EncodingSpec spec;
    spec.lambda = 2.0;
    const auto energy = build_energy(h, spec);
    REQUIRE(energy.degree() == 4);
    const auto result = quadratize_rosenberg(energy);
    CHECK(result.poly.degree() <= 2);

    const auto [orig_min, orig_arg] = exact_min_poly(energy);
    const auto [quad_min, quad_arg] = exact_min_poly(result.poly);
    CHECK(quad_min == doctest::Approx(orig_min).epsilon(1e-9));
    // every quadratized minimizer restricts to an original minimizer
    for (const auto &x : quad_arg) {
        const Assignment original(x.begin(), x.begin() + 4);
        CHECK(energy.evaluate(original) == doctest::Approx(orig_min).epsilon(1e-9));
    }
}

TEST_CASE("quadratization is deterministic") {
    const auto hubo = random_hubo(6, 12, 5, 42);
    const auto a = quadratize_rosenberg(hubo);
    const auto b = quadratize_rosenberg(hubo);
    CHECK(a.poly == b.poly);
    CHECK(a.num_auxiliary == b.num_auxiliary);
}

TEST_CASE("spin-model conversion matches the polynomial at every assignment") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto poly = quadratize_rosenberg(random_hubo(5, 10, 4, 500 + seed)).poly;
        const auto model = to_ising(poly);
        const int n = poly.num_vars();
        for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
            const Assignment x = assignment_from_index(idx, n);
            std::vector<std::int8_t> z(n);
            for (int i = 0; i < n; ++i)
                z[i] = static_cast<std::int8_t>(2 * x[i] - 1);
            CHECK(model.energy(z) == doctest::Approx(poly.evaluate(x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("spin-model conversion hand values") {
    BinaryPolynomial poly(2);
    poly.add_term({0}, 2.0);
    poly.add_term({0, 1}, 4.0);
    const auto model = to_ising(poly);
    CHECK(model.field[0] == doctest::Approx(1.0 + 1.0)); // 2/2 + 4/4
    CHECK(model.field[1] == doctest::Approx(1.0));
    CHECK(model.coupling.at({0, 1}) == doctest::Approx(1.0));
    CHECK(model.offset == doctest::Approx(1.0 + 1.0));

    BinaryPolynomial cubic(3);
    cubic.add_term({0, 1, 2}, 1.0);
    CHECK_THROWS_AS(to_ising(cubic), std::invalid_argument);
}

TEST_CASE("spin-model round trip is the identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto poly = quadratize_rosenberg(random_hubo(5, 10, 4, 700 + seed)).poly;
        const auto back = from_ising(to_ising(poly));
        for (std::uint64_t idx = 0; idx < (1u << 5); ++idx) {
            const Assignment x = assignment_from_index(idx, 5);
            Assignment full = x;
            full.resize(poly.num_vars(), 0);
            CHECK(back.evaluate(full) == doctest::Approx(poly.evaluate(full)).epsilon(1e-9));
        }
    }
}

TEST_CASE("polynomial text round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto poly = random_hubo(6, 12, 5, 900 + seed);
        CHECK(polynomial_from_text(polynomial_to_text(poly)) == poly);
    }
    const BinaryPolynomial empty(3);
    CHECK(polynomial_to_text(empty) == "vars 3 maxdeg 0\n");
    CHECK(polynomial_from_text("vars 3 maxdeg 0\n") == empty);
    CHECK_THROWS_AS(polynomial_from_text("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_text("vars 2 maxdeg 1\n1.0 0 x\n"), std::invalid_argument);
}

TEST_CASE("ising text round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto model = to_ising(quadratize_rosenberg(random_hubo(5, 10, 4, 1100 + seed)).poly);
        const auto back = ising_from_text(ising_to_text(model));
        CHECK(back.num_spins == model.num_spins);
        CHECK(back.offset == model.offset);
        CHECK(back.field == model.field);
        CHECK(back.coupling == model.coupling);
    }
    CHECK_THROWS_AS(ising_from_text("spins 2\nJ 0 0 1.0\n"), std::invalid_argument);
    CHECK_THROWS_AS(ising_from_text("spins 2\nh 5 1.0\n"), std::invalid_argument);
    CHECK_THROWS_AS(ising_from_text("spins 2\nQ 0 1 1.0\n"), std::invalid_argument);
}
