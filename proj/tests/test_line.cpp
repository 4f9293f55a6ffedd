#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uifs/line.hpp"

#include <random>

using namespace uifs;
using namespace uifs::line;

namespace {

RationalInterval make_open(long long a_num, long long a_den, long long b_num, long long b_den) {
    return RationalInterval::open(Rational(a_num, a_den), Rational(b_num, b_den));
}

Rational random_rational(std::mt19937_64& rng, int span) {
    const long long num = static_cast<long long>(rng() % (2 * span * 10 + 1)) - span * 10;
    const long long den = 1 + static_cast<long long>(rng() % 10);
    return Rational(num, den);
}

} // namespace

TEST_CASE("base map values and inverse") {
    CHECK(g_base(Rational(0)) == Rational(0));
    CHECK(g_base(Rational(4)) == Rational(2, 5));
    CHECK(g_base(Rational(-4)) == Rational(-2, 5));
    CHECK(g_inverse(Rational(2, 5)) == Rational(4));
    CHECK(g_inverse(g_base(Rational(17, 3))) == Rational(17, 3));
    CHECK_THROWS_AS(g_inverse(Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("base map is strictly increasing and Lipschitz 1/2") {
    std::mt19937_64 rng(5);
    std::vector<Rational> grid;
    for (int i = -40; i <= 40; ++i) {
        grid.emplace_back(i, 4);
    }
    for (int i = 0; i < 200; ++i) {
        grid.push_back(random_rational(rng, 20));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const Rational &x = grid[i], &y = grid[j];
            if (x == y) {
                continue;
            }
            const Rational dg = g_base(x) - g_base(y);
            const Rational dx = x - y;
            CHECK(((dx > 0) == (dg > 0))); // strictly increasing
            CHECK(2 * abs(dg) <= abs(dx)); // Lipschitz constant 1/2
        }
    }
}

TEST_CASE("interval images") {
    const RationalInterval whole = RationalInterval::whole_line();
    const RationalInterval i0 = map_image_interval(LipschitzShiftMap{0}, whole);
    CHECK(i0.lo == Endpoint::at(Rational(-1, 2)));
    CHECK(i0.hi == Endpoint::at(Rational(1, 2)));
    CHECK(i0.lo_open);
    CHECK(i0.hi_open);

    const RationalInterval i3 = map_image_interval(LipschitzShiftMap{3}, whole);
    CHECK(i3.lo == Endpoint::at(Rational(5, 2)));
    CHECK(i3.hi == Endpoint::at(Rational(7, 2)));

    // fixed point at 0
    RationalInterval point;
    point.lo = point.hi = Endpoint::at(Rational(0));
    point.lo_open = point.hi_open = false;
    const RationalInterval image = map_image_interval(LipschitzShiftMap{0}, point);
    CHECK(image.lo == Endpoint::at(Rational(0)));
    CHECK(image.hi == Endpoint::at(Rational(0)));

    // monotone: nested intervals have nested images
    const RationalInterval inner = make_open(-1, 1, 2, 1);
    const RationalInterval outer = make_open(-5, 1, 3, 1);
    CHECK(outer.contains(inner));
    CHECK(map_image_interval(LipschitzShiftMap{2}, outer)
              .contains(map_image_interval(LipschitzShiftMap{2}, inner)));
}

TEST_CASE("interval union normalization and covering") {
    const auto u = IntervalUnion::normalize({make_open(0, 1, 1, 1), make_open(1, 2, 2, 1)});
    CHECK(u.pieces().size() == 1);
    CHECK(u.pieces()[0] == make_open(0, 1, 2, 1));

    // open pieces touching at a point do not merge
    const auto split = IntervalUnion::normalize({make_open(0, 1, 1, 1), make_open(1, 1, 2, 1)});
    CHECK(split.pieces().size() == 2);
    CHECK_FALSE(split.contains_point(Rational(1)));

    RationalInterval left;
    left.hi = Endpoint::at(Rational(1, 4));
    RationalInterval right;
    right.lo = Endpoint::at(Rational(7, 8));
    const auto uu = IntervalUnion::normalize({left, right, make_open(0, 1, 1, 1)});
    CHECK(uu.covers_line());
    CHECK_FALSE(IntervalUnion::normalize({left, right}).covers_line());
}

TEST_CASE("diameter bound per depth") {
    CHECK(sup_diam_at_depth(0) == std::nullopt);
    CHECK(sup_diam_at_depth(1) == Rational(1));
    CHECK(sup_diam_at_depth(5) == Rational(1, 16));
}

TEST_CASE("constant-c procedure on the worked covering") {
    RationalInterval left;
    left.hi = Endpoint::at(Rational(1, 4));
    RationalInterval right;
    right.lo = Endpoint::at(Rational(7, 8));
    const auto u = IntervalUnion::normalize({left, right});
    const auto result = sc_star_line(u, {make_open(0, 1, 1, 1)});
    CHECK(result.verdict == Verdict::HoldsWithSoundBound);
    CHECK(result.c == Rational(1, 16));
    CHECK(result.k == 6);
    REQUIRE(result.certificate.size() == 2);
    CHECK(result.certificate[0].point == Rational(0));
    CHECK(result.certificate[0].margin == Rational(1, 4));
    CHECK(result.certificate[0].set_index == 0); // inside U
    CHECK(result.certificate[1].point == Rational(1));
    CHECK(result.certificate[1].margin == Rational(1, 8));

    // whole line as U, no basics
    CHECK(sc_star_line(IntervalUnion::normalize({RationalInterval::whole_line()}), {}).k == 0);

    // gaps are rejected
    CHECK_THROWS_AS(sc_star_line(IntervalUnion::normalize({left}), {}), CoveringError);
    // degenerate basic
    CHECK_THROWS_AS(sc_star_line(u, {RationalInterval::open(Rational(1), Rational(1))}),
                    std::invalid_argument);
}

TEST_CASE("sampled composition images respect the bound and the certificate") {
    RationalInterval left;
    left.hi = Endpoint::at(Rational(1, 4));
    RationalInterval right;
    right.lo = Endpoint::at(Rational(7, 8));
    const auto u = IntervalUnion::normalize({left, right});
    const std::vector<RationalInterval> basics = {make_open(0, 1, 1, 1)};
    const auto result = sc_star_line(u, basics);

    std::mt19937_64 rng(99);
    for (int len = 1; len <= 8; ++len) {
        for (int trial = 0; trial < 200; ++trial) {
            RationalInterval image = RationalInterval::whole_line();
            for (int i = 0; i < len; ++i) {
                const long long shift = static_cast<long long>(rng() % 11) - 5;
                image = map_image_interval(LipschitzShiftMap{shift}, image);
            }
            const auto diam = image.diameter();
            REQUIRE(diam.has_value());
            CHECK(*diam <= *sup_diam_at_depth(len));
            if (len >= result.k) {
                bool contained = std::any_of(
                    u.pieces().begin(), u.pieces().end(),
                    [&](const RationalInterval& p) { return p.contains(image); });
                contained = contained ||
                            std::any_of(basics.begin(), basics.end(),
                                        [&](const RationalInterval& b) { return b.contains(image); });
                CHECK(contained);
            }
        }
    }
}

TEST_CASE("attractor closure check") {
    // q = 17/5: preimage 4 under the shift-3 map
    CHECK(g_base(Rational(4)) + 3 == Rational(17, 5));
    const std::vector<Rational> qs = {Rational(17, 5), Rational(0), Rational(1, 2)};
    const auto result = attractor_closure_check(qs);
    CHECK(result.ok);
    CHECK(result.checked == 3);

    // a grid including negatives and half-integers
    const auto grid = rational_grid(Rational(3), 30, 12);
    CHECK(attractor_closure_check(grid).ok);
    CHECK(std::find(grid.begin(), grid.end(), Rational(-5, 2)) != grid.end());
}

TEST_CASE("endpoint text round trip") {
    CHECK(to_string(parse_endpoint("-inf")) == "-inf");
    CHECK(to_string(parse_endpoint("7/8")) == "7/8");
    CHECK(parse_endpoint("3") == Endpoint::at(Rational(3)));
    CHECK_THROWS_AS(parse_endpoint("x"), ConfigError);
}
