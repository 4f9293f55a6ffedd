#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

#include "uifs/ball.hpp"

#include <random>
#include <sstream>

using namespace uifs;
using oracles::all_field_elements;
using oracles::ball_points;
using oracles::set_semantics_match;

namespace {

Ball B(const DvrContext& ctx, int radius, std::vector<std::uint32_t> digits, int offset = 0) {
    return Ball(Element(ctx, offset, std::move(digits)), radius);
}

} // namespace

TEST_CASE("ball canonical form and membership") {
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    const Ball b(Element(ctx, 0, {1, 1, 1, 1}), 2);
    CHECK(b.center() == Element(ctx, 0, {1, 1}));
    CHECK(b.contains(Element(ctx, 0, {1, 1, 0, 1})));
    CHECK_FALSE(b.contains(Element(ctx, 0, {1, 0, 0, 1})));
    // every point of a ball is a center
    CHECK(Ball(Element(ctx, 0, {1, 1, 0, 1}), 2) == b);
    CHECK_THROWS_AS(Ball(Element::zero(ctx), 5), PrecisionError);
    CHECK_THROWS_AS(Ball(Element::zero(ctx), -5), PrecisionError);
}

TEST_CASE("normalize merges siblings and drops contained balls") {
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    const ClopenSet whole = ClopenSet::of(B(ctx, 0, {}));

    CHECK(ClopenSet::normalize({B(ctx, 1, {0}), B(ctx, 1, {1})}) == whole);
    CHECK(ClopenSet::normalize({B(ctx, 2, {1}), B(ctx, 1, {1})}) ==
          ClopenSet::of(B(ctx, 1, {1})));
    CHECK(ClopenSet::normalize({}).is_empty());

    // Deep merge collapses a full coset tree.
    std::vector<Ball> leaves = coset_decompose(B(ctx, 0, {}), 3);
    CHECK(leaves.size() == 8);
    CHECK(ClopenSet::normalize(leaves) == whole);
}

TEST_CASE("union of all radius-1 balls is the ring") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const DvrContext ctx(p, CharMode::EqualChar, 3);
        std::vector<Ball> balls;
        for (std::uint32_t s = 0; s < p; ++s) {
            balls.push_back(B(ctx, 1, {s}));
        }
        CHECK(ClopenSet::normalize(balls) == ClopenSet::of(B(ctx, 0, {})));
    }
}

TEST_CASE("membership, subset, intersection") {
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    CHECK(ClopenSet::of(B(ctx, 0, {})).contains_ball(B(ctx, 1, {1})));
    CHECK(set_intersect(ClopenSet::of(B(ctx, 1, {0})), ClopenSet::of(B(ctx, 1, {1}))).is_empty());
    const ClopenSet mixed = ClopenSet::normalize({B(ctx, 2, {1, 0}), B(ctx, 3, {0, 1, 1})});
    CHECK(mixed.subset_of(ClopenSet::of(B(ctx, 0, {}))));
    CHECK_FALSE(ClopenSet::of(B(ctx, 0, {})).subset_of(mixed));
    CHECK(set_intersect(mixed, ClopenSet::of(B(ctx, 1, {1}))) ==
          ClopenSet::of(B(ctx, 2, {1, 0})));
}

TEST_CASE("refine to uniform radius") {
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    const std::vector<Ball> covering = {B(ctx, 1, {0}), B(ctx, 2, {1}), B(ctx, 2, {1, 1})};
    const auto refined = refine_to_uniform_radius(ctx, covering, 2);
    CHECK(refined == coset_decompose(B(ctx, 0, {}), 2));
    CHECK(refined.size() == 4);

    CHECK(refine_to_uniform_radius(ctx, {B(ctx, 0, {})}, 0) ==
          std::vector<Ball>{B(ctx, 0, {})});

    // Dropping B(2)@1+t leaves it uncovered.
    try {
        refine_to_uniform_radius(ctx, {B(ctx, 1, {0}), B(ctx, 2, {1})}, 2);
        FAIL("expected CoveringError");
    } catch (const CoveringError& e) {
        CHECK(parse_ball_text(ctx, e.witness_text) == B(ctx, 2, {1, 1}));
    }

    CHECK_THROWS_AS(refine_to_uniform_radius(ctx, covering, 1), std::invalid_argument);
}

TEST_CASE("coset decomposition") {
    const DvrContext c2(2, CharMode::EqualChar, 4);
    const auto quarters = coset_decompose(B(c2, 0, {}), 2);
    CHECK(quarters == std::vector<Ball>{B(c2, 2, {0, 0}), B(c2, 2, {0, 1}), B(c2, 2, {1, 0}),
                                        B(c2, 2, {1, 1})});
    CHECK(coset_decompose(B(c2, 2, {1}), 2) == std::vector<Ball>{B(c2, 2, {1})});

    const DvrContext c3(3, CharMode::EqualChar, 2);
    const auto thirds = coset_decompose(Ball(Element::zero(c3), -1), 0);
    CHECK(thirds.size() == 3);
    CHECK(thirds[1] == Ball(Element(c3, -1, {1}), 0));

    // decompose-then-normalize is the identity
    for (const Ball& b : {B(c2, 1, {1}), B(c2, 0, {}), Ball(Element::zero(c2), -2)}) {
        for (int m = b.radius(); m <= 3; ++m) {
            CHECK(ClopenSet::normalize(coset_decompose(b, m)) == ClopenSet::of(b));
        }
    }
}

TEST_CASE("normalize is idempotent and semantics-preserving (randomized)") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 3u}) {
        const int n = p == 2 ? 5 : 3;
        const DvrContext ctx(p, CharMode::EqualChar, n);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Ball> balls;
            const int count = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < count; ++i) {
                const int radius = static_cast<int>(rng() % (n + 1));
                std::vector<std::uint32_t> digits;
                for (int j = 0; j < radius; ++j) {
                    digits.push_back(static_cast<std::uint32_t>(rng() % p));
                }
                balls.push_back(B(ctx, radius, std::move(digits)));
            }
            const ClopenSet set = ClopenSet::normalize(balls);
            CHECK(ClopenSet::normalize(set.balls()) == set);
            // Same points as the raw union.
            std::vector<Element> points;
            for (const Ball& b : balls) {
                for (const Element& x : ball_points(b)) {
                    if (std::find(points.begin(), points.end(), x) == points.end()) {
                        points.push_back(x);
                    }
                }
            }
            CHECK(set_semantics_match(set, points, ctx, 0));
            // Canonical invariants: pairwise disjoint, none contained.
            for (std::size_t i = 0; i < set.balls().size(); ++i) {
                for (std::size_t j = i + 1; j < set.balls().size(); ++j) {
                    CHECK_FALSE(set.balls()[i].intersects(set.balls()[j]));
                }
            }
        }
    }
}

TEST_CASE("boolean algebra laws on random clopen sets") {
    std::mt19937_64 rng(7);
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    const auto random_set = [&] {
        std::vector<Ball> balls;
        const int count = static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) {
            const int radius = static_cast<int>(rng() % 5);
            std::vector<std::uint32_t> digits;
            for (int j = 0; j < radius; ++j) {
                digits.push_back(static_cast<std::uint32_t>(rng() % 2));
            }
            balls.push_back(B(ctx, radius, std::move(digits)));
        }
        return ClopenSet::normalize(std::move(balls));
    };
    for (int trial = 0; trial < 120; ++trial) {
        const ClopenSet a = random_set();
        const ClopenSet b = random_set();
        const ClopenSet c = random_set();
        CHECK(set_union(a, b) == set_union(b, a));
        CHECK(set_intersect(a, b) == set_intersect(b, a));
        CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
        CHECK(set_intersect(set_intersect(a, b), c) == set_intersect(a, set_intersect(b, c)));
        CHECK(set_intersect(a, set_union(b, c)) ==
              set_union(set_intersect(a, b), set_intersect(a, c)));
        CHECK(set_union(a, set_intersect(a, b)) == a); // absorption
        CHECK(set_intersect(a, set_union(a, b)) == a);
        CHECK(set_union(set_difference(a, b), set_intersect(a, b)) == a);
    }
}

TEST_CASE("ball text round trip and covering files") {
    const DvrContext ctx(2, CharMode::EqualChar, 4);
    const Ball b = B(ctx, 2, {1, 1});
    CHECK(to_ball_text(b) == "B(2)@digits=1,1,0,0");
    CHECK(parse_ball_text(ctx, to_ball_text(b)) == b);
    const Ball f(Element(ctx, -1, {1}), 0);
    CHECK(parse_ball_text(ctx, to_ball_text(f)) == f);
    CHECK_THROWS_AS(parse_ball_text(ctx, "B(x)@digits=1"), ConfigError);
    CHECK_THROWS_AS(parse_ball_text(ctx, "digits=1"), ConfigError);

    std::istringstream file("# covering\nB(1)@digits=0\n\n  B(2)@digits=1,0\nB(2)@digits=1,1\n");
    const auto balls = parse_ball_lines(ctx, file);
    CHECK(balls.size() == 3);
    CHECK(balls[0] == B(ctx, 1, {0}));
    CHECK(balls[2] == B(ctx, 2, {1, 1}));
}
