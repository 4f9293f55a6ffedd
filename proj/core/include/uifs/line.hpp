#pragma once

#include "uifs/errors.hpp"
#include "uifs/rational.hpp"
#include "uifs/verdict.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uifs::line {

// Interval endpoint: a rational or an infinity marker.
struct Endpoint {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static Endpoint neg_inf() { return {Kind::NegInf, Rational(0)}; }
    static Endpoint pos_inf() { return {Kind::PosInf, Rational(0)}; }
    static Endpoint at(Rational v) { return {Kind::Finite, std::move(v)}; }

    bool finite() const { return kind == Kind::Finite; }
    bool operator==(const Endpoint&) const = default;
};

// Order on the extended rationals.
bool endpoint_less(const Endpoint& a, const Endpoint& b);

std::string to_string(const Endpoint& e);
Endpoint parse_endpoint(std::string_view text); // "num/den", "-inf", "inf"

// An interval with openness flags; infinite sides are always open. A
// degenerate closed point [a,a] is allowed.
struct RationalInterval {
    Endpoint lo = Endpoint::neg_inf();
    Endpoint hi = Endpoint::pos_inf();
    bool lo_open = true;
    bool hi_open = true;

    bool operator==(const RationalInterval&) const = default;

    static RationalInterval open(Rational a, Rational b);
    static RationalInterval whole_line();

    bool contains_point(const Rational& x) const;
    bool contains(const RationalInterval& other) const;
    // Exact width; empty for an unbounded interval.
    std::optional<Rational> diameter() const;
};

void validate_interval(const RationalInterval& i);

// Normalized disjoint sorted union of intervals; overlapping or touching
// pieces (where at least one touching endpoint is closed) are merged.
class IntervalUnion {
  public:
    static IntervalUnion empty();
    static IntervalUnion normalize(std::vector<RationalInterval> pieces);

    const std::vector<RationalInterval>& pieces() const { return pieces_; }
    bool covers_line() const;
    bool contains_point(const Rational& x) const;

  private:
    std::vector<RationalInterval> pieces_;
};

// f_n(x) = n + g(x) with the fixed base map g(x) = x / (2 (1 + |x|)):
// strictly increasing, Lipschitz with constant 1/2, rational-in/rational-out,
// image (-1/2, 1/2).
struct LipschitzShiftMap {
    long long shift = 0;
};

Rational g_base(const Rational& x);
// Inverse of g on (-1/2, 1/2): x = 2r / (1 - 2|r|).
Rational g_inverse(const Rational& r);

// Exact image interval: g is strictly increasing, so the endpoints map to
// the endpoints (infinite sides land on the open bounds n -/+ 1/2).
RationalInterval map_image_interval(const LipschitzShiftMap& f, const RationalInterval& i);

// Upper bound (1/2)^(k-1) on the diameter of any depth-k composition image
// of the whole line; empty marker (infinite) at k = 0.
std::optional<Rational> sup_diam_at_depth(int k);

// Certificate row of the proof-constant computation: for one basic-interval
// endpoint, the covering set whose interior contains its margin
// neighbourhood. Set index 0 is U; index i >= 1 is basic i-1.
struct MarginCertEntry {
    Rational point;
    std::size_t set_index = 0;
    Rational margin;

    bool operator==(const MarginCertEntry&) const = default;
};

struct ScStarLineResult {
    Verdict verdict = Verdict::HoldsWithSoundBound;
    int k = 0;
    std::optional<Rational> c; // shrinking constant; empty when no basics
    std::vector<MarginCertEntry> certificate;

    bool operator==(const ScStarLineResult&) const = default;
};

// The constant-c procedure on the covering {U, (a_1,b_1), ..., (a_n,b_n)}:
// per-endpoint margins c_i, c = 1/2 min(c_i, widths), and the least depth k
// whose diameter bound drops below c. Sound, minimality not claimed.
ScStarLineResult sc_star_line(const IntervalUnion& u,
                              const std::vector<RationalInterval>& basics);

struct ClosureCheckResult {
    bool ok = true;
    std::optional<Rational> failure;
    std::uint64_t checked = 0;
};

// Verifies that the sampled rationals are attained by some f_n exactly
// (solve q - n in (-1/2, 1/2), invert g); half-integers are not attained but
// must have attained points at distance epsilon on both sides.
ClosureCheckResult attractor_closure_check(std::span<const Rational> samples,
                                           const Rational& epsilon = Rational(1, 1000000));

// The rational grid num/den with |num| <= max_abs_num, 1 <= den <= max_den,
// |q| <= bound, deduplicated, in increasing order.
std::vector<Rational> rational_grid(const Rational& bound, int max_abs_num, int max_den);

} // namespace uifs::line
