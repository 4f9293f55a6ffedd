#include "uifs/line.hpp"

#include <algorithm>
#include <set>

namespace uifs::line {

bool endpoint_less(const Endpoint& a, const Endpoint& b) {
    if (a.kind != b.kind) {
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    }
    return a.kind == Endpoint::Kind::Finite && a.value < b.value;
}

std::string to_string(const Endpoint& e) {
    switch (e.kind) {
    case Endpoint::Kind::NegInf:
        return "-inf";
    case Endpoint::Kind::PosInf:
        return "inf";
    case Endpoint::Kind::Finite:
        return format_rational(e.value);
    }
    return "?";
}

Endpoint parse_endpoint(std::string_view text) {
    if (text == "-inf") {
        return Endpoint::neg_inf();
    }
    if (text == "inf" || text == "+inf") {
        return Endpoint::pos_inf();
    }
    return Endpoint::at(parse_rational(text));
}

RationalInterval RationalInterval::open(Rational a, Rational b) {
    RationalInterval i{Endpoint::at(std::move(a)), Endpoint::at(std::move(b)), true, true};
    validate_interval(i);
    return i;
}

RationalInterval RationalInterval::whole_line() {
    return RationalInterval{};
}

void validate_interval(const RationalInterval& i) {
    if (i.lo.kind == Endpoint::Kind::PosInf || i.hi.kind == Endpoint::Kind::NegInf) {
        throw std::invalid_argument("interval endpoints out of order");
    }
    if (i.lo.finite() && i.hi.finite()) {
        if (i.lo.value > i.hi.value) {
            throw std::invalid_argument("interval endpoints out of order");
        }
        if (i.lo.value == i.hi.value && (i.lo_open || i.hi_open)) {
            throw std::invalid_argument("degenerate interval must be closed on both sides");
        }
    }
}

bool RationalInterval::contains_point(const Rational& x) const {
    if (lo.finite()) {
        if (lo_open ? !(lo.value < x) : !(lo.value <= x)) {
            return false;
        }
    }
    if (hi.finite()) {
        if (hi_open ? !(x < hi.value) : !(x <= hi.value)) {
            return false;
        }
    }
    return true;
}

bool RationalInterval::contains(const RationalInterval& other) const {
    // Lower side: ours must extend at least as far down.
    if (lo.finite()) {
        if (!other.lo.finite()) {
            return false;
        }
        if (other.lo.value < lo.value) {
            return false;
        }
        if (other.lo.value == lo.value && lo_open && !other.lo_open) {
            return false;
        }
    }
    if (hi.finite()) {
        if (!other.hi.finite()) {
            return false;
        }
        if (other.hi.value > hi.value) {
            return false;
        }
        if (other.hi.value == hi.value && hi_open && !other.hi_open) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> RationalInterval::diameter() const {
    if (!lo.finite() || !hi.finite()) {
        return std::nullopt;
    }
    return hi.value - lo.value;
}

IntervalUnion IntervalUnion::empty() {
    return IntervalUnion();
}

IntervalUnion IntervalUnion::normalize(std::vector<RationalInterval> pieces) {
    for (const RationalInterval& p : pieces) {
        validate_interval(p);
    }
    std::sort(pieces.begin(), pieces.end(), [](const RationalInterval& a, const RationalInterval& b) {
        if (a.lo != b.lo) {
            return endpoint_less(a.lo, b.lo);
        }
        // Closed lower end sorts first at equal position.
        return !a.lo_open && b.lo_open;
    });
    IntervalUnion u;
    for (const RationalInterval& p : pieces) {
        if (u.pieces_.empty()) {
            u.pieces_.push_back(p);
            continue;
        }
        RationalInterval& last = u.pieces_.back();
        // Overlap or touch with at least one closed side merges.
        bool joins = false;
        if (!last.hi.finite()) {
            joins = true;
        } else if (!p.lo.finite()) {
            joins = true; // sorted order makes this impossible unless last covers everything
        } else if (p.lo.value < last.hi.value) {
            joins = true;
        } else if (p.lo.value == last.hi.value && (!p.lo_open || !last.hi_open)) {
            joins = true;
        }
        if (!joins) {
            u.pieces_.push_back(p);
            continue;
        }
        // Extend the upper end if p reaches further.
        if (last.hi.finite()) {
            if (!p.hi.finite()) {
                last.hi = p.hi;
                last.hi_open = true;
            } else if (p.hi.value > last.hi.value) {
                last.hi = p.hi;
                last.hi_open = p.hi_open;
            } else if (p.hi.value == last.hi.value && !p.hi_open) {
                last.hi_open = false;
            }
        }
    }
    return u;
}

bool IntervalUnion::covers_line() const {
    return pieces_.size() == 1 && !pieces_[0].lo.finite() && !pieces_[0].hi.finite();
}

bool IntervalUnion::contains_point(const Rational& x) const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const RationalInterval& p) { return p.contains_point(x); });
}

Rational g_base(const Rational& x) {
    if (x >= 0) {
        return x / (2 * (1 + x));
    }
    return x / (2 * (1 - x));
}

Rational g_inverse(const Rational& r) {
    if (!(r > Rational(-1, 2) && r < Rational(1, 2))) {
        throw std::invalid_argument("g inverse defined on (-1/2, 1/2) only");
    }
    if (r >= 0) {
        return 2 * r / (1 - 2 * r);
    }
    return 2 * r / (1 + 2 * r);
}

RationalInterval map_image_interval(const LipschitzShiftMap& f, const RationalInterval& i) {
    validate_interval(i);
    const Rational n(f.shift);
    RationalInterval out;
    if (i.lo.finite()) {
        out.lo = Endpoint::at(n + g_base(i.lo.value));
        out.lo_open = i.lo_open;
    } else {
        out.lo = Endpoint::at(n - Rational(1, 2));
        out.lo_open = true;
    }
    if (i.hi.finite()) {
        out.hi = Endpoint::at(n + g_base(i.hi.value));
        out.hi_open = i.hi_open;
    } else {
        out.hi = Endpoint::at(n + Rational(1, 2));
        out.hi_open = true;
    }
    return out;
}

std::optional<Rational> sup_diam_at_depth(int k) {
    if (k < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    if (k == 0) {
        return std::nullopt; // the whole line
    }
    return rational_pow(2, -(k - 1));
}

namespace {

// Largest c with (x - c, x + c) inside the piece; empty when x is not
// interior.
std::optional<Rational> piece_margin(const RationalInterval& piece, const Rational& x) {
    if (piece.lo.finite() && !(piece.lo.value < x)) {
        return std::nullopt;
    }
    if (piece.hi.finite() && !(x < piece.hi.value)) {
        return std::nullopt;
    }
    std::optional<Rational> margin;
    if (piece.lo.finite()) {
        margin = x - piece.lo.value;
    }
    if (piece.hi.finite()) {
        const Rational up = piece.hi.value - x;
        if (!margin || up < *margin) {
            margin = up;
        }
    }
    if (!margin) {
        return Rational(1); // both sides unbounded; any margin works, 1 is plenty
    }
    return margin;
}

} // namespace

ScStarLineResult sc_star_line(const IntervalUnion& u,
                              const std::vector<RationalInterval>& basics) {
    for (const RationalInterval& b : basics) {
        if (!b.lo.finite() || !b.hi.finite()) {
            throw std::invalid_argument("basic intervals must have finite endpoints");
        }
        if (!(b.lo.value < b.hi.value)) {
            throw std::invalid_argument("degenerate basic interval");
        }
    }
    std::vector<RationalInterval> everything(u.pieces());
    everything.insert(everything.end(), basics.begin(), basics.end());
    if (!IntervalUnion::normalize(everything).covers_line()) {
        throw CoveringError("covering does not exhaust the line");
    }

    ScStarLineResult result;
    if (basics.empty()) {
        result.k = 0;
        return result;
    }

    // Margin of a point within covering set `index` (0 = U, i >= 1 = basic).
    const auto set_margin = [&](std::size_t index, const Rational& x) -> std::optional<Rational> {
        if (index == 0) {
            std::optional<Rational> best;
            for (const RationalInterval& piece : u.pieces()) {
                const auto m = piece_margin(piece, x);
                if (m && (!best || *m > *best)) {
                    best = m;
                }
            }
            return best;
        }
        return piece_margin(basics[index - 1], x);
    };

    Rational c_min(-1);
    for (const RationalInterval& b : basics) {
        for (const Rational& x : {b.lo.value, b.hi.value}) {
            std::optional<Rational> best;
            std::size_t best_index = 0;
            for (std::size_t index = 0; index < basics.size() + 1; ++index) {
                const auto m = set_margin(index, x);
                if (m && (!best || *m > *best)) {
                    best = m;
                    best_index = index;
                }
            }
            if (!best) {
                // Open covering sets leave every covered point interior to one.
                throw CoveringError("endpoint " + format_rational(x) +
                                    " is interior to no covering set");
            }
            result.certificate.push_back(MarginCertEntry{x, best_index, *best});
            if (c_min < 0 || *best < c_min) {
                c_min = *best;
            }
        }
        const Rational width = b.hi.value - b.lo.value;
        if (width < c_min) {
            c_min = width;
        }
    }
    const Rational c = c_min / 2;
    result.c = c;

    int k = 1;
    Rational bound(1); // diameter bound at depth 1
    while (!(bound < c)) {
        bound /= 2;
        ++k;
    }
    result.k = k;
    result.verdict = Verdict::HoldsWithSoundBound;
    return result;
}

ClosureCheckResult attractor_closure_check(std::span<const Rational> samples,
                                           const Rational& epsilon) {
    ClosureCheckResult result;
    const Rational half(1, 2);
    const auto attained = [&](const Rational& q) {
        // Nearest integer n = floor(q + 1/2); q must not be a half-integer
        // here, so q - n lands in (-1/2, 1/2).
        const Rational shifted = q + half;
        const BigInt num = boost::multiprecision::numerator(shifted);
        const BigInt den = boost::multiprecision::denominator(shifted);
        BigInt floor = num / den;
        if (num < 0 && floor * den != num) {
            --floor;
        }
        const Rational n(floor);
        const Rational r = q - n;
        if (!(r > -half && r < half)) {
            return false;
        }
        const Rational x = g_inverse(r);
        return n + g_base(x) == q;
    };
    for (const Rational& q : samples) {
        ++result.checked;
        const bool half_integer =
            boost::multiprecision::denominator(q) == 2;
        const bool ok = half_integer ? attained(q - epsilon) && attained(q + epsilon)
                                     : attained(q);
        if (!ok) {
            result.ok = false;
            result.failure = q;
            return result;
        }
    }
    return result;
}

std::vector<Rational> rational_grid(const Rational& bound, int max_abs_num, int max_den) {
    std::set<Rational> grid;
    for (int den = 1; den <= max_den; ++den) {
        for (int num = -max_abs_num; num <= max_abs_num; ++num) {
            const Rational q(num, den);
            if (abs(q) <= bound) {
                grid.insert(q);
            }
        }
    }
    return std::vector<Rational>(grid.begin(), grid.end());
}

} // namespace uifs::line
