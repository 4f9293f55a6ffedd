#include "uifs/ball.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace uifs {

namespace {

// Center with digits at indices >= radius zeroed out.
Element truncate_above(const Element& a, int radius) {
    const DvrContext& ctx = a.context();
    if (radius <= a.offset()) {
        return Element::zero(ctx);
    }
    std::vector<std::uint32_t> digits;
    const int hi = std::min(radius, ctx.precision);
    for (int j = a.offset(); j < hi; ++j) {
        digits.push_back(a.digit_at(j));
    }
    return Element(ctx, a.offset(), std::move(digits));
}

} // namespace

Ball::Ball(Element center, int radius)
    : center_(truncate_above(center, radius)), radius_(radius) {
    const int n = center_.context().precision;
    if (radius_ > n) {
        throw PrecisionError("ball radius exceeds precision");
    }
    if (radius_ < -n) {
        throw PrecisionError("ball radius below -precision");
    }
    if (center_.offset() < -n) {
        throw PrecisionError("ball center offset below -precision");
    }
}

bool Ball::contains(const Element& x) const {
    const auto v = valuation(sub(center_, x));
    return !v || *v >= radius_;
}

bool Ball::contains(const Ball& other) const {
    return other.radius_ >= radius_ && contains(other.center_);
}

bool Ball::intersects(const Ball& other) const {
    return contains(other) || other.contains(*this);
}

bool Ball::operator==(const Ball& other) const {
    return radius_ == other.radius_ && center_ == other.center_;
}

bool Ball::less(const Ball& a, const Ball& b) {
    if (a.radius_ != b.radius_) {
        return a.radius_ < b.radius_;
    }
    return Element::less(a.center_, b.center_);
}

ClopenSet ClopenSet::empty() {
    return ClopenSet();
}

ClopenSet ClopenSet::of(const Ball& ball) {
    return normalize({ball});
}

ClopenSet ClopenSet::normalize(std::vector<Ball> balls) {
    ClopenSet set;
    if (balls.empty()) {
        return set;
    }
    const DvrContext ctx = balls.front().context();
    for (const Ball& b : balls) {
        if (!(b.context() == ctx)) {
            throw std::invalid_argument("clopen set mixes contexts");
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // Drop balls contained in another (duplicates keep one copy).
        std::vector<Ball> kept;
        for (std::size_t i = 0; i < balls.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < balls.size() && !redundant; ++j) {
                if (i == j) {
                    continue;
                }
                if (balls[j].contains(balls[i]) &&
                    !(balls[i] == balls[j] && j > i)) {
                    redundant = true;
                }
            }
            if (!redundant) {
                kept.push_back(balls[i]);
            }
        }
        if (kept.size() != balls.size()) {
            changed = true;
        }
        balls = std::move(kept);
        // Merge complete sibling families into their parent ball.
        std::map<std::pair<int, std::string>, std::vector<std::size_t>> families;
        for (std::size_t i = 0; i < balls.size(); ++i) {
            const int r = balls[i].radius();
            if (r - 1 < -ctx.precision) {
                continue;
            }
            const Ball parent(balls[i].center(), r - 1);
            families[{r, to_ball_text(parent)}].push_back(i);
        }
        std::vector<bool> merged(balls.size(), false);
        std::vector<Ball> parents;
        for (const auto& [key, members] : families) {
            if (members.size() == ctx.p) {
                for (std::size_t idx : members) {
                    merged[idx] = true;
                }
                parents.emplace_back(balls[members.front()].center(), key.first - 1);
            }
        }
        if (!parents.empty()) {
            changed = true;
            std::vector<Ball> next;
            for (std::size_t i = 0; i < balls.size(); ++i) {
                if (!merged[i]) {
                    next.push_back(balls[i]);
                }
            }
            next.insert(next.end(), parents.begin(), parents.end());
            balls = std::move(next);
        }
    }
    std::sort(balls.begin(), balls.end(), Ball::less);
    set.balls_ = std::move(balls);
    return set;
}

bool ClopenSet::member(const Element& x) const {
    return std::any_of(balls_.begin(), balls_.end(),
                       [&](const Ball& b) { return b.contains(x); });
}

bool ClopenSet::contains_ball(const Ball& b) const {
    // In canonical form a ball lies in the set iff it lies in one of its
    // balls: the set never partitions a ball it does not contain outright.
    return std::any_of(balls_.begin(), balls_.end(),
                       [&](const Ball& mine) { return mine.contains(b); });
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
    return std::all_of(balls_.begin(), balls_.end(),
                       [&](const Ball& b) { return other.contains_ball(b); });
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
    std::vector<Ball> all = a.balls();
    all.insert(all.end(), b.balls().begin(), b.balls().end());
    return ClopenSet::normalize(std::move(all));
}

ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b) {
    std::vector<Ball> out;
    for (const Ball& x : a.balls()) {
        for (const Ball& y : b.balls()) {
            if (x.contains(y)) {
                out.push_back(y);
            } else if (y.contains(x)) {
                out.push_back(x);
            }
        }
    }
    return ClopenSet::normalize(std::move(out));
}

namespace {

void subtract_ball(const Ball& x, const std::vector<Ball>& subtrahend,
                   std::vector<Ball>& out) {
    std::vector<Ball> inside;
    for (const Ball& b : subtrahend) {
        if (b.contains(x)) {
            return;
        }
        if (x.contains(b)) {
            inside.push_back(b);
        }
    }
    if (inside.empty()) {
        out.push_back(x);
        return;
    }
    for (const Ball& child : coset_decompose(x, x.radius() + 1)) {
        subtract_ball(child, inside, out);
    }
}

} // namespace

ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b) {
    std::vector<Ball> out;
    for (const Ball& x : a.balls()) {
        subtract_ball(x, b.balls(), out);
    }
    return ClopenSet::normalize(std::move(out));
}

std::vector<Ball> coset_decompose(const Ball& b, int finer_radius) {
    const DvrContext& ctx = b.context();
    if (finer_radius < b.radius()) {
        throw std::invalid_argument("coset decomposition needs radius >= ball radius");
    }
    if (finer_radius > ctx.precision) {
        throw PrecisionError("coset decomposition radius exceeds precision");
    }
    const int span = finer_radius - b.radius();
    std::vector<Ball> out;
    std::vector<std::uint32_t> combo(static_cast<std::size_t>(span), 0);
    while (true) {
        const int lo = std::min(b.center().offset(), b.radius());
        std::vector<std::uint32_t> digits;
        for (int j = lo; j < finer_radius; ++j) {
            if (j < b.radius()) {
                digits.push_back(b.center().digit_at(j));
            } else {
                digits.push_back(combo[static_cast<std::size_t>(j - b.radius())]);
            }
        }
        out.emplace_back(Element(ctx, lo, std::move(digits)), finer_radius);
        // Little-endian odometer over the new digit positions.
        int pos = 0;
        while (pos < span) {
            if (++combo[static_cast<std::size_t>(pos)] < ctx.p) {
                break;
            }
            combo[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == span) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), Ball::less);
    return out;
}

std::vector<Ball> refine_to_uniform_radius(const DvrContext& ctx,
                                           const std::vector<Ball>& covering, int m) {
    int max_radius = 0;
    for (const Ball& b : covering) {
        max_radius = std::max(max_radius, b.radius());
    }
    if (m < max_radius) {
        throw std::invalid_argument("refinement radius below the maximum covering radius");
    }
    const Ball universe(Element::zero(ctx), 0);
    std::vector<Ball> refined = coset_decompose(universe, m);
    for (const Ball& fine : refined) {
        const bool covered = std::any_of(covering.begin(), covering.end(),
                                         [&](const Ball& c) { return c.contains(fine); });
        if (!covered) {
            throw CoveringError("balls do not cover B_0(0); uncovered: " + to_ball_text(fine),
                                to_ball_text(fine));
        }
    }
    return refined;
}

std::string to_ball_text(const Ball& b) {
    std::ostringstream os;
    os << "B(" << b.radius() << ")@" << to_digit_text(b.center());
    return os.str();
}

Ball parse_ball_text(const DvrContext& ctx, std::string_view text) {
    if (text.substr(0, 2) != "B(") {
        throw ConfigError("ball text must start with \"B(\"");
    }
    const auto close = text.find(')');
    const auto at = text.find('@');
    if (close == std::string_view::npos || at == std::string_view::npos || at < close) {
        throw ConfigError("ball text: expected \"B(<radius>)@<digit-text>\"");
    }
    const std::string radius_str(text.substr(2, close - 2));
    int radius = 0;
    try {
        std::size_t used = 0;
        radius = std::stoi(radius_str, &used);
        if (used != radius_str.size()) {
            throw std::invalid_argument("trailing junk");
        }
    } catch (const std::exception&) {
        throw ConfigError("ball text: invalid radius \"" + radius_str + "\"");
    }
    const Element center = parse_digit_text(ctx, text.substr(at + 1));
    try {
        return Ball(center, radius);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("ball text: ") + e.what());
    }
}

std::vector<Ball> parse_ball_lines(const DvrContext& ctx, std::istream& in) {
    std::vector<Ball> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v(line);
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) {
            v.remove_prefix(1);
        }
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) {
            v.remove_suffix(1);
        }
        if (v.empty() || v.front() == '#') {
            continue;
        }
        out.push_back(parse_ball_text(ctx, v));
    }
    return out;
}

} // namespace uifs
