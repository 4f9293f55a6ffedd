#include "uifs/dvr.hpp"

#include <algorithm>
#include <sstream>

namespace uifs {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

void require_same_context(const Element& a, const Element& b) {
    if (!(a.context() == b.context())) {
        throw std::invalid_argument("elements belong to different contexts");
    }
}

} // namespace

DvrContext::DvrContext(std::uint32_t p_, CharMode mode_, int precision_)
    : p(p_), mode(mode_), precision(precision_) {
    if (!is_prime(p)) {
        throw std::invalid_argument("context parameter p must be prime");
    }
    if (precision < 1) {
        throw std::invalid_argument("context precision must be >= 1");
    }
}

const char* to_string(CharMode mode) {
    return mode == CharMode::EqualChar ? "equal-char" : "mixed-char";
}

Element::Element(DvrContext ctx, int offset, std::vector<std::uint32_t> digits)
    : ctx_(ctx) {
    const int n = ctx_.precision;
    if (offset > n) {
        throw std::invalid_argument("element offset exceeds precision");
    }
    if (static_cast<int>(digits.size()) > n - offset) {
        throw std::invalid_argument("element has digits beyond the precision window");
    }
    const int lo = std::min(offset, 0);
    digits_.assign(static_cast<std::size_t>(n - lo), 0);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= ctx_.p) {
            throw std::invalid_argument("element digit out of range [0, p-1]");
        }
        digits_[static_cast<std::size_t>(offset - lo) + i] = digits[i];
    }
    offset_ = lo;
    // Canonical form: no zero digits tracked below index 0.
    while (offset_ < 0 && digits_.front() == 0) {
        digits_.erase(digits_.begin());
        ++offset_;
    }
}

Element Element::zero(const DvrContext& ctx) {
    return Element(ctx, 0, {});
}

std::uint32_t Element::digit_at(int j) const {
    if (j >= ctx_.precision) {
        throw std::out_of_range("digit index beyond precision");
    }
    if (j < offset_) {
        return 0;
    }
    return digits_[static_cast<std::size_t>(j - offset_)];
}

bool Element::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint32_t d) { return d == 0; });
}

bool Element::operator==(const Element& other) const {
    return ctx_ == other.ctx_ && offset_ == other.offset_ && digits_ == other.digits_;
}

bool Element::less(const Element& a, const Element& b) {
    require_same_context(a, b);
    const int lo = std::min(a.offset_, b.offset_);
    for (int j = lo; j < a.ctx_.precision; ++j) {
        const std::uint32_t da = a.digit_at(j);
        const std::uint32_t db = b.digit_at(j);
        if (da != db) {
            return da < db;
        }
    }
    return false;
}

std::optional<int> valuation(const Element& a) {
    for (int j = a.offset(); j < a.context().precision; ++j) {
        if (a.digit_at(j) != 0) {
            return j;
        }
    }
    return std::nullopt;
}

namespace {

Element combine(const Element& a, const Element& b, bool subtract) {
    require_same_context(a, b);
    const DvrContext& ctx = a.context();
    const int n = ctx.precision;
    const int lo = std::min(a.offset(), b.offset());
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n - lo), 0);
    if (ctx.mode == CharMode::EqualChar) {
        for (int j = lo; j < n; ++j) {
            const std::int64_t v = static_cast<std::int64_t>(a.digit_at(j)) -
                                   (subtract ? 1 : -1) * static_cast<std::int64_t>(b.digit_at(j));
            out[static_cast<std::size_t>(j - lo)] =
                static_cast<std::uint32_t>(((v % ctx.p) + ctx.p) % ctx.p);
        }
    } else {
        // Base-p arithmetic over the tracked window; carries/borrows past
        // index N-1 fall off (fixed-width semantics).
        std::int64_t carry = 0;
        for (int j = lo; j < n; ++j) {
            std::int64_t v = static_cast<std::int64_t>(a.digit_at(j)) + carry;
            if (subtract) {
                v -= b.digit_at(j);
            } else {
                v += b.digit_at(j);
            }
            carry = 0;
            while (v < 0) {
                v += ctx.p;
                --carry;
            }
            while (v >= ctx.p) {
                v -= ctx.p;
                ++carry;
            }
            out[static_cast<std::size_t>(j - lo)] = static_cast<std::uint32_t>(v);
        }
    }
    return Element(ctx, lo, std::move(out));
}

} // namespace

Element add(const Element& a, const Element& b) {
    return combine(a, b, false);
}

Element sub(const Element& a, const Element& b) {
    return combine(a, b, true);
}

Element shift_by_uniformizer(const Element& a, int k) {
    if (k < 0) {
        throw std::invalid_argument("uniformizer shift must be non-negative");
    }
    const DvrContext& ctx = a.context();
    const int n = ctx.precision;
    const int raw = a.offset() + k;
    if (raw >= n) {
        return Element::zero(ctx);
    }
    std::vector<std::uint32_t> out(a.digits().begin(),
                                   a.digits().begin() + (n - raw < static_cast<int>(a.digits().size())
                                                             ? n - raw
                                                             : static_cast<int>(a.digits().size())));
    return Element(ctx, raw, std::move(out));
}

std::optional<Rational> distance(const Element& a, const Element& b) {
    const auto v = valuation(sub(a, b));
    if (!v) {
        return std::nullopt;
    }
    return rational_pow(a.context().p, -*v);
}

Element minus_part(const Element& a) {
    const DvrContext& ctx = a.context();
    if (a.offset() >= 0) {
        return Element::zero(ctx);
    }
    std::vector<std::uint32_t> out;
    for (int j = a.offset(); j < 0; ++j) {
        out.push_back(a.digit_at(j));
    }
    return Element(ctx, a.offset(), std::move(out));
}

std::string to_digit_text(const Element& a) {
    std::ostringstream os;
    if (a.offset() != 0) {
        os << "offset=" << a.offset() << "; ";
    }
    os << "digits=";
    for (std::size_t i = 0; i < a.digits().size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << a.digits()[i];
    }
    return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

long parse_long(std::string_view s, const char* what) {
    s = strip(s);
    if (s.empty()) {
        throw ConfigError(std::string("empty ") + what + " in digit text");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        throw ConfigError(std::string("invalid ") + what + " in digit text");
    }
    long value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw ConfigError(std::string("invalid ") + what + " in digit text");
        }
        value = value * 10 + (s[i] - '0');
    }
    return s[0] == '-' ? -value : value;
}

} // namespace

Element parse_digit_text(const DvrContext& ctx, std::string_view text) {
    int offset = 0;
    std::string_view rest = strip(text);
    if (rest.substr(0, 7) == "offset=") {
        const auto semi = rest.find(';');
        if (semi == std::string_view::npos) {
            throw ConfigError("digit text: missing ';' after offset clause");
        }
        offset = static_cast<int>(parse_long(rest.substr(7, semi - 7), "offset"));
        rest = strip(rest.substr(semi + 1));
    }
    if (rest.substr(0, 7) != "digits=") {
        throw ConfigError("digit text: expected \"digits=\" clause");
    }
    rest = rest.substr(7);
    std::vector<std::uint32_t> digits;
    if (!strip(rest).empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            const auto part = rest.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
            const long d = parse_long(part, "digit");
            if (d < 0) {
                throw ConfigError("digit text: negative digit");
            }
            digits.push_back(static_cast<std::uint32_t>(d));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    try {
        return Element(ctx, offset, std::move(digits));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("digit text: ") + e.what());
    }
}

} // namespace uifs
