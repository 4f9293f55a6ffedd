#pragma once

#include "uifs/errors.hpp"
#include "uifs/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uifs {

// Digit arithmetic mode of the ambient ring/field.
//   EqualChar: power series over F_p, digitwise arithmetic without carries.
//   MixedChar: base-p expansions with carry/borrow propagation (p-adic style).
enum class CharMode { EqualChar, MixedChar };

// Ambient discretely valued ring/field: prime p, characteristic mode and the
// working precision N. Digits are tracked at indices < N; the uniformizer is
// the digit shift in both modes. The digit set is fixed to the canonical
// representatives {0,...,p-1}; a different system of representatives would
// slot in here, but only the canonical one keeps equality syntactic and is
// implemented.
struct DvrContext {
    std::uint32_t p = 2;
    CharMode mode = CharMode::EqualChar;
    int precision = 1;

    DvrContext(std::uint32_t p_, CharMode mode_, int precision_);

    bool operator==(const DvrContext&) const = default;
};

const char* to_string(CharMode mode);

// A finite-precision digit expansion sum d_j t^j with integer offset l (the
// lowest tracked index). Ring elements have l = 0; field elements may have
// l < 0. Stored canonically: zero digits below index 0 are trimmed away, and
// digits always run from the offset up to index N-1.
//
// Elements are immutable values; all operations below are pure functions.
class Element {
  public:
    Element(DvrContext ctx, int offset, std::vector<std::uint32_t> digits);

    static Element zero(const DvrContext& ctx);

    const DvrContext& context() const { return ctx_; }
    int offset() const { return offset_; }
    std::span<const std::uint32_t> digits() const { return digits_; }

    // Digit at index j for j < precision; indices below the offset read as 0.
    std::uint32_t digit_at(int j) const;

    bool is_zero() const;

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    // Total order used for canonical sorting (context-compatible operands).
    static bool less(const Element& a, const Element& b);

  private:
    DvrContext ctx_;
    int offset_ = 0;
    std::vector<std::uint32_t> digits_; // indices offset_ .. precision-1
};

// Least index j with d_j != 0; empty when every tracked digit vanishes
// (the element is indistinguishable from zero at this precision).
std::optional<int> valuation(const Element& a);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);

// Multiplication by t^k (k >= 0): digit at index j of the result equals the
// digit at j-k of the input. Digits pushed past index N-1 are dropped.
Element shift_by_uniformizer(const Element& a, int k);

// Ultrametric distance p^{-v(a-b)}. Empty when the difference is zero at
// this precision (below-resolution). May exceed 1 on field elements.
std::optional<Rational> distance(const Element& a, const Element& b);

// The fractional part a^-: digits of a at negative indices, zeros elsewhere.
// a - minusPart(a) always lies in the valuation ring.
Element minus_part(const Element& a);

// Digit-text format: "offset=<l>; digits=<d_l>,<d_{l+1}>,..." little-endian;
// the offset clause is omitted when l = 0.
std::string to_digit_text(const Element& a);
Element parse_digit_text(const DvrContext& ctx, std::string_view text);

} // namespace uifs
