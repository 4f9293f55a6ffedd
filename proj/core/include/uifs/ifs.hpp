#pragma once

#include "uifs/ball.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace uifs {

// f_s(a) = s + t*a.
struct DigitPrepend {
    std::uint32_t digit;
};

// Prepends a block of mu+1 digits and shifts by t^(mu+1).
struct WindowPrepend {
    std::vector<std::uint32_t> block;
};

// f_s(a) = a^- + s + t*(a - a^-); leaves negative-index digits unchanged.
struct TailFixing {
    std::uint32_t digit;
};

using IfsMap = std::variant<DigitPrepend, WindowPrepend, TailFixing>;

enum class MapKind { DigitPrepend, Window, TailFixing };

MapKind kind_of(const IfsMap& map);
const char* to_string(MapKind kind);

// The digit block one map writes at the low end of its image.
std::vector<std::uint32_t> digit_block_of(const IfsMap& map);

// A finite system of maps of one variant over one context. Acts on sets by
// union of images. Indexing into `maps()` defines the word alphabet.
class Ifs {
  public:
    Ifs(DvrContext ctx, std::vector<IfsMap> maps);

    // The full digit alphabet {0,...,p-1} of prepend (resp. tail-fixing) maps.
    static Ifs full_digit_prepend(const DvrContext& ctx);
    static Ifs full_tail_fixing(const DvrContext& ctx);
    // All p^(mu+1) window maps, blocks enumerated lexicographically.
    static Ifs full_window(const DvrContext& ctx, int mu);

    const DvrContext& context() const { return ctx_; }
    const std::vector<IfsMap>& maps() const { return maps_; }
    std::size_t size() const { return maps_.size(); }
    MapKind kind() const { return kind_; }

    // How much one application grows a ball radius: 1, or mu+1 for windows.
    int radius_increment() const { return increment_; }

    // The digit block a map writes at the low end of its image (single digit
    // for prepend/tail-fixing, the full block for windows).
    std::vector<std::uint32_t> digit_block(std::size_t map_index) const;

  private:
    DvrContext ctx_;
    std::vector<IfsMap> maps_;
    MapKind kind_;
    int increment_;
};

Element apply_to_element(const DvrContext& ctx, const IfsMap& map, const Element& a);

// Image of a ball of radius r >= 0: a ball of radius r + increment centered
// at the image of the center. Exact, no approximation.
Ball image_of_ball(const DvrContext& ctx, const IfsMap& map, const Ball& b);

// Image of a clopen set under one map. Tail-fixing maps split balls of
// negative radius into their radius-0 cosets first (the image of such a ball
// is not a single ball).
ClopenSet map_image(const DvrContext& ctx, const IfsMap& map, const ClopenSet& s);

// F(S) = union of the per-map images, normalized.
ClopenSet system_image(const Ifs& system, const ClopenSet& s);

// Words are stored outermost-first: word[0] is applied last, matching the
// composition f_{i_1} o ... o f_{i_k}. This convention is normative in all
// reports.
using MapWord = std::vector<std::size_t>;

ClopenSet compose_image(const Ifs& system, std::span<const std::size_t> word,
                        const ClopenSet& start);

struct CompositionCheck {
    bool ok = true;
    MapWord first_failure; // lexicographically least failing word when !ok
};

// Checks, for every word of the given length, that the composition image of
// the universe equals the predicted ball B_{m*inc}(base + sum of word digit
// blocks) and stays inside the universe. The universe must have radius 0
// (B_0(0) for prepend/window systems, any B_0(a) for tail-fixing).
//
// `claimed_blocks` overrides the per-map digit blocks used for prediction;
// passing blocks that differ from the maps' true behaviour makes the check
// report the first mismatching word.
CompositionCheck verify_composition_identity(
    const Ifs& system, int depth, const Ball& universe,
    const std::vector<std::vector<std::uint32_t>>* claimed_blocks = nullptr);

CompositionCheck verify_composition_identity(const Ifs& system, int depth);

enum class TailPreservationVerdict { Holds, Fails, NotApplicable };

// Evaluates (f(a) - f(b))^- == (a - b)^- exactly. NotApplicable when the
// difference has zero fractional part.
TailPreservationVerdict tail_preservation(const DvrContext& ctx, const TailFixing& map,
                                          const Element& a, const Element& b);

} // namespace uifs
