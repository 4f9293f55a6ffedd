#include "uifs/ifs.hpp"

#include <algorithm>

namespace uifs {

MapKind kind_of(const IfsMap& map) {
    if (std::holds_alternative<DigitPrepend>(map)) {
        return MapKind::DigitPrepend;
    }
    if (std::holds_alternative<WindowPrepend>(map)) {
        return MapKind::Window;
    }
    return MapKind::TailFixing;
}

const char* to_string(MapKind kind) {
    switch (kind) {
    case MapKind::DigitPrepend:
        return "digit-prepend";
    case MapKind::Window:
        return "window";
    case MapKind::TailFixing:
        return "tail-fixing";
    }
    return "?";
}

Ifs::Ifs(DvrContext ctx, std::vector<IfsMap> maps)
    : ctx_(ctx), maps_(std::move(maps)) {
    if (maps_.empty()) {
        throw std::invalid_argument("map system must be nonempty");
    }
    kind_ = kind_of(maps_.front());
    increment_ = 1;
    std::size_t block_len = 1;
    if (kind_ == MapKind::Window) {
        block_len = std::get<WindowPrepend>(maps_.front()).block.size();
        if (block_len < 1) {
            throw std::invalid_argument("window block length must be >= 1");
        }
        increment_ = static_cast<int>(block_len);
    }
    for (const IfsMap& m : maps_) {
        if (kind_of(m) != kind_) {
            throw std::invalid_argument("map system mixes map variants");
        }
        for (std::uint32_t d : digit_block_of(m)) {
            if (d >= ctx_.p) {
                throw std::invalid_argument("map digit out of range [0, p-1]");
            }
        }
        if (kind_ == MapKind::Window &&
            std::get<WindowPrepend>(m).block.size() != block_len) {
            throw std::invalid_argument("window maps must share one block length");
        }
    }
}

std::vector<std::uint32_t> digit_block_of(const IfsMap& map) {
    if (const auto* d = std::get_if<DigitPrepend>(&map)) {
        return {d->digit};
    }
    if (const auto* w = std::get_if<WindowPrepend>(&map)) {
        return w->block;
    }
    return {std::get<TailFixing>(map).digit};
}

std::vector<std::uint32_t> Ifs::digit_block(std::size_t map_index) const {
    return digit_block_of(maps_.at(map_index));
}

Ifs Ifs::full_digit_prepend(const DvrContext& ctx) {
    std::vector<IfsMap> maps;
    for (std::uint32_t s = 0; s < ctx.p; ++s) {
        maps.push_back(DigitPrepend{s});
    }
    return Ifs(ctx, std::move(maps));
}

Ifs Ifs::full_tail_fixing(const DvrContext& ctx) {
    std::vector<IfsMap> maps;
    for (std::uint32_t s = 0; s < ctx.p; ++s) {
        maps.push_back(TailFixing{s});
    }
    return Ifs(ctx, std::move(maps));
}

Ifs Ifs::full_window(const DvrContext& ctx, int mu) {
    if (mu < 0) {
        throw std::invalid_argument("window parameter mu must be >= 0");
    }
    std::vector<IfsMap> maps;
    std::vector<std::uint32_t> block(static_cast<std::size_t>(mu) + 1, 0);
    while (true) {
        maps.push_back(WindowPrepend{block});
        // Lexicographic successor, most significant digit first.
        int pos = static_cast<int>(block.size()) - 1;
        while (pos >= 0) {
            if (++block[static_cast<std::size_t>(pos)] < ctx.p) {
                break;
            }
            block[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return Ifs(ctx, std::move(maps));
}

Element apply_to_element(const DvrContext& ctx, const IfsMap& map, const Element& a) {
    if (!(a.context() == ctx)) {
        throw std::invalid_argument("element context does not match the system");
    }
    if (const auto* d = std::get_if<DigitPrepend>(&map)) {
        return add(shift_by_uniformizer(a, 1), Element(ctx, 0, {d->digit}));
    }
    if (const auto* w = std::get_if<WindowPrepend>(&map)) {
        const int inc = static_cast<int>(w->block.size());
        return add(shift_by_uniformizer(a, inc), Element(ctx, 0, w->block));
    }
    const auto& t = std::get<TailFixing>(map);
    if (a.offset() < -ctx.precision) {
        throw PrecisionError("tail-fixing map on element with offset below -precision");
    }
    const Element am = minus_part(a);
    const Element shifted = shift_by_uniformizer(sub(a, am), 1);
    return add(add(am, Element(ctx, 0, {t.digit})), shifted);
}

Ball image_of_ball(const DvrContext& ctx, const IfsMap& map, const Ball& b) {
    if (b.radius() < 0) {
        throw std::invalid_argument("ball image requires radius >= 0");
    }
    const int inc = kind_of(map) == MapKind::Window
                        ? static_cast<int>(std::get<WindowPrepend>(map).block.size())
                        : 1;
    if (b.radius() + inc > ctx.precision) {
        throw PrecisionError("ball image radius would exceed precision");
    }
    return Ball(apply_to_element(ctx, map, b.center()), b.radius() + inc);
}

ClopenSet map_image(const DvrContext& ctx, const IfsMap& map, const ClopenSet& s) {
    std::vector<Ball> out;
    for (const Ball& b : s.balls()) {
        if (b.radius() >= 0) {
            out.push_back(image_of_ball(ctx, map, b));
        } else if (kind_of(map) == MapKind::TailFixing) {
            // The image of a negative-radius ball is the union of the images
            // of its radius-0 cosets.
            for (const Ball& coset : coset_decompose(b, 0)) {
                out.push_back(image_of_ball(ctx, map, coset));
            }
        } else {
            throw std::invalid_argument("prepend maps act on balls of radius >= 0");
        }
    }
    return ClopenSet::normalize(std::move(out));
}

ClopenSet system_image(const Ifs& system, const ClopenSet& s) {
    std::vector<Ball> out;
    for (const IfsMap& m : system.maps()) {
        const ClopenSet image = map_image(system.context(), m, s);
        out.insert(out.end(), image.balls().begin(), image.balls().end());
    }
    return ClopenSet::normalize(std::move(out));
}

ClopenSet compose_image(const Ifs& system, std::span<const std::size_t> word,
                        const ClopenSet& start) {
    ClopenSet s = start;
    for (std::size_t i = word.size(); i-- > 0;) {
        s = map_image(system.context(), system.maps().at(word[i]), s);
    }
    return s;
}

namespace {

// B_{len(word)*inc}(base + digit blocks of the word laid out in order).
Ball predicted_ball(const Ifs& system, const Element& base, std::span<const std::size_t> word,
                    const std::vector<std::vector<std::uint32_t>>* claimed_blocks) {
    const DvrContext& ctx = system.context();
    const int inc = system.radius_increment();
    Element center = base;
    for (std::size_t k = 0; k < word.size(); ++k) {
        const std::vector<std::uint32_t> block =
            claimed_blocks ? claimed_blocks->at(word[k]) : system.digit_block(word[k]);
        center = add(center, shift_by_uniformizer(Element(ctx, 0, block),
                                                  static_cast<int>(k) * inc));
    }
    return Ball(center, static_cast<int>(word.size()) * inc);
}

bool next_word(MapWord& word, std::size_t alphabet) {
    // Lexicographic successor among fixed-length words.
    for (std::size_t i = word.size(); i-- > 0;) {
        if (++word[i] < alphabet) {
            return true;
        }
        word[i] = 0;
    }
    return false;
}

} // namespace

CompositionCheck verify_composition_identity(
    const Ifs& system, int depth, const Ball& universe,
    const std::vector<std::vector<std::uint32_t>>* claimed_blocks) {
    const DvrContext& ctx = system.context();
    if (universe.radius() != 0) {
        throw std::invalid_argument("composition identity is stated on radius-0 universes");
    }
    if (depth < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    if (depth * system.radius_increment() > ctx.precision) {
        throw PrecisionError("composition depth exceeds precision");
    }
    const Element base = minus_part(universe.center());
    const ClopenSet start = ClopenSet::of(universe);
    MapWord word(static_cast<std::size_t>(depth), 0);
    CompositionCheck result;
    if (depth == 0) {
        return result;
    }
    while (true) {
        const ClopenSet actual = compose_image(system, word, start);
        const Ball predicted = predicted_ball(system, base, word, claimed_blocks);
        const bool match = actual == ClopenSet::of(predicted) && universe.contains(predicted);
        if (!match) {
            result.ok = false;
            result.first_failure = word;
            return result;
        }
        if (!next_word(word, system.size())) {
            break;
        }
    }
    return result;
}

CompositionCheck verify_composition_identity(const Ifs& system, int depth) {
    if (system.kind() == MapKind::TailFixing) {
        throw std::invalid_argument("tail-fixing identity needs an explicit universe ball");
    }
    return verify_composition_identity(
        system, depth, Ball(Element::zero(system.context()), 0), nullptr);
}

TailPreservationVerdict tail_preservation(const DvrContext& ctx, const TailFixing& map,
                                          const Element& a, const Element& b) {
    const Element diff_minus = minus_part(sub(a, b));
    if (diff_minus.is_zero()) {
        return TailPreservationVerdict::NotApplicable;
    }
    const IfsMap m = TailFixing{map.digit};
    const Element image_diff_minus =
        minus_part(sub(apply_to_element(ctx, m, a), apply_to_element(ctx, m, b)));
    return image_diff_minus == diff_minus ? TailPreservationVerdict::Holds
                                          : TailPreservationVerdict::Fails;
}

} // namespace uifs
