#pragma once

#include "uifs/dvr.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uifs {

// Ultrametric ball B_alpha(a) = { b : v(a - b) >= alpha } in canonical form:
// the center keeps only digits at indices below the radius, so every ball has
// exactly one representation. Radii are bounded by the precision window
// [-N, N]; any point of a ball is a center, which justifies canonicalizing.
class Ball {
  public:
    Ball(Element center, int radius);

    const Element& center() const { return center_; }
    int radius() const { return radius_; }
    const DvrContext& context() const { return center_.context(); }

    bool contains(const Element& x) const;
    bool contains(const Ball& other) const;
    // Balls either nest or are disjoint.
    bool intersects(const Ball& other) const;

    bool operator==(const Ball& other) const;
    bool operator!=(const Ball& other) const { return !(*this == other); }

    static bool less(const Ball& a, const Ball& b);

  private:
    Element center_;
    int radius_;
};

// Finite disjoint union of balls in canonical form: no ball contained in
// another, no complete family of p sibling balls left unmerged, sorted by
// (radius, center digits). Equality of sets is plain sequence equality.
class ClopenSet {
  public:
    static ClopenSet empty();
    static ClopenSet of(const Ball& ball);
    static ClopenSet normalize(std::vector<Ball> balls);

    const std::vector<Ball>& balls() const { return balls_; }
    bool is_empty() const { return balls_.empty(); }

    bool member(const Element& x) const;
    bool contains_ball(const Ball& b) const;
    bool subset_of(const ClopenSet& other) const;

    bool operator==(const ClopenSet& other) const { return balls_ == other.balls_; }
    bool operator!=(const ClopenSet& other) const { return !(*this == other); }

  private:
    ClopenSet() = default;
    std::vector<Ball> balls_;
};

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b);

// The p^(m - radius) disjoint balls of radius m whose union is b, in sorted
// order. Deliberately not normalized (normalize would fold them back into b).
std::vector<Ball> coset_decompose(const Ball& b, int finer_radius);

// Refines a covering of B_0(0) by balls to the uniform covering by all p^m
// balls of radius m. Throws CoveringError (with an uncovered witness) when
// the input does not cover B_0(0).
std::vector<Ball> refine_to_uniform_radius(const DvrContext& ctx,
                                           const std::vector<Ball>& covering, int m);

// Ball text format: "B(<radius>)@<digit-text>".
std::string to_ball_text(const Ball& b);
Ball parse_ball_text(const DvrContext& ctx, std::string_view text);

// Covering files list one ball per line; blank lines and '#' comments are
// skipped.
std::vector<Ball> parse_ball_lines(const DvrContext& ctx, std::istream& in);

} // namespace uifs
