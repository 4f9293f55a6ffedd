#pragma once

#include "uifs/ifs.hpp"
#include "uifs/verdict.hpp"

#include <functional>
#include <utility>

namespace uifs {

// A finite covering of a universe ball by clopen sets. Construction checks
// that the union really covers the universe and throws CoveringError with an
// uncovered witness ball otherwise.
class Covering {
  public:
    Covering(std::vector<ClopenSet> sets, Ball universe);

    const std::vector<ClopenSet>& sets() const { return sets_; }
    const Ball& universe() const { return universe_; }

    // Index of the first covering set containing the ball, if any.
    std::optional<std::size_t> first_containing(const Ball& b) const;

  private:
    std::vector<ClopenSet> sets_;
    Ball universe_;
};

// Decides the shrinking condition over the covering by the refinement method:
// k is the maximum covering radius divided by the system's radius increment
// (rounded up), and every length-k word is certified by the covering set that
// contains its image. Sound but not claimed minimal.
VerificationReport verify_sc(const Ifs& system, const Covering& covering,
                             const Budget& budget = {});

// Smallest k such that every length-k composition image of the universe lies
// inside some covering set (brute force; images only shrink with depth, so a
// linear scan from 0 finds the minimum).
int minimal_k(const Ifs& system, const Covering& covering, const Budget& budget = {});

struct WeakContractionResult {
    bool ok = true;
    std::optional<std::pair<Element, Element>> witness_pair;
    std::size_t witness_map = 0;
    std::uint64_t pairs_checked = 0;
    bool exhaustive = true;
};

struct WeakContractionOptions {
    Budget budget;
    // When the exhaustive pair count exceeds the budget, check this many
    // deterministically sampled pairs instead of refusing.
    std::optional<std::uint64_t> sample_pairs;
    std::uint64_t seed = 1;
};

// d(f x, f y) < d(x, y) over all distinct tracked ring-element pairs and all
// maps of the system.
WeakContractionResult verify_weak_contraction(const Ifs& system,
                                              const WeakContractionOptions& options = {});

// Same audit over arbitrary self-maps (used to reject non-contracting maps).
WeakContractionResult verify_weak_contraction(
    const DvrContext& ctx,
    const std::vector<std::function<Element(const Element&)>>& maps,
    const WeakContractionOptions& options = {});

// Certifies that B_0(a) behaves as a fractal piece under the tail-fixing
// system: F(B_0(a)) = B_0(a), the composition-to-ball identity holds at every
// depth <= max_depth, and the shrinking condition is certified against every
// uniform-radius coset covering of B_0(a) with radius <= max_depth.
VerificationReport verify_local_fractality(const Element& a, int max_depth,
                                           const Budget& budget = {});

} // namespace uifs
