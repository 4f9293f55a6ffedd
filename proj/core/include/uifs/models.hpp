#pragma once

#include "uifs/errors.hpp"
#include "uifs/rational.hpp"
#include "uifs/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uifs::models {

// A finite word over an alphabet of letters; stands for the cylinder A_x of
// all infinite sequences extending it.
using Word = std::vector<std::uint64_t>;

// Prepend-shift map on sequence space: the image of the cylinder A_w under
// f_i is A_{i . w}.
Word shift_image(std::uint64_t letter, const Word& w);

enum class CylinderClass { Inside, Disjoint, Split };

const char* to_string(CylinderClass c);

// Classifies the cylinder A_w against the open set
// U = union over n of { x : x(0) = n, x(1) = ... = x(n) = 0 }.
CylinderClass classify_against_u(const Word& w);

// For each k in 1..max_k the word (k, 0, ..., 0) of length k, each certified
// to split the covering {U, X \ U}: no covering set contains the depth-k
// image, so the shrinking condition fails at every depth <= max_k.
std::vector<Word> baire_sc_failure_witnesses(int max_k);

// Plain shrinking-condition formulas for the cylinder models. The non-basic
// covering set U is the declared rest set: everything outside the listed
// basics.

struct ScStarCylindersResult {
    int k = 0;
    std::vector<CertificateEntry> certificate; // set_index empty => rest set U
};

// Covering {U, A_{x_1}, ..., A_{x_n}} of kappa^omega: k = max |x_i|; every
// length-k cylinder is inside some basic or disjoint from all of them (hence
// inside U).
ScStarCylindersResult sc_star_cylinders(std::uint64_t kappa, const std::vector<Word>& basics,
                                        const Budget& budget = {});

// Exact image of the length-k compositions over {f_0, f_1} with f_0(n) = 0,
// f_1(n) = n + 1 on the discrete space omega: a singleton once the word
// contains f_0, otherwise the upward set {k, k+1, ...}.
struct OmegaImage {
    bool singleton = true;
    std::uint64_t value = 0; // the singleton, or the least element of the tail

    bool operator==(const OmegaImage&) const = default;
};

OmegaImage omega_word_image(const std::vector<std::uint64_t>& word);

struct OmegaCertEntry {
    std::vector<std::uint64_t> word;
    OmegaImage image;
    std::optional<std::size_t> singleton_index; // empty => rest set U
};

struct ScStarOmegaResult {
    int k = 0;
    std::vector<OmegaCertEntry> certificate;
};

// Covering {U, {n_1}, ..., {n_l}}: k = max(n_j) + 1 (0 when there are no
// singletons), with a full containment certificate.
ScStarOmegaResult sc_star_omega_discrete(const std::vector<std::uint64_t>& singletons,
                                         const Budget& budget = {});

// Cofinite topology on [0,1] with the halving maps x -> x/2 and
// x -> 1/2 + x/2. Covering set j is the cofinite open [0,1] minus the finite
// rational set complements[j].
struct CofiniteCovering {
    std::vector<std::vector<Rational>> complements;
};

// Depth-k images are the closed dyadic intervals of length 2^-k; the covering
// admits depth k iff every such interval misses some complement set entirely.
// Returns the minimal such k <= max_k together with the sound gap bound
// (least k with 2^-k smaller than the minimum positive gap between complement
// points). When max_k is too small to exhibit the minimum, the gap bound is
// returned as a holds-with-sound-bound verdict.
VerificationReport cofinite_sc(const CofiniteCovering& covering, int max_k,
                               const Budget& budget = {});

} // namespace uifs::models
