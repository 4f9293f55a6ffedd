#include "uifs/verify.hpp"

#include <algorithm>
#include <random>

namespace uifs {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds:
        return "holds";
    case Verdict::Fails:
        return "fails";
    case Verdict::HoldsWithSoundBound:
        return "holds-with-sound-bound";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "holds") {
        return Verdict::Holds;
    }
    if (s == "fails") {
        return Verdict::Fails;
    }
    if (s == "holds-with-sound-bound") {
        return Verdict::HoldsWithSoundBound;
    }
    throw ConfigError("unknown verdict \"" + s + "\"");
}

Covering::Covering(std::vector<ClopenSet> sets, Ball universe)
    : sets_(std::move(sets)), universe_(std::move(universe)) {
    if (sets_.empty()) {
        throw std::invalid_argument("covering needs at least one set");
    }
    std::vector<Ball> all;
    for (const ClopenSet& s : sets_) {
        all.insert(all.end(), s.balls().begin(), s.balls().end());
    }
    const ClopenSet missing =
        set_difference(ClopenSet::of(universe_), ClopenSet::normalize(std::move(all)));
    if (!missing.is_empty()) {
        const Ball witness = missing.balls().front();
        throw CoveringError("sets do not cover the universe; uncovered: " + to_ball_text(witness),
                            to_ball_text(witness));
    }
}

std::optional<std::size_t> Covering::first_containing(const Ball& b) const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].contains_ball(b)) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

void require_compatible_universe(const Ifs& system, const Ball& universe) {
    if (!(system.context() == universe.context())) {
        throw std::invalid_argument("covering context does not match the system");
    }
    if (universe.radius() != 0) {
        throw std::invalid_argument("shrinking-condition universe must have radius 0");
    }
    if (system.kind() != MapKind::TailFixing && !universe.center().is_zero()) {
        throw std::invalid_argument("prepend systems act on the universe B_0(0)");
    }
}

std::uint64_t checked_pow(std::uint64_t base, int exp, const Budget& budget) {
    std::uint64_t value = 1;
    for (int i = 0; i < exp; ++i) {
        if (value > budget.max_evaluations / std::max<std::uint64_t>(base, 1)) {
            return budget.max_evaluations + 1;
        }
        value *= base;
    }
    return value;
}

bool next_word_u64(std::vector<std::uint64_t>& word, std::uint64_t alphabet) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (++word[i] < alphabet) {
            return true;
        }
        word[i] = 0;
    }
    return false;
}

// Image of the universe under the composition named by `word`
// (outermost-first); a single ball since the universe is a ball.
Ball word_image(const Ifs& system, const std::vector<std::uint64_t>& word,
                const Ball& universe) {
    Ball b = universe;
    for (std::size_t i = word.size(); i-- > 0;) {
        b = image_of_ball(system.context(), system.maps().at(static_cast<std::size_t>(word[i])),
                          b);
    }
    return b;
}

// Checks all words of length k; fills the certificate or reports the
// lexicographically least uncontained word.
bool all_words_contained(const Ifs& system, const Covering& covering, int k,
                         std::vector<CertificateEntry>* certificate,
                         std::vector<std::uint64_t>* witness) {
    std::vector<std::uint64_t> word(static_cast<std::size_t>(k), 0);
    while (true) {
        const Ball image = word_image(system, word, covering.universe());
        const auto idx = covering.first_containing(image);
        if (!idx) {
            if (witness) {
                *witness = word;
            }
            return false;
        }
        if (certificate) {
            certificate->push_back(CertificateEntry{word, idx});
        }
        if (word.empty() || !next_word_u64(word, system.size())) {
            break;
        }
    }
    return true;
}

} // namespace

VerificationReport verify_sc(const Ifs& system, const Covering& covering,
                             const Budget& budget) {
    require_compatible_universe(system, covering.universe());
    int max_radius = covering.universe().radius();
    for (const ClopenSet& s : covering.sets()) {
        for (const Ball& b : s.balls()) {
            max_radius = std::max(max_radius, b.radius());
        }
    }
    const int inc = system.radius_increment();
    const int m = max_radius - covering.universe().radius();
    const int k = (m + inc - 1) / inc;
    if (covering.universe().radius() + k * inc > system.context().precision) {
        throw PrecisionError("shrinking-condition depth exceeds precision");
    }
    if (checked_pow(system.size(), k, budget) > budget.max_evaluations) {
        throw BudgetError("word enumeration exceeds the evaluation budget");
    }
    VerificationReport report;
    std::vector<std::uint64_t> witness;
    if (all_words_contained(system, covering, k, &report.certificate, &witness)) {
        report.verdict = Verdict::Holds;
        report.k = k;
    } else {
        report.verdict = Verdict::Fails;
        report.certificate.clear();
        report.witness = witness;
    }
    return report;
}

int minimal_k(const Ifs& system, const Covering& covering, const Budget& budget) {
    require_compatible_universe(system, covering.universe());
    const int inc = system.radius_increment();
    std::uint64_t spent = 0;
    for (int k = 0;; ++k) {
        if (covering.universe().radius() + k * inc > system.context().precision) {
            throw PrecisionError("no depth within precision satisfies the covering");
        }
        const std::uint64_t words = checked_pow(system.size(), k, budget);
        spent += words;
        if (words > budget.max_evaluations || spent > budget.max_evaluations) {
            throw BudgetError("word enumeration exceeds the evaluation budget");
        }
        if (all_words_contained(system, covering, k, nullptr, nullptr)) {
            return k;
        }
    }
}

namespace {

Element ring_element_from_index(const DvrContext& ctx, std::uint64_t index) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(ctx.precision), 0);
    for (int j = 0; j < ctx.precision; ++j) {
        digits[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(index % ctx.p);
        index /= ctx.p;
    }
    return Element(ctx, 0, std::move(digits));
}

WeakContractionResult weak_contraction_impl(
    const DvrContext& ctx,
    const std::vector<std::function<Element(const Element&)>>& maps,
    const WeakContractionOptions& options) {
    std::uint64_t count = 1;
    bool overflow = false;
    for (int j = 0; j < ctx.precision; ++j) {
        if (count > (std::uint64_t{1} << 62) / ctx.p) {
            overflow = true;
            break;
        }
        count *= ctx.p;
    }
    WeakContractionResult result;
    const auto check_pair = [&](const Element& a, const Element& b) {
        const auto d_ab = distance(a, b);
        if (!d_ab) {
            return true; // indistinguishable at this precision
        }
        for (std::size_t mi = 0; mi < maps.size(); ++mi) {
            ++result.pairs_checked;
            const auto d_im = distance(maps[mi](a), maps[mi](b));
            // Below-resolution images count as smaller than any positive
            // distance.
            if (d_im && !(*d_im < *d_ab)) {
                result.ok = false;
                result.witness_pair = {a, b};
                result.witness_map = mi;
                return false;
            }
        }
        return true;
    };

    const std::uint64_t exhaustive_cost =
        overflow ? options.budget.max_evaluations + 1
                 : count * (count - 1) / 2 * std::max<std::uint64_t>(maps.size(), 1);
    if (!overflow && exhaustive_cost <= options.budget.max_evaluations) {
        result.exhaustive = true;
        for (std::uint64_t i = 0; i < count; ++i) {
            const Element a = ring_element_from_index(ctx, i);
            for (std::uint64_t j = i + 1; j < count; ++j) {
                if (!check_pair(a, ring_element_from_index(ctx, j))) {
                    return result;
                }
            }
        }
        return result;
    }
    if (!options.sample_pairs) {
        throw BudgetError("pair enumeration exceeds the evaluation budget "
                          "(request sampling to proceed)");
    }
    result.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uint64_t done = 0;
    while (done < *options.sample_pairs) {
        const std::uint64_t i = rng() % count;
        const std::uint64_t j = rng() % count;
        if (i == j) {
            continue;
        }
        ++done;
        if (!check_pair(ring_element_from_index(ctx, i), ring_element_from_index(ctx, j))) {
            return result;
        }
    }
    return result;
}

} // namespace

WeakContractionResult verify_weak_contraction(const Ifs& system,
                                              const WeakContractionOptions& options) {
    std::vector<std::function<Element(const Element&)>> fns;
    for (const IfsMap& m : system.maps()) {
        fns.push_back([m, ctx = system.context()](const Element& a) {
            return apply_to_element(ctx, m, a);
        });
    }
    return weak_contraction_impl(system.context(), fns, options);
}

WeakContractionResult verify_weak_contraction(
    const DvrContext& ctx,
    const std::vector<std::function<Element(const Element&)>>& maps,
    const WeakContractionOptions& options) {
    return weak_contraction_impl(ctx, maps, options);
}

VerificationReport verify_local_fractality(const Element& a, int max_depth,
                                           const Budget& budget) {
    const DvrContext& ctx = a.context();
    if (max_depth < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    if (max_depth > ctx.precision) {
        throw PrecisionError("local fractality depth exceeds precision");
    }
    const Ifs system = Ifs::full_tail_fixing(ctx);
    const Ball home(a, 0); // canonical center is a^-
    VerificationReport report;
    report.k = max_depth;

    // Invariance F(B_0(a)) = B_0(a).
    if (system_image(system, ClopenSet::of(home)) != ClopenSet::of(home)) {
        report.verdict = Verdict::Fails;
        report.witness = std::vector<std::uint64_t>{};
        return report;
    }
    // Composition-to-ball identity at every depth <= max_depth.
    for (int depth = 1; depth <= max_depth; ++depth) {
        const CompositionCheck check = verify_composition_identity(system, depth, home);
        if (!check.ok) {
            report.verdict = Verdict::Fails;
            report.witness = std::vector<std::uint64_t>(check.first_failure.begin(),
                                                        check.first_failure.end());
            return report;
        }
    }
    // Shrinking condition against every uniform coset covering of B_0(a).
    for (int radius = 0; radius <= max_depth; ++radius) {
        std::vector<ClopenSet> sets;
        for (const Ball& coset : coset_decompose(home, radius)) {
            sets.push_back(ClopenSet::of(coset));
        }
        const VerificationReport sc = verify_sc(system, Covering(std::move(sets), home), budget);
        if (sc.verdict != Verdict::Holds || sc.k != radius) {
            report.verdict = Verdict::Fails;
            report.witness = sc.witness;
            return report;
        }
        if (radius == max_depth) {
            report.certificate = sc.certificate;
        }
    }
    report.verdict = Verdict::Holds;
    return report;
}

} // namespace uifs
