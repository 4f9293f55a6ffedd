#include "uifs/models.hpp"

#include <algorithm>
#include <set>

namespace uifs::models {

Word shift_image(std::uint64_t letter, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(letter);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

const char* to_string(CylinderClass c) {
    switch (c) {
    case CylinderClass::Inside:
        return "inside";
    case CylinderClass::Disjoint:
        return "disjoint";
    case CylinderClass::Split:
        return "split";
    }
    return "?";
}

CylinderClass classify_against_u(const Word& w) {
    if (w.empty()) {
        return CylinderClass::Split; // the whole space meets U and its complement
    }
    const std::uint64_t n = w[0];
    const std::uint64_t k = w.size();
    // Membership in U is pinned by x(0) = n: it requires x(1) = ... = x(n) = 0.
    for (std::uint64_t i = 1; i < std::min(n + 1, k); ++i) {
        if (w[i] != 0) {
            return CylinderClass::Disjoint;
        }
    }
    if (n <= k - 1) {
        return CylinderClass::Inside;
    }
    return CylinderClass::Split;
}

std::vector<Word> baire_sc_failure_witnesses(int max_k) {
    if (max_k < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    std::vector<Word> witnesses;
    for (int k = 1; k <= max_k; ++k) {
        Word w(static_cast<std::size_t>(k), 0);
        w[0] = static_cast<std::uint64_t>(k);
        if (classify_against_u(w) != CylinderClass::Split) {
            throw std::logic_error("shift witness failed to split the covering");
        }
        witnesses.push_back(std::move(w));
    }
    return witnesses;
}

namespace {

bool is_prefix(const Word& x, const Word& y) {
    return x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin());
}

bool next_word(std::vector<std::uint64_t>& word, std::uint64_t alphabet) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (++word[i] < alphabet) {
            return true;
        }
        word[i] = 0;
    }
    return false;
}

std::uint64_t checked_pow_u64(std::uint64_t base, int exp, const Budget& budget) {
    std::uint64_t value = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && value > budget.max_evaluations / base) {
            return budget.max_evaluations + 1;
        }
        value *= base;
    }
    return value;
}

} // namespace

ScStarCylindersResult sc_star_cylinders(std::uint64_t kappa, const std::vector<Word>& basics,
                                        const Budget& budget) {
    if (kappa < 1) {
        throw std::invalid_argument("alphabet size must be >= 1");
    }
    std::size_t k = 0;
    for (const Word& x : basics) {
        for (std::uint64_t letter : x) {
            if (letter >= kappa) {
                throw std::invalid_argument("basic cylinder letter outside the alphabet");
            }
        }
        k = std::max(k, x.size());
    }
    ScStarCylindersResult result;
    result.k = static_cast<int>(k);
    if (checked_pow_u64(kappa, result.k, budget) > budget.max_evaluations) {
        throw BudgetError("cylinder enumeration exceeds the evaluation budget");
    }
    Word w(k, 0);
    while (true) {
        CertificateEntry entry;
        entry.word = w;
        for (std::size_t i = 0; i < basics.size(); ++i) {
            if (is_prefix(basics[i], w)) {
                entry.set_index = i;
                break;
            }
        }
        // |x_i| <= |w| for every basic, so "no prefix" means the cylinders are
        // disjoint and A_w lies in the rest set.
        result.certificate.push_back(std::move(entry));
        if (w.empty() || !next_word(w, kappa)) {
            break;
        }
    }
    return result;
}

OmegaImage omega_word_image(const std::vector<std::uint64_t>& word) {
    // Outermost-first: word[i] = 0 is the constant-0 map, 1 the successor.
    // The outermost constant map pins the image; the maps outside it only
    // shift. Without any constant map the image is the upward tail.
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0) {
            return OmegaImage{true, static_cast<std::uint64_t>(i)};
        }
        if (word[i] != 1) {
            throw std::invalid_argument("omega words use letters 0 and 1 only");
        }
    }
    return OmegaImage{false, word.size()};
}

ScStarOmegaResult sc_star_omega_discrete(const std::vector<std::uint64_t>& singletons,
                                         const Budget& budget) {
    ScStarOmegaResult result;
    if (!singletons.empty()) {
        result.k = static_cast<int>(*std::max_element(singletons.begin(), singletons.end())) + 1;
    }
    if (checked_pow_u64(2, result.k, budget) > budget.max_evaluations) {
        throw BudgetError("word enumeration exceeds the evaluation budget");
    }
    std::vector<std::uint64_t> w(static_cast<std::size_t>(result.k), 0);
    while (true) {
        OmegaCertEntry entry;
        entry.word = w;
        entry.image = omega_word_image(w);
        if (entry.image.singleton) {
            for (std::size_t i = 0; i < singletons.size(); ++i) {
                if (singletons[i] == entry.image.value) {
                    entry.singleton_index = i;
                    break;
                }
            }
        }
        // A tail {k, k+1, ...} starts above every listed point, and a
        // singleton not listed lies in the rest set; either way U covers it.
        if (!entry.image.singleton && !singletons.empty() &&
            entry.image.value <= *std::max_element(singletons.begin(), singletons.end())) {
            throw std::logic_error("tail image reaches a listed singleton");
        }
        result.certificate.push_back(std::move(entry));
        if (w.empty() || !next_word(w, 2)) {
            break;
        }
    }
    return result;
}

VerificationReport cofinite_sc(const CofiniteCovering& covering, int max_k,
                               const Budget& budget) {
    if (covering.complements.empty()) {
        throw std::invalid_argument("cofinite covering needs at least one set");
    }
    if (max_k < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    for (const auto& f : covering.complements) {
        for (const Rational& x : f) {
            if (x < 0 || x > 1) {
                throw std::invalid_argument("complement points must lie in [0,1]");
            }
        }
    }
    // Covering condition: the intersection of the complement sets is empty.
    std::vector<Rational> common(covering.complements.front());
    std::sort(common.begin(), common.end());
    for (std::size_t j = 1; j < covering.complements.size() && !common.empty(); ++j) {
        std::vector<Rational> next;
        for (const Rational& x : common) {
            if (std::find(covering.complements[j].begin(), covering.complements[j].end(), x) !=
                covering.complements[j].end()) {
                next.push_back(x);
            }
        }
        common = std::move(next);
    }
    if (!common.empty()) {
        throw CoveringError("cofinite sets do not cover [0,1]: point " +
                            format_rational(common.front()) + " is in every complement");
    }

    // Sound depth from the minimum positive gap between complement points.
    std::set<Rational> points;
    for (const auto& f : covering.complements) {
        points.insert(f.begin(), f.end());
    }
    int gap_k = 0;
    if (points.size() >= 2) {
        Rational gap(-1);
        for (auto it = std::next(points.begin()); it != points.end(); ++it) {
            const Rational d = *it - *std::prev(it);
            if (gap < 0 || d < gap) {
                gap = d;
            }
        }
        Rational len(1);
        while (!(len < gap)) {
            len /= 2;
            ++gap_k;
        }
    }

    VerificationReport report;
    report.gap_bound_k = gap_k;

    const auto interval_clear = [&](const Rational& lo, const Rational& hi)
        -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < covering.complements.size(); ++j) {
            const bool hit = std::any_of(covering.complements[j].begin(),
                                         covering.complements[j].end(),
                                         [&](const Rational& x) { return lo <= x && x <= hi; });
            if (!hit) {
                return j;
            }
        }
        return std::nullopt;
    };

    for (int k = 0; k <= max_k; ++k) {
        if (checked_pow_u64(2, k, budget) > budget.max_evaluations) {
            throw BudgetError("interval enumeration exceeds the evaluation budget");
        }
        std::vector<CertificateEntry> certificate;
        std::optional<std::vector<std::uint64_t>> witness;
        std::vector<std::uint64_t> word(static_cast<std::size_t>(k), 0);
        const Rational len = rational_pow(2, -k);
        while (true) {
            // The word is the binary expansion of the interval index,
            // outermost map = most significant bit.
            Rational lo(0);
            for (std::size_t i = 0; i < word.size(); ++i) {
                if (word[i] != 0) {
                    lo += rational_pow(2, -static_cast<int>(i) - 1);
                }
            }
            const auto idx = interval_clear(lo, lo + len);
            if (!idx) {
                witness = word;
                break;
            }
            certificate.push_back(CertificateEntry{word, idx});
            if (word.empty() || !next_word(word, 2)) {
                break;
            }
        }
        if (!witness) {
            report.verdict = Verdict::Holds;
            report.k = k;
            report.certificate = std::move(certificate);
            return report;
        }
    }
    // The gap bound proves the condition holds at gap_k even though the
    // minimal depth was not reached within max_k.
    report.verdict = Verdict::HoldsWithSoundBound;
    report.k = gap_k;
    return report;
}

} // namespace uifs::models
