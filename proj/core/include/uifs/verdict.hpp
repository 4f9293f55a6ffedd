#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uifs {

enum class Verdict { Holds, Fails, HoldsWithSoundBound };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// One certificate row: a composition word and the index of the covering set
// that contains its image. Set indices follow the covering's input order; a
// missing index means the designated rest set ("U").
struct CertificateEntry {
    std::vector<std::uint64_t> word;
    std::optional<std::size_t> set_index;

    bool operator==(const CertificateEntry&) const = default;
};

// Outcome of a shrinking-condition decision.
struct VerificationReport {
    Verdict verdict = Verdict::Holds;
    std::optional<int> k;
    std::vector<CertificateEntry> certificate;
    std::optional<std::vector<std::uint64_t>> witness;
    std::vector<std::vector<std::uint64_t>> witnesses; // per-depth witnesses (shift model)
    std::optional<bool> oracle_minimal;
    std::optional<int> gap_bound_k; // cofinite model: sound depth from the point gaps

    bool operator==(const VerificationReport&) const = default;
};

} // namespace uifs
