#include "uifs/report.hpp"

#include <sstream>

namespace uifs {

using nlohmann::json;

namespace {

json word_to_json(const std::vector<std::uint64_t>& word) {
    json arr = json::array();
    for (std::uint64_t letter : word) {
        arr.push_back(letter);
    }
    return arr;
}

std::vector<std::uint64_t> word_from_json(const json& arr) {
    if (!arr.is_array()) {
        throw ConfigError("report word must be an array");
    }
    std::vector<std::uint64_t> word;
    for (const auto& letter : arr) {
        if (!letter.is_number_integer() || letter.get<long long>() < 0) {
            throw ConfigError("report word letters must be non-negative integers");
        }
        word.push_back(letter.get<std::uint64_t>());
    }
    return word;
}

std::string word_to_text(const std::vector<std::uint64_t>& word) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << word[i];
    }
    os << ")";
    return os.str();
}

} // namespace

json report_to_json(const VerificationReport& report) {
    json doc;
    doc["verdict"] = to_string(report.verdict);
    if (report.k) {
        doc["k"] = *report.k;
    }
    json cert = json::array();
    for (const CertificateEntry& entry : report.certificate) {
        json row = json::array();
        row.push_back(word_to_json(entry.word));
        if (entry.set_index) {
            row.push_back(static_cast<std::uint64_t>(*entry.set_index));
        } else {
            row.push_back("U");
        }
        cert.push_back(std::move(row));
    }
    doc["certificate"] = std::move(cert);
    if (report.witness) {
        doc["witness"] = word_to_json(*report.witness);
    }
    if (!report.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : report.witnesses) {
            ws.push_back(word_to_json(w));
        }
        doc["witnesses"] = std::move(ws);
    }
    if (report.oracle_minimal) {
        doc["oracleMinimal"] = *report.oracle_minimal;
    }
    if (report.gap_bound_k) {
        doc["gapBoundK"] = *report.gap_bound_k;
    }
    return doc;
}

VerificationReport report_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("verdict") || !doc["verdict"].is_string()) {
        throw ConfigError("report document needs a string \"verdict\"");
    }
    VerificationReport report;
    report.verdict = verdict_from_string(doc["verdict"].get<std::string>());
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer()) {
            throw ConfigError("report \"k\" must be an integer");
        }
        report.k = doc["k"].get<int>();
    }
    if (doc.contains("certificate")) {
        if (!doc["certificate"].is_array()) {
            throw ConfigError("report \"certificate\" must be an array");
        }
        for (const auto& row : doc["certificate"]) {
            if (!row.is_array() || row.size() != 2) {
                throw ConfigError("certificate rows must be [word, set] pairs");
            }
            CertificateEntry entry;
            entry.word = word_from_json(row[0]);
            if (row[1].is_string()) {
                if (row[1].get<std::string>() != "U") {
                    throw ConfigError("certificate set must be an index or \"U\"");
                }
            } else if (row[1].is_number_integer() && row[1].get<long long>() >= 0) {
                entry.set_index = row[1].get<std::size_t>();
            } else {
                throw ConfigError("certificate set must be an index or \"U\"");
            }
            report.certificate.push_back(std::move(entry));
        }
    }
    if (doc.contains("witness")) {
        report.witness = word_from_json(doc["witness"]);
    }
    if (doc.contains("witnesses")) {
        if (!doc["witnesses"].is_array()) {
            throw ConfigError("report \"witnesses\" must be an array");
        }
        for (const auto& w : doc["witnesses"]) {
            report.witnesses.push_back(word_from_json(w));
        }
    }
    if (doc.contains("oracleMinimal")) {
        if (!doc["oracleMinimal"].is_boolean()) {
            throw ConfigError("report \"oracleMinimal\" must be a boolean");
        }
        report.oracle_minimal = doc["oracleMinimal"].get<bool>();
    }
    if (doc.contains("gapBoundK")) {
        if (!doc["gapBoundK"].is_number_integer()) {
            throw ConfigError("report \"gapBoundK\" must be an integer");
        }
        report.gap_bound_k = doc["gapBoundK"].get<int>();
    }
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verdict: " << to_string(report.verdict) << "\n";
    if (report.k) {
        os << "k: " << *report.k << "\n";
    }
    if (report.gap_bound_k) {
        os << "gap bound k: " << *report.gap_bound_k << "\n";
    }
    if (report.oracle_minimal) {
        os << "oracle minimal: " << (*report.oracle_minimal ? "yes" : "no") << "\n";
    }
    if (report.witness) {
        os << "witness: " << word_to_text(*report.witness) << "\n";
    }
    if (!report.witnesses.empty()) {
        os << "witnesses:\n";
        for (const auto& w : report.witnesses) {
            os << "  " << word_to_text(w) << "\n";
        }
    }
    if (!report.certificate.empty()) {
        os << "certificate (" << report.certificate.size() << " words):\n";
        for (const CertificateEntry& entry : report.certificate) {
            os << "  word=" << word_to_text(entry.word) << " set=";
            if (entry.set_index) {
                os << *entry.set_index;
            } else {
                os << "U";
            }
            os << "\n";
        }
    }
    return os.str();
}

json line_report_to_json(const line::ScStarLineResult& result) {
    json doc;
    doc["verdict"] = to_string(result.verdict);
    doc["k"] = result.k;
    if (result.c) {
        doc["c"] = format_rational(*result.c);
    }
    json margins = json::array();
    for (const auto& entry : result.certificate) {
        json row;
        row["point"] = format_rational(entry.point);
        row["set"] = entry.set_index == 0 ? json("U") : json(entry.set_index - 1);
        row["margin"] = format_rational(entry.margin);
        margins.push_back(std::move(row));
    }
    doc["margins"] = std::move(margins);
    return doc;
}

line::ScStarLineResult line_report_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("verdict") || !doc["verdict"].is_string()) {
        throw ConfigError("line report needs a string \"verdict\"");
    }
    line::ScStarLineResult result;
    result.verdict = verdict_from_string(doc["verdict"].get<std::string>());
    if (!doc.contains("k") || !doc["k"].is_number_integer()) {
        throw ConfigError("line report needs an integer \"k\"");
    }
    result.k = doc["k"].get<int>();
    if (doc.contains("c")) {
        if (!doc["c"].is_string()) {
            throw ConfigError("line report \"c\" must be a rational string");
        }
        result.c = parse_rational(doc["c"].get<std::string>());
    }
    if (doc.contains("margins")) {
        if (!doc["margins"].is_array()) {
            throw ConfigError("line report \"margins\" must be an array");
        }
        for (const auto& row : doc["margins"]) {
            if (!row.is_object() || !row.contains("point") || !row.contains("set") ||
                !row.contains("margin")) {
                throw ConfigError("line report margin rows need point/set/margin");
            }
            line::MarginCertEntry entry;
            entry.point = parse_rational(row["point"].get<std::string>());
            if (row["set"].is_string()) {
                if (row["set"].get<std::string>() != "U") {
                    throw ConfigError("margin set must be an index or \"U\"");
                }
                entry.set_index = 0;
            } else if (row["set"].is_number_integer() && row["set"].get<long long>() >= 0) {
                entry.set_index = row["set"].get<std::size_t>() + 1;
            } else {
                throw ConfigError("margin set must be an index or \"U\"");
            }
            entry.margin = parse_rational(row["margin"].get<std::string>());
            result.certificate.push_back(std::move(entry));
        }
    }
    return result;
}

bool replay_line_report(const LineConfig& config, const line::ScStarLineResult& result) {
    try {
        const auto fresh =
            line::sc_star_line(line::IntervalUnion::normalize(config.u_pieces), config.basics);
        return fresh == result;
    } catch (const std::exception&) {
        return false;
    }
}

std::string line_report_to_text(const line::ScStarLineResult& result) {
    std::ostringstream os;
    os << "verdict: " << to_string(result.verdict) << "\n";
    os << "k: " << result.k << "\n";
    if (result.c) {
        os << "c: " << format_rational(*result.c) << "\n";
    }
    for (const auto& entry : result.certificate) {
        os << "  endpoint " << format_rational(entry.point) << ": margin "
           << format_rational(entry.margin) << " inside set ";
        if (entry.set_index == 0) {
            os << "U";
        } else {
            os << "basic " << (entry.set_index - 1);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

bool replay_ball_covering(const BallCoveringConfig& config, const VerificationReport& report) {
    const Ifs system = config.build_system();
    const Covering covering = config.build_covering();
    if (report.verdict == Verdict::Holds) {
        if (!report.k) {
            return false;
        }
        // Every certified word must land inside the claimed covering set, and
        // the certificate must name every length-k word exactly once.
        std::uint64_t expected = 1;
        for (int i = 0; i < *report.k; ++i) {
            expected *= system.size();
        }
        if (report.certificate.size() != expected) {
            return false;
        }
        for (const CertificateEntry& entry : report.certificate) {
            if (entry.word.size() != static_cast<std::size_t>(*report.k) || !entry.set_index ||
                *entry.set_index >= covering.sets().size()) {
                return false;
            }
            MapWord word(entry.word.begin(), entry.word.end());
            const ClopenSet image =
                compose_image(system, word, ClopenSet::of(covering.universe()));
            const ClopenSet& target = covering.sets()[*entry.set_index];
            if (!image.subset_of(target)) {
                return false;
            }
        }
        return true;
    }
    if (report.verdict == Verdict::Fails) {
        if (!report.witness) {
            return false;
        }
        // The witness image must straddle every covering set.
        MapWord word(report.witness->begin(), report.witness->end());
        const ClopenSet image = compose_image(system, word, ClopenSet::of(covering.universe()));
        for (const ClopenSet& s : covering.sets()) {
            if (image.subset_of(s)) {
                return false;
            }
        }
        return true;
    }
    return false;
}

bool replay_model(const RunConfig& config, const VerificationReport& report,
                  const Budget& budget) {
    if (const auto* baire = std::get_if<BaireConfig>(&config.payload)) {
        const auto witnesses = models::baire_sc_failure_witnesses(baire->max_k);
        return report.verdict == Verdict::Fails && report.witnesses == witnesses;
    }
    if (const auto* kappa = std::get_if<KappaOmegaConfig>(&config.payload)) {
        const auto result = models::sc_star_cylinders(kappa->kappa, kappa->basics, budget);
        return report.verdict == Verdict::Holds && report.k == result.k &&
               report.certificate == result.certificate;
    }
    if (const auto* omega = std::get_if<OmegaDiscreteConfig>(&config.payload)) {
        const auto result = models::sc_star_omega_discrete(omega->singletons, budget);
        if (report.verdict != Verdict::Holds || report.k != result.k ||
            report.certificate.size() != result.certificate.size()) {
            return false;
        }
        for (std::size_t i = 0; i < result.certificate.size(); ++i) {
            if (report.certificate[i].word != result.certificate[i].word ||
                report.certificate[i].set_index != result.certificate[i].singleton_index) {
                return false;
            }
        }
        return true;
    }
    if (const auto* cof = std::get_if<CofiniteConfig>(&config.payload)) {
        const auto result = models::cofinite_sc(cof->covering, cof->max_k, budget);
        return report.verdict == result.verdict && report.k == result.k &&
               report.gap_bound_k == result.gap_bound_k &&
               report.certificate == result.certificate;
    }
    return false;
}

} // namespace

bool replay_report(const RunConfig& config, const VerificationReport& report,
                   const Budget& budget) {
    if (std::holds_alternative<LineConfig>(config.payload)) {
        throw std::invalid_argument("line reports replay via replay_line_report");
    }
    try {
        if (const auto* ball = std::get_if<BallCoveringConfig>(&config.payload)) {
            return replay_ball_covering(*ball, report);
        }
        return replay_model(config, report, budget);
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace uifs
