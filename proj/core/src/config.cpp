#include "uifs/config.hpp"

#include <fstream>
#include <set>

namespace uifs {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

int get_int(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ConfigError(where + " needs integer field \"" + key + "\"");
    }
    return j[key].get<int>();
}

std::string get_string(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw ConfigError(where + " needs string field \"" + key + "\"");
    }
    return j[key].get<std::string>();
}

DvrContext parse_context(const json& j) {
    require_object(j, "\"context\"");
    reject_unknown_keys(j, {"p", "mode", "precision"}, "\"context\"");
    const int p = get_int(j, "p", "\"context\"");
    const std::string mode = get_string(j, "mode", "\"context\"");
    const int precision = get_int(j, "precision", "\"context\"");
    CharMode m;
    if (mode == "equal-char") {
        m = CharMode::EqualChar;
    } else if (mode == "mixed-char") {
        m = CharMode::MixedChar;
    } else {
        throw ConfigError("\"context.mode\" must be \"equal-char\" or \"mixed-char\"");
    }
    if (p < 2) {
        throw ConfigError("\"context.p\" must be a prime >= 2");
    }
    try {
        return DvrContext(static_cast<std::uint32_t>(p), m, precision);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("\"context\": ") + e.what());
    }
}

line::RationalInterval parse_interval_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw ConfigError(where + " must be a [lo, hi] pair of rational strings");
    }
    line::RationalInterval i;
    i.lo = line::parse_endpoint(j[0].get<std::string>());
    i.hi = line::parse_endpoint(j[1].get<std::string>());
    i.lo_open = true;
    i.hi_open = true;
    try {
        line::validate_interval(i);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return i;
}

RunConfig parse_model_config(const json& doc) {
    const std::string model = get_string(doc, "model", "config");
    if (model == "baire") {
        reject_unknown_keys(doc, {"model", "maxK"}, "baire config");
        BaireConfig c;
        if (doc.contains("maxK")) {
            c.max_k = get_int(doc, "maxK", "baire config");
        }
        return RunConfig{c};
    }
    if (model == "kappa-omega") {
        reject_unknown_keys(doc, {"model", "kappa", "basics"}, "kappa-omega config");
        KappaOmegaConfig c;
        c.kappa = static_cast<std::uint64_t>(get_int(doc, "kappa", "kappa-omega config"));
        if (!doc.contains("basics") || !doc["basics"].is_array()) {
            throw ConfigError("kappa-omega config needs array \"basics\"");
        }
        for (const auto& w : doc["basics"]) {
            if (!w.is_array()) {
                throw ConfigError("\"basics\" entries must be letter arrays");
            }
            models::Word word;
            for (const auto& letter : w) {
                if (!letter.is_number_integer() || letter.get<long long>() < 0) {
                    throw ConfigError("cylinder letters must be non-negative integers");
                }
                word.push_back(letter.get<std::uint64_t>());
            }
            c.basics.push_back(std::move(word));
        }
        return RunConfig{c};
    }
    if (model == "omega-discrete") {
        reject_unknown_keys(doc, {"model", "singletons"}, "omega-discrete config");
        OmegaDiscreteConfig c;
        if (!doc.contains("singletons") || !doc["singletons"].is_array()) {
            throw ConfigError("omega-discrete config needs array \"singletons\"");
        }
        for (const auto& n : doc["singletons"]) {
            if (!n.is_number_integer() || n.get<long long>() < 0) {
                throw ConfigError("singletons must be non-negative integers");
            }
            c.singletons.push_back(n.get<std::uint64_t>());
        }
        return RunConfig{c};
    }
    if (model == "cofinite") {
        reject_unknown_keys(doc, {"model", "complements", "maxK"}, "cofinite config");
        CofiniteConfig c;
        if (!doc.contains("complements") || !doc["complements"].is_array()) {
            throw ConfigError("cofinite config needs array \"complements\"");
        }
        for (const auto& f : doc["complements"]) {
            if (!f.is_array()) {
                throw ConfigError("\"complements\" entries must be arrays of rational strings");
            }
            std::vector<Rational> points;
            for (const auto& x : f) {
                if (!x.is_string()) {
                    throw ConfigError("complement points must be rational strings");
                }
                points.push_back(parse_rational(x.get<std::string>()));
            }
            c.covering.complements.push_back(std::move(points));
        }
        if (doc.contains("maxK")) {
            c.max_k = get_int(doc, "maxK", "cofinite config");
        }
        return RunConfig{c};
    }
    if (model == "line") {
        reject_unknown_keys(doc, {"model", "U", "basics", "bound"}, "line config");
        LineConfig c;
        if (doc.contains("U")) {
            if (!doc["U"].is_array()) {
                throw ConfigError("line config \"U\" must be an array of interval pairs");
            }
            for (const auto& p : doc["U"]) {
                c.u_pieces.push_back(parse_interval_pair(p, "line config \"U\" entry"));
            }
        }
        if (doc.contains("basics")) {
            if (!doc["basics"].is_array()) {
                throw ConfigError("line config \"basics\" must be an array of interval pairs");
            }
            for (const auto& p : doc["basics"]) {
                c.basics.push_back(parse_interval_pair(p, "line config \"basics\" entry"));
            }
        }
        if (doc.contains("bound")) {
            c.bound = parse_rational(get_string(doc, "bound", "line config"));
        }
        return RunConfig{c};
    }
    throw ConfigError("unknown model \"" + model + "\"");
}

} // namespace

Ifs BallCoveringConfig::build_system() const {
    switch (system_kind) {
    case MapKind::DigitPrepend:
        return Ifs::full_digit_prepend(context);
    case MapKind::Window:
        return Ifs::full_window(context, mu);
    case MapKind::TailFixing:
        return Ifs::full_tail_fixing(context);
    }
    throw std::logic_error("unreachable");
}

Covering BallCoveringConfig::build_covering() const {
    std::vector<ClopenSet> clopen;
    clopen.reserve(sets.size());
    for (const auto& balls : sets) {
        clopen.push_back(ClopenSet::normalize(balls));
    }
    return Covering(std::move(clopen), universe);
}

RunConfig parse_run_config(const nlohmann::json& doc) {
    require_object(doc, "config");
    if (doc.contains("model")) {
        return parse_model_config(doc);
    }
    reject_unknown_keys(doc, {"context", "system", "covering"}, "config");
    if (!doc.contains("context") || !doc.contains("system")) {
        throw ConfigError("config needs \"context\" and \"system\" sections (or \"model\")");
    }
    const DvrContext ctx = parse_context(doc["context"]);

    const json& sys = doc["system"];
    require_object(sys, "\"system\"");
    reject_unknown_keys(sys, {"kind", "mu"}, "\"system\"");
    const std::string kind = get_string(sys, "kind", "\"system\"");
    MapKind system_kind;
    int mu = 0;
    if (kind == "digit-prepend") {
        system_kind = MapKind::DigitPrepend;
    } else if (kind == "window") {
        system_kind = MapKind::Window;
        mu = get_int(sys, "mu", "\"system\"");
        if (mu < 0) {
            throw ConfigError("\"system.mu\" must be >= 0");
        }
    } else if (kind == "tail-fixing") {
        system_kind = MapKind::TailFixing;
    } else {
        throw ConfigError("\"system.kind\" must be digit-prepend, window or tail-fixing");
    }
    if (system_kind != MapKind::Window && sys.contains("mu")) {
        throw ConfigError("\"system.mu\" is only valid for window systems");
    }

    Ball universe(Element::zero(ctx), 0);
    std::vector<std::vector<Ball>> sets;
    if (doc.contains("covering")) {
        const json& cov = doc["covering"];
        require_object(cov, "\"covering\"");
        reject_unknown_keys(cov, {"universe", "sets", "balls", "balls_file"}, "\"covering\"");
        if (cov.contains("universe")) {
            universe = parse_ball_text(ctx, get_string(cov, "universe", "\"covering\""));
        }
        const auto parse_ball_array = [&](const json& arr) {
            std::vector<Ball> balls;
            for (const auto& b : arr) {
                if (!b.is_string()) {
                    throw ConfigError("covering balls must be ball-text strings");
                }
                balls.push_back(parse_ball_text(ctx, b.get<std::string>()));
            }
            return balls;
        };
        if (cov.contains("sets")) {
            if (!cov["sets"].is_array()) {
                throw ConfigError("\"covering.sets\" must be an array of ball arrays");
            }
            for (const auto& s : cov["sets"]) {
                if (!s.is_array()) {
                    throw ConfigError("\"covering.sets\" entries must be ball arrays");
                }
                sets.push_back(parse_ball_array(s));
            }
        }
        if (cov.contains("balls")) {
            if (!cov["balls"].is_array()) {
                throw ConfigError("\"covering.balls\" must be an array of ball strings");
            }
            for (const Ball& b : parse_ball_array(cov["balls"])) {
                sets.push_back({b});
            }
        }
        if (cov.contains("balls_file")) {
            const std::string path = get_string(cov, "balls_file", "\"covering\"");
            std::ifstream in(path);
            if (!in) {
                throw ConfigError("cannot open covering file \"" + path + "\"");
            }
            for (const Ball& b : parse_ball_lines(ctx, in)) {
                sets.push_back({b});
            }
        }
    }
    return RunConfig{BallCoveringConfig{ctx, system_kind, mu, universe, std::move(sets)}};
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file \"" + path + "\"");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_run_config(doc);
}

} // namespace uifs
