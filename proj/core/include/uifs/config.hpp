#pragma once

#include "uifs/ball.hpp"
#include "uifs/ifs.hpp"
#include "uifs/line.hpp"
#include "uifs/models.hpp"
#include "uifs/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace uifs {

// Verification task over a ball covering: context + system + covering.
struct BallCoveringConfig {
    DvrContext context;
    MapKind system_kind = MapKind::DigitPrepend;
    int mu = 0;                       // window systems only
    Ball universe;
    std::vector<std::vector<Ball>> sets;

    Ifs build_system() const;
    Covering build_covering() const;
};

struct BaireConfig {
    int max_k = 10;
};

struct KappaOmegaConfig {
    std::uint64_t kappa = 2;
    std::vector<models::Word> basics;
};

struct OmegaDiscreteConfig {
    std::vector<std::uint64_t> singletons;
};

struct CofiniteConfig {
    models::CofiniteCovering covering;
    int max_k = 16;
};

struct LineConfig {
    std::vector<line::RationalInterval> u_pieces;
    std::vector<line::RationalInterval> basics;
    Rational bound = 0; // attractor closure check sample bound; 0 skips it
};

struct RunConfig {
    std::variant<BaireConfig, BallCoveringConfig, KappaOmegaConfig, OmegaDiscreteConfig,
                 CofiniteConfig, LineConfig>
        payload;
};

// Strict parse: schema-validated, unknown keys rejected. Throws ConfigError.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::string& path);

} // namespace uifs
