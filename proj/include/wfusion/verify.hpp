#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wfusion/catalog.hpp"

namespace wfusion {

enum class Suite {
    Commutativity,
    AssociativityClass,
    AssociativityObject,
    Unit,
    DualInvolution,
    DualHom,
    SpectralFlow,
    SectorAdditivity,
    MonoidalInduction,
    PeelRoundtrip,
    Counts,
    BorderWeight,
    MonodromySector,
    C1Subring,
    LiteratureAll,
};

std::vector<Suite> all_suites();
std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

struct SuiteConfig {
    Suite suite = Suite::Commutativity;
    int samples = 1000;
    std::uint64_t seed = 0;
    AlgebraSpec algebra;
};

struct FailureInfo {
    std::string inputs, expected, got;
};

/// Deterministic given (seed, samples, algebra); cases draw their randomness
/// from per-case subsequences, so sharding the index range and merging
/// reproduces the serial report.
struct SuiteReport {
    Suite suite = Suite::Commutativity;
    int passed = 0;
    int failed = 0;
    std::optional<FailureInfo> first_failure;
};

SuiteReport run_suite(const SuiteConfig& cfg);

struct LabelConstraints {
    bool eps_free = false;
    std::optional<ASector> sector;
    std::optional<ALabel::Kind> kind; // W or E
};

ALabel random_label(std::mt19937_64& rng, const ExtensionData& ext,
                    const LabelConstraints& constraints = {});

/// Engine for case `index` of a run with master `seed`.
std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index);

} // namespace wfusion
