#pragma once

#include <vector>

#include "wfusion/extension.hpp"

namespace wfusion {

/// Conformal-weight classification flags for a simple label.
struct GradingReport {
    bool lower_bounded = false;
    bool grading_restricted = false;
    bool highest_weight = false;
    bool c1_cofinite = false;

    enum class Lowest { Value, Unbounded, Generic };
    Lowest lowest_kind = Lowest::Unbounded;
    QAlpha lowest_weight; // valid when lowest_kind == Value
};

/// Lowest conformal weight of the n-th Heisenberg summand of the label,
/// (g + n*lambda_J^2)^2 / (2 lambda_J^2) + h of the shifted singlet factor.
/// E-type requires an eps-free weight (GenericWeight).
QAlpha summand_weight(const ExtensionData& ext, const ALabel& simple, long long n);

struct LowestWeight {
    bool bounded = false;
    QAlpha value; // valid when bounded
};

/// Exact minimum over all summands, or Unbounded (kappa = 0 only).
LowestWeight lowest_weight(const ExtensionData& ext, const ALabel& simple);

GradingReport classify(const ExtensionData& ext, const ALabel& simple);

enum class Predicate { HighestWeight, GradingRestricted, C1 };

/// Finite lists exist only for kappa = 0; throws Infinite otherwise.
std::vector<ALabel> enumerate_simples(const ExtensionData& ext, Predicate pred);

/// Balancing exponent h_{J x W} - h_J - h_W reduced mod 1; lands in {0, 1/2}
/// and matches the sector parity rule. Requires eps-free data.
Rational monodromy_exponent(const ExtensionData& ext, const ALabel& simple);

} // namespace wfusion
