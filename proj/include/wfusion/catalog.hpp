#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfusion/grading.hpp"

namespace wfusion {

enum class Family { Bp, B2orb, Sp, S2orb, Custom };

/// A named specialization of the extension data: the subregular W-algebras
/// Bp / B2orb (kappa = 0) and their principal W-superalgebra duals
/// Sp / S2orb (kappa = 1), or a custom triple.
struct AlgebraSpec {
    Family family = Family::Custom;
    int parameter = 0; // p for Bp/Sp, m for the orbifold families
    ExtensionData ext;
    std::string name;
};

AlgebraSpec make_algebra(Family family, int parameter);
AlgebraSpec make_custom(int p, int r_J, int kappa);

/// "Bp:4", "B2orb:3", "Sp:3", "S2orb:2", "custom:p=3,rJ=2,kappa=0".
AlgebraSpec parse_algebra(const std::string& text);

/// Physics-literature naming schemes, one per covered algebra.
enum class Dialect { BetaGamma, Sl2Half, Sl2FourThirds, BP53, BP94 };

std::string dialect_name(Dialect d);
std::optional<Dialect> dialect_from_name(const std::string& name);
std::vector<Dialect> dialects_for(const AlgebraSpec& spec);

/// Literature name -> canonical label. Grammar: "sigma^k(BASE)" or "BASE"
/// with k a half-integer; BASE is dialect specific (V, P, W_{q}, L_r, S_r,
/// X_r, R_r, E_{q}, D+_{-2/3}, W_s, Q_s, ...). "lam" denotes a generic
/// weight where the dialect's parameter map allows it.
ALabel lit_to_core(const AlgebraSpec& spec, Dialect d, const std::string& name);

/// Canonical label -> literature name (sigma-shifted base form).
std::string core_to_lit(const AlgebraSpec& spec, Dialect d, const ALabel& label);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string lhs, rhs; // rendered objects, for reports
};

/// Recomputes the printed fusion identities of the dialect via translate +
/// fuse. For the S-families the product formulas stated in the
/// superalgebras' own r-suppressed labeling are checked on sampled labels
/// instead.
std::vector<IdentityCheck> reproduce_literature(const AlgebraSpec& spec, Dialect d);
std::vector<IdentityCheck> reproduce_literature(const AlgebraSpec& spec);

} // namespace wfusion
