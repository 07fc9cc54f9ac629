#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wfusion/singlet.hpp"

namespace wfusion {

/// The triple (p, r_J, kappa) defining the simple current extension A of
/// H (x) M(p) by J = F^H_{lambda_J} (x) M_{r_J+1,1}, with
/// kappa = lambda_J^2 + r_J^2 p/2.
struct ExtensionData {
    int p = 2;
    int r_J = 1;
    int kappa = 0;
    Rational lambdaJ_sq;        // kappa - p*r_J^2/2, never zero
    bool half_integer_graded = false;

    static ExtensionData make(int p, int r_J, int kappa);
};

bool operator==(const ExtensionData& a, const ExtensionData& b);

/// Label of a simple or indecomposable-projective A-module:
/// W[r,s,l] (simple, projective iff s = p), E[w,l] (typical, projective),
/// Q[r,s,l] (length-4 projective cover, 1 <= s <= p-1).
struct ALabel {
    enum class Kind : std::uint8_t { W, E, Q };
    Kind kind = Kind::W;
    int r = 1, s = 1;
    HalfInt ell;
    WeightValue w; // E only

    bool is_simple() const { return kind != Kind::Q; }
};

/// Projective iff E, Q, or W with s = p.
bool is_projective(int p, const ALabel& l);
bool operator==(const ALabel& a, const ALabel& b);
bool operator!=(const ALabel& a, const ALabel& b);
/// Deterministic order: s-slot major (E last), then kind, r, doubled ell, weight.
bool operator<(const ALabel& a, const ALabel& b);

ALabel make_W(const ExtensionData& ext, int r, int s, HalfInt ell);
ALabel make_E(const ExtensionData& ext, const WeightValue& w, HalfInt ell); // w must be typical
ALabel make_Q(const ExtensionData& ext, int r, int s, HalfInt ell);         // s <= p-1

/// Finite formal direct sum over canonical labels, deterministically sorted.
struct FormalObject {
    std::vector<std::pair<ALabel, long long>> terms;

    bool empty() const { return terms.empty(); }
};

bool operator==(const FormalObject& a, const FormalObject& b);
bool operator!=(const FormalObject& a, const FormalObject& b);
FormalObject make_object(std::vector<std::pair<ALabel, long long>> terms);
FormalObject single(const ALabel& l);

/// Grothendieck vector over canonical simple labels.
using AClass = std::map<ALabel, long long>;

/// Unique canonical representative of the isomorphism class:
/// r in [1, r_J] (W/Q) resp. weight v-coefficient in [0, r_J p/2) (E) when
/// r_J > 0, with ell shifted by n*kappa; ell reduced mod kappa when r_J = 0.
ALabel canonicalize(const ExtensionData& ext, ALabel l);

enum class ASector { Local, Twisted };

/// Local vs theta-twisted, decided by the half-integrality of
/// ell - r_J(s-1)/2 (W/Q) resp. ell - r_J(p-1)/2 (E).
ASector sector(const ExtensionData& ext, const ALabel& l);

/// Induction at label level: g carries gamma*lambda_J for the Heisenberg
/// tensor factor F^H_gamma. Throws NotInSector when the induced module is
/// neither local nor twisted (ell not in (1/2)Z).
ALabel induce(const ExtensionData& ext, const WeightValue& g, const SingletLabel& m);

/// Tensor product of two simple labels.
FormalObject fuse_simple(const ExtensionData& ext, const ALabel& x, const ALabel& y);

AClass a_class(const ExtensionData& ext, const ALabel& l);
AClass a_class(const ExtensionData& ext, const FormalObject& obj);

/// Krull-Schmidt recovery of a projective multiset from its class; greedy
/// peel at minimal doubled ell (r_J > 0) or minimal r (r_J = 0).
FormalObject a_peel(const ExtensionData& ext, const AClass& cls);

/// Bilinear tensor product; products with a projective factor go through
/// the class and are re-assembled with a_peel.
FormalObject fuse(const ExtensionData& ext, const FormalObject& x, const FormalObject& y);

ALabel a_dual(const ExtensionData& ext, const ALabel& l);
FormalObject a_dual(const ExtensionData& ext, const FormalObject& obj);

/// Socle layers bottom-to-top; single layer for simple projectives.
std::vector<FormalObject> loewy(const ExtensionData& ext, const ALabel& proj);

/// Adds a to ell (fusion with the simple current W[1,1,a]).
ALabel shift_ell(const ExtensionData& ext, ALabel l, HalfInt a);
FormalObject shift_ell(const ExtensionData& ext, const FormalObject& obj, HalfInt a);

} // namespace wfusion
