#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wfusion/qalpha.hpp"

namespace wfusion {

/// Label of a simple or indecomposable-projective singlet module:
/// M[r,s] (atypical simple, s = p also projective), F[w] (typical Fock,
/// simple and projective), P[r,s] (length-4 projective cover, 1 <= s <= p-1).
struct SingletLabel {
    enum class Kind : std::uint8_t { M, F, P };
    Kind kind = Kind::M;
    int r = 1, s = 1;
    WeightValue w;

    bool is_simple() const { return kind != Kind::P; }
};

bool operator==(const SingletLabel& a, const SingletLabel& b);
bool operator<(const SingletLabel& a, const SingletLabel& b);

SingletLabel make_atypical(int p, int r, int s);
/// Typical Fock label; atypical w with s = p collapses to M[r,p], s < p is rejected.
SingletLabel make_fock(int p, const WeightValue& w);
SingletLabel make_proj_cover(int p, int r, int s);

/// Finite formal direct sum, canonically sorted with positive multiplicities.
struct SingletObject {
    std::vector<std::pair<SingletLabel, long long>> terms;
};

bool operator==(const SingletObject& a, const SingletObject& b);
SingletObject make_singlet_object(std::vector<std::pair<SingletLabel, long long>> terms);

/// Grothendieck vector over simple labels.
using SingletClass = std::map<SingletLabel, long long>;

/// h_{r,s} for r >= 1, h_{2-r,s} for r <= 1.
Rational h_atypical(int p, int r, int s);

/// Lowest conformal weight of the simple label; typical weights must be
/// eps-free (GenericWeight otherwise).
QAlpha singlet_h(int p, const SingletLabel& simple);

/// Tensor product of two simple labels.
SingletObject singlet_fuse(int p, const SingletLabel& x, const SingletLabel& y);

SingletLabel singlet_dual(int p, const SingletLabel& l);

SingletClass singlet_class(int p, const SingletLabel& l);
SingletClass singlet_class(int p, const SingletObject& obj);

/// Krull-Schmidt recovery of the unique projective multiset with the given
/// class, by greedy peeling at minimal r. Throws NotProjectiveClass.
SingletObject singlet_peel(int p, const SingletClass& cls);

} // namespace wfusion
