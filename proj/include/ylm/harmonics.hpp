#pragma once

// Exact spherical harmonics Y_l^m (Condon-Shortley phase) and the algebraic
// routes that rebuild them from extremal states with ladder operators.

#include <stdexcept>
#include <vector>

#include "ylm/operators.hpp"

namespace ylm {

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct HarmonicIndex {
  long l = 0;
  long m = 0;

  bool valid() const { return l >= 0 && m >= -l && m <= l; }
  friend auto operator<=>(const HarmonicIndex&, const HarmonicIndex&) = default;
};

enum class Subspace {
  fixed_l,   // span{Y_l^m : -l <= m <= l}
  fixed_m,   // span{Y_l^m : l >= |m|}
  d_plus,    // l - m = d - 1, d >= 1
  s_minus,   // l + m = s - 1, s >= 1
};

struct SubspaceLabel {
  Subspace kind;
  long label;

  bool valid() const;
  bool contains(const HarmonicIndex& idx) const;
};

/// Y_l^m from the Rodrigues-type formula
///   (-1)^m / (2^l l!) sqrt((2l+1)(l+m)! / (4 pi (l-m)!)) (e^{i phi}/sin)^m (1/sin d/dtheta)^{l-m} sin^{2l}.
SphereFunction closed_form(long l, long m);
inline SphereFunction closed_form(const HarmonicIndex& idx) { return closed_form(idx.l, idx.m); }

enum class Extremal { lowest, highest };

/// Y_l^{-l} (lowest) or Y_l^{l} (highest), sqrt((2l+1)!) / (sqrt(pi) 2^{l+1} l!) sin^l e^{-+ i l phi}
/// with phase 1 for the lowest and (-1)^l for the highest state.
SphereFunction extremal_su2(long l, Extremal which);
/// Y_{|m|}^m, the state annihilated by J-(|m|).
SphereFunction extremal_Jfamily(long m);
/// Lowest state of the d-family: Y_j^{-j} for d = 2j+1, Y_k^{1-k} for d = 2k.
SphereFunction extremal_K(long d);
/// Highest state of the s-family: Y_j^{j} for s = 2j+1, Y_k^{k-1} for s = 2k.
/// The even-s prefactor is taken as printed: 1/(2^{k-1/2} k!) sqrt((2k+1)(2k-1)!/(2 pi)).
SphereFunction extremal_I(long s);

/// Index of the extremal state of each family.
HarmonicIndex extremal_K_index(long d);
HarmonicIndex extremal_I_index(long s);

/// Raising from the lowest state (default) or lowering from the highest.
SphereFunction generate_via_L(long l, long m, Extremal from = Extremal::lowest);
/// J+(l) ... J+(|m|+1) applied to Y_{|m|}^m, normalized.
SphereFunction generate_via_J(long l, long m);
/// (K+^d)^n applied to extremal_K(d), divided by the stated normalization.
SphereFunction generate_via_K(long d, long m);
/// (I-^s)^n applied to extremal_I(s), divided by the stated normalization.
SphereFunction generate_via_I(long s, long m);

/// Normalization divisor N such that Y = (K+^d)^n Y_lowest / N (returned as sqrt of rational).
Scalar generation_norm_K(long d, long m);
/// Normalization divisor N such that Y = (I-^s)^n Y_highest / N.
Scalar generation_norm_I(long s, long m);

/// All members with l <= cutoff, ascending in l then m.
std::vector<HarmonicIndex> enumerate_subspace(const SubspaceLabel& label, long cutoff);

/// Every (l, m) with l <= l_max, ascending.
std::vector<HarmonicIndex> all_indices(long l_max);

}  // namespace ylm
