#pragma once

#include <array>
#include <optional>
#include <string>

#include "diagram.hpp"
#include "laurent.hpp"

namespace knotkit {

inline constexpr int kDefaultBracketBudget = 24;
inline constexpr int kDefaultSimplifySteps = 64;

/// Kauffman bracket state sum in the variable A, <unknot> = 1. Throws a
/// budget error when the crossing count exceeds `budget` (2^n states).
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int budget = kDefaultBracketBudget);

/// Writhe-normalized Jones polynomial; exponents are in units of t^(1/2)
/// with t = A^4, so knots land on even entries. jones(unknot) = 1 and
/// mirroring inverts t.
LaurentPoly jones(const PlanarDiagram& d, int budget = kDefaultBracketBudget);

// Based Gauss-diagram pattern counts. A pattern classifies the interleaving
// and over/under roles of 2 (resp. 3) crossings along the knot, walked from
// the given basepoint (an index into the component's arc walk). The counts
// are sign-weighted: each matched subdiagram contributes the product of its
// crossing signs.
inline constexpr int kPairPatterns = 12;
inline constexpr int kTriplePatterns = 120;
std::array<long long, kPairPatterns> pair_pattern_counts(const PlanarDiagram& d, int basepoint = 0);
std::array<long long, kTriplePatterns> triple_pattern_counts(const PlanarDiagram& d, int basepoint = 0);

/// Degree-2 finite-type invariant, normalized so both trefoils give 1 and
/// the figure-eight gives -1 (the Conway z^2 coefficient). Knots only.
long long v2(const PlanarDiagram& d, int basepoint = 0);

/// Primitive degree-3 finite-type invariant, normalized so the right trefoil
/// gives +1; odd under mirroring. Knots only.
long long v3(const PlanarDiagram& d, int basepoint = 0);

/// Desk-scale isotopy evidence: exact low-degree invariants, the Jones
/// polynomial when the simplified diagram fits the bracket budget, and the
/// component count. v2/v3 are absent on links.
struct Fingerprint {
  std::optional<long long> v2;
  std::optional<long long> v3;
  std::optional<LaurentPoly> jones;
  int components = 0;

  bool operator==(const Fingerprint&) const = default;

  /// Field-wise agreement, comparing jones only when both sides carry it.
  bool matches(const Fingerprint& o) const;
  std::string str() const;
};

Fingerprint fingerprint(const PlanarDiagram& d, int simplify_steps = kDefaultSimplifySteps,
                        int bracket_budget = kDefaultBracketBudget);

}  // namespace knotkit
