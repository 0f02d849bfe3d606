#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsinf/bivar_poly.hpp"
#include "bsinf/projective.hpp"
#include "bsinf/rational.hpp"

namespace bsinf {

struct DirectionCount {
  DirectionS1 direction;
  std::size_t count = 0;  // >= 1 whenever stored
};

/// Nondecreasing tuple of positive integers.
struct KInvariant {
  std::vector<std::size_t> entries;

  KInvariant() = default;
  /// Sorts; throws std::invalid_argument on a zero entry.
  explicit KInvariant(std::vector<std::size_t> values);

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
  /// "(1, 3)", "()" for the empty tuple.
  std::string to_string() const;

  friend bool operator==(const KInvariant&, const KInvariant&) = default;
};

struct DescriptorPair {
  std::size_t r0 = 0;  // lines
  std::size_t r1 = 0;  // parabolas

  friend bool operator==(const DescriptorPair&, const DescriptorPair&) = default;
  friend auto operator<=>(const DescriptorPair&, const DescriptorPair&) = default;
};

/// One pair per direction used by the normal form, ordered by (r0, r1).
struct NormalFormDescriptor {
  std::vector<DescriptorPair> pairs;

  bool is_ordered() const;
  /// "((1,0), (0,1))"; "()" when empty.
  std::string to_string() const;

  friend bool operator==(const NormalFormDescriptor&, const NormalFormDescriptor&) = default;
};

struct PointRecord {
  ProjPointAtInfinity point;
  std::optional<DirectionCount> plus;   // along the point's representative
  std::optional<DirectionCount> minus;  // antipodal side
  bool certified = true;
  /// Smallest circle radius used across the contributing germs.
  Rational epsilon;
};

struct InfinityReport {
  std::string input;  // canonical print of the squarefree curve
  std::vector<PointRecord> points;
  KInvariant k;
  NormalFormDescriptor descriptor;
  bool bounded = true;

  bool certified() const;
  /// Every nonzero direction count, in point order, plus side first.
  std::vector<DirectionCount> directions() const;
};

struct InvariantOptions {
  /// Overrides every certified radius; all records come back uncertified.
  std::optional<Rational> epsilon;
  /// Count germs concurrently (falls back to inline evaluation on one core).
  bool parallel = true;
};

/// Full pipeline on one polynomial; squarefree_part is applied first.
InfinityReport k_at_infinity(const BivarPoly& f, const InvariantOptions& opts = {});

/// Same result for the curve defined by the product of `factors`, computed on
/// a coprime basis so that no large product is ever eliminated. Counts are
/// additive over coprime factors.
InfinityReport k_at_infinity(const std::vector<BivarPoly>& factors, const InvariantOptions& opts = {});

bool equivalent_at_infinity(const BivarPoly& f, const BivarPoly& g);
bool equivalent_at_infinity(const InfinityReport& a, const InfinityReport& b);

/// Throws NotRealizable when the entry sum is odd.
NormalFormDescriptor canonical_descriptor(const KInvariant& eta);

/// Multiset {r0, r0 + 2 r1} over all pairs with zeros dropped; inverse of
/// canonical_descriptor on its image.
KInvariant flatten(const NormalFormDescriptor& a);

/// Factors of X_A: for l = 1..N, lines (y - l x) - r for r = 1..r0(l) and
/// parabolas (y - l x)^2 - r (y + l x) for r = 1..r1(l).
std::vector<BivarPoly> emit_normal_form_factors(const NormalFormDescriptor& a);
/// Product of emit_normal_form_factors; the constant 1 for the empty descriptor.
BivarPoly emit_normal_form(const NormalFormDescriptor& a);

/// Factors of the three-block realization X+ X- X0 of an even-sum tuple.
/// Throws NotRealizable on odd sum.
std::vector<BivarPoly> realize_paper_factors(const KInvariant& eta);
BivarPoly realize_paper(const KInvariant& eta);

std::size_t norm1(const KInvariant& eta);

/// Product of the factors (1 for an empty list).
BivarPoly product(const std::vector<BivarPoly>& factors);

/// "(f1)*(f2)*..." with each factor canonical-printed.
std::string factored_string(const std::vector<BivarPoly>& factors);

}  // namespace bsinf
