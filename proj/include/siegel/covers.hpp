#pragma once

#include <map>
#include <string>
#include <vector>

#include "siegel/cyclotomic.hpp"

namespace siegel {

/// Z/m_1 x ... x Z/m_k with every m_j >= 2. Elements and characters are both
/// residue tuples; the character n evaluates on a as exp(2 pi i sum n_j a_j / m_j).
class AbelianGroup {
 public:
  using Element = std::vector<int>;

  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> invariant_factors);

  const std::vector<int>& invariant_factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const;
  /// lcm of the invariant factors.
  int exponent() const;

  Element normalize(Element a) const;
  Element add(const Element& a, const Element& b) const;
  bool is_identity(const Element& a) const;
  int element_order(const Element& a) const;
  /// All tuples in lexicographic order (identity first).
  std::vector<Element> elements() const;
  bool generated_by(const std::vector<Element>& gens) const;

  /// Fractional part of <chi, a> in [0, 1).
  Rational pairing(const Element& character, const Element& a) const;
  CycNum character_value(const Element& character, const Element& a, int conductor) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<int> factors_;
};

using Character = AbelianGroup::Element;

struct CoverSpec {
  AbelianGroup group;
  int base_genus = 0;
  std::vector<AbelianGroup::Element> branch;
  std::string label;

  /// Throws InvalidCover / InconsistentMonodromy / DisconnectedCover.
  void validate() const;
};

/// Genus of the cover from 2g - 2 = |G|(2g' - 2) + sum |G|(1 - 1/ord a_i).
int riemann_hurwitz_genus(const CoverSpec& spec);

struct IsotypicDims {
  std::map<Character, int> dims;
  int genus = 0;
  int base_genus = 0;

  int dim(const Character& chi) const;
};

struct GroupAction {
  int genus = 0;
  int conductor = 4;
  std::vector<CycMatrix> generators;             // A0, g x g unitary
  std::vector<CycMatrix> symplectic_generators;  // A = diag(A0, conj A0)
  bool abelian = true;
};

/// Q = [[0, iI], [-iI, 0]] in the (omega, conj omega) frame.
CycMatrix symplectic_form(int genus, int conductor);
CycMatrix symplectic_extension(const CycMatrix& a0);

/// Chevalley-Weil multiplicities of an abelian cover: g' for the trivial
/// character and (g' - 1) + sum_i frac(<chi, a_i>) otherwise.
IsotypicDims eigenspace_dims(const CoverSpec& spec);

/// Diagonal A0 per standard generator, trivial block first and the remaining
/// characters in lexicographic order.
GroupAction build_action(const IsotypicDims& dims, const AbelianGroup& group);

GroupAction load_explicit_action(const std::vector<CycMatrix>& matrices);

}  // namespace siegel
