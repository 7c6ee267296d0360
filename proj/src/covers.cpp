#include "siegel/covers.hpp"

#include <numeric>
#include <set>

#include "siegel/error.hpp"

namespace siegel {

namespace {

std::string format_element(const AbelianGroup::Element& a) {
  std::string s = "(";
  for (size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + std::to_string(a[j]);
  return s + ")";
}

void check_action_invariants(const GroupAction& action) {
  const CycMatrix q = symplectic_form(action.genus, action.conductor);
  for (const auto& a : action.symplectic_generators)
    if (!(a.transpose() * q * a == q))
      throw Error(ErrorKind::Internal, "symplectic generator does not preserve Q");
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidCover, "group needs at least one invariant factor");
  for (int m : factors_)
    if (m < 2) throw Error(ErrorKind::InvalidCover, "invariant factors must be >= 2");
}

int AbelianGroup::order() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1, std::multiplies<>());
}

int AbelianGroup::exponent() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1, [](int a, int b) { return std::lcm(a, b); });
}

AbelianGroup::Element AbelianGroup::normalize(Element a) const {
  if (a.size() != factors_.size())
    throw Error(ErrorKind::InvalidCover, "element " + format_element(a) + " has the wrong number of components");
  for (size_t j = 0; j < a.size(); ++j) a[j] = ((a[j] % factors_[j]) + factors_[j]) % factors_[j];
  return a;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element s(factors_.size());
  for (size_t j = 0; j < s.size(); ++j) s[j] = a[j] + b[j];
  return normalize(std::move(s));
}

bool AbelianGroup::is_identity(const Element& a) const {
  const Element n = normalize(a);
  return std::all_of(n.begin(), n.end(), [](int x) { return x == 0; });
}

int AbelianGroup::element_order(const Element& a) const {
  const Element n = normalize(a);
  int order = 1;
  for (size_t j = 0; j < n.size(); ++j) order = std::lcm(order, factors_[j] / std::gcd(factors_[j], n[j]));
  return order;
}

std::vector<AbelianGroup::Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  Element cur(factors_.size(), 0);
  for (int count = 0; count < order(); ++count) {
    out.push_back(cur);
    for (size_t j = cur.size(); j-- > 0;) {
      if (++cur[j] < factors_[j]) break;
      cur[j] = 0;
    }
  }
  return out;
}

bool AbelianGroup::generated_by(const std::vector<Element>& gens) const {
  std::set<Element> reached{Element(factors_.size(), 0)};
  std::vector<Element> frontier(reached.begin(), reached.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Element y = add(x, g);
        if (reached.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return static_cast<int>(reached.size()) == order();
}

Rational AbelianGroup::pairing(const Element& character, const Element& a) const {
  Rational s = 0;
  for (size_t j = 0; j < factors_.size(); ++j) s += Rational(character[j] * a[j], factors_[j]);
  // fractional part
  const auto num = boost::multiprecision::numerator(s);
  const auto den = boost::multiprecision::denominator(s);
  boost::multiprecision::mpz_int r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

CycNum AbelianGroup::character_value(const Element& character, const Element& a, int conductor) const {
  const Rational theta = pairing(character, normalize(a));
  const Rational scaled = theta * conductor;
  if (boost::multiprecision::denominator(scaled) != 1)
    throw Error(ErrorKind::ConductorMismatch, "character value does not live in Q(zeta_" +
                                                  std::to_string(conductor) + ")");
  return CycNum::root_of_unity(conductor, boost::multiprecision::numerator(scaled).convert_to<long long>());
}

void CoverSpec::validate() const {
  if (base_genus < 0) throw Error(ErrorKind::InvalidCover, "base genus must be non-negative");
  AbelianGroup::Element total(group.invariant_factors().size(), 0);
  for (const auto& a : branch) {
    const auto n = group.normalize(a);
    if (group.is_identity(n))
      throw Error(ErrorKind::InvalidCover, "local monodromy " + format_element(a) + " is the identity");
    total = group.add(total, n);
  }
  if (!group.is_identity(total))
    throw Error(ErrorKind::InconsistentMonodromy,
                "local monodromies sum to " + format_element(total) + ", not to the identity");
  if (base_genus == 0 && !group.generated_by(branch))
    throw Error(ErrorKind::DisconnectedCover, "local monodromies do not generate the group over P^1");
}

int riemann_hurwitz_genus(const CoverSpec& spec) {
  const int order = spec.group.order();
  // 2g - 2 = |G|(2g' - 2) + sum |G| (1 - 1/ord)
  Rational twice = Rational(order * (2 * spec.base_genus - 2));
  for (const auto& a : spec.branch) twice += Rational(order) * (1 - Rational(1, spec.group.element_order(a)));
  const Rational g = (twice + 2) / 2;
  if (boost::multiprecision::denominator(g) != 1)
    throw Error(ErrorKind::InvalidCover, "Riemann-Hurwitz genus is not an integer");
  return boost::multiprecision::numerator(g).convert_to<int>();
}

int IsotypicDims::dim(const Character& chi) const {
  const auto it = dims.find(chi);
  return it == dims.end() ? 0 : it->second;
}

IsotypicDims eigenspace_dims(const CoverSpec& spec) {
  spec.validate();
  IsotypicDims out;
  out.base_genus = spec.base_genus;
  out.genus = riemann_hurwitz_genus(spec);
  int total = 0;
  for (const auto& chi : spec.group.elements()) {
    int d = spec.base_genus;
    if (!spec.group.is_identity(chi)) {
      Rational s = spec.base_genus - 1;
      for (const auto& a : spec.branch) s += spec.group.pairing(chi, spec.group.normalize(a));
      if (boost::multiprecision::denominator(s) != 1 || s < 0)
        throw Error(ErrorKind::Internal, "Chevalley-Weil multiplicity is not a non-negative integer");
      d = boost::multiprecision::numerator(s).convert_to<int>();
    }
    out.dims[chi] = d;
    total += d;
  }
  if (total != out.genus)
    throw Error(ErrorKind::Internal, "isotypic dimensions sum to " + std::to_string(total) +
                                         " but Riemann-Hurwitz gives genus " + std::to_string(out.genus));
  return out;
}

CycMatrix symplectic_form(int genus, int conductor) {
  const CycNum i = CycNum::imaginary_unit(conductor);
  const CycMatrix id = CycMatrix::identity(genus, conductor);
  const CycMatrix zero(genus, genus, conductor);
  return CycMatrix::block2x2(zero, i * id, -i * id, zero);
}

CycMatrix symplectic_extension(const CycMatrix& a0) {
  const CycMatrix zero(a0.rows(), a0.cols(), a0.conductor());
  return CycMatrix::block2x2(a0, zero, zero, a0.conj());
}

GroupAction build_action(const IsotypicDims& dims, const AbelianGroup& group) {
  int total = 0;
  for (const auto& [chi, d] : dims.dims) total += d;
  if (total != dims.genus)
    throw Error(ErrorKind::InvalidCover, "isotypic dimensions do not sum to the genus");

  GroupAction action;
  action.genus = dims.genus;
  action.conductor = std::lcm(4, group.exponent());
  // std::map orders characters lexicographically and the trivial one first.
  std::vector<Character> basis;
  for (const auto& [chi, d] : dims.dims)
    for (int k = 0; k < d; ++k) basis.push_back(chi);

  for (int j = 0; j < group.rank(); ++j) {
    AbelianGroup::Element gen(static_cast<size_t>(group.rank()), 0);
    gen[static_cast<size_t>(j)] = 1;
    std::vector<CycNum> diag;
    for (const auto& chi : basis) diag.push_back(group.character_value(chi, gen, action.conductor));
    CycMatrix a0 = CycMatrix::diagonal(diag).lift(action.conductor);
    if (diag.empty()) a0 = CycMatrix(0, 0, action.conductor);
    action.symplectic_generators.push_back(symplectic_extension(a0));
    action.generators.push_back(std::move(a0));
  }
  action.abelian = true;
  check_action_invariants(action);
  return action;
}

GroupAction load_explicit_action(const std::vector<CycMatrix>& matrices) {
  if (matrices.empty()) throw Error(ErrorKind::InvalidCover, "no generator matrices given");
  const int g = matrices.front().rows();
  const int conductor = matrices.front().conductor();
  for (const auto& m : matrices) {
    if (!m.is_square() || m.rows() != g)
      throw Error(ErrorKind::InvalidCover, "generators must be square matrices of equal size");
    if (m.conductor() != conductor)
      throw Error(ErrorKind::ConductorMismatch, "generators live in Q(zeta_" + std::to_string(conductor) +
                                                    ") and Q(zeta_" + std::to_string(m.conductor()) + ")");
  }
  GroupAction action;
  action.genus = g;
  action.conductor = std::lcm(4, conductor);
  const CycMatrix id = CycMatrix::identity(g, action.conductor);
  for (size_t k = 0; k < matrices.size(); ++k) {
    CycMatrix a0 = matrices[k].lift(action.conductor);
    if (!(a0.adjoint() * a0 == id))
      throw Error(ErrorKind::NotUnitary, "generator " + std::to_string(k + 1) + " is not unitary");
    action.symplectic_generators.push_back(symplectic_extension(a0));
    action.generators.push_back(std::move(a0));
  }
  action.abelian = true;
  for (size_t a = 0; a < action.generators.size(); ++a)
    for (size_t b = a + 1; b < action.generators.size(); ++b)
      if (!(action.generators[a] * action.generators[b] == action.generators[b] * action.generators[a]))
        action.abelian = false;
  check_action_invariants(action);
  return action;
}

}  // namespace siegel
