#include <doctest.h>

#include <random>
#include <set>

#include "siegel/cartan.hpp"
#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

using namespace siegel;

namespace {

GroupAction action_of(std::initializer_list<const char*> texts) {
  std::vector<CycMatrix> ms;
  for (const char* t : texts) ms.push_back(parse_matrix(t));
  return load_explicit_action(ms);
}

/// Positions (r, c) where some basis element of zp has a nonzero D entry.
std::set<std::pair<int, int>> d_support(const Subspace& zp) {
  std::set<std::pair<int, int>> out;
  for (const auto& x : zp.basis())
    for (int r = 0; r < x.genus(); ++r)
      for (int c = 0; c < x.genus(); ++c)
        if (!x.D(r, c).is_zero()) out.insert({r, c});
  return out;
}

/// P A P^{-1} for each generator, with P unitary over the rationals.
GroupAction conjugated(const GroupAction& a, const CycMatrix& p) {
  std::vector<CycMatrix> ms;
  for (const auto& m : a.generators) ms.push_back(p.lift(a.conductor) * m * p.transpose().lift(a.conductor));
  return load_explicit_action(ms);
}

CycMatrix rotation(int g, int i, int j) {
  auto r = CycMatrix::identity(g, 1);
  r.set(i, i, CycNum(1, Rational(3, 5)));
  r.set(i, j, CycNum(1, Rational(-4, 5)));
  r.set(j, i, CycNum(1, Rational(4, 5)));
  r.set(j, j, CycNum(1, Rational(3, 5)));
  return r;
}

CycMatrix cyclic_permutation(int g) {
  CycMatrix p(g, g, 1);
  for (int j = 0; j < g; ++j) p.set((j + 1) % g, j, CycNum(1, 1));
  return p;
}

const char* kFamily8 = "diag(z4^3,z4^3,z4)";
const char* kFamily10 = "diag(z3^2,z3^2,z3^2,z3)";
const char* kFamily14 = "diag(z6^5,z6^5,z6^2,z6)";

}  // namespace

TEST_CASE("base point of the trivial action in genus one") {
  const auto bp = base_point(action_of({"diag(1)"}));
  const auto i = CycNum::imaginary_unit(4);
  CHECK(bp.J0 == CycMatrix::diagonal({i, -i}));
  CHECK(bp.J0 * bp.J0 == CycNum(4, -1) * CycMatrix::identity(2, 4));
  CHECK(bp.J0.transpose() * bp.Q * bp.J0 == bp.Q);
}

TEST_CASE("base point is fixed by the family actions") {
  CHECK_NOTHROW(base_point(action_of({"diag(-1,-1)"})));
  CHECK_NOTHROW(base_point(action_of({"diag(1,-1,-1)", "diag(-1,1,-1)"})));
  CHECK_NOTHROW(base_point(action_of({"diag(z5^4,z5^4,z5^4,z5^3,z5^3,z5^2)"})));

  GroupAction bad = action_of({"diag(1,1)"});
  const auto swap = CycMatrix::block2x2(CycMatrix(2, 2, 4), CycMatrix::identity(2, 4), CycMatrix::identity(2, 4),
                                        CycMatrix(2, 2, 4));
  bad.symplectic_generators = {swap};
  try {
    base_point(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBlockDiagonal);
  }
}

TEST_CASE("centralizer shapes") {
  SUBCASE("minus identity: every symmetric D") {
    const auto cz = centralizer(action_of({"diag(-1,-1)"}));
    CHECK(cz.zp.complex_dim() == 3);
    CHECK(cz.zk.real_dim() == 4);
  }
  SUBCASE("order four: an off-diagonal column") {
    const auto cz = centralizer(action_of({kFamily8}));
    CHECK(cz.zp.real_dim() == 4);
    CHECK(cz.zp.complex_dim() == 2);
    CHECK(d_support(cz.zp) == std::set<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 0}, {2, 1}});
  }
  SUBCASE("Klein four: diagonal D") {
    const auto cz = centralizer(action_of({"diag(1,-1,-1)", "diag(-1,1,-1)"}));
    CHECK(cz.zp.complex_dim() == 3);
    CHECK(d_support(cz.zp) == std::set<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});
  }
  SUBCASE("order six: corner blocks only") {
    const auto cz = centralizer(action_of({kFamily14}));
    CHECK(cz.zp.complex_dim() == 2);
    CHECK(d_support(cz.zp) == std::set<std::pair<int, int>>{{0, 3}, {1, 3}, {3, 0}, {3, 1}});
  }
  SUBCASE("trivial action: all of p") {
    const auto cz = centralizer(action_of({"diag(1,1,1)"}));
    CHECK(cz.zp.complex_dim() == 6);
    CHECK(cz.zk.real_dim() == 9);
  }
  SUBCASE("no fixed directions") {
    const auto cz = centralizer(action_of({"diag(i)"}));
    CHECK(cz.zp.real_dim() == 0);
  }
}

TEST_CASE("centralizer elements and the base point") {
  for (const char* text : {"diag(-1,-1)", kFamily8, kFamily10, kFamily14}) {
    const auto action = action_of({text});
    const auto bp = base_point(action);
    const auto cz = centralizer(action);
    for (const auto& x : cz.zp.basis()) {
      CHECK(x.in_sp());
      CHECK(x.matrix() * bp.J0 == -(bp.J0 * x.matrix()));
      for (const auto& a : action.symplectic_generators) CHECK(x.matrix() * a == a * x.matrix());
    }
    for (const auto& x : cz.zk.basis()) {
      CHECK(x.in_sp());
      CHECK(x.matrix() * bp.J0 == bp.J0 * x.matrix());
    }
  }
}

TEST_CASE("direct sum of the k and p parts") {
  for (auto action : {action_of({kFamily8}), action_of({kFamily10}), action_of({"diag(1,-1,-1)", "diag(-1,1,-1)"}),
                      action_of({"diag(1,-1)"})}) {
    const auto cz = centralizer(action);
    const auto full = full_centralizer(action);
    CHECK(full.real_dim() == cz.zk.real_dim() + cz.zp.real_dim());
    for (const auto& x : full.basis()) {
      CHECK(cz.zk.contains(x.k_projection()));
      CHECK(cz.zp.contains(x.p_projection()));
    }
  }
}

TEST_CASE("complex structure on p") {
  const auto i = CycNum::imaginary_unit(4);
  const auto x = AlgElement::from_p(CycMatrix::identity(2, 4));
  CHECK(complex_structure(x).D == -i * CycMatrix::identity(2, 4));
  CHECK_THROWS_AS(complex_structure(AlgElement::from_k(i * CycMatrix::identity(2, 4))), Error);

  const auto cz = centralizer(action_of({kFamily10}));
  const auto basis = cz.zp.basis();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    AlgElement v = AlgElement::zero(4, cz.zp.conductor());
    for (const auto& b : basis) v = v + CycNum(cz.zp.conductor(), coeff(rng)) * b;
    CHECK(complex_structure(complex_structure(v)) == CycNum(cz.zp.conductor(), -1) * v);
    CHECK(cz.zp.contains(complex_structure(v)));
  }
  CHECK(is_iota_stable(cz.zp));

  auto e11 = CycMatrix(3, 3, 4);
  e11.set(0, 0, CycNum(4, 1));
  const auto line = Subspace::span(Part::P, 3, 4, {AlgElement::from_p(e11), complex_structure(AlgElement::from_p(e11))});
  CHECK(line.complex_dim() == 1);
  CHECK(is_iota_stable(line));
}

TEST_CASE("algebra coordinates round trip") {
  const auto cz = centralizer(action_of({kFamily14}));
  for (const auto& x : cz.zp.basis())
    CHECK(from_algebra_coordinates(algebra_coordinates(x), x.genus(), x.conductor()) == x);
  for (const auto& x : cz.zk.basis())
    CHECK(from_algebra_coordinates(algebra_coordinates(x), x.genus(), x.conductor()) == x);
  CHECK_THROWS_AS(Subspace::span(Part::P, 4, cz.zk.conductor(), cz.zk.basis()), Error);
}

TEST_CASE("centralizer dimensions are conjugation invariant") {
  for (const char* text : {kFamily8, kFamily10, kFamily14}) {
    const auto action = action_of({text});
    const auto cz = centralizer(action);
    for (const auto& p : {cyclic_permutation(action.genus), rotation(action.genus, 1, 2),
                          rotation(action.genus, 0, action.genus - 1) * cyclic_permutation(action.genus)}) {
      const auto moved = conjugated(action, p);
      CHECK_NOTHROW(base_point(moved));
      const auto cz2 = centralizer(moved);
      CHECK(cz2.zp.real_dim() == cz.zp.real_dim());
      CHECK(cz2.zk.real_dim() == cz.zk.real_dim());
      CHECK(full_centralizer(moved).real_dim() == full_centralizer(action).real_dim());
    }
  }
}
