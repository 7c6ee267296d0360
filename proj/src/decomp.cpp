#include "siegel/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

namespace siegel {

namespace {

std::vector<Vec> matrix_rows(const CycMatrix& m) {
  std::vector<Vec> rows;
  for (int r = 0; r < m.rows(); ++r) {
    Vec row;
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vec flatten(const CycMatrix& m) {
  Vec out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

bool is_scalar(const CycMatrix& m) {
  return m == m(0, 0) * CycMatrix::identity(m.rows(), m.conductor());
}

Subspace span_in(const Subspace& space, const std::vector<Vec>& coefficient_vectors) {
  std::vector<AlgElement> elements;
  for (const auto& v : coefficient_vectors) elements.push_back(space.element(v));
  return Subspace::span(space.part(), space.genus(), space.conductor(), elements);
}

std::vector<AlgElement> pairwise_brackets(const std::vector<AlgElement>& basis) {
  std::vector<AlgElement> out;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      AlgElement x = bracket(basis[a], basis[b]);
      if (!x.is_zero()) out.push_back(std::move(x));
    }
  return out;
}

Subspace bracket_span(const Subspace& w) {
  return Subspace::span(Part::K, w.genus(), w.conductor(), pairwise_brackets(w.basis()));
}

/// Coefficients c_0..c_k (monic) of the minimal polynomial of h.
std::vector<CycNum> minimal_polynomial(const CycMatrix& h) {
  const int n = h.rows();
  const size_t len = static_cast<size_t>(n * n);
  EchelonBasis seen(len);
  std::vector<CycMatrix> powers{CycMatrix::identity(n, h.conductor())};
  seen.insert(flatten(powers.back()));
  while (true) {
    powers.push_back(powers.back() * h);
    if (!seen.insert(flatten(powers.back()))) break;
  }
  const size_t k = powers.size();
  std::vector<Vec> rows(len, Vec(k));
  for (size_t j = 0; j < k; ++j) {
    const Vec f = flatten(powers[j]);
    for (size_t r = 0; r < len; ++r) rows[r][j] = f[r];
  }
  const auto null = kernel(rows, k);
  if (null.size() != 1) throw Error(ErrorKind::Internal, "minimal polynomial is not unique");
  Vec c = null.front();
  const CycNum lead_inv = c.back().inverse();
  for (auto& x : c) x *= lead_inv;
  return c;
}

std::vector<boost::multiprecision::mpz_int> divisors(boost::multiprecision::mpz_int a) {
  using boost::multiprecision::mpz_int;
  if (a < 0) a = -a;
  std::vector<mpz_int> out;
  if (a > mpz_int(1000000000000LL)) return out;
  for (mpz_int d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

/// Rational roots of a polynomial with rational coefficients, increasing.
std::vector<Rational> rational_roots(const std::vector<CycNum>& poly) {
  using boost::multiprecision::mpz_int;
  std::vector<Rational> q;
  for (const auto& c : poly) {
    if (!c.is_rational()) return {};
    q.push_back(c.rational_value());
  }
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < q.size() && q[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  mpz_int den = 1;
  for (const auto& c : q) den = boost::multiprecision::lcm(den, mpz_int(boost::multiprecision::denominator(c)));
  const mpz_int a0 = boost::multiprecision::numerator(q[low] * Rational(den));
  const mpz_int an = boost::multiprecision::numerator(q.back() * Rational(den));
  const auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (size_t k = q.size(); k-- > 0;) acc = acc * x + q[k];
    return acc;
  };
  for (const auto& p : divisors(a0))
    for (const auto& d : divisors(an))
      for (int s : {1, -1}) {
        const Rational x = Rational(p * s, d);
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Best rational approximation with bounded denominator by continued fractions.
std::optional<Rational> recognize_rational(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-9 * std::max(1.0, std::abs(x)))
      return Rational(h1, k1);
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

/// Eigenvalues of h lying in the maximal real subfield of the ambient field.
/// Floats from every real embedding propose a candidate; only exact
/// verification accepts it.
std::vector<CycNum> ambient_eigenvalue_candidates(const CycMatrix& h) {
  const int m = h.conductor();
  const int n = h.rows();
  std::vector<int> embeddings;
  for (int a = 1; 2 * a < m; ++a)
    if (std::gcd(a, m) == 1) embeddings.push_back(a);
  const size_t e = embeddings.size();
  if (e <= 1) return {};

  // Basis 1, zeta^j + zeta^-j (1 <= j < e) of the real subfield.
  std::vector<CycNum> beta{CycNum(m, 1)};
  for (size_t j = 1; j < e; ++j) {
    const CycNum z = CycNum::root_of_unity(m, static_cast<long long>(j));
    beta.push_back(z + z.conj());
  }
  Eigen::MatrixXd b(e, e);
  for (size_t a = 0; a < e; ++a)
    for (size_t j = 0; j < e; ++j) b(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) =
        beta[j].embed(embeddings[a]).real();
  const auto solver = b.fullPivLu();
  if (!solver.isInvertible()) return {};

  std::vector<std::vector<double>> spectra;
  size_t combos = 1;
  for (int a : embeddings) {
    Eigen::MatrixXd f(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f(r, c) = h(r, c).embed(a).real();
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(f, false).eigenvalues();
    std::vector<double> distinct;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      if (std::abs(ev(k).imag()) > 1e-7) continue;
      const double x = ev(k).real();
      if (std::none_of(distinct.begin(), distinct.end(), [&](double y) { return std::abs(x - y) < 1e-7; }))
        distinct.push_back(x);
    }
    if (distinct.empty()) return {};
    combos *= distinct.size();
    if (combos > 200000) return {};
    spectra.push_back(std::move(distinct));
  }

  std::vector<CycNum> out;
  std::vector<size_t> pick(e, 0);
  for (size_t count = 0; count < combos; ++count) {
    Eigen::VectorXd mu(e);
    for (size_t a = 0; a < e; ++a) mu(static_cast<Eigen::Index>(a)) = spectra[a][pick[a]];
    const Eigen::VectorXd c = solver.solve(mu);
    CycNum lambda(m);
    bool ok = true;
    for (size_t j = 0; j < e && ok; ++j) {
      const auto q = recognize_rational(c(static_cast<Eigen::Index>(j)), 100000);
      if (!q) ok = false;
      else lambda += beta[j].scaled(*q);
    }
    if (ok && std::find(out.begin(), out.end(), lambda) == out.end()) out.push_back(lambda);
    for (size_t a = 0; a < e; ++a) {
      if (++pick[a] < spectra[a].size()) break;
      pick[a] = 0;
    }
  }
  return out;
}

/// Splits `space` along an eigenspace of a self-adjoint commutant element.
std::pair<Subspace, Subspace> split(const Subspace& space, const std::vector<CycMatrix>& commutant,
                                    const CycMatrix& iota, const CycMatrix& gram) {
  const CycMatrix gram_inv = inverse(gram);
  const int n = space.real_dim();
  for (const auto& t : commutant) {
    const CycMatrix t_adj = gram_inv * t.transpose() * gram;
    for (const CycMatrix& h : {t + t_adj, iota * (t - t_adj)}) {
      if (is_scalar(h)) continue;
      const auto poly = minimal_polynomial(h);
      std::vector<CycNum> candidates;
      for (const auto& r : rational_roots(poly)) candidates.emplace_back(h.conductor(), r);
      if (candidates.empty()) candidates = ambient_eigenvalue_candidates(h);
      for (const auto& lambda : candidates) {
        const CycMatrix shifted = h - lambda * CycMatrix::identity(n, h.conductor());
        const auto eigen = kernel(matrix_rows(shifted), static_cast<size_t>(n));
        if (eigen.empty() || static_cast<int>(eigen.size()) == n) continue;
        Subspace e = span_in(space, eigen);
        Subspace rest = orthogonal_complement(space, e);
        return {std::move(e), std::move(rest)};
      }
      throw Error(ErrorKind::UnsplittableOverField,
                  "commutant element has no eigenvalue in Q(zeta_" + std::to_string(h.conductor()) + ")^+");
    }
  }
  throw Error(ErrorKind::Internal, "commutant has no non-scalar self-adjoint element");
}

std::vector<CycMatrix> commutant_basis(const Subspace& space, const Subspace& k, CycMatrix* iota_out) {
  const int n = space.real_dim();
  std::vector<CycMatrix> ops;
  for (const auto& c : k.basis())
    ops.push_back(operator_matrix(space, [&](const AlgElement& x) { return ad_action(c, x); }));
  const CycMatrix iota = operator_matrix(space, [](const AlgElement& x) { return complex_structure(x); });
  ops.push_back(iota);
  if (iota_out) *iota_out = iota;

  // Unknown T_{rs} at index r n + s; equation (T X - X T)_{rc} = 0.
  const size_t unknowns = static_cast<size_t>(n * n);
  std::vector<Vec> rows;
  for (const auto& x : ops)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Vec row = zero_vec(unknowns, space.conductor());
        for (int k2 = 0; k2 < n; ++k2) {
          row[static_cast<size_t>(r * n + k2)] += x(k2, c);
          row[static_cast<size_t>(k2 * n + c)] -= x(r, k2);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<CycMatrix> out;
  for (const auto& v : kernel_over_real_subfield(rows, unknowns).vectors) {
    CycMatrix t(n, n, space.conductor());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t.set(r, c, v[static_cast<size_t>(r * n + c)]);
    out.push_back(std::move(t));
  }
  return out;
}

size_t first_pivot(const Subspace& space) {
  if (space.coordinate_basis().empty()) return 0;
  const Vec& v = space.coordinate_basis().front();
  return static_cast<size_t>(std::find_if(v.begin(), v.end(), [](const CycNum& x) { return !x.is_zero(); }) - v.begin());
}

void decompose(const Subspace& space, const Subspace& k, std::vector<Subspace>& out) {
  if (space.real_dim() == 0) return;
  CycMatrix iota;
  const auto comm = commutant_basis(space, k, &iota);
  if (comm.size() <= 2) {
    out.push_back(space);
    return;
  }
  auto [e, rest] = split(space, comm, iota, gram_matrix(space));
  decompose(e, k, out);
  decompose(rest, k, out);
}

}  // namespace

Subspace derived_k(const Subspace& zp) {
  if (zp.part() != Part::P) throw Error(ErrorKind::WrongPart, "derived_k expects a p-subspace");
  Subspace k = bracket_span(zp);
  for (const auto& c : k.basis())
    for (const auto& x : zp.basis())
      if (!zp.contains(ad_action(c, x)))
        throw Error(ErrorKind::NotStable, "[[p', p'], p'] is not contained in p'");
  return k;
}

bool bracket_closed(const Subspace& zp, const Subspace& k) {
  const auto kb = k.basis();
  if (!is_stable(zp, kb)) return false;
  for (size_t a = 0; a < kb.size(); ++a)
    for (size_t b = a + 1; b < kb.size(); ++b)
      if (!k.contains(bracket(kb[a], kb[b]))) return false;
  return true;
}

CycMatrix gram_matrix(const Subspace& space) {
  const auto basis = space.basis();
  const int n = static_cast<int>(basis.size());
  CycMatrix g(n, n, space.conductor());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const CycNum v = trace_form(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]);
      g.set(a, b, v);
      g.set(b, a, v);
    }
  return g;
}

int commutant_real_dim(const Subspace& space, const Subspace& k) {
  if (space.real_dim() == 0) return 0;
  return static_cast<int>(commutant_basis(space, k, nullptr).size());
}

Subspace orthogonal_complement(const Subspace& space, const Subspace& sub) {
  const auto basis = space.basis();
  const auto others = sub.basis();
  std::vector<Vec> rows;
  for (const auto& w : others) {
    Vec row;
    for (const auto& b : basis) row.push_back(trace_form(b, w));
    rows.push_back(std::move(row));
  }
  return span_in(space, kernel_over_real_subfield(rows, basis.size()).vectors);
}

Subspace closure(const AlgElement& v, const Subspace& k) {
  const auto kb = k.basis();
  std::vector<AlgElement> found{v};
  Subspace span = Subspace::span(Part::P, v.genus(), v.conductor(), found);
  for (size_t next = 0; next < found.size(); ++next) {
    std::vector<AlgElement> images{complex_structure(found[next])};
    for (const auto& c : kb) images.push_back(ad_action(c, found[next]));
    for (auto& y : images)
      if (!span.contains(y)) {
        found.push_back(y);
        span = Subspace::span(Part::P, v.genus(), v.conductor(), found);
      }
  }
  return span;
}

std::vector<Factor> invariant_factors(const Subspace& zp, const Subspace& k) {
  std::vector<Subspace> pieces;
  decompose(zp, k, pieces);
  std::vector<Factor> out;
  for (auto& w : pieces) {
    Factor f{w, bracket_span(w)};
    f.complex_dim = *w.complex_dim();
    f.k_real_dim = f.k_part.real_dim();
    f.commutant_real_dim = commutant_real_dim(w, k);
    f.irreducible = f.commutant_real_dim == 2;
    f.rank = factor_rank(w);
    out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.complex_dim != b.complex_dim) return a.complex_dim < b.complex_dim;
    return first_pivot(a.space) < first_pivot(b.space);
  });
  return out;
}

int factor_rank(const Subspace& w) {
  const auto basis = w.basis();
  const size_t n = basis.size();
  if (n == 0) throw Error(ErrorKind::RankUndecided, "rank of the zero space");
  const int m = w.conductor();

  std::vector<std::vector<Rational>> samples;
  for (int power : {1, 2, 0, 3}) {
    std::vector<Rational> s;
    for (size_t j = 0; j < n; ++j) {
      Rational base = static_cast<long long>(j + 1);
      Rational v = 1;
      for (int p = 0; p < power; ++p) v *= base;
      s.push_back(v);
    }
    samples.push_back(std::move(s));
  }
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Rational> s;
    for (size_t j = 0; j < n; ++j) s.emplace_back(num(rng), den(rng));
    samples.push_back(std::move(s));
  }

  int best = -1;
  for (const auto& s : samples) {
    AlgElement x = AlgElement::zero(w.genus(), m);
    for (size_t j = 0; j < n; ++j) x = x + CycNum(m, s[j]) * basis[j];
    if (x.is_zero()) continue;
    std::vector<Vec> columns;
    for (const auto& b : basis) columns.push_back(algebra_coordinates(bracket(x, b)));
    std::vector<Vec> rows;
    for (size_t r = 0; r < columns.front().size(); ++r) {
      Vec row;
      for (const auto& col : columns) row.push_back(col[r]);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
    const auto centralizer = kernel_over_real_subfield(rows, n).vectors;
    std::vector<AlgElement> z;
    for (const auto& v : centralizer) z.push_back(w.element(v));
    if (!pairwise_brackets(z).empty()) continue;
    const int d = static_cast<int>(z.size());
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw Error(ErrorKind::RankUndecided, "no sampled centralizer was abelian");
  return best;
}

PrymSplit prym_split(const Subspace& zp, const IsotypicDims& dims) {
  if (dims.base_genus != 1) throw Error(ErrorKind::NotElliptic, "Prym split needs a cover of an elliptic curve");
  const int g = zp.genus();
  const int d0 = dims.base_genus;  // trivial-isotypic block size
  const auto basis = zp.basis();
  const size_t half = static_cast<size_t>(2 * g * g);

  // Coefficients t with sum t_i b_i supported on the leading d0 x d0 block of D.
  std::vector<Vec> rows;
  for (size_t idx = 0; idx < 2 * half; ++idx) {
    const size_t entry = idx >= half ? (idx - half) / 2 : 0;
    const int r = static_cast<int>(entry) / g;
    const int c = static_cast<int>(entry) % g;
    if (idx >= half && r < d0 && c < d0) continue;
    Vec row;
    for (const auto& b : zp.coordinate_basis()) row.push_back(b[idx]);
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  PrymSplit out{span_in(zp, kernel_over_real_subfield(rows, basis.size()).vectors), Subspace(Part::P, g, zp.conductor())};
  out.w2 = orthogonal_complement(zp, out.w1);
  const auto k = derived_k(zp).basis();
  out.w1_stable = is_stable(out.w1, k) && is_iota_stable(out.w1);
  out.w2_stable = is_stable(out.w2, k) && is_iota_stable(out.w2);
  if (*out.w1.complex_dim() != d0 * (d0 + 1) / 2)
    throw Error(ErrorKind::Internal, "trivial-isotypic block of p' has unexpected dimension");
  return out;
}

}  // namespace siegel
