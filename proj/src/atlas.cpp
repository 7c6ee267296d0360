#include "siegel/atlas.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

namespace siegel {

namespace {

using nlohmann::ordered_json;

std::string format_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + ")";
}

std::string format_dims(const std::map<Character, int>& dims) {
  std::string s;
  for (const auto& [chi, d] : dims) s += (s.empty() ? "" : " ") + format_tuple(chi) + ":" + std::to_string(d);
  return s;
}

std::string format_list(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + "]";
}

std::vector<std::string> diagonal_multiset(const CycMatrix& m) {
  std::vector<std::string> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(to_string(m(r, r)));
  std::sort(out.begin(), out.end());
  return out;
}

bool sum_of_factors(const Subspace& w, const std::vector<Factor>& factors) {
  int dim = 0;
  for (const auto& f : factors)
    if (w.contains(f.space)) dim += f.space.real_dim();
  return dim == w.real_dim();
}

ordered_json cyc_json(const CycNum& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : x.terms()) terms.push_back(ordered_json::array({t.exponent, to_string(t.coeff)}));
  return {{"conductor", x.conductor()}, {"terms", terms}};
}

ordered_json label_json(const SpaceLabel& l, bool with_aliases) {
  ordered_json j{{"family", std::string(to_string(l.family))},
                 {"params", l.params},
                 {"name", l.name()},
                 {"display", l.display}};
  if (with_aliases) {
    ordered_json aliases = ordered_json::array();
    for (const auto& a : l.aliases) aliases.push_back(label_json(a, false));
    j["aliases"] = aliases;
  }
  return j;
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

bool PropertyChecks::all() const {
  return base_point && direct_sum && bracket_closed && complements_stable && no_euclidean_factor && iota_stable &&
         closure_agrees && factors_orthogonal && factor_dims_sum && branch_metadata_reproduces_generators.value_or(true);
}

bool Report::pass() const {
  if (!properties.all()) return false;
  if (std::any_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.pass; })) return false;
  if (crosscheck && !crosscheck->all_agree()) return false;
  for (const auto& f : factors)
    if (!f.irreducible) return false;
  if (prym && !(prym->w1_stable && prym->w2_stable)) return false;
  return true;
}

Report run_input(const InputDocument& input, Backend backend) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.fixture_id = input.label;
  r.requested_id = input.label;
  r.input_kind = input.is_cover() ? "cover" : "generators";

  GroupAction action;
  if (input.is_cover()) {
    r.cover = input.cover;
    r.isotypic = eigenspace_dims(*input.cover);
    action = build_action(*r.isotypic, input.cover->group);
  } else {
    action = load_explicit_action(input.generators);
  }
  r.genus = action.genus;
  r.conductor = action.conductor;
  r.generators = action.generators;

  base_point(action);
  r.properties.base_point = true;

  const Centralizer cz = centralizer(action);
  const Subspace full = full_centralizer(action);
  r.zp_real_dim = cz.zp.real_dim();
  r.p_complex_dim = *cz.zp.complex_dim();
  r.zk_real_dim = cz.zk.real_dim();
  r.full_centralizer_real_dim = full.real_dim();
  r.properties.direct_sum = full.real_dim() == cz.zk.real_dim() + cz.zp.real_dim();
  for (const auto& u : full.basis())
    if (!cz.zk.contains(u.k_projection()) || !cz.zp.contains(u.p_projection())) r.properties.direct_sum = false;

  const Subspace k = derived_k(cz.zp);
  r.k_real_dim = k.real_dim();
  r.properties.bracket_closed = bracket_closed(cz.zp, k);
  const auto k_basis = k.basis();

  const auto factors = invariant_factors(cz.zp, k);
  r.properties.iota_stable = is_iota_stable(cz.zp) && r.zp_real_dim % 2 == 0;
  r.properties.no_euclidean_factor = true;
  r.properties.closure_agrees = true;
  r.properties.complements_stable = true;
  int dim_sum = 0;
  std::vector<SpaceLabel> labels;
  for (const auto& f : factors) {
    FactorReport fr;
    fr.complex_dim = f.complex_dim;
    fr.k_real_dim = f.k_real_dim;
    fr.rank = f.rank;
    fr.commutant_real_dim = f.commutant_real_dim;
    fr.irreducible = f.irreducible;
    fr.iota_stable = is_iota_stable(f.space) && f.space.real_dim() % 2 == 0;
    fr.closure_irreducible = true;
    for (const auto& v : f.space.basis())
      if (closure(v, k).real_dim() != f.space.real_dim()) fr.closure_irreducible = false;
    const Subspace complement = orthogonal_complement(cz.zp, f.space);
    fr.complement_stable = is_stable(complement, k_basis) && is_iota_stable(complement);
    fr.label = classify_factor(f.complex_dim, f.k_real_dim, f.rank);
    labels.push_back(fr.label);

    r.properties.iota_stable = r.properties.iota_stable && fr.iota_stable;
    r.properties.no_euclidean_factor = r.properties.no_euclidean_factor && f.k_real_dim > 0;
    r.properties.closure_agrees = r.properties.closure_agrees && fr.closure_irreducible == fr.irreducible;
    r.properties.complements_stable = r.properties.complements_stable && fr.complement_stable;
    dim_sum += f.space.real_dim();
    r.factors.push_back(std::move(fr));
  }
  r.properties.factor_dims_sum = dim_sum == r.zp_real_dim;
  r.properties.factors_orthogonal = true;
  for (size_t a = 0; a < factors.size(); ++a)
    for (size_t b = a + 1; b < factors.size(); ++b)
      for (const auto& x : factors[a].space.basis())
        for (const auto& y : factors[b].space.basis())
          if (!trace_form(x, y).is_zero()) r.properties.factors_orthogonal = false;
  r.label = labels.empty() ? "point" : compose_label(labels);

  if (input.is_cover() && input.cover->base_genus == 1) {
    const PrymSplit split = prym_split(cz.zp, *r.isotypic);
    PrymReport pr;
    pr.w1_complex_dim = *split.w1.complex_dim();
    pr.w2_complex_dim = *split.w2.complex_dim();
    pr.w1_stable = split.w1_stable;
    pr.w2_stable = split.w2_stable;
    pr.matches_factors = sum_of_factors(split.w1, factors) && sum_of_factors(split.w2, factors);
    r.prym = pr;
    r.properties.complements_stable = r.properties.complements_stable && pr.w1_stable && pr.w2_stable;
  }

  if (backend == Backend::Crosscheck) r.crosscheck = crosscheck(action, cz, full.real_dim(), k, factors);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_family(const FamilyFixture& fixture, Backend backend) {
  Report r;
  try {
    r = run_input(fixture.input, backend);
    if (fixture.branch_metadata) {
      const auto dims = eigenspace_dims(*fixture.branch_metadata);
      const auto rebuilt = build_action(dims, fixture.branch_metadata->group);
      bool same = rebuilt.generators.size() == r.generators.size();
      for (size_t j = 0; same && j < r.generators.size(); ++j)
        same = r.generators[j].is_diagonal() &&
               diagonal_multiset(rebuilt.generators[j]) == diagonal_multiset(r.generators[j]);
      r.properties.branch_metadata_reproduces_generators = same;
    }
  } catch (const Error& e) {
    throw Error(e.kind(), "fixture " + fixture.id + ": " + e.what());
  }
  r.fixture_id = fixture.id;
  r.requested_id = fixture.id;

  const Expected& ex = fixture.expected;
  const auto compare = [&](const std::string& field, const std::string& expected, const std::string& actual) {
    r.comparisons.push_back({field, expected, actual, expected == actual});
  };
  if (!ex.isotypic.empty())
    compare("isotypic_dims", format_dims(ex.isotypic), r.isotypic ? format_dims(r.isotypic->dims) : "-");
  if (ex.genus) compare("genus", std::to_string(*ex.genus), std::to_string(r.genus));
  if (ex.p_complex_dim) compare("p_complex_dim", std::to_string(*ex.p_complex_dim), std::to_string(r.p_complex_dim));
  if (ex.k_real_dim) compare("k_real_dim", std::to_string(*ex.k_real_dim), std::to_string(r.k_real_dim));
  if (!ex.factor_dims.empty()) {
    std::vector<int> dims;
    for (const auto& f : r.factors) dims.push_back(f.complex_dim);
    std::sort(dims.begin(), dims.end());
    compare("factor_dims", format_list(ex.factor_dims), format_list(dims));
  }
  if (!ex.label.empty()) compare("label", ex.label, r.label);
  if (ex.prym)
    compare("prym_dims", format_list({ex.prym->first, ex.prym->second}),
            r.prym ? format_list({r.prym->w1_complex_dim, r.prym->w2_complex_dim}) : "-");

  r.published = fixture.published;
  r.flags = fixture.notes;
  const PublishedRow& pub = fixture.published;
  if (!pub.label.empty()) {
    const int printed = label_dimension(pub.label);
    if (pub.dimension && printed != *pub.dimension)
      r.flags.push_back("printed label " + pub.label + " has complex dimension " + std::to_string(printed) +
                        ", inconsistent with the printed dimension " + std::to_string(*pub.dimension));
    if (pub.label != r.label)
      r.flags.push_back("printed label " + pub.label + " differs from the computed label " + r.label);
  }
  if (pub.dimension && *pub.dimension != r.p_complex_dim)
    r.flags.push_back("printed dimension " + std::to_string(*pub.dimension) + " differs from dim_C p' = " +
                      std::to_string(r.p_complex_dim));
  return r;
}

Summary run_all(const std::vector<std::string>& filter, Backend backend) {
  std::set<std::string> wanted;
  for (const auto& id : filter) wanted.insert(find_fixture(id).id);
  Summary s;
  for (const auto& f : fixtures()) {
    if (!filter.empty() && !wanted.count(f.id)) continue;
    s.reports.push_back(run_family(f, backend));
    if (!s.reports.back().pass()) ++s.failures;
  }
  return s;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["fixture"] = r.fixture_id;
  j["requested"] = r.requested_id;
  j["input_kind"] = r.input_kind;
  if (r.cover) {
    j["cover"] = {{"group", r.cover->group.invariant_factors()},
                  {"base_genus", r.cover->base_genus},
                  {"branch", r.cover->branch}};
  } else {
    j["cover"] = nullptr;
  }
  j["genus"] = r.genus;
  j["conductor"] = r.conductor;
  if (r.isotypic) {
    ordered_json dims = ordered_json::array();
    for (const auto& [chi, d] : r.isotypic->dims) dims.push_back({{"character", chi}, {"dim", d}});
    j["isotypic_dims"] = dims;
  } else {
    j["isotypic_dims"] = nullptr;
  }
  ordered_json gens = ordered_json::array();
  for (const auto& m : r.generators) {
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < m.rows(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < m.cols(); ++b) row.push_back(cyc_json(m(a, b)));
      rows.push_back(row);
    }
    gens.push_back({{"text", format_matrix(m)}, {"entries", rows}});
  }
  j["generators"] = gens;
  j["dimensions"] = {{"zp_real", r.zp_real_dim},
                     {"p_complex", r.p_complex_dim},
                     {"zk_real", r.zk_real_dim},
                     {"z_g_real", r.full_centralizer_real_dim},
                     {"k_real", r.k_real_dim}};
  ordered_json factors = ordered_json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"complex_dim", f.complex_dim},
                       {"k_real_dim", f.k_real_dim},
                       {"rank", f.rank},
                       {"commutant_real_dim", f.commutant_real_dim},
                       {"irreducible", f.irreducible},
                       {"closure_irreducible", f.closure_irreducible},
                       {"iota_stable", f.iota_stable},
                       {"complement_stable", f.complement_stable},
                       {"label", label_json(f.label, true)}});
  j["factors"] = factors;
  j["label"] = r.label;
  if (r.prym) {
    j["prym"] = {{"w1_complex_dim", r.prym->w1_complex_dim},
                 {"w2_complex_dim", r.prym->w2_complex_dim},
                 {"w1_stable", r.prym->w1_stable},
                 {"w2_stable", r.prym->w2_stable},
                 {"matches_factors", r.prym->matches_factors}};
  } else {
    j["prym"] = nullptr;
  }
  const PropertyChecks& p = r.properties;
  j["properties"] = {{"base_point", p.base_point},
                     {"direct_sum", p.direct_sum},
                     {"bracket_closed", p.bracket_closed},
                     {"complements_stable", p.complements_stable},
                     {"no_euclidean_factor", p.no_euclidean_factor},
                     {"iota_stable", p.iota_stable},
                     {"closure_agrees", p.closure_agrees},
                     {"factors_orthogonal", p.factors_orthogonal},
                     {"factor_dims_sum", p.factor_dims_sum},
                     {"branch_metadata_reproduces_generators", optional_json(p.branch_metadata_reproduces_generators)}};
  ordered_json comparisons = ordered_json::array();
  for (const auto& c : r.comparisons)
    comparisons.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["comparisons"] = comparisons;
  if (r.published) {
    const auto& pub = *r.published;
    j["published_expectation"] = {{"source", pub.source},
                                  {"group", pub.group},
                                  {"genus", pub.genus},
                                  {"dimension", optional_json(pub.dimension)},
                                  {"ramification", pub.ramification},
                                  {"label", pub.label}};
  } else {
    j["published_expectation"] = nullptr;
  }
  j["flags"] = r.flags;
  if (r.crosscheck) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.crosscheck->checks)
      checks.push_back({{"quantity", c.quantity}, {"exact", c.exact}, {"numeric", c.numeric}, {"agree", c.agree()}});
    j["crosscheck"] = {{"tolerance", r.crosscheck->tolerance}, {"agree", r.crosscheck->all_agree()}, {"checks", checks}};
  } else {
    j["crosscheck"] = nullptr;
  }
  j["pass"] = r.pass();
  j["timing"] = {{"seconds", r.seconds}};
  return j;
}

ordered_json to_json(const Summary& s) {
  ordered_json reports = ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"fixtures", static_cast<int>(s.reports.size())}, {"failures", s.failures}, {"reports", reports}};
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "family " << r.fixture_id << "  [" << (r.pass() ? "pass" : "FAIL") << "]\n";
  out << "  genus " << r.genus << ", ambient field Q(zeta_" << r.conductor << ")\n";
  if (r.isotypic) out << "  isotypic dims  " << format_dims(r.isotypic->dims) << "\n";
  for (size_t j = 0; j < r.generators.size(); ++j) out << "  A0[" << j + 1 << "] = " << format_matrix(r.generators[j]) << "\n";
  out << "  dim_C p' = " << r.p_complex_dim << ", dim_R k' = " << r.k_real_dim << ", dim_R Z_k = " << r.zk_real_dim
      << ", dim_R Z_g = " << r.full_centralizer_real_dim << "\n";
  for (size_t j = 0; j < r.factors.size(); ++j) {
    const auto& f = r.factors[j];
    out << "  factor " << j + 1 << ": dim_C " << f.complex_dim << ", dim_R [W,W] " << f.k_real_dim << ", rank "
        << f.rank << ", commutant " << f.commutant_real_dim << " -> " << f.label.name() << " = " << f.label.display;
    for (const auto& a : f.label.aliases) out << " ~ " << a.name();
    out << "\n";
  }
  out << "  label " << r.label << "\n";
  if (r.prym)
    out << "  Prym split: dim_C W1 = " << r.prym->w1_complex_dim << ", dim_C W2 = " << r.prym->w2_complex_dim
        << (r.prym->w1_stable && r.prym->w2_stable ? " (both ad(k')-stable)" : " (NOT stable)") << "\n";
  for (const auto& c : r.comparisons)
    out << "  " << (c.pass ? "ok   " : "FAIL ") << c.field << ": expected " << c.expected << ", got " << c.actual << "\n";
  if (!r.properties.all()) out << "  FAIL exact property checks\n";
  if (r.crosscheck) {
    for (const auto& c : r.crosscheck->checks)
      if (!c.agree()) out << "  FAIL crosscheck " << c.quantity << ": exact " << c.exact << ", float " << c.numeric << "\n";
    if (r.crosscheck->all_agree())
      out << "  crosscheck: " << r.crosscheck->checks.size() << " dimensions agree at tolerance 1e-8\n";
  }
  for (const auto& f : r.flags) out << "  flag: " << f << "\n";
  out << "  time " << r.seconds << " s\n";
  return out.str();
}

}  // namespace siegel
