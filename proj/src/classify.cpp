#include "siegel/classify.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "siegel/error.hpp"

namespace siegel {

namespace {

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string display_of(Family family, const std::vector<int>& params) {
  if (family == Family::AIII && params[0] == 1) return "B" + subscript(params[1]) + "(ℂ)";
  if (family == Family::CI) return "𝔖" + subscript(params[0]);
  SpaceLabel tmp;
  tmp.family = family;
  tmp.params = params;
  return tmp.name();
}

SpaceLabel label_of(const CatalogueRow& row) {
  SpaceLabel l;
  l.family = row.family;
  l.params = row.params;
  l.dim_c = row.dim_c;
  l.k_dim = row.k_dim;
  l.rank = row.rank;
  l.display = display_of(row.family, row.params);
  return l;
}

auto sort_key(const SpaceLabel& l) { return std::tie(l.dim_c, l.family, l.params); }

/// Parses a subscript or ASCII integer at `pos`, advancing it.
int read_index(std::string_view s, size_t& pos) {
  static const std::string_view digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  int value = 0;
  bool any = false;
  while (pos < s.size()) {
    bool matched = false;
    for (int d = 0; d < 10; ++d) {
      if (s.substr(pos, digits[d].size()) == digits[d]) {
        value = value * 10 + d;
        pos += digits[d].size();
        matched = any = true;
        break;
      }
    }
    if (!matched && s[pos] >= '0' && s[pos] <= '9') {
      value = value * 10 + (s[pos] - '0');
      ++pos;
      matched = any = true;
    }
    if (!matched) break;
  }
  if (!any) throw Error(ErrorKind::Parse, "expected an index in label '" + std::string(s) + "'");
  return value;
}

std::vector<int> read_params(std::string_view s, size_t& pos) {
  std::vector<int> out;
  if (pos >= s.size() || s[pos] != '(') return out;
  ++pos;
  while (true) {
    out.push_back(read_index(s, pos));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
      return out;
    }
    throw Error(ErrorKind::Parse, "unterminated parameter list in '" + std::string(s) + "'");
  }
}

int factor_dimension(std::string_view token) {
  const auto starts = [&](std::string_view p) { return token.substr(0, p.size()) == p; };
  size_t pos = 0;
  for (Family f : {Family::AIII, Family::BDI, Family::DIII, Family::CI, Family::EIII, Family::EVII}) {
    const std::string_view name = to_string(f);
    if (!starts(name)) continue;
    pos = name.size();
    if (pos < token.size() && token[pos] != '(') continue;  // "BDI" must not match "B..."
    const auto params = read_params(token, pos);
    if (pos != token.size()) break;
    return Catalogue::dim_c(f, params);
  }
  if (starts("B")) {
    pos = 1;
    const int n = read_index(token, pos);
    if (token.substr(pos) != "" && token.substr(pos) != "(ℂ)")
      throw Error(ErrorKind::Parse, "unexpected suffix in '" + std::string(token) + "'");
    return n;
  }
  if (starts("𝔖")) {
    pos = std::string_view("𝔖").size();
    const int n = read_index(token, pos);
    return n * (n + 1) / 2;
  }
  throw Error(ErrorKind::Parse, "unknown space '" + std::string(token) + "'");
}

/// Rows that coincide as spaces: su(1,1) = so(1,2) = sp(2,R), sp(4,R) = so(3,2),
/// su(1,3) = so*(6), su(2,2) = so(4,2), so*(8) = so(6,2).
bool isomorphic(const std::string& a, const std::string& b) {
  static const std::vector<std::set<std::string>> classes{{"AIII(1,1)", "BDI(1,2)", "CI(1)"},
                                                          {"CI(2)", "BDI(3,2)"},
                                                          {"AIII(1,3)", "DIII(3)"},
                                                          {"AIII(2,2)", "BDI(4,2)"},
                                                          {"DIII(4)", "BDI(6,2)"}};
  if (a == b) return true;
  return std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return c.count(a) && c.count(b); });
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::AIII: return "AIII";
    case Family::BDI: return "BDI";
    case Family::DIII: return "DIII";
    case Family::CI: return "CI";
    case Family::EIII: return "EIII";
    case Family::EVII: return "EVII";
  }
  return "?";
}

std::string SpaceLabel::name() const {
  std::string s(to_string(family));
  if (params.empty()) return s;
  s += "(";
  for (size_t j = 0; j < params.size(); ++j) s += (j ? "," : "") + std::to_string(params[j]);
  return s + ")";
}

const Catalogue& Catalogue::standard() {
  static const Catalogue catalogue;
  return catalogue;
}

int Catalogue::dim_c(Family family, const std::vector<int>& p) {
  switch (family) {
    case Family::AIII: return p.at(0) * p.at(1);
    case Family::BDI: return p.at(0);
    case Family::DIII: return p.at(0) * (p.at(0) - 1) / 2;
    case Family::CI: return p.at(0) * (p.at(0) + 1) / 2;
    case Family::EIII: return 16;
    case Family::EVII: return 27;
  }
  return 0;
}

int Catalogue::k_dim(Family family, const std::vector<int>& p) {
  switch (family) {
    case Family::AIII: return p.at(0) * p.at(0) + p.at(1) * p.at(1) - 1;
    case Family::BDI: return p.at(0) * (p.at(0) - 1) / 2 + 1;
    case Family::DIII: return p.at(0) * p.at(0);
    case Family::CI: return p.at(0) * p.at(0);
    case Family::EIII: return 46;
    case Family::EVII: return 79;
  }
  return 0;
}

int Catalogue::rank(Family family, const std::vector<int>& p) {
  switch (family) {
    case Family::AIII: return std::min(p.at(0), p.at(1));
    case Family::BDI: return std::min(p.at(0), 2);
    case Family::DIII: return p.at(0) / 2;
    case Family::CI: return p.at(0);
    case Family::EIII: return 2;
    case Family::EVII: return 3;
  }
  return 0;
}

std::vector<CatalogueRow> Catalogue::rows_with_dim(int d) const {
  std::vector<CatalogueRow> out;
  if (d < 1) return out;
  const auto add = [&](Family f, std::vector<int> params, bool in_table) {
    out.push_back({f, params, dim_c(f, params), k_dim(f, params), rank(f, params), in_table});
  };
  for (int p = 1; p * p <= d; ++p)
    if (d % p == 0) add(Family::AIII, {p, d / p}, true);
  // SO(2,2) is not simple, so BDI(2,2) is absent.
  if (d != 2) add(Family::BDI, {d, 2}, d >= 4);
  for (int n = 3; n * (n - 1) / 2 <= d; ++n)
    if (n * (n - 1) / 2 == d) add(Family::DIII, {n}, n >= 4);
  for (int n = 1; n * (n + 1) / 2 <= d; ++n)
    if (n * (n + 1) / 2 == d) add(Family::CI, {n}, n >= 2);
  if (d == 16) add(Family::EIII, {}, true);
  if (d == 27) add(Family::EVII, {}, true);
  return out;
}

std::vector<CatalogueRow> Catalogue::match(int d, int k, int r) const {
  std::vector<CatalogueRow> out;
  for (auto& row : rows_with_dim(d))
    if (row.k_dim == k && row.rank == r) out.push_back(std::move(row));
  std::stable_sort(out.begin(), out.end(), [](const CatalogueRow& a, const CatalogueRow& b) {
    if (a.in_table != b.in_table) return a.in_table;
    return a.family < b.family;
  });
  return out;
}

SpaceLabel classify_factor(int dim_c, int k_dim, int rank) {
  const auto rows = Catalogue::standard().match(dim_c, k_dim, rank);
  if (rows.empty())
    throw Error(ErrorKind::Unclassified, "no Hermitian symmetric space with (dim_C, dim k, rank) = (" +
                                             std::to_string(dim_c) + ", " + std::to_string(k_dim) + ", " +
                                             std::to_string(rank) + ")");
  std::vector<SpaceLabel> all;
  for (const auto& row : rows) all.push_back(label_of(row));
  for (const auto& other : all)
    if (!isomorphic(all.front().name(), other.name()))
      throw Error(ErrorKind::Unclassified, "(dim_C, dim k, rank) = (" + std::to_string(dim_c) + ", " +
                                               std::to_string(k_dim) + ", " + std::to_string(rank) +
                                               ") is shared by non-isomorphic " + all.front().name() + " and " +
                                               other.name());
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = 0; b < all.size(); ++b)
      if (a != b) {
        SpaceLabel other = all[b];
        other.aliases.clear();
        all[a].aliases.push_back(std::move(other));
      }
  return all.front();
}

std::string compose_label(std::vector<SpaceLabel> factors) {
  if (factors.empty()) throw Error(ErrorKind::Internal, "empty product label");
  std::sort(factors.begin(), factors.end(),
            [](const SpaceLabel& a, const SpaceLabel& b) { return sort_key(a) < sort_key(b); });
  std::string s;
  for (size_t j = 0; j < factors.size(); ++j) s += (j ? "×" : "") + factors[j].display;
  return s;
}

int label_dimension(std::string_view label) {
  static constexpr std::string_view times = "×";
  int total = 0;
  size_t start = 0;
  while (true) {
    const size_t at = label.find(times, start);
    std::string_view token = label.substr(start, at == std::string_view::npos ? label.npos : at - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw Error(ErrorKind::Parse, "empty factor in label '" + std::string(label) + "'");
    total += factor_dimension(token);
    if (at == std::string_view::npos) return total;
    start = at + times.size();
  }
}

}  // namespace siegel
