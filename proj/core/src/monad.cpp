#include "motivic/monad.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "motivic/error.hpp"

namespace motivic {

MultisetOfDiagrams::MultisetOfDiagrams(std::vector<FinDiagram> entries) : entries_(std::move(entries)) {
  for (const auto& d : entries_)
    if (d.k() != entries_.front().k()) throw InvariantError("MultisetOfDiagrams: entries must share k");
  std::stable_sort(entries_.begin(), entries_.end(), [](const FinDiagram& a, const FinDiagram& b) {
    return canonical_form(a) < canonical_form(b);
  });
}

MultisetOfDiagrams MultisetOfDiagrams::canonicalized() const {
  std::vector<FinDiagram> c;
  c.reserve(entries_.size());
  for (const auto& d : entries_) c.push_back(canonical_form(d));
  return MultisetOfDiagrams(std::move(c));
}

std::string to_string(const MultisetOfDiagrams& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "; " : "") << to_string(m.entries()[i]);
  os << "}";
  return os.str();
}

FinDiagram assemble(const MultisetOfDiagrams& m) {
  if (m.size() == 0) throw InvariantError("assemble: the multiset must be nonempty");
  const std::size_t k = m.entries().front().k();
  const std::size_t n = m.size();

  // offsets[j][i]: first label of block i on level j
  std::vector<std::vector<std::size_t>> offsets(k, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) offsets[j][i + 1] = offsets[j][i] + m.entries()[i].size(j);

  std::vector<std::size_t> sizes;
  for (std::size_t j = 0; j < k; ++j) sizes.push_back(offsets[j][n]);
  sizes.push_back(n);

  std::vector<std::vector<std::size_t>> values(k);
  for (std::size_t j = 0; j + 1 < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (auto v : m.entries()[i].maps()[j].values()) values[j].push_back(offsets[j + 1][i] + v);
  if (k > 0)
    for (std::size_t i = 0; i < n; ++i) values[k - 1].insert(values[k - 1].end(), m.entries()[i].size(k - 1), i);
  return FinDiagram::from_values(std::move(sizes), std::move(values));
}

MultisetOfDiagrams disassemble(const FinDiagram& d) {
  if (d.k() == 0) throw InvariantError("disassemble: need a diagram with at least one set");
  const std::size_t k = d.k() - 1;
  const std::size_t n = d.size(k);
  // owner[j][e]: element of the last set that e lies over
  std::vector<std::vector<std::size_t>> owner(d.k());
  owner[k].resize(n);
  for (std::size_t i = 0; i < n; ++i) owner[k][i] = i;
  for (std::size_t j = k; j > 0; --j) {
    owner[j - 1].resize(d.size(j - 1));
    for (std::size_t e = 0; e < d.size(j - 1); ++e) owner[j - 1][e] = owner[j][d.maps()[j - 1](e)];
  }
  std::vector<FinDiagram> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    // local index of each element inside block i
    std::vector<std::vector<std::size_t>> local(k);
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      local[j].assign(d.size(j), 0);
      for (std::size_t e = 0; e < d.size(j); ++e)
        if (owner[j][e] == i) local[j][e] = sizes[j]++;
    }
    std::vector<std::vector<std::size_t>> values(k ? k - 1 : 0);
    for (std::size_t j = 0; j + 1 < k; ++j)
      for (std::size_t e = 0; e < d.size(j); ++e)
        if (owner[j][e] == i) values[j].push_back(local[j + 1][d.maps()[j](e)]);
    blocks.push_back(FinDiagram::from_values(std::move(sizes), std::move(values)));
  }
  return MultisetOfDiagrams(std::move(blocks));
}

std::size_t wreath_automorphism_count(const MultisetOfDiagrams& m) {
  std::map<FinDiagram, std::size_t> mult;
  for (const auto& d : m.entries()) ++mult[canonical_form(d)];
  std::size_t total = 1;
  for (const auto& [c, count] : mult) {
    const std::size_t aut = automorphism_group(c).order;
    for (std::size_t i = 1; i <= count; ++i) total *= i * aut;
  }
  return total;
}

namespace {

void multisets(std::size_t n_classes, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = start; c < n_classes; ++c) {
    cur.push_back(c);
    multisets(n_classes, size, c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonadReport verify_m_identity(std::size_t k, const std::vector<std::size_t>& bounds) {
  if (bounds.size() != k + 1) throw ShapeError("verify_m_identity: need k+1 bounds");
  MonadReport report;
  report.k = k;
  report.bounds = bounds;

  const std::vector<std::size_t> inner_bounds(bounds.begin(), bounds.begin() + static_cast<long>(k));
  const auto inner = enumerate_diagrams(k, inner_bounds, EmptySets::allow);
  const auto census = enumerate_diagrams(k + 1, bounds);
  report.census_size = census.size();

  std::map<FinDiagram, MultisetOfDiagrams> image;
  bool injective = true;
  bool roundtrip = true;
  for (std::size_t n = 1; n <= bounds[k]; ++n) {
    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> cur;
    multisets(inner.size(), n, 0, cur, picks);
    for (const auto& pick : picks) {
      std::vector<std::size_t> totals(k, 0);
      for (auto c : pick)
        for (std::size_t j = 0; j < k; ++j) totals[j] += inner[c].size(j);
      bool admissible = true;
      for (std::size_t j = 0; j < k; ++j) admissible = admissible && totals[j] >= 1 && totals[j] <= bounds[j];
      if (!admissible) continue;

      std::vector<FinDiagram> entries;
      for (auto c : pick) entries.push_back(inner[c]);
      MultisetOfDiagrams m(std::move(entries));
      const FinDiagram assembled = canonical_form(assemble(m));
      roundtrip = roundtrip && disassemble(assembled).canonicalized() == m;
      auto [it, inserted] = image.emplace(assembled, m);
      if (!inserted) injective = false;
    }
  }

  report.injective = injective && roundtrip;
  std::set<FinDiagram> census_set(census.begin(), census.end());
  report.every_class_hit = std::all_of(census.begin(), census.end(),
                                       [&](const FinDiagram& d) { return image.count(d) == 1; });
  report.images_match_census = image.size() == census_set.size() &&
                               std::all_of(image.begin(), image.end(),
                                           [&](const auto& kv) { return census_set.count(kv.first) == 1; });

  report.aut_orders_agree = true;
  for (const auto& [assembled, pre] : image) {
    MonadCensusRow row{assembled, pre, automorphism_group(assembled).order,
                       brute_force_automorphism_count(assembled), wreath_automorphism_count(pre)};
    report.aut_orders_agree =
        report.aut_orders_agree && row.aut_direct == row.aut_brute && row.aut_direct == row.aut_wreath;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

QMatrix tensor_permutation(const SetMap& sigma, std::size_t e_size) {
  if (!sigma.is_bijective()) throw InvariantError("tensor_permutation: sigma must be a bijection");
  const std::size_t n = sigma.dom();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= e_size;
  QMatrix p(total, total);
  std::vector<std::size_t> digits(n), moved(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t s = n; s > 0; --s) {
      digits[s - 1] = rest % e_size;
      rest /= e_size;
    }
    for (std::size_t s = 0; s < n; ++s) moved[sigma(s)] = digits[s];
    std::size_t out = 0;
    for (std::size_t s = 0; s < n; ++s) out = out * e_size + moved[s];
    p(out, idx) = 1;
  }
  return p;
}

ArtinComonoid tensor_power(const ArtinComonoid& e, std::size_t n) {
  std::vector<QMatrix> counits(n, e.counit), comults(n, e.comult);
  std::size_t carrier = 1;
  for (std::size_t i = 0; i < n; ++i) carrier *= e.size();

  // (e_1, e'_1, ..., e_n, e'_n): factor 2s goes to s, factor 2s+1 to n+s.
  std::vector<std::size_t> shuffle(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    shuffle[2 * s] = s;
    shuffle[2 * s + 1] = n + s;
  }
  const QMatrix q = tensor_permutation(SetMap(2 * n, 2 * n, shuffle), e.size());
  return {FinSet(carrier), kron_all(counits), q * kron_all(comults)};
}

ArtinComonoid omega_power(const ArtinComonoid& e, const FinDiagram& d) {
  if (d.k() == 0) throw InvariantError("omega_power: the diagram needs at least one set");
  return tensor_power(e, d.size(0));
}

QMatrix functoriality_on_iso(const DiagramIso& iso, const ArtinComonoid& e) {
  if (iso.components.empty()) throw InvariantError("functoriality_on_iso: empty isomorphism");
  return tensor_permutation(iso.components.front(), e.size());
}

}  // namespace motivic
