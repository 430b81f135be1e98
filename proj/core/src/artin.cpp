#include "motivic/artin.hpp"

#include <algorithm>
#include <set>

#include "motivic/error.hpp"

namespace motivic {

ArtinComonoid artin_comonoid(const FinSet& x) {
  const std::size_t n = x.size();
  QMatrix delta(n * n, n);
  for (std::size_t i = 0; i < n; ++i) delta(i * n + i, i) = 1;
  return {x, QMatrix::ones(1, n), std::move(delta)};
}

ArtinMonoid artin_monoid(const FinSet& x) { return dual(artin_comonoid(x)); }

ArtinMonoid dual(const ArtinComonoid& c) { return {c.carrier, c.counit.transpose(), c.comult.transpose()}; }

ArtinComonoid dual(const ArtinMonoid& m) { return {m.carrier, m.unit.transpose(), m.mult.transpose()}; }

QMatrix tensor_swap(std::size_t n) {
  QMatrix s(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1;
  return s;
}

std::vector<std::string> comonoid_axiom_failures(const ArtinComonoid& c) {
  const std::size_t n = c.size();
  if (c.counit.rows() != 1 || c.counit.cols() != n || c.comult.rows() != n * n || c.comult.cols() != n)
    throw ShapeError("ArtinComonoid: counit must be 1 x n and comult n^2 x n");
  const QMatrix id = QMatrix::identity(n);
  std::vector<std::string> failures;
  if (kron(c.counit, id) * c.comult != id) failures.emplace_back("left counitality");
  if (kron(id, c.counit) * c.comult != id) failures.emplace_back("right counitality");
  if (kron(c.comult, id) * c.comult != kron(id, c.comult) * c.comult) failures.emplace_back("coassociativity");
  if (tensor_swap(n) * c.comult != c.comult) failures.emplace_back("cocommutativity");
  return failures;
}

std::vector<std::string> monoid_axiom_failures(const ArtinMonoid& m) {
  const std::size_t n = m.size();
  if (m.unit.rows() != n || m.unit.cols() != 1 || m.mult.rows() != n || m.mult.cols() != n * n)
    throw ShapeError("ArtinMonoid: unit must be n x 1 and mult n x n^2");
  const QMatrix id = QMatrix::identity(n);
  std::vector<std::string> failures;
  if (m.mult * kron(m.unit, id) != id) failures.emplace_back("left unitality");
  if (m.mult * kron(id, m.unit) != id) failures.emplace_back("right unitality");
  if (m.mult * kron(m.mult, id) != m.mult * kron(id, m.mult)) failures.emplace_back("associativity");
  if (m.mult * tensor_swap(n) != m.mult) failures.emplace_back("commutativity");
  return failures;
}

std::string to_string(CoalgEquation e) {
  switch (e) {
    case CoalgEquation::counit:
      return "(eps) column sums";
    case CoalgEquation::comult_diagonal:
      return "(delta1) c^2 = c";
    case CoalgEquation::comult_off_diagonal:
      return "(delta2) c c' = 0";
  }
  return "?";
}

bool MorphismCheck::failed(CoalgEquation e) const {
  return std::find(failures.begin(), failures.end(), e) != failures.end();
}

namespace {

void note(MorphismCheck& check, CoalgEquation e) {
  check.ok = false;
  if (!check.failed(e)) check.failures.push_back(e);
}

// Compares two |Y|^2 x |X| matrices and classifies mismatching rows (y, y').
void classify_comult(MorphismCheck& check, const QMatrix& lhs, const QMatrix& rhs, std::size_t ny) {
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs(r, c) == rhs(r, c)) continue;
      note(check, r / ny == r % ny ? CoalgEquation::comult_diagonal : CoalgEquation::comult_off_diagonal);
    }
}

}  // namespace

MorphismCheck is_coalgebra_morphism(const QMatrix& c, const ArtinComonoid& x, const ArtinComonoid& y) {
  if (c.rows() != y.size() || c.cols() != x.size())
    throw ShapeError("is_coalgebra_morphism: matrix must be |Y| x |X|");
  MorphismCheck check;
  if (y.counit * c != x.counit) note(check, CoalgEquation::counit);
  classify_comult(check, kron(c, c) * x.comult, y.comult * c, y.size());
  return check;
}

MorphismCheck is_algebra_morphism(const QMatrix& a, const ArtinMonoid& x, const ArtinMonoid& y) {
  if (a.rows() != y.size() || a.cols() != x.size())
    throw ShapeError("is_algebra_morphism: matrix must be |Y| x |X|");
  MorphismCheck check;
  if (a * x.unit != y.unit) note(check, CoalgEquation::counit);
  // Transposed: column pairs (x, x') of the |Y| x |X|^2 condition.
  const QMatrix lhs = (a * x.mult).transpose();
  const QMatrix rhs = (y.mult * kron(a, a)).transpose();
  classify_comult(check, lhs, rhs, x.size());
  return check;
}

bool is_canonical(const ArtinComonoid& c) {
  const ArtinComonoid canon = artin_comonoid(FinSet(c.size()));
  return c.counit == canon.counit && c.comult == canon.comult;
}

std::vector<CoalgMorphism> solve_coalgebra_morphisms(const ArtinComonoid& x, const ArtinComonoid& y) {
  if (!is_canonical(x) || !is_canonical(y))
    throw InvariantError("solve_coalgebra_morphisms: only canonical comonoid structures are supported");
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();

  // Admissible columns: entries idempotent (hence 0 or 1), pairwise products
  // of distinct entries zero, and sum 1.
  std::vector<std::vector<Rational>> columns;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ny); ++mask) {
    std::vector<Rational> col(ny);
    for (std::size_t r = 0; r < ny; ++r) col[r] = (mask >> r) & 1u;
    bool ok = true;
    for (std::size_t a = 0; a < ny && ok; ++a)
      for (std::size_t b = a + 1; b < ny && ok; ++b) ok = col[a] * col[b] == 0;
    Rational sum = 0;
    for (const auto& v : col) sum += v;
    if (ok && sum == 1) columns.push_back(std::move(col));
  }
  // Lexicographic order of the chosen column per x: put the 1 in row 0 first.
  std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
    return std::find(a.begin(), a.end(), 1) - a.begin() < std::find(b.begin(), b.end(), 1) - b.begin();
  });

  std::vector<CoalgMorphism> out;
  if (columns.empty()) return out;
  std::vector<std::size_t> choice(nx, 0);
  while (true) {
    QMatrix c(ny, nx);
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t r = 0; r < ny; ++r) c(r, j) = columns[choice[j]][r];
    if (!is_coalgebra_morphism(c, x, y))
      throw std::logic_error("solve_coalgebra_morphisms: candidate fails the defining equations");
    out.push_back({x, y, std::move(c)});
    std::size_t j = nx;
    while (j > 0) {
      --j;
      if (++choice[j] < columns.size()) break;
      choice[j] = 0;
      if (j == 0) return out;
    }
    if (nx == 0) return out;
  }
}

QMatrix graph_matrix(const SetMap& f) {
  QMatrix c(f.cod(), f.dom());
  for (std::size_t x = 0; x < f.dom(); ++x) c(f(x), x) = 1;
  return c;
}

CoalgMorphism morphism_from_setmap(const SetMap& f) {
  return {artin_comonoid(FinSet(f.dom())), artin_comonoid(FinSet(f.cod())), graph_matrix(f)};
}

SetMap setmap_from_morphism(const QMatrix& c) {
  std::vector<std::size_t> values(c.cols());
  for (std::size_t x = 0; x < c.cols(); ++x) {
    std::size_t ones = 0;
    for (std::size_t y = 0; y < c.rows(); ++y) {
      if (c(y, x) == 1) {
        values[x] = y;
        ++ones;
      } else if (c(y, x) != 0) {
        throw InvariantError("setmap_from_morphism: entries must be 0 or 1");
      }
    }
    if (ones != 1) throw InvariantError("setmap_from_morphism: each column must contain exactly one 1");
  }
  return SetMap(c.cols(), c.rows(), std::move(values));
}

DualCheck dualize(const QMatrix& c, const ArtinComonoid& x, const ArtinComonoid& y) {
  return {is_coalgebra_morphism(c, x, y), is_algebra_morphism(c.transpose(), dual(y), dual(x))};
}

McffeReport verify_mcffe(const FinSet& x, const FinSet& y) {
  McffeReport r;
  r.x_size = x.size();
  r.y_size = y.size();
  const auto cx = artin_comonoid(x);
  const auto cy = artin_comonoid(y);
  const auto solutions = solve_coalgebra_morphisms(cx, cy);
  r.solver_count = solutions.size();
  r.expected_count = 1;
  for (std::size_t i = 0; i < x.size(); ++i) r.expected_count *= y.size();

  r.all_pass_check = std::all_of(solutions.begin(), solutions.end(),
                                 [&](const CoalgMorphism& m) { return is_coalgebra_morphism(m.matrix, cx, cy).ok; });

  // Graph bijection: every solver output is a graph, distinct outputs give
  // distinct maps, and every map's graph is among the outputs.
  std::set<SetMap> from_solver;
  bool graphs = true;
  for (const auto& m : solutions) {
    try {
      SetMap f = setmap_from_morphism(m.matrix);
      graphs = graphs && graph_matrix(f) == m.matrix;
      from_solver.insert(std::move(f));
    } catch (const InvariantError&) {
      graphs = false;
    }
  }
  const auto maps = all_maps(x.size(), y.size());
  const std::set<SetMap> all(maps.begin(), maps.end());
  r.graph_bijection = graphs && from_solver.size() == solutions.size() && from_solver == all;
  return r;
}

}  // namespace motivic
