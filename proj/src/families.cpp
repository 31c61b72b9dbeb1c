#include "nilgraph/families.hpp"

#include <algorithm>
#include <map>

#include "nilgraph/error.hpp"

namespace nilgraph {

RatRow to_row(const LabeledDigraph& g, const NamedVector& v) {
  RatRow row(g.vertex_count());
  for (const auto& [name, coeff] : v) row[g.vertex_index(name)] += coeff;
  return row;
}

std::size_t StarSpec::leaf_count() const noexcept {
  std::size_t n = 0;
  for (auto m : multiplicities) n += m;
  return n;
}

std::string StarSpec::leaf(std::size_t i, std::size_t j) const {
  return prefix + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string StarSpec::label(std::size_t i) const {
  return labels.empty() ? "Z" + std::to_string(i + 1) : labels.at(i);
}

void StarSpec::validate() const {
  if (multiplicities.empty()) throw SpecError("star needs at least one label");
  if (delta.size() != multiplicities.size()) throw SpecError("delta must have one row per label");
  if (!labels.empty() && labels.size() != multiplicities.size())
    throw SpecError("label list length must equal the number of multiplicities");
  if (!is_valid_token(prefix)) throw SpecError("invalid vertex prefix '" + prefix + "'");
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) throw SpecError("multiplicities must be at least 1");
    if (i > 0 && multiplicities[i] > multiplicities[i - 1])
      throw SpecError("multiplicities must be non-increasing");
    if (delta[i].size() != multiplicities[i])
      throw SpecError("delta row " + std::to_string(i + 1) + " has the wrong length");
    for (int d : delta[i])
      if (d != 1 && d != -1) throw SpecError("delta entries must be +1 or -1");
  }
  std::vector<std::string> names(labels);
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw SpecError("star labels must be distinct");
}

StarSpec StarSpec::outward(std::vector<std::size_t> multiplicities) {
  StarSpec s;
  for (auto m : multiplicities) s.delta.emplace_back(m, 1);
  s.multiplicities = std::move(multiplicities);
  return s;
}

namespace {

void add_star_edges(LabeledDigraph::Builder& b, const StarSpec& spec) {
  b.add_vertex(spec.center());
  for (std::size_t i = 0; i < spec.k(); ++i) {
    for (std::size_t j = 0; j < spec.multiplicities[i]; ++j) {
      if (spec.delta[i][j] == 1) {
        b.add_edge(spec.center(), spec.leaf(i, j), spec.label(i));
      } else {
        b.add_edge(spec.leaf(i, j), spec.center(), spec.label(i));
      }
    }
  }
}

std::vector<NamedVector> star_abelian_basis(const StarSpec& spec) {
  std::vector<NamedVector> basis;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::size_t last = spec.multiplicities[i] - 1;
    const int d_last = spec.delta[i][last];
    for (std::size_t j = 0; j < last; ++j) {
      basis.push_back({{spec.leaf(i, j), Rational(d_last)},
                       {spec.leaf(i, last), Rational(-spec.delta[i][j])}});
    }
  }
  return basis;
}

}  // namespace

LabeledDigraph make_star(const StarSpec& spec) {
  spec.validate();
  LabeledDigraph::Builder b;
  add_star_edges(b, spec);
  return b.build();
}

StarPrediction predict_star(const StarSpec& spec) {
  spec.validate();
  StarPrediction p;
  p.abelian_dim = spec.leaf_count() - spec.k();
  p.abelian_basis = star_abelian_basis(spec);
  p.center_perp.push_back({{{spec.center(), Rational(1)}}, Rational(1)});
  for (std::size_t i = 0; i < spec.k(); ++i) {
    NamedOrthogonal s;
    for (std::size_t j = 0; j < spec.multiplicities[i]; ++j)
      s.vector.emplace_back(spec.leaf(i, j), Rational(spec.delta[i][j]));
    s.norm_sq = static_cast<unsigned long>(spec.multiplicities[i]);
    p.center_perp.push_back(std::move(s));
  }
  return p;
}

LabeledDigraph make_double_star(const StarSpec& spec1, const StarSpec& spec2,
                                const std::string& bridge_label, int bridge_dir) {
  spec1.validate();
  spec2.validate();
  if (spec1.prefix == spec2.prefix) throw SpecError("the two stars need different prefixes");
  if (bridge_dir != 1 && bridge_dir != -1) throw SpecError("bridge direction must be +1 or -1");
  LabeledDigraph::Builder b;
  add_star_edges(b, spec1);
  add_star_edges(b, spec2);
  if (bridge_dir == 1) {
    b.add_edge(spec1.center(), spec2.center(), bridge_label);
  } else {
    b.add_edge(spec2.center(), spec1.center(), bridge_label);
  }
  return b.build();
}

DoubleStarPrediction predict_double_star(const StarSpec& spec1, const StarSpec& spec2) {
  spec1.validate();
  spec2.validate();
  DoubleStarPrediction p;
  p.abelian_dim = (spec1.leaf_count() + spec2.leaf_count()) - (spec1.k() + spec2.k());
  p.abelian_basis = star_abelian_basis(spec1);
  for (auto& v : star_abelian_basis(spec2)) p.abelian_basis.push_back(std::move(v));
  return p;
}

void CycleSpec::validate() const {
  if (n < 3) throw SpecError("cycle needs at least 3 vertices");
  if (orientation.size() != n) throw SpecError("orientation length must equal n");
  if (labels.size() != n) throw SpecError("label sequence length must equal n");
  for (int d : orientation)
    if (d != 1 && d != -1) throw SpecError("orientation entries must be +1 or -1");
}

std::size_t CycleSpec::opposite_count() const {
  return static_cast<std::size_t>(std::count(orientation.begin(), orientation.end(), -1));
}

CycleSpec CycleSpec::standard(std::vector<std::string> labels) {
  CycleSpec s;
  s.n = labels.size();
  s.orientation.assign(s.n, 1);
  s.labels = std::move(labels);
  return s;
}

CycleSpec CycleSpec::single_label(std::vector<int> orientation, const std::string& label) {
  CycleSpec s;
  s.n = orientation.size();
  s.orientation = std::move(orientation);
  s.labels.assign(s.n, label);
  return s;
}

namespace {
std::string cycle_vertex(std::size_t i) { return "v" + std::to_string(i + 1); }
}  // namespace

LabeledDigraph make_cycle(const CycleSpec& spec) {
  spec.validate();
  LabeledDigraph::Builder b;
  for (std::size_t i = 0; i < spec.n; ++i) b.add_vertex(cycle_vertex(i));
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto a = cycle_vertex(i), c = cycle_vertex((i + 1) % spec.n);
    if (spec.orientation[i] == 1) {
      b.add_edge(a, c, spec.labels[i]);
    } else {
      b.add_edge(c, a, spec.labels[i]);
    }
  }
  return b.build();
}

CyclePrediction predict_cycle_single_label(const CycleSpec& spec) {
  spec.validate();
  if (std::any_of(spec.labels.begin(), spec.labels.end(),
                  [&](const std::string& l) { return l != spec.labels.front(); }))
    throw SpecError("single-label prediction needs a constant label sequence");
  const std::size_t n = spec.n;
  const auto& d = spec.orientation;
  CyclePrediction p;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> coeff(n, 0);
    int a = 1;
    std::size_t j = start;
    do {
      seen[j] = true;
      coeff[j] = a;
      a *= d[j] * d[(j + 1) % n];
      j = (j + 2) % n;
    } while (j != start);
    if (a != 1) continue;  // the orbit returns with the opposite sign
    NamedVector v;
    for (std::size_t i = 0; i < n; ++i)
      if (coeff[i] != 0) v.emplace_back(cycle_vertex(i), Rational(coeff[i]));
    p.abelian_basis.push_back(std::move(v));
  }
  p.abelian_dim = p.abelian_basis.size();
  return p;
}

MultiLabelCyclePrediction predict_cycle_multi_label(const CycleSpec& spec) {
  spec.validate();
  if (spec.opposite_count() != 0) throw SpecError("multi-label prediction needs standard orientation");
  const std::size_t n = spec.n;
  std::size_t boundary = n;  // first vertex whose two edges differ in label
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.labels[(i + n - 1) % n] != spec.labels[i]) {
      boundary = i;
      break;
    }
  }
  if (boundary == n) throw SpecError("multi-label prediction needs at least two labels");

  MultiLabelCyclePrediction p;
  std::size_t len = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t e = (boundary + step) % n;
    ++len;
    if (spec.labels[(e + 1) % n] != spec.labels[e]) {
      p.run_lengths.push_back(len);
      len = 0;
    }
  }
  p.long_paths = static_cast<std::size_t>(
      std::count_if(p.run_lengths.begin(), p.run_lengths.end(), [](auto l) { return l >= 2; }));
  p.shortcut_trivial = p.long_paths <= 1;
  p.nontrivial = std::all_of(p.run_lengths.begin(), p.run_lengths.end(),
                             [](auto l) { return l % 2 == 0; });
  if (p.nontrivial) {
    // Every run boundary has the parity of `boundary`.
    NamedVector x;
    for (std::size_t i = boundary % 2; i < n; i += 2) x.emplace_back(cycle_vertex(i), Rational(1));
    p.witness = std::move(x);
  }
  return p;
}

LabeledDigraph make_path(std::size_t n, const std::string& label, std::vector<int> directions) {
  if (n < 2) throw SpecError("path needs at least 2 vertices");
  if (directions.empty()) directions.assign(n - 1, 1);
  if (directions.size() != n - 1) throw SpecError("path needs n-1 directions");
  LabeledDigraph::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(cycle_vertex(i));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (directions[i] == 1) {
      b.add_edge(cycle_vertex(i), cycle_vertex(i + 1), label);
    } else if (directions[i] == -1) {
      b.add_edge(cycle_vertex(i + 1), cycle_vertex(i), label);
    } else {
      throw SpecError("path directions must be +1 or -1");
    }
  }
  return b.build();
}

PathPrediction predict_path(std::size_t n, std::vector<int> directions) {
  if (n < 2) throw SpecError("path needs at least 2 vertices");
  if (directions.empty()) directions.assign(n - 1, 1);
  if (directions.size() != n - 1) throw SpecError("path needs n-1 directions");
  PathPrediction p;
  if (n % 2 == 0) return p;
  NamedVector v;
  int a = 1;
  for (std::size_t i = 0; i < n; i += 2) {
    v.emplace_back(cycle_vertex(i), Rational(a));
    if (i + 2 < n) a *= directions[i] * directions[i + 1];
  }
  p.abelian_dim = 1;
  p.abelian_basis.push_back(std::move(v));
  return p;
}

ReducedStar reduce_star(const StarSpec& spec) {
  spec.validate();
  ReducedStar out;
  out.star.k = spec.k();
  for (auto m : spec.multiplicities) out.star.weights.emplace_back(static_cast<unsigned long>(m));

  Polynomial weighted_sum;
  for (std::size_t l = 0; l < spec.k(); ++l) {
    const auto a = Polynomial::variable(l);
    weighted_sum += a * a * out.star.weights[l];
  }
  out.predicted_char_poly.assign(spec.k() + 2, Polynomial());
  out.predicted_char_poly[spec.k() - 1] = weighted_sum;
  out.predicted_char_poly[spec.k() + 1] = Polynomial(1);
  return out;
}

RatMatrix weighted_star_operator(const WeightedStar& star, const std::vector<Rational>& a) {
  if (a.size() != star.k) throw SpecError("coefficient count must equal k");
  RatMatrix m(star.k + 1, star.k + 1);
  for (std::size_t i = 0; i < star.k; ++i) {
    m(i + 1, 0) = a[i];
    m(0, i + 1) = -a[i] * star.weights[i];
  }
  return m;
}

}  // namespace nilgraph
