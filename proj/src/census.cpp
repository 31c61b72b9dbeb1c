#include "nilgraph/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "nilgraph/algebra.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/verify.hpp"

namespace nilgraph {

std::optional<CensusFamily> parse_census_family(std::string_view name) {
  if (name == "cycle1") return CensusFamily::SingleLabelCycle;
  if (name == "cycle") return CensusFamily::MultiLabelCycle;
  if (name == "star") return CensusFamily::Star;
  if (name == "double-star") return CensusFamily::DoubleStar;
  if (name == "path") return CensusFamily::Path;
  return std::nullopt;
}

std::string to_string(CensusFamily family) {
  switch (family) {
    case CensusFamily::SingleLabelCycle: return "cycle1";
    case CensusFamily::MultiLabelCycle: return "cycle";
    case CensusFamily::Star: return "star";
    case CensusFamily::DoubleStar: return "double-star";
    case CensusFamily::Path: return "path";
  }
  return "unknown";
}

std::size_t CensusResult::disagreement_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) { return !r.agreement; }));
}

std::vector<std::vector<std::size_t>> multiplicity_vectors(std::size_t max_k, std::size_t max_m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t bound) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_k) return;
    for (std::size_t m = bound; m >= 1; --m) {
      cur.push_back(m);
      self(self, m);
      cur.pop_back();
    }
  };
  rec(rec, max_m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_orientations(std::size_t n) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<std::string>> label_sequences_up_to_rotation(std::size_t n,
                                                                     std::size_t alphabet) {
  std::vector<std::vector<std::string>> out;
  if (alphabet < 2 || n == 0) return out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    const bool multi = std::any_of(digits.begin(), digits.end(),
                                   [&](std::size_t d) { return d != digits.front(); });
    bool least = multi;
    for (std::size_t r = 1; r < n && least; ++r) {
      std::vector<std::size_t> rot(digits.begin() + static_cast<std::ptrdiff_t>(r), digits.end());
      rot.insert(rot.end(), digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(r));
      least = !(rot < digits);
    }
    if (least) {
      std::vector<std::string> seq;
      for (auto d : digits) seq.push_back("Z" + std::to_string(d + 1));
      out.push_back(std::move(seq));
    }
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == alphabet) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

StarSpec random_star_spec(std::vector<std::size_t> multiplicities, std::uint64_t seed,
                          std::uint64_t index, const std::string& prefix) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(0.5);
  StarSpec s;
  s.prefix = prefix;
  for (auto m : multiplicities) {
    std::vector<int> row(m);
    for (auto& d : row) d = coin(rng) ? 1 : -1;
    s.delta.push_back(std::move(row));
  }
  s.multiplicities = std::move(multiplicities);
  return s;
}

namespace {

std::string signs(const std::vector<int>& d) {
  std::string s;
  for (int x : d) s += x == 1 ? '+' : '-';
  return s;
}

template <class T>
std::string joined(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    if constexpr (std::is_same_v<T, std::string>) {
      s += xs[i];
    } else {
      s += std::to_string(xs[i]);
    }
  }
  return s;
}

std::string describe_star(const StarSpec& s) {
  std::string d = "m=" + joined(s.multiplicities) + " delta=";
  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    if (i) d += '|';
    d += signs(s.delta[i]);
  }
  return d;
}

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Subspace vertex_span(const LabeledDigraph& g, const std::vector<NamedVector>& vs) {
  std::vector<RatRow> rows;
  for (const auto& v : vs) rows.push_back(to_row(g, v));
  return Subspace::span_of(Subspace::Ambient::Vertex, g.vertex_count(), rows);
}

struct RowBuilder {
  CensusRow row;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      row.agreement = false;
      row.disagreements.push_back(what);
    }
  }
};

void check_star_prediction(RowBuilder& rb, const LabeledDigraph& g, const NilAlgebra& a,
                           const Subspace& af, const StarSpec& spec) {
  const auto pred = predict_star(spec);
  rb.require(pred.abelian_dim == af.dim(), "star dimension n-k");
  rb.require(vertex_span(g, pred.abelian_basis) == af, "star basis A");
  std::vector<RatRow> s_rows;
  for (const auto& s : pred.center_perp) s_rows.push_back(to_row(g, s.vector));
  bool orthogonal = true;
  for (std::size_t i = 0; i < s_rows.size(); ++i) {
    orthogonal = orthogonal && dot(s_rows[i], s_rows[i]) == pred.center_perp[i].norm_sq;
    for (std::size_t j = i + 1; j < s_rows.size(); ++j)
      orthogonal = orthogonal && dot(s_rows[i], s_rows[j]) == 0;
  }
  rb.require(orthogonal, "star set S orthogonal with norms m_i");
  rb.require(Subspace::span_of(Subspace::Ambient::Vertex, g.vertex_count(), s_rows) ==
                 af.orthogonal_complement(),
             "star set S spans the complement of the center");
  const auto predicted = reduce_star(spec).predicted_char_poly;
  rb.require(symbolic_char_poly(a).coeffs == predicted, "star characteristic polynomial");
}

}  // namespace

std::string describe(const CensusTask& task) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          const bool constant = std::all_of(t.labels.begin(), t.labels.end(),
                                            [&](const auto& l) { return l == t.labels.front(); });
          if (constant) return "cycle1 n=" + std::to_string(t.n) + " delta=" + signs(t.orientation);
          return "cycle n=" + std::to_string(t.n) + " labels=" + joined(t.labels);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return "star " + describe_star(t);
        } else if constexpr (std::is_same_v<T, DoubleStarTask>) {
          return "double-star [" + describe_star(t.first) + "] [" + describe_star(t.second) +
                 "] bridge=" + t.bridge_label + (t.bridge_dir == 1 ? "+" : "-");
        } else {
          return "path n=" + std::to_string(t.n) + " dirs=" + signs(t.directions);
        }
      },
      task);
}

std::size_t census_estimate(const CensusOptions& o) {
  std::size_t total = 0;
  switch (o.family) {
    case CensusFamily::SingleLabelCycle:
      for (std::size_t n = 3; n <= o.max_n; ++n) total += pow_size(2, n);
      break;
    case CensusFamily::MultiLabelCycle:
      for (std::size_t n = 3; n <= o.max_n; ++n) total += pow_size(o.label_alphabet, n) / n + 1;
      break;
    case CensusFamily::Path:
      for (std::size_t n = 2; n <= o.max_n; ++n) total += pow_size(2, n - 1);
      break;
    case CensusFamily::Star:
    case CensusFamily::DoubleStar: {
      // Vectors with parts <= max_n and at most max_n parts: C(2N, N) - 1.
      std::size_t c = 1;
      for (std::size_t i = 1; i <= o.max_n; ++i) c = c * (o.max_n + i) / i;
      const std::size_t specs = c - 1;
      total = o.family == CensusFamily::Star ? specs * o.deltas_per_spec : specs * specs * 4;
      break;
    }
  }
  return total;
}

std::vector<CensusTask> census_tasks(const CensusOptions& o) {
  const std::size_t estimate = census_estimate(o);
  if (estimate > o.max_rows) throw CensusTooLarge(estimate, o.max_rows);
  std::vector<CensusTask> tasks;
  switch (o.family) {
    case CensusFamily::SingleLabelCycle:
      for (std::size_t n = 3; n <= o.max_n; ++n)
        for (auto& d : all_orientations(n)) tasks.emplace_back(CycleSpec::single_label(std::move(d)));
      break;
    case CensusFamily::MultiLabelCycle:
      for (std::size_t n = 3; n <= o.max_n; ++n)
        for (auto& seq : label_sequences_up_to_rotation(n, o.label_alphabet))
          tasks.emplace_back(CycleSpec::standard(std::move(seq)));
      break;
    case CensusFamily::Path:
      for (std::size_t n = 2; n <= o.max_n; ++n)
        for (auto& d : all_orientations(n - 1)) tasks.emplace_back(PathTask{n, std::move(d)});
      break;
    case CensusFamily::Star: {
      std::uint64_t index = 0;
      for (const auto& m : multiplicity_vectors(o.max_n, o.max_n))
        for (std::size_t r = 0; r < o.deltas_per_spec; ++r)
          tasks.emplace_back(random_star_spec(m, o.seed, index++));
      break;
    }
    case CensusFamily::DoubleStar: {
      const auto ms = multiplicity_vectors(o.max_n, o.max_n);
      std::uint64_t index = 0;
      for (const auto& m1 : ms) {
        for (const auto& m2 : ms) {
          for (const char* bridge : {"Z1", "B"}) {
            for (int dir : {1, -1}) {
              DoubleStarTask t{random_star_spec(m1, o.seed, index, "v"),
                               random_star_spec(m2, o.seed, index + 1, "w"), bridge, dir};
              index += 2;
              tasks.emplace_back(std::move(t));
            }
          }
        }
      }
      break;
    }
  }
  return tasks;
}

CensusRow evaluate_task(const CensusTask& task, const CensusOptions& o) {
  RowBuilder rb;
  rb.row.descriptor = describe(task);

  const LabeledDigraph g = std::visit(
      [](const auto& t) -> LabeledDigraph {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          return make_cycle(t);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return make_star(t);
        } else if constexpr (std::is_same_v<T, DoubleStarTask>) {
          return make_double_star(t.first, t.second, t.bridge_label, t.bridge_dir);
        } else {
          return make_path(t.n, "Z1", t.directions);
        }
      },
      task);
  const auto a = NilAlgebra::build(g);
  const auto af = abelian_factor(a);
  rb.row.abelian_dim = af.dim();
  if (g.is_simple()) rb.row.script_a_size = script_a(g).size();

  if (o.verify) {
    for (const auto& name : verify_graph(g).failures()) rb.require(false, "verify:" + name);
  }
  if (o.classify) {
    ClassifyOptions co;
    co.sample_count = o.samples;
    co.seed = o.seed;
    rb.row.status = classify(a, co).status;
  }

  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CycleSpec>) {
          if (o.family == CensusFamily::SingleLabelCycle) {
            const auto pred = predict_cycle_single_label(t);
            rb.require(pred.abelian_dim == af.dim(), "cycle dimension trichotomy");
            rb.require(vertex_span(g, pred.abelian_basis) == af, "cycle signed basis");
          } else {
            const auto pred = predict_cycle_multi_label(t);
            rb.require(pred.nontrivial == !af.is_zero(), "even path decomposition criterion");
            if (pred.witness) rb.require(af.contains(to_row(g, *pred.witness)), "witness in abelian factor");
            if (pred.shortcut_trivial) rb.require(af.is_zero(), "single long path shortcut");
            if (t.n % 2 == 1) rb.require(af.is_zero(), "odd cycle trivial");
          }
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          check_star_prediction(rb, g, a, af, t);
          if (rb.row.status)
            rb.require(*rb.row.status == SingularityStatus::SingularCertified, "star singular");
        } else if constexpr (std::is_same_v<T, DoubleStarTask>) {
          const auto pred = predict_double_star(t.first, t.second);
          rb.require(pred.abelian_dim == af.dim(), "double star dimension");
          rb.require(vertex_span(g, pred.abelian_basis) == af, "double star basis");
        } else {
          const auto pred = predict_path(t.n, t.directions);
          rb.require(pred.abelian_dim == af.dim(), "path dimension");
          rb.require(vertex_span(g, pred.abelian_basis) == af, "path basis");
        }
      },
      task);
  return rb.row;
}

CensusResult run_census(const CensusOptions& o) {
  const auto tasks = census_tasks(o);
  CensusResult result;
  result.rows.resize(tasks.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(o.threads, tasks.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) result.rows[i] = evaluate_task(tasks[i], o);
    } catch (...) {
      errors[w] = std::current_exception();
      next = tasks.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

}  // namespace nilgraph
