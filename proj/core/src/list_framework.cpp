#include "exchlist/list_framework.hpp"

#include <algorithm>
#include <cmath>

#include "exchlist/error.hpp"
#include "exchlist/parallel.hpp"
#include "exchlist/similarity.hpp"

namespace exchlist {

PositionMatrix position_matrix_rank_based(const Ranking& r, double b_squared) {
  if (!r.has_scores())
    throw ConfigError("position matrix: ranking must carry scores");
  if (!(b_squared > 0.0))
    throw ConfigError("position matrix: b_squared must be positive");
  const int m = r.size();
  PositionMatrix a;
  a.provenance = PositionProvenance::rank_based;
  a.b_squared = b_squared;
  a.diag.resize(m);
  for (int i = 0; i < m; ++i) {
    const double pos = r.positions[i];
    if (r.scores[i] >= 0.0) {
      a.diag[i] = b_squared / ((pos - 1) * (pos - 1) + b_squared);
    } else {
      a.diag[i] = -b_squared / ((m - pos) * (m - pos) + b_squared);
    }
  }
  return a;
}

PositionMatrix position_matrix_indicator(const GeneList& list) {
  PositionMatrix a;
  a.provenance = PositionProvenance::indicator;
  a.diag.assign(list.universe_size(), 0.0);
  for (int g : list.members()) a.diag[g] = 1.0;
  return a;
}

PositionMatrix position_matrix_custom(std::vector<double> diag,
                                      PositionProvenance provenance) {
  if (diag.empty()) throw ConfigError("position matrix: empty diagonal");
  PositionMatrix a;
  a.provenance = provenance;
  a.diag = std::move(diag);
  return a;
}

WeightMatrix WeightMatrix::identity(int m) {
  if (m < 1) throw ConfigError("weight matrix: empty");
  WeightMatrix w;
  w.diag.assign(m, 1.0);
  return w;
}

WeightMatrix idf_weights(const std::vector<GeneList>& reference_lists, int m) {
  if (m < 2) throw ConfigError("idf weights: universe too small");
  std::vector<int> hits(m, 0);
  for (const GeneList& l : reference_lists) {
    if (l.universe_size() != m)
      throw ConfigError("idf weights: list universe mismatch");
    for (int g : l.members()) ++hits[g];
  }
  const double k = static_cast<double>(reference_lists.size());
  WeightMatrix w;
  w.diag.resize(m);
  for (int i = 0; i < m; ++i) w.diag[i] = std::log((k + 1.0) / (hits[i] + 1.0));
  return w;
}

SimilarityMatrix correlation_v_matrix(const LabeledDataset& ds,
                                      double threshold, int workers) {
  const int m = ds.gene_count();
  const int n = ds.sample_count();
  // center rows once; zero-norm rows drop out of every product
  std::vector<double> centered(static_cast<std::size_t>(m) * n);
  std::vector<double> norms(m);
  for (int i = 0; i < m; ++i) {
    std::span<const double> row = ds.row(i);
    double mean = 0.0;
    for (double x : row) mean += x;
    mean /= n;
    double ss = 0.0;
    double* c = centered.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      c[j] = row[j] - mean;
      ss += c[j] * c[j];
    }
    norms[i] = std::sqrt(ss);
  }
  std::vector<std::vector<SimilarityMatrix::Entry>> upper(m);
  parallel_for(m - 1, workers, [&](int i) {
    if (norms[i] == 0.0) return;
    const double* ci = centered.data() + static_cast<std::size_t>(i) * n;
    auto& out = upper[i];
    for (int j = i + 1; j < m; ++j) {
      if (norms[j] == 0.0) continue;
      const double* cj = centered.data() + static_cast<std::size_t>(j) * n;
      double dot = 0.0;
      for (int s = 0; s < n; ++s) dot += ci[s] * cj[s];
      double r = dot / (norms[i] * norms[j]);
      if (r > 0.0 && r >= threshold) out.push_back({j, r});
    }
  });
  return SimilarityMatrix::from_upper_rows(m, upper);
}

Summarizer summarizer_from_string(const std::string& s) {
  if (s == "max_magnitude") return Summarizer::max_magnitude;
  if (s == "sup_norm") return Summarizer::sup_norm;
  if (s == "sum") return Summarizer::sum;
  if (s == "min_abs_nonzero") return Summarizer::min_abs_nonzero;
  throw ConfigError("unknown summarizer: " + s);
}

std::string to_string(Summarizer s) {
  switch (s) {
    case Summarizer::max_magnitude: return "max_magnitude";
    case Summarizer::sup_norm: return "sup_norm";
    case Summarizer::sum: return "sum";
    case Summarizer::min_abs_nonzero: return "min_abs_nonzero";
  }
  return "?";
}

ListVector list_vector(const PositionMatrix& a, const SimilarityView& v,
                       const WeightMatrix& w, Summarizer h) {
  const int m = a.size();
  if (v.size() != m || w.size() != m)
    throw ConfigError("list_vector: dimension mismatch");
  ListVector l;
  l.summarizer = h;
  l.values.assign(m, 0.0);
  for (int j = 0; j < m; ++j) {
    const double wj = w.diag[j];
    double best_mag = -1.0;  // max_magnitude / sup_norm state
    double best_signed = 0.0;
    double acc = 0.0;
    double min_nz = -1.0;
    v.for_each_in_column(j, [&](int k, double vkj) {
      const double g = a.diag[k] * vkj * wj;
      switch (h) {
        case Summarizer::max_magnitude:
          if (std::abs(g) > best_mag) {  // strict: ties keep the smaller row
            best_mag = std::abs(g);
            best_signed = g;
          }
          break;
        case Summarizer::sup_norm:
          best_mag = std::max(best_mag, std::abs(g));
          break;
        case Summarizer::sum:
          acc += g;
          break;
        case Summarizer::min_abs_nonzero:
          if (g != 0.0 && (min_nz < 0.0 || std::abs(g) < min_nz))
            min_nz = std::abs(g);
          break;
      }
    });
    switch (h) {
      case Summarizer::max_magnitude: l.values[j] = best_signed; break;
      case Summarizer::sup_norm: l.values[j] = std::max(best_mag, 0.0); break;
      case Summarizer::sum: l.values[j] = acc; break;
      case Summarizer::min_abs_nonzero:
        l.values[j] = (min_nz < 0.0) ? 0.0 : min_nz;
        break;
    }
  }
  return l;
}

double cosine_similarity(const ListVector& u, const ListVector& v) {
  if (u.size() != v.size())
    throw ConfigError("cosine_similarity: dimension mismatch");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    dot += u.values[i] * v.values[i];
    nu += u.values[i] * u.values[i];
    nv += v.values[i] * v.values[i];
  }
  if (nu == 0.0 || nv == 0.0)
    throw DataError("cosine_similarity: zero list vector");
  // sqrt(nu*nv) instead of sqrt(nu)*sqrt(nv): the former is exact for u == v
  // (sqrt(fl(x*x)) == x in IEEE arithmetic), so identical vectors get
  // dissimilarity exactly 0
  return dot / std::sqrt(nu * nv);
}

double cosine_dissimilarity(const ListVector& u, const ListVector& v) {
  return 1.0 - cosine_similarity(u, v);
}

std::vector<Contribution> contributions(const ListVector& u,
                                        const ListVector& v,
                                        const Ranking* ranking_u,
                                        const Ranking* ranking_v) {
  if (u.size() != v.size())
    throw ConfigError("contributions: dimension mismatch");
  std::vector<Contribution> out(u.size());
  for (int i = 0; i < u.size(); ++i) {
    out[i].gene = i;
    out[i].value = u.values[i] * v.values[i];
    out[i].position_u = ranking_u ? ranking_u->positions[i] : 0;
    out[i].position_v = ranking_v ? ranking_v->positions[i] : 0;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Contribution& a, const Contribution& b) {
                     return a.value > b.value;
                   });
  return out;
}

Ranking extended_ranking(const ListVector& l) { return make_ranking(l.values); }

}  // namespace exchlist
