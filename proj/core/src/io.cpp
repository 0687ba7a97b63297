#include "exchlist/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "exchlist/error.hpp"

namespace exchlist {
namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& what) {
  throw DataError(name + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

// reads a line, tolerating trailing \r from CRLF files
bool get_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

double parse_double(const std::string& s, const std::string& name,
                    std::size_t line) {
  if (s.empty()) fail(name, line, "empty numeric field");
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    fail(name, line, "bad numeric value '" + s + "'");
  return v;
}

long parse_int(const std::string& s, const std::string& name,
               std::size_t line) {
  if (s.empty()) fail(name, line, "empty integer field");
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    fail(name, line, "bad integer value '" + s + "'");
  return v;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_score6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

}  // namespace

// --- expression / labels ----------------------------------------------------

ExpressionData load_expression(std::istream& in, const std::string& name) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing header");
  std::vector<std::string> header = split(line, '\t');
  if (header.size() < 3 || header[0] != "gene")
    fail(name, 1, "expected header 'gene<TAB>sample...' with >= 2 samples");
  const std::size_t n = header.size() - 1;

  std::vector<std::string> gene_order;
  std::map<std::string, std::vector<double>> rows;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != n + 1)
      fail(name, line_no,
           "expected " + std::to_string(n + 1) + " columns, got " +
               std::to_string(f.size()));
    if (f[0].empty()) fail(name, line_no, "empty gene identifier");
    std::vector<double> vals(n);
    for (std::size_t j = 0; j < n; ++j) {
      vals[j] = parse_double(f[j + 1], name, line_no);
      if (!std::isfinite(vals[j])) fail(name, line_no, "non-finite value");
    }
    auto it = rows.find(f[0]);
    if (it == rows.end()) {
      gene_order.push_back(f[0]);
      rows.emplace(f[0], std::move(vals));
    } else {
      // duplicate gene: keep the per-sample maximum
      for (std::size_t j = 0; j < n; ++j)
        it->second[j] = std::max(it->second[j], vals[j]);
    }
  }
  if (gene_order.size() < 2) fail(name, line_no, "need at least two genes");

  ExpressionData out;
  out.universe = std::make_shared<const Universe>(gene_order);
  out.sample_ids.assign(header.begin() + 1, header.end());
  out.values.resize(gene_order.size() * n);
  for (std::size_t i = 0; i < gene_order.size(); ++i) {
    const std::vector<double>& vals = rows[gene_order[i]];
    std::copy(vals.begin(), vals.end(), out.values.begin() + i * n);
  }
  return out;
}

ExpressionData load_expression_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_expression(in, path);
}

std::vector<std::pair<std::string, std::string>> load_labels(
    std::istream& in, const std::string& name) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing header");
  std::vector<std::string> header = split(line, '\t');
  if (header.size() != 2 || header[0] != "sample" || header[1] != "class")
    fail(name, 1, "expected header 'sample<TAB>class'");
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 2) fail(name, line_no, "expected 2 columns");
    if (f[0].empty() || f[1].empty()) fail(name, line_no, "empty field");
    if (!seen.insert(f[0]).second)
      fail(name, line_no, "duplicate sample '" + f[0] + "'");
    out.emplace_back(f[0], f[1]);
  }
  if (out.empty()) fail(name, line_no, "no labels");
  return out;
}

std::vector<std::pair<std::string, std::string>> load_labels_file(
    const std::string& path) {
  std::ifstream in = open_input(path);
  return load_labels(in, path);
}

LabeledDataset make_dataset(
    const ExpressionData& expr,
    const std::vector<std::pair<std::string, std::string>>& labels) {
  std::map<std::string, std::string> by_sample;
  std::vector<std::string> classes;
  for (const auto& [sample, cls] : labels) {
    by_sample[sample] = cls;
    if (std::find(classes.begin(), classes.end(), cls) == classes.end())
      classes.push_back(cls);
  }
  if (classes.size() != 2)
    throw DataError("labels: expected exactly two classes, got " +
                    std::to_string(classes.size()));
  std::vector<int> groups;
  groups.reserve(expr.sample_ids.size());
  for (const std::string& sample : expr.sample_ids) {
    auto it = by_sample.find(sample);
    if (it == by_sample.end())
      throw DataError("labels: sample '" + sample + "' is unlabeled");
    groups.push_back(it->second == classes[0] ? 0 : 1);
  }
  for (const auto& [sample, cls] : labels) {
    (void)cls;
    if (!expr.universe || std::find(expr.sample_ids.begin(),
                                    expr.sample_ids.end(),
                                    sample) == expr.sample_ids.end())
      throw DataError("labels: unknown sample '" + sample + "'");
  }
  return LabeledDataset(expr.universe, expr.values, std::move(groups),
                        {classes[0], classes[1]}, expr.sample_ids);
}

LabeledDataset load_dataset(const std::string& expression_path,
                            const std::string& labels_path) {
  return make_dataset(load_expression_file(expression_path),
                      load_labels_file(labels_path));
}

namespace {

std::string sample_name(const LabeledDataset& ds, int j) {
  if (!ds.sample_ids().empty()) return ds.sample_ids()[j];
  return "s" + std::to_string(j + 1);
}

}  // namespace

void save_expression(std::ostream& out, const LabeledDataset& ds) {
  out << "gene";
  for (int j = 0; j < ds.sample_count(); ++j) out << '\t' << sample_name(ds, j);
  out << '\n';
  for (int i = 0; i < ds.gene_count(); ++i) {
    out << ds.universe().id(i);
    for (double v : ds.row(i)) out << '\t' << fmt_full(v);
    out << '\n';
  }
}

void save_expression_file(const std::string& path, const LabeledDataset& ds) {
  std::ofstream out = open_output(path);
  save_expression(out, ds);
}

void save_labels(std::ostream& out, const LabeledDataset& ds) {
  out << "sample\tclass\n";
  for (int j = 0; j < ds.sample_count(); ++j) {
    out << sample_name(ds, j) << '\t' << ds.class_names()[ds.groups()[j]]
        << '\n';
  }
}

void save_labels_file(const std::string& path, const LabeledDataset& ds) {
  std::ofstream out = open_output(path);
  save_labels(out, ds);
}

// --- rankings ----------------------------------------------------------------

void save_ranking(std::ostream& out, const Universe& u, const Ranking& r) {
  if (r.size() != u.size())
    throw ConfigError("save_ranking: universe size mismatch");
  if (!r.has_scores())
    throw ConfigError("save_ranking: ranking carries no scores");
  out << "gene\tposition\tscore\n";
  for (int i = 0; i < r.size(); ++i) {
    out << u.id(i) << '\t' << r.positions[i] << '\t' << fmt_full(r.scores[i])
        << '\n';
  }
}

void save_ranking_file(const std::string& path, const Universe& u,
                       const Ranking& r) {
  std::ofstream out = open_output(path);
  save_ranking(out, u, r);
}

std::pair<std::shared_ptr<const Universe>, Ranking> load_ranking(
    std::istream& in, const std::string& name) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing header");
  if (split(line, '\t') != std::vector<std::string>{"gene", "position", "score"})
    fail(name, 1, "expected header 'gene<TAB>position<TAB>score'");
  std::vector<std::string> ids;
  Ranking r;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 3) fail(name, line_no, "expected 3 columns");
    ids.push_back(f[0]);
    r.positions.push_back(static_cast<int>(parse_int(f[1], name, line_no)));
    r.scores.push_back(parse_double(f[2], name, line_no));
  }
  auto universe = std::make_shared<const Universe>(std::move(ids));
  try {
    validate_ranking(r);
  } catch (const DataError& e) {
    throw DataError(name + ": " + e.what());
  }
  return {universe, std::move(r)};
}

std::pair<std::shared_ptr<const Universe>, Ranking> load_ranking_file(
    const std::string& path) {
  std::ifstream in = open_input(path);
  return load_ranking(in, path);
}

// --- position vectors ----------------------------------------------------------

void save_position_vectors(std::ostream& out, const Universe& u,
                           const PositionVectors& pv) {
  if (pv.gene_count() != u.size())
    throw ConfigError("save_position_vectors: universe size mismatch");
  out << "gene";
  for (int k = 0; k < pv.rounds(); ++k) out << "\tround_" << (k + 1);
  out << '\n';
  for (int i = 0; i < pv.gene_count(); ++i) {
    out << u.id(i);
    for (int k = 0; k < pv.rounds(); ++k) out << '\t' << pv.at(i, k);
    out << '\n';
  }
}

void save_position_vectors_file(const std::string& path, const Universe& u,
                                const PositionVectors& pv) {
  std::ofstream out = open_output(path);
  save_position_vectors(out, u, pv);
}

std::pair<std::shared_ptr<const Universe>, PositionVectors>
load_position_vectors(std::istream& in, const std::string& name) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing header");
  std::vector<std::string> header = split(line, '\t');
  if (header.size() < 2 || header[0] != "gene")
    fail(name, 1, "expected header 'gene<TAB>round_1...'");
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k] != "round_" + std::to_string(k))
      fail(name, 1, "expected column 'round_" + std::to_string(k) + "'");
  }
  const int b = static_cast<int>(header.size() - 1);
  std::vector<std::string> ids;
  std::vector<int> flat;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (static_cast<int>(f.size()) != b + 1)
      fail(name, line_no, "expected " + std::to_string(b + 1) + " columns");
    ids.push_back(f[0]);
    for (int k = 0; k < b; ++k)
      flat.push_back(static_cast<int>(parse_int(f[k + 1], name, line_no)));
  }
  auto universe = std::make_shared<const Universe>(ids);
  PositionVectors pv(static_cast<int>(ids.size()), b);
  for (int i = 0; i < pv.gene_count(); ++i) {
    for (int k = 0; k < b; ++k) pv.set(i, k, flat[i * b + k]);
  }
  try {
    pv.validate();
  } catch (const DataError& e) {
    throw DataError(name + ": " + e.what());
  }
  return {universe, std::move(pv)};
}

std::pair<std::shared_ptr<const Universe>, PositionVectors>
load_position_vectors_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_position_vectors(in, path);
}

// --- exchangeability matrices ------------------------------------------------

void save_exchangeability_matrix(std::ostream& out, const Universe& u,
                                 const ExchangeabilityMatrix& m) {
  if (m.scores.size() != u.size())
    throw ConfigError("save_exchangeability_matrix: universe size mismatch");
  out << "# M=" << m.scores.size() << " B=" << m.meta.rounds_b
      << " measure=" << to_string(m.meta.measure)
      << " metric=" << to_string(m.meta.metric) << " seed=" << m.meta.seed
      << " threshold=" << fmt_full(m.meta.sparsity_threshold) << '\n';
  out << "gene_i\tgene_j\tscore\n";
  m.scores.for_each_pair([&](int i, int j, double v) {
    std::string s = fmt_score6(v);
    if (s == "0.000000") return;  // quantized zeros are not stored
    out << u.id(i) << '\t' << u.id(j) << '\t' << s << '\n';
  });
}

void save_exchangeability_matrix_file(const std::string& path,
                                      const Universe& u,
                                      const ExchangeabilityMatrix& m) {
  std::ofstream out = open_output(path);
  save_exchangeability_matrix(out, u, m);
}

ExchangeabilityMatrix load_exchangeability_matrix(std::istream& in,
                                                  const std::string& name,
                                                  const Universe& u) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing metadata line");
  ExchangeabilityMeta meta;
  {
    if (line.rfind("# ", 0) != 0) fail(name, 1, "expected '# key=value...' line");
    std::istringstream ss(line.substr(2));
    std::string tok;
    int m_field = -1;
    while (ss >> tok) {
      std::size_t eq = tok.find('=');
      if (eq == std::string::npos) fail(name, 1, "bad metadata token " + tok);
      std::string key = tok.substr(0, eq);
      std::string value = tok.substr(eq + 1);
      if (key == "M") {
        m_field = static_cast<int>(parse_int(value, name, 1));
      } else if (key == "B") {
        meta.rounds_b = static_cast<int>(parse_int(value, name, 1));
      } else if (key == "measure") {
        meta.measure = pair_measure_from_string(value);
      } else if (key == "metric") {
        meta.metric = metric_from_string(value);
      } else if (key == "seed") {
        meta.seed = std::strtoull(value.c_str(), nullptr, 10);
      } else if (key == "threshold") {
        meta.sparsity_threshold = parse_double(value, name, 1);
      } else {
        fail(name, 1, "unknown metadata key " + key);
      }
    }
    if (m_field != u.size())
      fail(name, 1, "metadata M does not match the universe");
  }
  if (!get_line(in, line)) fail(name, 2, "missing header");
  if (split(line, '\t') !=
      std::vector<std::string>{"gene_i", "gene_j", "score"})
    fail(name, 2, "expected header 'gene_i<TAB>gene_j<TAB>score'");

  SimilarityMatrix scores(u.size());
  std::size_t line_no = 2;
  std::set<std::pair<int, int>> seen;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 3) fail(name, line_no, "expected 3 columns");
    auto gi = u.find(f[0]);
    auto gj = u.find(f[1]);
    if (!gi) fail(name, line_no, "unknown gene '" + f[0] + "'");
    if (!gj) fail(name, line_no, "unknown gene '" + f[1] + "'");
    if (*gi >= *gj) fail(name, line_no, "rows must satisfy gene_i < gene_j");
    double v = parse_double(f[2], name, line_no);
    if (v < 0.0 || v > 1.0) fail(name, line_no, "score outside [0, 1]");
    if (!seen.insert({*gi, *gj}).second)
      fail(name, line_no, "duplicate pair");
    scores.set(*gi, *gj, v);
  }
  return {std::move(scores), meta};
}

ExchangeabilityMatrix load_exchangeability_matrix_file(const std::string& path,
                                                       const Universe& u) {
  std::ifstream in = open_input(path);
  return load_exchangeability_matrix(in, path, u);
}

// --- list vectors / contributions ---------------------------------------------

void save_list_vector(std::ostream& out, const Universe& u,
                      const ListVector& l) {
  if (l.size() != u.size())
    throw ConfigError("save_list_vector: universe size mismatch");
  out << "gene\tvalue\n";
  for (int i = 0; i < l.size(); ++i)
    out << u.id(i) << '\t' << fmt_full(l.values[i]) << '\n';
}

void save_list_vector_file(const std::string& path, const Universe& u,
                           const ListVector& l) {
  std::ofstream out = open_output(path);
  save_list_vector(out, u, l);
}

std::pair<std::shared_ptr<const Universe>, ListVector> load_list_vector(
    std::istream& in, const std::string& name) {
  std::string line;
  if (!get_line(in, line)) fail(name, 1, "missing header");
  if (split(line, '\t') != std::vector<std::string>{"gene", "value"})
    fail(name, 1, "expected header 'gene<TAB>value'");
  std::vector<std::string> ids;
  ListVector l;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 2) fail(name, line_no, "expected 2 columns");
    ids.push_back(f[0]);
    l.values.push_back(parse_double(f[1], name, line_no));
  }
  auto universe = std::make_shared<const Universe>(std::move(ids));
  return {universe, std::move(l)};
}

std::pair<std::shared_ptr<const Universe>, ListVector> load_list_vector_file(
    const std::string& path) {
  std::ifstream in = open_input(path);
  return load_list_vector(in, path);
}

void save_contributions(std::ostream& out, const Universe& u,
                        const std::vector<Contribution>& rows) {
  out << "gene\tcontribution\tpos_list1\tpos_list2\n";
  for (const Contribution& c : rows) {
    out << u.id(c.gene) << '\t' << fmt_full(c.value) << '\t' << c.position_u
        << '\t' << c.position_v << '\n';
  }
}

// --- gene lists / universes / relations ------------------------------------------

namespace {

std::vector<std::string> read_id_lines(std::istream& in,
                                       const std::string& name) {
  std::vector<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.find('\t') != std::string::npos)
      fail(name, line_no, "expected one identifier per line");
    ids.push_back(line);
  }
  if (ids.empty()) fail(name, line_no, "empty file");
  return ids;
}

}  // namespace

GeneList load_gene_list(std::istream& in, const std::string& name,
                        const Universe& u, ListKind kind) {
  std::vector<std::string> ids = read_id_lines(in, name);
  std::vector<int> members;
  members.reserve(ids.size());
  for (const std::string& id : ids) {
    auto g = u.find(id);
    if (!g) throw DataError(name + ": unknown gene '" + id + "'");
    members.push_back(*g);
  }
  return kind == ListKind::ordered
             ? GeneList::ordered(std::move(members), u.size())
             : GeneList::unordered(std::move(members), u.size());
}

GeneList load_gene_list_file(const std::string& path, const Universe& u,
                             ListKind kind) {
  std::ifstream in = open_input(path);
  return load_gene_list(in, path, u, kind);
}

std::shared_ptr<const Universe> load_universe(std::istream& in,
                                              const std::string& name) {
  return std::make_shared<const Universe>(read_id_lines(in, name));
}

std::shared_ptr<const Universe> load_universe_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_universe(in, path);
}

std::vector<std::vector<int>> load_modules(std::istream& in,
                                           const std::string& name,
                                           const Universe& u) {
  std::vector<std::vector<int>> out;
  std::string line;
  std::size_t line_no = 0;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<int> module;
    for (const std::string& id : split(line, '\t')) {
      auto g = u.find(id);
      if (!g) fail(name, line_no, "unknown gene '" + id + "'");
      module.push_back(*g);
    }
    out.push_back(std::move(module));
  }
  return out;
}

std::vector<std::vector<int>> load_modules_file(const std::string& path,
                                                const Universe& u) {
  std::ifstream in = open_input(path);
  return load_modules(in, path, u);
}

SimilarityMatrix load_pair_relation(std::istream& in, const std::string& name,
                                    const Universe& u) {
  SimilarityMatrix rel(u.size());
  std::string line;
  std::size_t line_no = 0;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 2) fail(name, line_no, "expected 'geneA<TAB>geneB'");
    auto a = u.find(f[0]);
    auto b = u.find(f[1]);
    if (!a) fail(name, line_no, "unknown gene '" + f[0] + "'");
    if (!b) fail(name, line_no, "unknown gene '" + f[1] + "'");
    if (*a == *b) continue;  // self relation is implicit
    rel.set(*a, *b, 1.0);
  }
  return rel;
}

SimilarityMatrix load_pair_relation_file(const std::string& path,
                                         const Universe& u) {
  std::ifstream in = open_input(path);
  return load_pair_relation(in, path, u);
}

// --- evaluation outputs --------------------------------------------------------

void save_plot_csv(std::ostream& out, const std::vector<PlotPoint>& points) {
  out << "set,round,x,y\n";
  for (const PlotPoint& p : points) {
    out << (p.reflected ? "reflected" : "forward") << ',' << (p.round + 1)
        << ',' << p.x << ',' << p.y << '\n';
  }
}

void save_concordance_csv(std::ostream& out, const ConcordanceCurve& top,
                          const ConcordanceCurve& bottom) {
  if (top.f.size() != bottom.f.size())
    throw ConfigError("concordance csv: curve length mismatch");
  out << "k,f_top,f_bottom\n";
  for (std::size_t k = 0; k < top.f.size(); ++k)
    out << (k + 1) << ',' << top.f[k] << ',' << bottom.f[k] << '\n';
}

void save_overlap_csv(std::ostream& out, const PairwiseOverlap& top,
                      const PairwiseOverlap& bottom) {
  if (top.rows.size() != bottom.rows.size())
    throw ConfigError("overlap csv: row count mismatch");
  out << "pair_a,pair_b,overlap_top,overlap_bottom\n";
  for (std::size_t i = 0; i < top.rows.size(); ++i) {
    out << (top.rows[i].a + 1) << ',' << (top.rows[i].b + 1) << ','
        << top.rows[i].overlap << ',' << bottom.rows[i].overlap << '\n';
  }
}

void save_distance_csv(std::ostream& out, const DistanceStabilityResult& r) {
  out << "comparison,variant,distance\n";
  for (const auto& row : r.rows) {
    out << to_string(row.comparison) << ','
        << (row.extended ? "extended" : "non_extended") << ','
        << fmt_score6(row.distance) << '\n';
  }
}

// --- dataset alignment -----------------------------------------------------------

std::shared_ptr<const Universe> common_universe(const Universe& a,
                                                const Universe& b) {
  std::vector<std::string> ids;
  for (const std::string& id : a.ids()) {
    if (b.contains(id)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  if (ids.size() < 2)
    throw DataError("common universe: fewer than two shared genes");
  return std::make_shared<const Universe>(std::move(ids));
}

LabeledDataset restrict_to_universe(const LabeledDataset& ds,
                                    std::shared_ptr<const Universe> target) {
  const int n = ds.sample_count();
  std::vector<double> values(static_cast<std::size_t>(target->size()) * n);
  for (int i = 0; i < target->size(); ++i) {
    int src = ds.universe().index_of(target->id(i));
    std::span<const double> row = ds.row(src);
    std::copy(row.begin(), row.end(),
              values.begin() + static_cast<std::size_t>(i) * n);
  }
  return LabeledDataset(std::move(target), std::move(values), ds.groups(),
                        ds.class_names(), ds.sample_ids());
}

}  // namespace exchlist
