#include "rig/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace rig {

Coloring Coloring::parse(const std::string& csv) {
  Coloring c;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    const std::string token = csv.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed coloring: " + csv);
    c.labels.push_back(std::stoi(token));
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  if (c.labels.empty()) throw std::invalid_argument("empty coloring");
  return c;
}

std::string Coloring::to_string() const {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

SupportSet::SupportSet(std::vector<std::optional<IndexInterval>> spans, int n)
    : spans_(std::move(spans)), n_(n) {}

SupportSet derive_supports(const Coloring& coloring, int label_count) {
  if (coloring.labels.empty()) throw std::invalid_argument("coloring must have n >= 1");
  std::vector<std::optional<IndexInterval>> spans(label_count);
  for (int pos = 1; pos <= coloring.size(); ++pos) {
    const int label = coloring.labels[pos - 1];
    if (label < 1 || label > label_count)
      throw std::invalid_argument("label " + std::to_string(label) + " out of range [1.." +
                                  std::to_string(label_count) + "]");
    auto& span = spans[label - 1];
    if (!span)
      span = IndexInterval{pos, pos};
    else
      span->last = pos;
  }
  return SupportSet(std::move(spans), coloring.size());
}

bool IntervalGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

int IntervalGraph::degree(int label) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == label || b == label);
  return d;
}

IntervalGraph build_interval_graph(const SupportSet& supports) {
  IntervalGraph g;
  g.sample_count = supports.sample_count();
  g.spans.resize(supports.label_count());
  for (int label = 1; label <= supports.label_count(); ++label) {
    if (!supports.present(label)) continue;
    g.vertices.push_back(label);
    g.spans[label - 1] = supports.span(label);
  }
  for (size_t a = 0; a < g.vertices.size(); ++a)
    for (size_t b = a + 1; b < g.vertices.size(); ++b) {
      const int i = g.vertices[a], j = g.vertices[b];
      if (supports.span(i).intersects(supports.span(j))) g.edges.emplace_back(i, j);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

NerveComplex build_nerve(const IntervalGraph& graph) {
  NerveComplex nerve;
  if (graph.vertices.empty()) return nerve;

  // starts[t] / ends[t]: labels whose span begins / finishes at position t.
  const int n = graph.sample_count;
  std::vector<std::vector<int>> starts(n + 1), ends(n + 1);
  for (int label : graph.vertices) {
    const IndexInterval& span = *graph.spans[label - 1];
    starts[span.first].push_back(label);
    ends[span.last].push_back(label);
  }

  std::vector<int> active;
  bool grew = false;
  for (int t = 1; t <= n; ++t) {
    for (int label : starts[t]) {
      active.push_back(label);
      grew = true;
    }
    if (!ends[t].empty()) {
      if (grew) {
        std::vector<int> face = active;
        std::sort(face.begin(), face.end());
        nerve.maximal_faces.push_back(std::move(face));
        grew = false;
      }
      for (int label : ends[t])
        active.erase(std::find(active.begin(), active.end(), label));
    }
  }
  std::sort(nerve.maximal_faces.begin(), nerve.maximal_faces.end());
  return nerve;
}

std::string NerveComplex::to_string() const {
  std::string out;
  for (size_t f = 0; f < maximal_faces.size(); ++f) {
    if (f) out += ';';
    for (size_t i = 0; i < maximal_faces[f].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(maximal_faces[f][i]);
    }
  }
  return out;
}

int clique_number(const IntervalGraph& graph) {
  int best = 0;
  for (const auto& face : build_nerve(graph).maximal_faces)
    best = std::max(best, static_cast<int>(face.size()));
  return best;
}

int max_degree(const IntervalGraph& graph) {
  int best = 0;
  for (int label : graph.vertices) best = std::max(best, graph.degree(label));
  return best;
}

void SupportScratch::reset(int label_count) {
  first.assign(label_count, 0);
  last.assign(label_count, 0);
  count.assign(label_count, 0);
  present = 0;
  n = 0;
}

void SupportScratch::absorb(const uint8_t* digits, int n_points, int label_count) {
  reset(label_count);
  n = n_points;
  for (int pos = 1; pos <= n_points; ++pos) {
    const int d = digits[pos - 1];
    if (first[d] == 0) {
      first[d] = pos;
      ++present;
    }
    last[d] = pos;
    ++count[d];
  }
}

}  // namespace rig
