#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rig {

// One realization of the label sequence (Y_1, ..., Y_n); labels are 1-based.
struct Coloring {
  std::vector<int> labels;

  int size() const { return static_cast<int>(labels.size()); }

  // "1,2,1,3" <-> Coloring. Parse throws std::invalid_argument on junk.
  static Coloring parse(const std::string& csv);
  std::string to_string() const;
};

// Closed index interval [first, last] within 1..n.
struct IndexInterval {
  int first = 0;
  int last = 0;

  bool intersects(const IndexInterval& other) const {
    return first <= other.last && other.first <= last;
  }
  bool contains(int x) const { return first <= x && x <= last; }
};

// Per-label empirical supports: the span from a label's first to its last
// occurrence, or empty if the label never occurs. Sample points are the
// indices 1..n themselves; the construction only uses their order.
class SupportSet {
 public:
  SupportSet(std::vector<std::optional<IndexInterval>> spans, int n);

  int label_count() const { return static_cast<int>(spans_.size()); }
  int sample_count() const { return n_; }

  bool present(int label) const { return spans_[label - 1].has_value(); }
  const IndexInterval& span(int label) const { return *spans_[label - 1]; }

 private:
  std::vector<std::optional<IndexInterval>> spans_;
  int n_;
};

SupportSet derive_supports(const Coloring& coloring, int label_count);

// Pairwise-intersection graph of the supports. Only observed labels become
// vertices. Keeps its source supports so the nerve sweep can see endpoints.
struct IntervalGraph {
  std::vector<int> vertices;                // ascending labels
  std::vector<std::pair<int, int>> edges;   // i < j, sorted
  std::vector<std::optional<IndexInterval>> spans;  // indexed by label-1
  int sample_count = 0;

  bool has_edge(int i, int j) const;
  int degree(int label) const;
};

IntervalGraph build_interval_graph(const SupportSet& supports);

// Maximal faces only; downward closure is implied. Faces are sorted and the
// face list is sorted, so to_string() is canonical ("1,2,3;3,4").
struct NerveComplex {
  std::vector<std::vector<int>> maximal_faces;

  std::string to_string() const;
};

// Left-to-right sweep over interval endpoints; maximal cliques of an
// interval graph appear consecutively, so a single pass finds every
// maximal face.
NerveComplex build_nerve(const IntervalGraph& graph);

// Size of the largest clique (= largest maximal face); 0 with no vertices.
int clique_number(const IntervalGraph& graph);

// Maximum vertex degree; 0 for vertexless or edgeless graphs.
int max_degree(const IntervalGraph& graph);

// Allocation-free support extraction for enumeration and sampling loops.
// first/last are 1-based positions, 0 marks an absent label. Equivalent to
// derive_supports (property-tested against it).
struct SupportScratch {
  std::vector<int> first, last;
  std::vector<int> count;
  int present = 0;
  int n = 0;

  void reset(int label_count);
  // digits are 0-based labels.
  void absorb(const uint8_t* digits, int n, int label_count);
};

}  // namespace rig
