// m-guillotine machinery: spans, dark lengths, favorable cuts and the
// recursive transformation that certifies the structural length bound.
//
// Edges carry a tag so that added cut material (spans, disk-span
// connections) can be told apart from the base graph: span extraction reads
// base edges, containment checks read everything.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

enum class EdgeTag { Base, MSpan, DiskSpan, Connection };

struct TaggedSegment {
  Segment seg;
  EdgeTag tag = EdgeTag::Base;
};

struct EdgeSet {
  std::vector<TaggedSegment> edges;
  double total_length() const {
    double s = 0;
    for (const auto& e : edges) s += e.seg.length();
    return s;
  }
  double base_length() const {
    double s = 0;
    for (const auto& e : edges)
      if (e.tag == EdgeTag::Base) s += e.seg.length();
    return s;
  }
  static EdgeSet from_tour(const Tour& t);
  static EdgeSet from_segments(const std::vector<Segment>& segs);
};

struct Window {
  Rectangle rect;
};

enum class CutOrientation { Horizontal, Vertical };

struct Cut {
  CutOrientation orientation = CutOrientation::Vertical;
  double coordinate = 0.0;
};

struct CutCertificate {
  Cut cut;
  std::optional<Segment> m_span_seg;
  std::optional<Segment> m_disk_span_seg;
  double dark_length = 0.0;
  double disk_dark_length = 0.0;
  double chargeable() const { return dark_length + disk_dark_length; }
  double cost() const {
    double c = 0.0;
    if (m_span_seg) c += m_span_seg->length();
    if (m_disk_span_seg) c += m_disk_span_seg->length();
    return c;
  }
};

// Span between the m-th and m-th-from-last crossing endpoints of the cut
// inside the window; empty when there are at most 2(m-1) endpoints.
std::optional<Segment> m_span(const EdgeSet& e, const Window& w, Cut cut, int m);

// Span between the bottom of the m-th disk chord and the top of the
// m-th-from-last; empty when the cut meets at most 2m disks in the window.
std::optional<Segment> m_disk_span(const std::vector<Disk>& disks,
                                   const Window& w, Cut cut, int m);

// (m-dark length, m-disk-dark length) of the cut within the window.
std::pair<double, double> chargeable_length(const EdgeSet& e,
                                            const std::vector<Disk>& disks,
                                            const Window& w, Cut cut, int m);

// Point predicates used by the averaging cross-checks.
bool point_m_dark(const EdgeSet& e, const Window& w, Point p, int m,
                  CutOrientation cut_orientation);
bool point_m_disk_dark(const std::vector<Disk>& disks, const Window& w, Point p,
                       int m, CutOrientation cut_orientation);

// First favorable cut in scan order (horizontal candidates before vertical,
// coordinates ascending); throws "favorable cut search failed" if the
// candidate grid exhausts, which would contradict the existence lemma.
CutCertificate find_favorable_cut(const EdgeSet& e, const std::vector<Disk>& disks,
                                  const Window& w, int m);

struct CutRecord {
  Window window;
  CutCertificate certificate;
  double added_span_length = 0.0;  // material actually appended at this cut
  std::vector<int> skipped_disks;  // disk-span skipped: the <=2 affected disks
  std::vector<Segment> connections;
};

struct ProofLog {
  double original_length = 0.0;
  double delta = 0.0;
  int disk_count = 0;
  int m = 1;
  double added_mspan_length = 0.0;
  double added_diskspan_length = 0.0;
  double connection_length = 0.0;
  double red_total = 0.0;   // dark length assessed over all cuts
  double blue_total = 0.0;  // disk-dark length assessed over all cuts
  std::vector<CutRecord> cuts;

  double added_span_length() const {
    return added_mspan_length + added_diskspan_length;
  }
  double span_bound_rhs() const {
    return (std::sqrt(2.0) + 16.0 / kPi) / m * original_length +
           16.0 * delta / m;
  }
  double red_bound() const { return std::sqrt(2.0) / m * original_length; }
  double blue_bound() const { return 4.0 * delta / m * disk_count; }
};

struct TransformResult {
  EdgeSet edges;  // base edges plus spans and connections
  ProofLog log;
};

// Recursive favorable-cut transformation. Requires a connected base edge set,
// pairwise-disjoint equal-radius disks, each disk meeting the edges. The
// instance is scaled into the unit square internally and results are mapped
// back.
TransformResult guillotine_transform(const EdgeSet& e,
                                     const std::vector<Disk>& disks, int m);

// Recursive decomposition check: every window that wholly contains a disk
// admits an m-good cut on the candidate grid.
bool check_m_guillotine(const EdgeSet& e, const std::vector<Disk>& disks,
                        const Window& w, int m);

}  // namespace tspn
