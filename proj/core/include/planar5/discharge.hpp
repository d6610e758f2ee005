#pragma once

// Exact discharging. Every vertex starts with charge 6 - deg(v).
//
// Rule A: a degree-5 vertex v sends 1/3 to each degree-7 neighbor, 1/2 to
// each degree-8 neighbor, and max(1/3, r/|N9+|) to each neighbor of degree
// 9 or more, where r = 1 - |N7|/3 - |N8|/2.
//
// Rule B: a degree-7 vertex with exactly four degree-5 neighbors sends 1/6 to
// both ends when those four are consecutive on its link; otherwise it sends
// 1/3 to each neighbor of degree 9 or more whose two link neighbors both have
// degree 5.

#include <map>
#include <utility>
#include <vector>

#include "planar5/embedded_graph.hpp"
#include "planar5/rational.hpp"

namespace planar5 {

struct ChargeLedger {
  std::vector<Rational> initial;  ///< 6 - deg(v); zero for deleted ids
  /// Nonzero transfers, keyed by (sender, receiver).
  std::map<std::pair<Vertex, Vertex>, Rational> transfer;
  std::vector<Rational> final;  ///< filled by final_charges()

  Rational amount(Vertex from, Vertex to) const;
};

/// Transfers under Rules A and B. Initial charges are filled in as well.
ChargeLedger transfers(const GraphView& g);

/// c(v) = initial(v) - sent(v) + received(v). Throws SumMismatch unless the
/// total equals 6n - 2m (12 for a connected triangulation) or some value has
/// a denominator not dividing 360.
const std::vector<Rational>& final_charges(ChargeLedger& ledger, const GraphView& g);

struct AuditReport {
  Rational sum;
  Rational expected;  ///< 6n - 2m
  std::vector<std::pair<Vertex, Rational>> nonzero;
  std::vector<Vertex> positive;
  int min_degree = 0;
  bool matched = false;
  /// Minimum degree is at least 5, the matcher found nothing, and yet some
  /// vertex carries positive charge.
  bool inconsistent = false;
};

AuditReport audit(const GraphView& g, bool matched);

}  // namespace planar5
