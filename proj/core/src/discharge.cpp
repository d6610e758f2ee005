#include "planar5/discharge.hpp"

#include <algorithm>
#include <climits>

#include "planar5/error.hpp"

namespace planar5 {

Rational ChargeLedger::amount(Vertex from, Vertex to) const {
  const auto it = transfer.find({from, to});
  return it == transfer.end() ? Rational(0) : it->second;
}

namespace {

void send(ChargeLedger& l, Vertex from, Vertex to, const Rational& x) {
  if (x == Rational(0)) return;
  l.transfer[{from, to}] += x;
}

void rule_a(const GraphView& g, Vertex v, ChargeLedger& l) {
  int n7 = 0, n8 = 0, n9 = 0;
  for (Vertex u : g.rotation(v)) {
    const int d = g.degree(u);
    n7 += d == 7;
    n8 += d == 8;
    n9 += d >= 9;
  }
  const Rational r = Rational(1) - Rational(n7, 3) - Rational(n8, 2);
  const Rational third(1, 3);
  for (Vertex u : g.rotation(v)) {
    const int d = g.degree(u);
    if (d == 7) send(l, v, u, third);
    if (d == 8) send(l, v, u, Rational(1, 2));
    if (d >= 9) send(l, v, u, max(third, r / Rational(n9)));
  }
}

void rule_b(const GraphView& g, Vertex v, ChargeLedger& l) {
  const int d = g.degree(v);
  auto five = [&](int p) { return g.degree(g.at(v, p)) == 5; };
  int count = 0;
  for (int p = 0; p < d; ++p) count += five(p);
  if (count != 4) return;
  for (int s = 0; s < d; ++s) {
    if (five(s) && five(s + 1) && five(s + 2) && five(s + 3)) {
      send(l, v, g.at(v, s), Rational(1, 6));
      send(l, v, g.at(v, s + 3), Rational(1, 6));
      return;
    }
  }
  for (int p = 0; p < d; ++p) {
    if (g.degree(g.at(v, p)) >= 9 && five(p - 1) && five(p + 1)) send(l, v, g.at(v, p), Rational(1, 3));
  }
}

}  // namespace

ChargeLedger transfers(const GraphView& g) {
  ChargeLedger l;
  l.initial.assign(g.vertex_count(), Rational(0));
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) continue;
    l.initial[static_cast<std::size_t>(v)] = Rational(6 - g.degree(v));
    if (g.degree(v) == 5) rule_a(g, v, l);
    if (g.degree(v) == 7) rule_b(g, v, l);
  }
  return l;
}

const std::vector<Rational>& final_charges(ChargeLedger& l, const GraphView& g) {
  l.final = l.initial;
  for (const auto& [pair, x] : l.transfer) {
    if (360 % x.den() != 0) {
      throw Error(ErrorCode::SumMismatch, "transfer " + x.str() + " has a denominator not dividing 360");
    }
    l.final[static_cast<std::size_t>(pair.first)] -= x;
    l.final[static_cast<std::size_t>(pair.second)] += x;
  }
  Rational sum;
  for (const auto& c : l.final) {
    if (360 % c.den() != 0) throw Error(ErrorCode::SumMismatch, "charge " + c.str() + " has a denominator not dividing 360");
    sum += c;
  }
  const auto expected = Rational(6 * static_cast<std::int64_t>(g.live_vertex_count()) -
                                 2 * static_cast<std::int64_t>(g.edge_count()));
  if (sum != expected) {
    throw Error(ErrorCode::SumMismatch, "charges sum to " + sum.str() + ", expected " + expected.str());
  }
  return l.final;
}

AuditReport audit(const GraphView& g, bool matched) {
  AuditReport r;
  r.matched = matched;
  auto ledger = transfers(g);
  const auto& c = final_charges(ledger, g);
  r.min_degree = INT_MAX;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) continue;
    r.min_degree = std::min(r.min_degree, g.degree(v));
    const auto& x = c[static_cast<std::size_t>(v)];
    r.sum += x;
    if (x != Rational(0)) r.nonzero.emplace_back(v, x);
    if (x > Rational(0)) r.positive.push_back(v);
  }
  if (r.min_degree == INT_MAX) r.min_degree = 0;
  r.expected = Rational(6 * static_cast<std::int64_t>(g.live_vertex_count()) - 2 * static_cast<std::int64_t>(g.edge_count()));
  r.inconsistent = r.min_degree >= 5 && !matched && !r.positive.empty();
  return r;
}

}  // namespace planar5
