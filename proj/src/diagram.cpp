#include "conic/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "conic/stats.hpp"

namespace conic {

int FloorDiagram::degree() const {
  return std::accumulate(fdeg.begin(), fdeg.end(), 0);
}

long long FloorDiagram::in_weight(int f) const {
  long long w = 0;
  for (auto& e : ie)
    if (e.head == f) w += e.w;
  return w;
}

long long FloorDiagram::out_weight(int f) const {
  long long w = 0;
  for (auto& e : ie)
    if (e.tail == f) w += e.w;
  return w;
}

long long FloorDiagram::source_weight(int f) const {
  long long w = 0;
  for (int s : src[f]) w += s;
  return w;
}

bool FloorDiagram::acyclic() const {
  int F = floors();
  std::vector<int> indeg(F, 0);
  for (auto& e : ie) indeg[e.head]++;
  std::vector<int> q;
  for (int f = 0; f < F; ++f)
    if (!indeg[f]) q.push_back(f);
  size_t done = 0;
  std::vector<int> deg = indeg;
  while (done < q.size()) {
    int f = q[done++];
    for (auto& e : ie)
      if (e.tail == f && --deg[e.head] == 0) q.push_back(e.head);
  }
  return (int)q.size() == F;
}

bool FloorDiagram::connected() const {
  int F = floors();
  if (F == 0) return false;
  std::vector<int> comp(F, -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (auto& e : ie) {
      int o = -1;
      if (e.tail == f) o = e.head;
      if (e.head == f) o = e.tail;
      if (o >= 0 && comp[o] < 0) {
        comp[o] = 0;
        stack.push_back(o);
      }
    }
  }
  return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

bool FloorDiagram::is_valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int F = floors();
  if (F == 0) return fail("no floors");
  if ((int)src.size() != F) return fail("source table size mismatch");
  for (int d : fdeg)
    if (d != 1 && d != 2) return fail("floor degree outside {1,2}");
  for (auto& e : ie) {
    if (e.tail < 0 || e.tail >= F || e.head < 0 || e.head >= F ||
        e.tail == e.head)
      return fail("bad edge endpoints");
    if (e.w < 1) return fail("edge weight < 1");
    if (fdeg[e.tail] == 1) return fail("degree-1 floor is not a sink");
  }
  for (int f = 0; f < F; ++f) {
    for (int w : src[f])
      if (w < 1) return fail("source weight < 1");
    long long div = in_weight(f) + source_weight(f) - out_weight(f);
    if (div != 2 * fdeg[f]) return fail("divergence != 2*degree at a floor");
  }
  if (!acyclic()) return fail("cycle in orientation");
  if (!connected()) return fail("not connected");
  if (genus() < 0) return fail("negative genus");
  return true;
}

std::string FloorDiagram::serialize() const {
  std::ostringstream out;
  out << 'F';
  for (int d : fdeg) out << d;
  out << "|E";
  auto edges = ie;
  std::sort(edges.begin(), edges.end());
  for (auto& e : edges) out << e.tail << '>' << e.head << 'w' << e.w << ';';
  out << "|S";
  for (auto& s : src) {
    for (int w : s) out << w << ',';
    out << ';';
  }
  return out.str();
}

namespace {

// Permutations of 0..F-1; callers filter.
void each_perm(int F, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> p(F);
  std::iota(p.begin(), p.end(), 0);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

FloorDiagram apply_perm(const FloorDiagram& d, const std::vector<int>& p) {
  FloorDiagram r;
  int F = d.floors();
  r.fdeg.resize(F);
  r.src.resize(F);
  for (int f = 0; f < F; ++f) {
    r.fdeg[p[f]] = d.fdeg[f];
    r.src[p[f]] = d.src[f];
  }
  r.ie = d.ie;
  for (auto& e : r.ie) {
    e.tail = p[e.tail];
    e.head = p[e.head];
  }
  std::sort(r.ie.begin(), r.ie.end());
  return r;
}

}  // namespace

void FloorDiagram::normalize() {
  for (auto& s : src) std::sort(s.begin(), s.end(), std::greater<int>());
  std::sort(ie.begin(), ie.end());
  FloorDiagram best = *this;
  std::string best_s = serialize();
  each_perm(floors(), [&](const std::vector<int>& p) {
    FloorDiagram cand = apply_perm(*this, p);
    std::string s = cand.serialize();
    if (s < best_s) {
      best_s = s;
      best = cand;
    }
  });
  *this = best;
}

std::string FloorDiagram::canon() const {
  FloorDiagram c = *this;
  c.normalize();
  return c.serialize();
}

std::vector<std::vector<int>> FloorDiagram::floor_autos() const {
  std::vector<std::vector<int>> autos;
  std::string self = serialize();
  each_perm(floors(), [&](const std::vector<int>& p) {
    if (apply_perm(*this, p).serialize() == self) autos.push_back(p);
  });
  return autos;
}

std::string FloorDiagram::dot() const {
  std::ostringstream out;
  out << "digraph floordiagram {\n  rankdir=BT;\n";
  for (int f = 0; f < floors(); ++f)
    out << "  f" << f << " [shape=ellipse,label=\"deg=" << fdeg[f] << "\"];\n";
  for (auto& e : ie) {
    out << "  f" << e.tail << " -> f" << e.head;
    if (e.w >= 2) out << " [label=\"" << e.w << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Distributes the remaining source-weight multiset over floors so that
// floor f receives total weight need[f]; weights is a sorted-descending
// value/count table.
bool distribute_sources(const std::vector<long long>& need, size_t f,
                        std::vector<std::pair<int, int>>& weights,
                        FloorDiagram& d,
                        const std::function<void(const FloorDiagram&)>& emit) {
  if (f == need.size()) {
    for (auto& [w, c] : weights)
      if (c) return false;
    emit(d);
    return true;
  }
  // Pick a sub-multiset of `weights` summing to need[f].
  std::vector<int> take(weights.size(), 0);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
    if (left == 0) {
      auto& floor_src = d.src[f];
      floor_src.clear();
      for (size_t j = 0; j < weights.size(); ++j)
        for (int k = 0; k < take[j]; ++k) floor_src.push_back(weights[j].first);
      for (size_t j = 0; j < weights.size(); ++j) weights[j].second -= take[j];
      distribute_sources(need, f + 1, weights, d, emit);
      for (size_t j = 0; j < weights.size(); ++j) weights[j].second += take[j];
      return;
    }
    if (i == weights.size()) return;
    auto [w, avail] = weights[i];
    int maxk = (int)std::min<long long>(avail, left / w);
    for (int k = maxk; k >= 0; --k) {
      take[i] = k;
      rec(i + 1, left - (long long)k * w);
    }
    take[i] = 0;
  };
  rec(0, need[f]);
  return true;
}

}  // namespace

std::vector<FloorDiagram> enumerate_diagrams(int degree, int genus,
                                             std::vector<int> source_weights) {
  std::map<std::string, FloorDiagram> out;
  if (degree < 1 || genus < 0) return {};
  long long total_w =
      std::accumulate(source_weights.begin(), source_weights.end(), 0LL);
  if (total_w != 2LL * degree) return {};
  std::sort(source_weights.begin(), source_weights.end(), std::greater<int>());
  std::vector<std::pair<int, int>> wtable;  // value -> count
  for (int w : source_weights)
    if (!wtable.empty() && wtable.back().first == w)
      wtable.back().second++;
    else
      wtable.push_back({w, 1});

  for (int n2 = 0; 2 * n2 <= degree; ++n2) {
    int n1 = degree - 2 * n2;
    int F = n2 + n1;
    int E = F - 1 + genus;
    if (E < 0) continue;
    if (E > 0 && n2 == 0) continue;  // edges need degree-2 tails

    // Position sequence of floor degrees; edges run from earlier to
    // later positions, which enumerates every DAG in some topological
    // order (duplicates removed by canonical form).
    std::vector<int> deg;
    for (int i = 0; i < n2; ++i) deg.push_back(2);
    for (int i = 0; i < n1; ++i) deg.push_back(1);
    std::sort(deg.begin(), deg.end());
    do {
      FloorDiagram d;
      d.fdeg = deg;
      d.src.assign(F, {});
      std::vector<long long> in_w(F, 0);
      // DFS over positions: each position chooses its outgoing edges.
      std::function<void(int, int)> build = [&](int pos, int placed) {
        if (pos == F) {
          if (placed != E) return;
          stats().diagrams++;
          std::vector<long long> need(F);
          for (int f = 0; f < F; ++f) {
            need[f] = 2 * deg[f] + d.out_weight(f) - in_w[f];
            if (need[f] < 0) return;
          }
          auto wt = wtable;
          distribute_sources(need, 0, wt, d, [&](const FloorDiagram& full) {
            FloorDiagram c = full;
            if (!c.connected()) return;
            c.normalize();
            std::string key = c.serialize();
            if (!out.count(key)) {
              std::string why;
              if (c.is_valid(&why)) out.emplace(key, c);
            }
          });
          return;
        }
        // Outgoing multiset from `pos` to positions > pos.  The source
        // weight this floor will need is 2*deg + out - in >= 0 and at
        // most the global budget, which caps the out-weight.  Heads are
        // visited in increasing order with non-decreasing weights per
        // head, so each multiset appears exactly once.
        long long cap =
            deg[pos] == 1 ? 0 : total_w - 2 * deg[pos] + in_w[pos];
        std::function<void(int, int, int, long long)> pick =
            [&](int head, int minw, int placed2, long long used) {
              if (head >= F) {
                build(pos + 1, placed2);
                return;
              }
              pick(head + 1, 1, placed2, used);
              for (long long w = minw;
                   used + w <= cap && placed2 + 1 <= E; ++w) {
                d.ie.push_back({pos, head, (int)w});
                in_w[head] += w;
                pick(head, (int)w, placed2 + 1, used + w);
                in_w[head] -= w;
                d.ie.pop_back();
              }
            };
        pick(pos + 1, 1, placed, 0);
      };
      build(0, 0);
    } while (std::next_permutation(deg.begin(), deg.end()));
  }

  std::vector<FloorDiagram> res;
  for (auto& [k, v] : out) res.push_back(v);
  return res;
}

std::vector<FloorDiagram> enumerate_diagrams(int degree, int genus) {
  return enumerate_diagrams(degree, genus,
                            std::vector<int>(2 * degree, 1));
}

}  // namespace conic
