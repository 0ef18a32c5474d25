#include "conic/marking.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "conic/stats.hpp"

namespace conic {

int Marking::n0() const {
  int m = 0;
  for (int l : floor_label) m = std::max(m, l);
  for (int l : iedge_label) m = std::max(m, l);
  for (auto& fc : contacts)
    for (auto& c : fc) m = std::max(m, c.label);
  return m;
}

long long MarkedEnumeration::total_classes() const {
  long long n = 0;
  for (auto& g : groups) n += (long long)g.classes.size();
  return n;
}

namespace {

std::vector<int> identity_perm(int F) {
  std::vector<int> p(F);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

FloorDiagram permuted(const FloorDiagram& d, const std::vector<int>& p) {
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

// All floor permutations carrying `dia` onto its canonical form; for a
// normalized diagram these are exactly its automorphisms.
std::vector<std::vector<int>> normalizing_perms(const FloorDiagram& dia) {
  int F = dia.floors();
  std::string best;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = identity_perm(F);
  do {
    std::string s = permuted(dia, p).serialize();
    if (best.empty() || s < best) {
      best = s;
      perms.clear();
    }
    if (s == best) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

std::string serialize_marking(const FloorDiagram& dia, const Marking& m,
                              const std::vector<int>& p) {
  int F = dia.floors();
  std::vector<int> fl(F, 0);
  std::vector<std::vector<Marking::Contact>> ct(F);
  for (int f = 0; f < F; ++f) {
    fl[p[f]] = m.floor_label[f];
    ct[p[f]] = m.contacts[f];
    std::sort(ct[p[f]].begin(), ct[p[f]].end());
  }
  // Parallel edges of equal weight are interchangeable; sorting the
  // permuted slots puts their labels in the canonical ascending order.
  std::vector<std::tuple<int, int, int, int>> slots;
  for (size_t e = 0; e < dia.ie.size(); ++e)
    slots.emplace_back(p[dia.ie[e].tail], p[dia.ie[e].head], dia.ie[e].w,
                       m.iedge_label[e]);
  std::sort(slots.begin(), slots.end());

  std::ostringstream out;
  out << "L:";
  for (int l : fl) out << l << ',';
  out << "|E:";
  for (auto& [t, h, w, label] : slots) out << label << ',';
  out << "|C:";
  for (auto& fc : ct) {
    for (auto& c : fc) out << c.w << (c.alpha ? 'a' : 'b') << c.label << ',';
    out << ';';
  }
  out << "|A:";
  for (auto& s : m.ai) {
    std::vector<int> t;
    for (int f : s) t.push_back(p[f]);
    std::sort(t.begin(), t.end());
    for (int f : t) out << f << ',';
    out << ';';
  }
  return out.str();
}

std::string serialize_placement(const FloorDiagram& dia, const Marking& m,
                                const std::vector<int>& p) {
  int F = dia.floors();
  std::vector<std::string> per(F);
  for (int f = 0; f < F; ++f) {
    std::string s = "a";
    for (auto& c : m.contacts[f])
      if (c.alpha) s += std::to_string(c.w) + ",";
    s += "b";
    for (auto& c : m.contacts[f])
      if (!c.alpha) s += std::to_string(c.w) + ",";
    per[p[f]] = s;
  }
  std::string out;
  for (auto& s : per) out += s + ";";
  return out;
}

// Enumerates marking classes of a single normalized diagram.
class MarkingEnumerator {
 public:
  MarkingEnumerator(const FloorDiagram& dia, const MultiSeq& alpha,
                    const MultiSeq& beta,
                    const std::vector<long long>& ai_count)
      : dia_(dia), F_(dia.floors()), ai_count_(ai_count) {
    perms_ = normalizing_perms(dia);
    for (auto& [w, c] : alpha.entries()) remA_[w] = c;
    for (auto& [w, c] : beta.entries()) remB_[w] = c;
    srcw_.resize(F_);
    for (int f = 0; f < F_; ++f)
      for (int w : dia.src[f]) srcw_[f][w]++;
    chosen_.resize(F_);
    free1_.assign(F_, 0);
    ai_sets_.resize(ai_count.size());
  }

  void run(std::vector<Marking>& classes,
           std::vector<std::string>& placements) {
    classes_ = &classes;
    placements_ = &placements;
    place_contacts(0);
  }

 private:
  // ---- stage 1: alpha/beta contacts per floor ------------------------
  void place_contacts(int f) {
    if (f == F_) {
      for (auto& [w, c] : remA_)
        if (c) return;
      for (auto& [w, c] : remB_)
        if (c) return;
      long long free_total =
          std::accumulate(free1_.begin(), free1_.end(), 0LL);
      long long ai_total =
          std::accumulate(ai_count_.begin(), ai_count_.end(), 0LL);
      if (free_total != ai_total) return;
      place_ai(0);
      return;
    }
    std::vector<std::pair<int, int>> ws(srcw_[f].begin(), srcw_[f].end());
    place_floor_weights(f, ws, 0);
  }

  void place_floor_weights(int f, std::vector<std::pair<int, int>>& ws,
                           size_t i) {
    if (i == ws.size()) {
      place_contacts(f + 1);
      return;
    }
    auto [w, c] = ws[i];
    long long maxa = std::min<long long>(c, remA_.count(w) ? remA_[w] : 0);
    for (long long a = 0; a <= maxa; ++a) {
      long long maxb =
          std::min<long long>(c - a, remB_.count(w) ? remB_[w] : 0);
      for (long long b = 0; b <= maxb; ++b) {
        long long rest = c - a - b;
        if (w != 1 && rest != 0) continue;
        if (remA_.count(w)) remA_[w] -= a;
        if (remB_.count(w)) remB_[w] -= b;
        for (int k = 0; k < a; ++k) chosen_[f].push_back({w, true});
        for (int k = 0; k < b; ++k) chosen_[f].push_back({w, false});
        if (w == 1) free1_[f] = (int)rest;
        place_floor_weights(f, ws, i + 1);
        if (w == 1) free1_[f] = 0;
        for (int k = 0; k < a + b; ++k) chosen_[f].pop_back();
        if (remA_.count(w)) remA_[w] += a;
        if (remB_.count(w)) remB_[w] += b;
      }
    }
  }

  // ---- stage 2: exceptional sets (one floor set per index) -----------
  void place_ai(size_t i) {
    if (i == ai_count_.size()) {
      for (int f = 0; f < F_; ++f)
        if (free1_[f]) return;  // unreachable: totals matched
      labels();
      return;
    }
    std::vector<int> pick;
    pick_floors(i, 0, (int)ai_count_[i], pick);
  }

  void pick_floors(size_t i, int from, int need, std::vector<int>& pick) {
    if (need == 0) {
      ai_sets_[i] = pick;
      for (int f : pick) free1_[f]--;
      place_ai(i + 1);
      for (int f : pick) free1_[f]++;
      return;
    }
    for (int f = from; f <= F_ - need; ++f) {
      if (free1_[f] < 1) continue;
      pick.push_back(f);
      pick_floors(i, f + 1, need - 1, pick);
      pick.pop_back();
    }
  }

  // ---- stage 3: label assignment --------------------------------------
  struct Node {
    int kind;  // 0 = beta contact, 1 = floor, 2 = internal edge
    int f = -1, w = 0, e = -1;
  };

  void labels() {
    acontacts_.clear();
    nodes_.clear();
    for (int f = 0; f < F_; ++f)
      for (auto& [w, isa] : chosen_[f]) {
        if (isa)
          acontacts_.push_back({w, f});
        else
          nodes_.push_back({0, f, w, -1});
      }
    std::sort(acontacts_.begin(), acontacts_.end());
    for (int f = 0; f < F_; ++f)
      if (dia_.fdeg[f] == 2) nodes_.push_back({1, f, 0, -1});
    for (size_t e = 0; e < dia_.ie.size(); ++e)
      nodes_.push_back({2, -1, 0, (int)e});

    int N = (int)nodes_.size();
    succ_.assign(N, {});
    pred_.assign(N, 0);
    auto floor_node = [&](int f) {
      for (int i = 0; i < N; ++i)
        if (nodes_[i].kind == 1 && nodes_[i].f == f) return i;
      return -1;
    };
    for (int i = 0; i < N; ++i) {
      int j = -1;
      if (nodes_[i].kind == 0) {
        j = floor_node(nodes_[i].f);
      } else if (nodes_[i].kind == 1) {
        for (int k = 0; k < N; ++k)
          if (nodes_[k].kind == 2 &&
              dia_.ie[nodes_[k].e].tail == nodes_[i].f) {
            succ_[i].push_back(k);
            pred_[k]++;
          }
        continue;
      } else {
        j = floor_node(dia_.ie[nodes_[i].e].head);
      }
      if (j >= 0) {
        succ_[i].push_back(j);
        pred_[j]++;
      }
    }
    label_of_.assign(N, 0);
    aseq_.clear();
    alpha_rec(0);
  }

  // Orders the alpha contacts weight-group by weight-group (weights
  // ascending is forced; the floor sequence within a group varies).
  void alpha_rec(size_t idx) {
    if (idx == acontacts_.size()) {
      ext_rec((int)aseq_.size() + 1);
      return;
    }
    size_t gend = idx;
    while (gend < acontacts_.size() &&
           acontacts_[gend].first == acontacts_[idx].first)
      ++gend;
    std::vector<int> floors_of_group;
    for (size_t k = idx; k < gend; ++k)
      floors_of_group.push_back(acontacts_[k].second);
    std::sort(floors_of_group.begin(), floors_of_group.end());
    int w = acontacts_[idx].first;
    do {
      for (int f : floors_of_group) aseq_.push_back({w, f});
      alpha_rec(gend);
      for (size_t k = idx; k < gend; ++k) aseq_.pop_back();
    } while (std::next_permutation(floors_of_group.begin(),
                                   floors_of_group.end()));
  }

  void ext_rec(int next_label) {
    int N = (int)nodes_.size();
    int base = (int)aseq_.size();
    if (next_label > base + N) {
      emit();
      return;
    }
    std::set<std::tuple<int, int, int>> tried;
    for (int i = 0; i < N; ++i) {
      if (label_of_[i] || pred_[i] != 0) continue;
      // identical contacts at one floor are interchangeable
      if (nodes_[i].kind == 0 &&
          !tried.insert({nodes_[i].kind, nodes_[i].f, nodes_[i].w}).second)
        continue;
      label_of_[i] = next_label;
      for (int j : succ_[i]) pred_[j]--;
      ext_rec(next_label + 1);
      for (int j : succ_[i]) pred_[j]++;
      label_of_[i] = 0;
    }
  }

  void emit() {
    Marking m;
    m.floor_label.assign(F_, 0);
    m.iedge_label.assign(dia_.ie.size(), 0);
    m.contacts.assign(F_, {});
    for (size_t k = 0; k < aseq_.size(); ++k)
      m.contacts[aseq_[k].second].push_back(
          {aseq_[k].first, (int)k + 1, true});
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].kind == 0)
        m.contacts[nodes_[i].f].push_back(
            {nodes_[i].w, label_of_[i], false});
      else if (nodes_[i].kind == 1)
        m.floor_label[nodes_[i].f] = label_of_[i];
      else
        m.iedge_label[nodes_[i].e] = label_of_[i];
    }
    for (auto& fc : m.contacts) std::sort(fc.begin(), fc.end());
    m.ai = ai_sets_;

    std::string best;
    for (auto& p : perms_) {
      std::string s = serialize_marking(dia_, m, p);
      if (best.empty() || s < best) best = s;
    }
    if (seen_.insert(best).second) {
      stats().markings++;
      classes_->push_back(m);
      std::string pbest;
      for (auto& p : perms_) {
        std::string s = serialize_placement(dia_, m, p);
        if (pbest.empty() || s < pbest) pbest = s;
      }
      placements_->push_back(pbest);
    }
  }

  const FloorDiagram& dia_;
  int F_;
  std::vector<long long> ai_count_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::map<int, int>> srcw_;
  std::map<int, long long> remA_, remB_;
  std::vector<std::vector<std::pair<int, bool>>> chosen_;
  std::vector<int> free1_;
  std::vector<std::vector<int>> ai_sets_;
  std::vector<std::pair<int, int>> acontacts_;  // (w, floor)
  std::vector<std::pair<int, int>> aseq_;       // (w, floor) in label order
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> succ_;
  std::vector<int> pred_;
  std::vector<int> label_of_;
  std::set<std::string> seen_;
  std::vector<Marking>* classes_ = nullptr;
  std::vector<std::string>* placements_ = nullptr;
};

}  // namespace

MarkedEnumeration enumerate_marked(const SurfaceModel& model,
                                   const SurfaceClass& d, int genus,
                                   const MultiSeq& alpha,
                                   const MultiSeq& beta) {
  if (model.kind == SurfaceKind::Xn)
    throw std::domain_error("markings require the conic: use TildeXn/TildeX81");
  if ((int)d.mu.size() != model.blowups())
    throw std::invalid_argument("class has " + std::to_string(d.mu.size()) +
                                " multiplicities, surface has " +
                                std::to_string(model.blowups()));
  long long dE = pair_E(model, d);
  if (alpha.weight() + beta.weight() != dE)
    throw std::invalid_argument(
        "type mismatch: Ialpha + Ibeta = " +
        std::to_string(alpha.weight() + beta.weight()) + " but d.E = " +
        std::to_string(dE));

  MarkedEnumeration out;
  if (d.dD < 1 || genus < 0) return out;
  long long n0 = d.dD - 1 + genus + alpha.size() + beta.size();
  if (n0 <= 0) return out;

  // each exceptional index must be met non-negatively
  std::vector<long long> ai_count;
  for (int i = 0; i < model.conic_blowups(); ++i) {
    long long m = d.mu[i];
    if (m < 0) return out;
    ai_count.push_back(m);
  }
  if (model.kind == SurfaceKind::TildeX81 && d.mu.size() >= 9 && d.mu[8] != 0)
    throw std::domain_error(
        "floor diagrams only handle classes supported on the conic points");

  // source profile: alpha and beta parts plus weight-1 edges for the
  // exceptional sets
  std::vector<int> weights;
  for (auto& [w, c] : alpha.entries())
    for (long long k = 0; k < c; ++k) weights.push_back(w);
  for (auto& [w, c] : beta.entries())
    for (long long k = 0; k < c; ++k) weights.push_back(w);
  long long ai_total = std::accumulate(ai_count.begin(), ai_count.end(), 0LL);
  for (long long k = 0; k < ai_total; ++k) weights.push_back(1);

  for (auto& dia : enumerate_diagrams((int)d.dD, genus, weights)) {
    DiagramClasses g;
    g.diagram = dia;
    MarkingEnumerator en(g.diagram, alpha, beta, ai_count);
    en.run(g.classes, g.placement);
    if (!g.classes.empty()) out.groups.push_back(std::move(g));
  }
  return out;
}

std::string canonical_class(const FloorDiagram& dia, const Marking& m) {
  auto perms = normalizing_perms(dia);
  std::string canon = permuted(dia, perms[0]).serialize();
  std::string best;
  for (auto& p : perms) {
    std::string s = serialize_marking(dia, m, p);
    if (best.empty() || s < best) best = s;
  }
  return canon + "#" + best;
}

std::string placement_key(const FloorDiagram& dia, const Marking& m) {
  auto perms = normalizing_perms(dia);
  std::string canon = permuted(dia, perms[0]).serialize();
  std::string best;
  for (auto& p : perms) {
    std::string s = serialize_placement(dia, m, p);
    if (best.empty() || s < best) best = s;
  }
  return canon + "#" + best;
}

std::string dot_marked(const FloorDiagram& dia, const Marking& m) {
  std::ostringstream out;
  out << "digraph floordiagram {\n  rankdir=BT;\n";
  for (int f = 0; f < dia.floors(); ++f) {
    out << "  f" << f << " [shape=ellipse,label=\"deg=" << dia.fdeg[f];
    if (m.floor_label[f]) out << " #" << m.floor_label[f];
    out << "\"];\n";
  }
  for (size_t e = 0; e < dia.ie.size(); ++e) {
    out << "  f" << dia.ie[e].tail << " -> f" << dia.ie[e].head
        << " [label=\"";
    if (dia.ie[e].w >= 2) out << dia.ie[e].w << " ";
    out << "#" << m.iedge_label[e] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace conic
