#include "conic/relative.hpp"

#include <map>
#include <stdexcept>

#include "conic/stats.hpp"

namespace conic {

std::string InvariantQuery::key() const {
  return model.str() + "|" + class_str(symmetrized(model, d)) + "|g" +
         std::to_string(g) + "|a" + alpha.str() + "|b" + beta.str();
}

Int complex_multiplicity(const FloorDiagram& dia, const Marking& m) {
  Int v = 1;
  for (auto& fc : m.contacts)
    for (auto& c : fc)
      if (!c.alpha) v *= c.w;
  for (auto& e : dia.ie) v *= Int(e.w) * e.w;
  return v;
}

namespace {

// true when d is exactly one exceptional class taken l times
bool is_l_exceptional(const SurfaceModel& model, const SurfaceClass& d,
                      int* which, long long* l) {
  if (d.dD != 0) return false;
  int idx = -1;
  for (int i = 0; i < (int)d.mu.size(); ++i) {
    if (d.mu[i] == 0) continue;
    if (idx >= 0 || d.mu[i] > 0) return false;
    idx = i;
  }
  if (idx < 0 || idx >= model.conic_blowups()) return false;
  *which = idx;
  *l = -d.mu[idx];
  return true;
}

Int base_value(const InvariantQuery& q) {
  const SurfaceClass& d = q.d;
  bool a0 = q.alpha.empty(), b0 = q.beta.empty();
  int which;
  long long l;
  if (is_l_exceptional(q.model, d, &which, &l))
    return (l == 1 && a0 && q.beta == MultiSeq::unit(1)) ? 1 : 0;
  if (d.dD != 1) return 0;
  int ones = 0;
  for (long long m : d.mu) {
    if (m == 1)
      ones++;
    else if (m != 0)
      return 0;
  }
  if (ones == 0 && b0 &&
      (q.alpha == MultiSeq::unit(1, 2) || q.alpha == MultiSeq::unit(2)))
    return 1;
  if (ones == 1 && b0 && q.alpha == MultiSeq::unit(1)) return 1;
  if (ones == 2 && a0 && b0) return 1;
  return 0;
}

Int compute(const InvariantQuery& q) {
  if ((int)q.d.mu.size() != q.model.blowups())
    throw std::invalid_argument("class has " + std::to_string(q.d.mu.size()) +
                                " multiplicities, surface has " +
                                std::to_string(q.model.blowups()));
  if (q.alpha.weight() + q.beta.weight() != pair_E(q.model, q.d))
    throw std::invalid_argument(
        "type mismatch: Ialpha + Ibeta must equal the conic pairing " +
        std::to_string(pair_E(q.model, q.d)));
  if (q.g < 0) throw std::invalid_argument("negative genus");
  if (q.model.kind == SurfaceKind::TildeX81 && q.d.mu[8] != 0)
    throw std::domain_error(
        "class meets the off-conic point: serve it from a provider table");

  int which;
  long long l;
  if (is_l_exceptional(q.model, q.d, &which, &l) && l >= 2)
    throw std::domain_error(
        "non-enumerative class: multiple cover of an exceptional curve "
        "(the count is unbounded)");

  long long constraints = q.d.dD - 1 + q.g + q.beta.size();
  if (constraints == 0) return base_value(q);
  if (constraints < 0 || q.d.dD < 1) return 0;

  auto en = enumerate_marked(q.model, q.d, q.g, q.alpha, q.beta);
  Int total = 0;
  for (auto& grp : en.groups)
    for (auto& m : grp.classes) total += complex_multiplicity(grp.diagram, m);
  return total;
}

std::map<std::string, Int>& memo() {
  static std::map<std::string, Int> m;
  return m;
}

}  // namespace

Int gw_relative(const InvariantQuery& q) {
  std::string k = q.key();
  auto it = memo().find(k);
  if (it != memo().end()) {
    stats().cache_hits++;
    return it->second;
  }
  Int v = compute(q);
  memo().emplace(k, v);
  return v;
}

Int gw_relative_uncached(const InvariantQuery& q) { return compute(q); }

void clear_relative_cache() { memo().clear(); }

}  // namespace conic
