#include "conic/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace conic {

SurfaceModel SurfaceModel::tilde_xn(int n) {
  if (n < 0 || n > 8) throw std::domain_error("TildeXn requires 0 <= n <= 8");
  return {SurfaceKind::TildeXn, n};
}

SurfaceModel SurfaceModel::xn(int n) {
  if (n < 0 || n > 8) throw std::domain_error("Xn requires 0 <= n <= 8");
  return {SurfaceKind::Xn, n};
}

SurfaceModel SurfaceModel::tilde_x81() { return {SurfaceKind::TildeX81, 9}; }

std::string SurfaceModel::str() const {
  switch (kind) {
    case SurfaceKind::TildeXn:
      return "tX" + std::to_string(n);
    case SurfaceKind::Xn:
      return "X" + std::to_string(n);
    case SurfaceKind::TildeX81:
      return "tX81";
  }
  return "?";
}

long long intersect(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.mu.size() != b.mu.size())
    throw std::domain_error("intersecting classes of different models");
  long long r = a.dD * b.dD;
  for (size_t i = 0; i < a.mu.size(); ++i) r -= a.mu[i] * b.mu[i];
  return r;
}

long long pair_E(const SurfaceModel& model, const SurfaceClass& d) {
  if (model.kind == SurfaceKind::Xn)
    throw std::domain_error("no conic class on Xn");
  if ((int)d.mu.size() != model.blowups())
    throw std::domain_error("class size does not match model");
  long long r = 2 * d.dD;
  for (int i = 0; i < model.conic_blowups(); ++i) r -= d.mu[i];
  return r;
}

long long pair_c1(const SurfaceClass& d) {
  long long r = 3 * d.dD;
  for (long long m : d.mu) r -= m;
  return r;
}

std::string class_str(const SurfaceClass& d) {
  std::string out = std::to_string(d.dD);
  for (size_t i = 0; i < d.mu.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(d.mu[i]);
  return out;
}

SurfaceClass parse_class(const std::string& text, int blowups) {
  SurfaceClass d;
  size_t colon = text.find(':');
  std::string head = text.substr(0, colon);
  size_t pos = 0;
  try {
    d.dD = std::stoll(head, &pos);
    if (pos != head.size()) throw std::invalid_argument(head);
    if (colon != std::string::npos && colon + 1 < text.size()) {
      std::stringstream in(text.substr(colon + 1));
      std::string item;
      while (std::getline(in, item, ',')) {
        long long m = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        d.mu.push_back(m);
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad class literal: " + text);
  }
  if ((int)d.mu.size() != blowups)
    throw std::invalid_argument("class literal '" + text + "' carries " +
                                std::to_string(d.mu.size()) +
                                " exceptional coefficients, expected " +
                                std::to_string(blowups));
  return d;
}

SurfaceClass symmetrized(const SurfaceModel& model, const SurfaceClass& d) {
  SurfaceClass s = d;
  int k = model.conic_blowups();
  if ((int)s.mu.size() < k) k = (int)s.mu.size();
  std::sort(s.mu.begin(), s.mu.begin() + k, std::greater<long long>());
  return s;
}

}  // namespace conic
