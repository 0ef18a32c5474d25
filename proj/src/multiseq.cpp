#include "conic/multiseq.hpp"

#include <sstream>
#include <stdexcept>

namespace conic {

namespace {
int g_index_cap = 64;
}

int MultiSeq::index_cap() { return g_index_cap; }
void MultiSeq::set_index_cap(int cap) { g_index_cap = cap; }

MultiSeq MultiSeq::unit(int index, long long count) {
  MultiSeq s;
  s.add(index, count);
  return s;
}

MultiSeq MultiSeq::parse(const std::string& text) {
  MultiSeq s;
  if (text.empty()) return s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty tangency item");
    size_t caret = item.find('^');
    std::string idx = item.substr(0, caret);
    std::string cnt =
        caret == std::string::npos ? "1" : item.substr(caret + 1);
    size_t pos = 0;
    long long i = 0, c = 0;
    try {
      i = std::stoll(idx, &pos);
      if (pos != idx.size()) throw std::invalid_argument(idx);
      c = std::stoll(cnt, &pos);
      if (pos != cnt.size()) throw std::invalid_argument(cnt);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tangency literal: " + item);
    }
    if (i < 1 || c < 1)
      throw std::invalid_argument("tangency entries must be positive: " + item);
    s.add(static_cast<int>(i), c);
  }
  return s;
}

long long MultiSeq::at(int index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0 : it->second;
}

void MultiSeq::add(int index, long long count) {
  if (index < 1) throw std::domain_error("tangency index must be >= 1");
  if (index > g_index_cap)
    throw std::domain_error("tangency index exceeds cap " +
                            std::to_string(g_index_cap));
  long long next = at(index) + count;
  if (next < 0) throw std::domain_error("negative tangency count");
  if (next == 0)
    entries_.erase(index);
  else
    entries_[index] = next;
}

long long MultiSeq::size() const {
  long long n = 0;
  for (auto& [i, c] : entries_) n += c;
  return n;
}

long long MultiSeq::weight() const {
  long long n = 0;
  for (auto& [i, c] : entries_) n += i * c;
  return n;
}

Int MultiSeq::weight_pow() const {
  Int r = 1;
  for (auto& [i, c] : entries_) r *= pow_int(i, c);
  return r;
}

MultiSeq MultiSeq::operator+(const MultiSeq& o) const {
  MultiSeq s = *this;
  for (auto& [i, c] : o.entries_) s.add(i, c);
  return s;
}

MultiSeq MultiSeq::operator-(const MultiSeq& o) const {
  MultiSeq s = *this;
  for (auto& [i, c] : o.entries_) s.add(i, -c);
  return s;
}

MultiSeq MultiSeq::scaled(long long k) const {
  if (k < 0) throw std::domain_error("negative tangency scale");
  MultiSeq s;
  if (k == 0) return s;
  for (auto& [i, c] : entries_) s.add(i, c * k);
  return s;
}

std::string MultiSeq::str() const {
  std::string out;
  for (auto& [i, c] : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + "^" + std::to_string(c);
  }
  return out;
}

}  // namespace conic
