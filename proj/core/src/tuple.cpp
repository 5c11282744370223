#include "wqo/tuple.hpp"

#include "wqo/error.hpp"

namespace wqo {

bool is_increasing(const Tuple& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool is_prefix(const Tuple& s, const Tuple& t) {
  if (s.size() > t.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != t[i]) return false;
  return true;
}

Tuple tuple_tail(const Tuple& s) {
  if (s.empty()) throw InputError("empty tuple");
  return Tuple(s.begin() + 1, s.end());
}

bool triangleleft(const Tuple& s, const Tuple& t) {
  if (s.empty() || t.empty()) throw InputError("empty tuple");
  if (s.front() >= t.front()) return false;
  // Compare tail(s) with t without copying.
  std::size_t n = std::min(s.size() - 1, t.size());
  for (std::size_t i = 0; i < n; ++i)
    if (s[i + 1] != t[i]) return false;
  return true;
}

std::string tuple_str(const Tuple& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

}  // namespace wqo
