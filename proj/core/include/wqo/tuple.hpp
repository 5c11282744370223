#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wqo {

// Strictly increasing finite sequence of naturals.
using Tuple = std::vector<std::uint32_t>;

bool is_increasing(const Tuple& s);
// s is an initial segment of t.
bool is_prefix(const Tuple& s, const Tuple& t);
// s with its minimum removed.
Tuple tuple_tail(const Tuple& s);

// min s < min t and tail(s) is prefix-comparable with t.
bool triangleleft(const Tuple& s, const Tuple& t);

std::string tuple_str(const Tuple& s);

}  // namespace wqo
