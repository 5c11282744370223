#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wqo/downset.hpp"
#include "wqo/qo.hpp"

namespace wqo {

struct QoImpl {
  QoHandle::Kind kind;
  // Finite
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
  std::vector<char> leq_flat;  // row-major copy for the hot path
  // Product
  QoHandle left, right;
  // Level
  QoHandle base, prev;
  unsigned level = 0;

  // Lazily computed finite carrier of a Level qo.
  mutable std::once_flag carrier_once;
  mutable std::optional<std::vector<Element>> carrier;
};

struct Element::Boxed {
  Element left, right;
  std::shared_ptr<const CoUpset> set;
};

}  // namespace wqo
