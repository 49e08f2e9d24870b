#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hardsat/cnf.hpp"
#include "hardsat/engine.hpp"

namespace hardsat {

/// Predicates on the terminal record of a first descent.
enum class EventKind {
  always,     // constant true
  x1_false,   // ¬x_1 was assigned
  all_true,   // x_1..x_M all assigned true and the descent ended satisfied
  satisfied,  // the descent ended with the empty formula
};

struct Event {
  EventKind kind = EventKind::always;
  /// M for all_true; ignored by the other kinds.
  std::uint32_t scaffold_width = 0;

  bool operator()(Terminal terminal, const Assignment& a) const;
  bool operator()(const DescentOutcome& d) const { return (*this)(d.terminal, d.assignment); }
};

/// Accepts `always`, `x1-false`, `all-true`, `satisfied`.
EventKind parse_event(std::string_view name);
std::string_view to_string(EventKind kind);

}  // namespace hardsat
