#include "hardsat/events.hpp"

#include <stdexcept>

namespace hardsat {

bool Event::operator()(Terminal terminal, const Assignment& a) const {
  switch (kind) {
  case EventKind::always:
    return true;
  case EventKind::x1_false:
    return a.contains(Literal::negative(1));
  case EventKind::all_true:
    if (scaffold_width == 0 || terminal != Terminal::satisfied)
      return false;
    for (Var i = 1; i <= scaffold_width; ++i)
      if (!a.contains(Literal::positive(i)))
        return false;
    return true;
  case EventKind::satisfied:
    return terminal == Terminal::satisfied;
  }
  return false;
}

EventKind parse_event(std::string_view name) {
  if (name == "always")
    return EventKind::always;
  if (name == "x1-false")
    return EventKind::x1_false;
  if (name == "all-true")
    return EventKind::all_true;
  if (name == "satisfied")
    return EventKind::satisfied;
  throw std::invalid_argument("unknown event '" + std::string(name) +
                              "' (expected always, x1-false, all-true or satisfied)");
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
  case EventKind::always:
    return "always";
  case EventKind::x1_false:
    return "x1-false";
  case EventKind::all_true:
    return "all-true";
  case EventKind::satisfied:
    return "satisfied";
  }
  return "?";
}

}  // namespace hardsat
