#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace wac {

// The 12-entry browser action space. One struct per kind; Action is the
// tagged union the whole pipeline moves around.

enum class ScrollDirection { up, down };

struct Click {
  std::string element_id;
  bool operator==(const Click&) const = default;
};

struct TypeInto {
  std::string element_id;
  std::string content;
  bool press_enter = true;  // the canonical form always spells this out
  bool operator==(const TypeInto&) const = default;
};

struct Hover {
  std::string element_id;
  bool operator==(const Hover&) const = default;
};

struct Press {
  std::string key_comb;  // e.g. "Ctrl+V"
  bool operator==(const Press&) const = default;
};

struct Scroll {
  ScrollDirection direction = ScrollDirection::down;
  bool operator==(const Scroll&) const = default;
};

struct NewTab {
  bool operator==(const NewTab&) const = default;
};

struct TabFocus {
  int tab_index = 0;
  bool operator==(const TabFocus&) const = default;
};

struct CloseTab {
  bool operator==(const CloseTab&) const = default;
};

struct Goto {
  std::string url;
  bool operator==(const Goto&) const = default;
};

struct GoBack {
  bool operator==(const GoBack&) const = default;
};

struct GoForward {
  bool operator==(const GoForward&) const = default;
};

struct Stop {
  std::string answer;  // may be empty
  bool operator==(const Stop&) const = default;
};

using Action = std::variant<Click, TypeInto, Hover, Press, Scroll, NewTab, TabFocus,
                            CloseTab, Goto, GoBack, GoForward, Stop>;

enum class ActionKind {
  click,
  type_into,
  hover,
  press,
  scroll,
  new_tab,
  tab_focus,
  close_tab,
  goto_url,
  go_back,
  go_forward,
  stop
};

ActionKind kind_of(const Action& action);
std::string_view kind_token(ActionKind kind);

// Identifier-like params (element ids, key combos, urls) must be non-empty and
// free of whitespace and square brackets; free-text params (type content, stop
// answer) are unconstrained. Together with the fixed bracket grammar this
// makes serialize_action injective over valid actions.
bool is_valid(const Action& action);

// Canonical textual form, `kind [param] [param]...`. This string is the
// interchange format in prompts, logs and replays; dedup and repeat detection
// compare it byte for byte.
std::string serialize_action(const Action& action);

enum class ParseErrorKind { unknown_action_kind, malformed_params };

struct ActionParseError {
  ParseErrorKind kind = ParseErrorKind::malformed_params;
  std::string message;
};

using ActionParseResult = std::variant<Action, ActionParseError>;

// Inverse of serialize_action. Tolerates surrounding whitespace and one
// trailing period; anything else unparseable means the proposal is dropped.
ActionParseResult parse_action(std::string_view text);

// Convenience wrapper for call sites that only care whether parsing worked.
std::optional<Action> try_parse_action(std::string_view text);

bool actions_equal(const Action& a, const Action& b);

}  // namespace wac
