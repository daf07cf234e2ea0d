#include "wac/action.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace wac {

namespace {

constexpr std::array<std::string_view, 12> kKindTokens = {
    "click",     "type",      "hover",    "press",   "scroll",     "new_tab",
    "tab_focus", "close_tab", "goto",     "go_back", "go_forward", "stop"};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (is_space(c) || c == '[' || c == ']') return false;
  }
  return true;
}

ActionParseError malformed(std::string message) {
  return ActionParseError{ParseErrorKind::malformed_params, std::move(message)};
}

// Parses a single trailing `[inner]` group, requiring rest to be exactly that
// group (plus padding). Returns nullopt when the shape is wrong.
std::optional<std::string_view> single_group(std::string_view rest) {
  rest = trim(rest);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') return std::nullopt;
  return rest.substr(1, rest.size() - 2);
}

std::optional<int> parse_nonnegative_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

ActionParseResult parse_type(std::string_view rest) {
  rest = trim(rest);
  if (rest.empty() || rest.front() != '[')
    return malformed("type: expected [id] [content] [0|1]");
  const auto id_end = rest.find(']');
  if (id_end == std::string_view::npos) return malformed("type: unterminated id group");
  std::string_view id = trim(rest.substr(1, id_end - 1));
  if (!valid_identifier(id)) return malformed("type: invalid element id");

  std::string_view tail = rest.substr(id_end + 1);
  // Skip the single space between groups, leniently.
  std::size_t open = tail.find('[');
  if (open == std::string_view::npos || !trim(tail.substr(0, open)).empty())
    return malformed("type: expected content group");
  tail = tail.substr(open);  // now starts at the content '['

  // Canonical 3-group form ends with `] [0]` or `] [1]`; the middle group is
  // everything in between and may itself contain brackets. A 2-group form
  // (no trailing bit) defaults press_enter to true.
  TypeInto action;
  action.element_id = std::string(id);
  if (tail.size() >= 6 && (tail.ends_with("] [0]") || tail.ends_with("] [1]"))) {
    action.press_enter = tail[tail.size() - 2] == '1';
    std::string_view content = tail.substr(1, tail.size() - 5 - 1);
    action.content = std::string(content);
    return Action{std::move(action)};
  }
  if (tail.size() >= 2 && tail.back() == ']') {
    action.content = std::string(tail.substr(1, tail.size() - 2));
    return Action{std::move(action)};
  }
  return malformed("type: unterminated content group");
}

}  // namespace

ActionKind kind_of(const Action& action) {
  return static_cast<ActionKind>(action.index());
}

std::string_view kind_token(ActionKind kind) {
  return kKindTokens[static_cast<std::size_t>(kind)];
}

bool is_valid(const Action& action) {
  return std::visit(
      [](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Click> || std::is_same_v<T, Hover>) {
          return valid_identifier(a.element_id);
        } else if constexpr (std::is_same_v<T, TypeInto>) {
          return valid_identifier(a.element_id);
        } else if constexpr (std::is_same_v<T, Press>) {
          return valid_identifier(a.key_comb);
        } else if constexpr (std::is_same_v<T, TabFocus>) {
          return a.tab_index >= 0;
        } else if constexpr (std::is_same_v<T, Goto>) {
          return valid_identifier(a.url);
        } else {
          return true;
        }
      },
      action);
}

std::string serialize_action(const Action& action) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Click>) {
          return "click [" + a.element_id + "]";
        } else if constexpr (std::is_same_v<T, TypeInto>) {
          return "type [" + a.element_id + "] [" + a.content + "] [" +
                 (a.press_enter ? "1" : "0") + "]";
        } else if constexpr (std::is_same_v<T, Hover>) {
          return "hover [" + a.element_id + "]";
        } else if constexpr (std::is_same_v<T, Press>) {
          return "press [" + a.key_comb + "]";
        } else if constexpr (std::is_same_v<T, Scroll>) {
          return a.direction == ScrollDirection::up ? "scroll [up]" : "scroll [down]";
        } else if constexpr (std::is_same_v<T, NewTab>) {
          return "new_tab";
        } else if constexpr (std::is_same_v<T, TabFocus>) {
          return "tab_focus [" + std::to_string(a.tab_index) + "]";
        } else if constexpr (std::is_same_v<T, CloseTab>) {
          return "close_tab";
        } else if constexpr (std::is_same_v<T, Goto>) {
          return "goto [" + a.url + "]";
        } else if constexpr (std::is_same_v<T, GoBack>) {
          return "go_back";
        } else if constexpr (std::is_same_v<T, GoForward>) {
          return "go_forward";
        } else {
          static_assert(std::is_same_v<T, Stop>);
          return "stop [" + a.answer + "]";
        }
      },
      action);
}

ActionParseResult parse_action(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.back() == '.') {  // tolerate one trailing period
    s.remove_suffix(1);
    s = trim(s);
  }
  if (s.empty()) return ActionParseError{ParseErrorKind::unknown_action_kind, "empty input"};

  std::size_t kind_end = 0;
  while (kind_end < s.size() && !is_space(s[kind_end]) && s[kind_end] != '[') ++kind_end;
  std::string_view token = s.substr(0, kind_end);
  std::string_view rest = trim(s.substr(kind_end));

  auto it = std::find(kKindTokens.begin(), kKindTokens.end(), token);
  if (it == kKindTokens.end())
    return ActionParseError{ParseErrorKind::unknown_action_kind,
                            "unknown action kind: " + std::string(token)};
  const auto kind = static_cast<ActionKind>(it - kKindTokens.begin());

  switch (kind) {
    case ActionKind::click:
    case ActionKind::hover: {
      auto group = single_group(rest);
      if (!group) return malformed(std::string(token) + ": expected [element_id]");
      std::string_view id = trim(*group);
      if (!valid_identifier(id)) return malformed(std::string(token) + ": invalid element id");
      if (kind == ActionKind::click) return Action{Click{std::string(id)}};
      return Action{Hover{std::string(id)}};
    }
    case ActionKind::type_into:
      return parse_type(rest);
    case ActionKind::press: {
      auto group = single_group(rest);
      if (!group) return malformed("press: expected [key_comb]");
      std::string_view key = trim(*group);
      if (!valid_identifier(key)) return malformed("press: invalid key combination");
      return Action{Press{std::string(key)}};
    }
    case ActionKind::scroll: {
      auto group = single_group(rest);
      if (!group) return malformed("scroll: expected [up|down]");
      std::string dir(trim(*group));
      std::transform(dir.begin(), dir.end(), dir.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (dir == "up") return Action{Scroll{ScrollDirection::up}};
      if (dir == "down") return Action{Scroll{ScrollDirection::down}};
      return malformed("scroll: direction must be up or down");
    }
    case ActionKind::new_tab:
      if (!rest.empty()) return malformed("new_tab takes no parameters");
      return Action{NewTab{}};
    case ActionKind::tab_focus: {
      auto group = single_group(rest);
      if (!group) return malformed("tab_focus: expected [index]");
      auto index = parse_nonnegative_int(*group);
      if (!index) return malformed("tab_focus: index must be a non-negative integer");
      return Action{TabFocus{*index}};
    }
    case ActionKind::close_tab:
      if (!rest.empty()) return malformed("close_tab takes no parameters");
      return Action{CloseTab{}};
    case ActionKind::goto_url: {
      auto group = single_group(rest);
      if (!group) return malformed("goto: expected [url]");
      std::string_view url = trim(*group);
      if (!valid_identifier(url)) return malformed("goto: invalid url");
      return Action{Goto{std::string(url)}};
    }
    case ActionKind::go_back:
      if (!rest.empty()) return malformed("go_back takes no parameters");
      return Action{GoBack{}};
    case ActionKind::go_forward:
      if (!rest.empty()) return malformed("go_forward takes no parameters");
      return Action{GoForward{}};
    case ActionKind::stop: {
      if (rest.empty()) return Action{Stop{""}};  // lenient bare `stop`
      if (rest.front() != '[' || rest.back() != ']')
        return malformed("stop: expected [answer]");
      return Action{Stop{std::string(rest.substr(1, rest.size() - 2))}};
    }
  }
  return malformed("unreachable");
}

std::optional<Action> try_parse_action(std::string_view text) {
  auto result = parse_action(text);
  if (auto* action = std::get_if<Action>(&result)) return *action;
  return std::nullopt;
}

bool actions_equal(const Action& a, const Action& b) {
  return serialize_action(a) == serialize_action(b);
}

}  // namespace wac
