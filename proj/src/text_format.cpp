#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dot.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"

namespace orbitkit {

namespace {

// Everything before the first unescaped '#'.
std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\') {
      ++i;
    } else if (line[i] == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return false;
  line.remove_prefix(first);
  if (line.substr(0, keyword.size()) != keyword) return false;
  return line.size() == keyword.size() || line[keyword.size()] == ' ' ||
         line[keyword.size()] == '\t' || line[keyword.size()] == '\r';
}

class Builder {
 public:
  void declare_state(const std::string& token, std::size_t line) {
    if (declared_letters_.contains(token)) {
      throw ParseError(line, "token '" + token + "' declared as both state and letter");
    }
    declared_states_.insert(token);
    add_state(token, line);
  }

  void declare_letter(const std::string& token, std::size_t line) {
    if (declared_states_.contains(token)) {
      throw ParseError(line, "token '" + token + "' declared as both state and letter");
    }
    declared_letters_.insert(token);
    add_letter(token, line);
  }

  State add_state(const std::string& token, std::size_t line) {
    if (declared_letters_.contains(token)) {
      throw ParseError(line, "token '" + token + "' is declared as a letter but used as a state");
    }
    const auto [it, inserted] = states_.emplace(token, state_order_.size());
    if (inserted) state_order_.push_back(token);
    return state_at(it->second);
  }

  Letter add_letter(const std::string& token, std::size_t line) {
    if (declared_states_.contains(token)) {
      throw ParseError(line, "token '" + token + "' is declared as a state but used as a letter");
    }
    const auto [it, inserted] = letters_.emplace(token, letter_order_.size());
    if (inserted) letter_order_.push_back(token);
    return letter_at(it->second);
  }

  void add_transition(const Transition& t) { transitions_.push_back(t); }

  Automaton build() && {
    return Automaton(std::move(state_order_), std::move(letter_order_), std::move(transitions_));
  }

 private:
  std::unordered_map<std::string, std::size_t> states_;
  std::unordered_map<std::string, std::size_t> letters_;
  std::unordered_set<std::string> declared_states_;
  std::unordered_set<std::string> declared_letters_;
  std::vector<std::string> state_order_;
  std::vector<std::string> letter_order_;
  std::vector<Transition> transitions_;
};

}  // namespace

Automaton parse_automaton(std::string_view text) {
  Builder builder;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    line = strip_comment(line);
    std::vector<std::string> tokens;
    try {
      tokens = split_tokens(line);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
    if (tokens.empty()) continue;

    if (starts_with_keyword(line, "@states")) {
      for (std::size_t i = 1; i < tokens.size(); ++i) builder.declare_state(tokens[i], line_no);
    } else if (starts_with_keyword(line, "@alphabet")) {
      for (std::size_t i = 1; i < tokens.size(); ++i) builder.declare_letter(tokens[i], line_no);
    } else if (tokens.size() != 4) {
      throw ParseError(line_no, "expected 'SRC IN OUT DST', got " +
                                    std::to_string(tokens.size()) + " token(s)");
    } else {
      const State src = builder.add_state(tokens[0], line_no);
      const Letter in = builder.add_letter(tokens[1], line_no);
      const Letter out = builder.add_letter(tokens[2], line_no);
      const State dst = builder.add_state(tokens[3], line_no);
      builder.add_transition({src, in, out, dst});
    }
  }
  return std::move(builder).build();
}

Automaton read_automaton(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

std::string format_automaton(const Automaton& a) {
  std::string out = "@states";
  for (const auto& q : a.states()) out += ' ' + escape_token(q);
  out += "\n@alphabet";
  for (const auto& x : a.alphabet()) out += ' ' + escape_token(x);
  out += '\n';
  for (const Transition& t : a.transitions()) {
    out += escape_token(a.token(t.src)) + ' ' + escape_token(a.token(t.in)) + ' ' +
           escape_token(a.token(t.out)) + ' ' + escape_token(a.token(t.dst)) + '\n';
  }
  return out;
}

using detail::dot_quote;

std::string automaton_to_dot(const Automaton& a) {
  std::string out = "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& q : a.states()) out += "  " + dot_quote(q) + ";\n";
  for (const Transition& t : a.transitions()) {
    out += "  " + dot_quote(a.token(t.src)) + " -> " + dot_quote(a.token(t.dst)) +
           " [label=" + dot_quote(a.token(t.in) + "/" + a.token(t.out)) + "];\n";
  }
  return out + "}\n";
}

}  // namespace orbitkit
