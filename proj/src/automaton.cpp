#include "orbitkit/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void validate_token(const std::string& token, std::string_view kind) {
  if (token.empty()) throw ParseError("empty " + std::string(kind) + " token");
  if (std::any_of(token.begin(), token.end(), is_space)) {
    throw ParseError(std::string(kind) + " token '" + token + "' contains whitespace");
  }
}

}  // namespace

Automaton::Automaton(std::vector<std::string> states, std::vector<std::string> alphabet,
                     std::vector<Transition> transitions)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    validate_token(states_[i], "state");
    if (!state_index_.emplace(states_[i], static_cast<std::uint32_t>(i)).second) {
      throw ParseError("duplicate state '" + states_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    validate_token(alphabet_[i], "letter");
    if (!letter_index_.emplace(alphabet_[i], static_cast<std::uint32_t>(i)).second) {
      throw ParseError("duplicate letter '" + alphabet_[i] + "'");
    }
  }

  const std::size_t nq = states_.size();
  const std::size_t na = alphabet_.size();
  degree_.assign(nq * na, 0);
  out_.assign(nq * na, kNone);
  dst_.assign(nq * na, kNone);

  std::set<Transition> seen;
  transitions_.reserve(transitions.size());
  for (const Transition& t : transitions) {
    if (index(t.src) >= nq || index(t.dst) >= nq || index(t.in) >= na || index(t.out) >= na) {
      throw ParseError("transition references an undeclared state or letter");
    }
    if (!seen.insert(t).second) continue;
    transitions_.push_back(t);
    const auto k = index(t.src) * na + index(t.in);
    if (++degree_[k] > 1) {
      deterministic_ = false;
    } else {
      out_[k] = static_cast<std::uint32_t>(t.out);
      dst_[k] = static_cast<std::uint32_t>(t.dst);
    }
  }

  // Greatest fixpoint: q is an identity state iff it copies every letter and
  // every successor is again an identity state.
  identity_.assign(nq, 0);
  if (!deterministic_) return;
  for (std::size_t q = 0; q < nq; ++q) {
    bool copies = true;
    for (std::size_t a = 0; a < na && copies; ++a) {
      const auto k = q * na + a;
      copies = dst_[k] != kNone && out_[k] == a;
    }
    identity_[q] = copies ? 1 : 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < nq; ++q) {
      if (!identity_[q]) continue;
      for (std::size_t a = 0; a < na; ++a) {
        if (!identity_[dst_[q * na + a]]) {
          identity_[q] = 0;
          changed = true;
          break;
        }
      }
    }
  }
}

std::optional<State> Automaton::find_state(std::string_view token) const {
  const auto it = state_index_.find(std::string(token));
  if (it == state_index_.end()) return std::nullopt;
  return State{it->second};
}

std::optional<Letter> Automaton::find_letter(std::string_view token) const {
  const auto it = letter_index_.find(std::string(token));
  if (it == letter_index_.end()) return std::nullopt;
  return Letter{it->second};
}

std::size_t Automaton::out_degree(State q, Letter a) const noexcept {
  return degree_[index(q) * alphabet_.size() + index(a)];
}

void Automaton::require_deterministic(std::string_view operation) const {
  if (!deterministic_) {
    throw PreconditionError(std::string(operation) + " requires a deterministic automaton");
  }
}

StateSeq Automaton::parse_states(std::string_view text) const {
  StateSeq seq;
  for (const auto& token : split_tokens(text)) {
    const auto q = find_state(token);
    if (!q) throw ParseError("unknown state '" + token + "'");
    seq.push_back(*q);
  }
  return seq;
}

Word Automaton::parse_word(std::string_view text) const {
  Word word;
  for (const auto& token : split_tokens(text)) {
    const auto a = find_letter(token);
    if (!a) throw ParseError("unknown letter '" + token + "'");
    word.push_back(*a);
  }
  return word;
}

namespace {

// Token lists never pass through the comment stripper, so only separators
// and backslashes need escaping.
std::string escape_list_token(std::string_view token) {
  std::string out;
  for (const char c : token) {
    if (c == '\\' || c == ' ' || c == '\t') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string Automaton::format(const StateSeq& seq) const {
  std::string out;
  for (const State q : seq) {
    if (!out.empty()) out += ' ';
    out += escape_list_token(token(q));
  }
  return out;
}

std::string Automaton::format(const Word& word) const {
  std::string out;
  for (const Letter a : word) {
    if (!out.empty()) out += ' ';
    out += escape_list_token(token(a));
  }
  return out;
}

bool operator==(const Automaton& lhs, const Automaton& rhs) {
  if (lhs.states_ != rhs.states_ || lhs.alphabet_ != rhs.alphabet_) return false;
  if (lhs.transitions_.size() != rhs.transitions_.size()) return false;
  std::vector<Transition> l(lhs.transitions_.begin(), lhs.transitions_.end());
  std::vector<Transition> r(rhs.transitions_.begin(), rhs.transitions_.end());
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_token = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\\') {
      if (i + 1 == text.size()) throw ParseError("dangling backslash");
      current += text[++i];
      in_token = true;
    } else if (is_space(c)) {
      if (in_token) tokens.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += c;
      in_token = true;
    }
  }
  if (in_token) tokens.push_back(std::move(current));
  return tokens;
}

std::string escape_token(std::string_view token) {
  std::string out;
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    if (c == '\\' || c == '#' || c == ' ' || c == '\t' || (i == 0 && c == '@')) out += '\\';
    out += c;
  }
  return out;
}

}  // namespace orbitkit
