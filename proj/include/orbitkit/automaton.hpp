#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace orbitkit {

enum class State : std::uint32_t {};
enum class Letter : std::uint32_t {};

constexpr std::size_t index(State q) noexcept { return static_cast<std::size_t>(q); }
constexpr std::size_t index(Letter a) noexcept { return static_cast<std::size_t>(a); }
constexpr State state_at(std::size_t i) noexcept { return State{static_cast<std::uint32_t>(i)}; }
constexpr Letter letter_at(std::size_t i) noexcept {
  return Letter{static_cast<std::uint32_t>(i)};
}

// The dual swaps roles while keeping positions: letter i of A is state i of dual(A).
constexpr State as_state(Letter a) noexcept { return State{static_cast<std::uint32_t>(a)}; }
constexpr Letter as_letter(State q) noexcept { return Letter{static_cast<std::uint32_t>(q)}; }

/// A finite sequence of states in the usual left-action order: the rightmost
/// state (back()) reads the input first, the leftmost (front()) reads last.
using StateSeq = std::vector<State>;
using Word = std::vector<Letter>;

struct Transition {
  State src;
  Letter in;
  Letter out;
  State dst;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A finite letter-to-letter transducer (Q, Sigma, delta).
///
/// States and letters are named by tokens (arbitrary non-whitespace strings)
/// and are kept in insertion order. Transitions form a set; duplicates passed
/// to the constructor are dropped, keeping the first occurrence. The object is
/// immutable after construction and may be shared freely across threads.
class Automaton {
 public:
  struct Step {
    Letter out;
    State dst;
  };

  Automaton() = default;
  Automaton(std::vector<std::string> states, std::vector<std::string> alphabet,
            std::vector<Transition> transitions);

  [[nodiscard]] std::size_t num_states() const noexcept { return states_.size(); }
  [[nodiscard]] std::size_t num_letters() const noexcept { return alphabet_.size(); }
  [[nodiscard]] const std::vector<std::string>& states() const noexcept { return states_; }
  [[nodiscard]] const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::span<const Transition> transitions() const noexcept { return transitions_; }

  [[nodiscard]] const std::string& token(State q) const { return states_.at(index(q)); }
  [[nodiscard]] const std::string& token(Letter a) const { return alphabet_.at(index(a)); }
  [[nodiscard]] std::optional<State> find_state(std::string_view token) const;
  [[nodiscard]] std::optional<Letter> find_letter(std::string_view token) const;

  /// Number of transitions leaving `q` on input `a` (the count d_{q,a}).
  [[nodiscard]] std::size_t out_degree(State q, Letter a) const noexcept;

  /// At most one transition per (state, input letter).
  [[nodiscard]] bool is_deterministic() const noexcept { return deterministic_; }

  /// The unique transition from q on a. Requires a deterministic automaton.
  [[nodiscard]] std::optional<Step> step(State q, Letter a) const noexcept {
    const auto k = index(q) * alphabet_.size() + index(a);
    if (dst_[k] == kNone) return std::nullopt;
    return Step{Letter{out_[k]}, State{dst_[k]}};
  }

  /// States whose induced map is the identity on every finite word. Such states
  /// can be deleted from any state sequence without changing its action.
  [[nodiscard]] bool is_identity_state(State q) const noexcept {
    return identity_[index(q)] != 0;
  }

  /// Throws PreconditionError unless deterministic.
  void require_deterministic(std::string_view operation) const;

  /// Parse a whitespace-separated token list into states or letters.
  /// Backslash escapes a following character. Throws ParseError on unknown tokens.
  [[nodiscard]] StateSeq parse_states(std::string_view text) const;
  [[nodiscard]] Word parse_word(std::string_view text) const;
  [[nodiscard]] std::string format(const StateSeq& seq) const;
  [[nodiscard]] std::string format(const Word& word) const;

  /// Structural equality: same ordered token lists and the same transition set.
  friend bool operator==(const Automaton& lhs, const Automaton& rhs);

 private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
  std::unordered_map<std::string, std::uint32_t> state_index_;
  std::unordered_map<std::string, std::uint32_t> letter_index_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> dst_;
  std::vector<char> identity_;
  bool deterministic_ = true;
};

/// Split a token list on whitespace, honouring backslash escapes.
std::vector<std::string> split_tokens(std::string_view text);

/// Escape a token so that split_tokens() and the file parser read it back.
std::string escape_token(std::string_view token);

}  // namespace orbitkit
