#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace advlogic {

// Tape symbols are the characters '0', '1' and '_' (blank).
inline constexpr char kBlank = '_';
inline constexpr char kSymbols[3] = {'0', '1', kBlank};

enum class Move : std::uint8_t { L, R };

struct Transition {
  std::uint32_t next;
  char write;
  Move move;
  friend bool operator==(const Transition&, const Transition&) = default;
};

class MachineFormatError : public std::runtime_error {
 public:
  MachineFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("machine line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Deterministic single-tape machine on a tape that is bounded on the left;
// a left move on cell 0 keeps the head in place. The machine halts when no
// transition is defined for the current state and symbol.
class TuringMachine {
 public:
  TuringMachine(std::uint32_t states, std::uint32_t start);

  std::uint32_t states() const { return states_; }
  std::uint32_t start() const { return start_; }

  // Throws std::invalid_argument on bad indices, symbols or a second
  // transition for the same (state, symbol).
  void add(std::uint32_t state, char read, Transition t);
  const Transition* find(std::uint32_t state, char read) const;
  std::size_t transition_count() const;
  // Every (state, symbol) has a transition, so the machine never halts.
  bool is_total() const;

  friend bool operator==(const TuringMachine&, const TuringMachine&) = default;

 private:
  std::uint32_t states_;
  std::uint32_t start_;
  std::vector<std::optional<Transition>> table_;  // state * 3 + symbol index
};

// Text form:
//   states <n> start <s>
//   <q> <a> -> <q'> <b> <L|R>
// '#' starts a comment line.
TuringMachine parse_machine(std::string_view text);
std::string render_machine(const TuringMachine& m);

struct Halted {
  std::string output;  // leftmost to rightmost non-blank cell; inner blanks kept as '_'
  std::size_t steps;
  friend bool operator==(const Halted&, const Halted&) = default;
};
struct BudgetExhausted {
  std::size_t budget;
  friend bool operator==(const BudgetExhausted&, const BudgetExhausted&) = default;
};
using SimulationResult = std::variant<Halted, BudgetExhausted>;

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

// Input must be over {0,1}.
SimulationResult simulate(const TuringMachine& m, std::string_view input, std::size_t step_budget = kDefaultStepBudget);
std::string render_result(const SimulationResult& r);

// Single state looping right on every symbol.
TuringMachine build_looper();
// No transitions at all.
TuringMachine build_immediate_halter();

// Machine that erases its input, writes w, runs M on w and, if M halts,
// replaces the tape by w and halts.
TuringMachine build_halt_probe(const TuringMachine& m, std::string_view w);

// Machine that erases its input, writes tape_bits(encode_machine(target))
// and halts.
TuringMachine build_constant_learner(const TuringMachine& target);

// Encodings. An object list <O1,...,On> is the concatenation of fields
// "<len>:<payload>" separated by '|'. Machines are their text form with
// '\' and newline escaped as "\\" and "\n".
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string encode_fields(const std::vector<std::string>& payloads);
std::vector<std::string> decode_fields(std::string_view text);
std::string escape_machine_text(std::string_view text);
std::string unescape_machine_text(std::string_view text);

using IoDataset = std::vector<std::pair<std::string, std::string>>;

struct HaltInstance {
  TuringMachine machine;
  std::string input;
  friend bool operator==(const HaltInstance&, const HaltInstance&) = default;
};
struct MachinePair {
  TuringMachine first;
  TuringMachine second;
  friend bool operator==(const MachinePair&, const MachinePair&) = default;
};
struct DesiredOneInstance {
  TuringMachine learner;
  TuringMachine target;
  IoDataset examples;
  friend bool operator==(const DesiredOneInstance&, const DesiredOneInstance&) = default;
};

std::string encode_machine(const TuringMachine& m);
TuringMachine decode_machine(std::string_view text);
std::string encode_dataset(const IoDataset& d);
IoDataset decode_dataset(std::string_view text);
std::string encode_halt_instance(const HaltInstance& h);
HaltInstance decode_halt_instance(std::string_view text);
std::string encode_machine_pair(const MachinePair& p);
MachinePair decode_machine_pair(std::string_view text);
std::string encode_desiredone_instance(const DesiredOneInstance& d);
DesiredOneInstance decode_desiredone_instance(std::string_view text);

// Bytes as bits, eight per byte, most significant first; the form in which
// encodings are placed on a tape.
std::string tape_bits(std::string_view bytes);
std::string tape_bytes(std::string_view bits);

// <M,w> |-> <looper, halt_probe(M,w)>; M halts on w iff the two are not
// input-output equivalent.
MachinePair reduce_halt_to_co_same(const HaltInstance& h);
std::string reduce_halt_to_co_same(std::string_view encoded);

// <M1,M2> |-> <A, M1, {}> with A the constant learner of M2.
DesiredOneInstance reduce_same_to_desiredone(const MachinePair& p);
std::string reduce_same_to_desiredone(std::string_view encoded);

struct ProvenDifferent {
  std::string witness;
  std::string behavior_a;
  std::string behavior_b;
  std::string reason;
};
struct IndistinguishableWithinBudget {
  std::size_t inputs_checked;
  std::size_t step_budget;
};
using EquivalenceVerdict = std::variant<ProvenDifferent, IndistinguishableWithinBudget>;

std::string render_verdict(const EquivalenceVerdict& v);

// All strings over {0,1} of length <= max_length in shortlex order.
std::vector<std::string> shortlex_strings(std::size_t max_length);

// Refutation only: reports a difference when both machines halt with
// different outputs, or one halts and the other has a total transition table.
// Inputs are tried in shortlex order.
EquivalenceVerdict bounded_io_equivalence(const TuringMachine& a, const TuringMachine& b,
                                          std::vector<std::string> inputs, std::size_t step_budget);

class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProbeBudget {
  std::size_t step_budget = kDefaultStepBudget;
  std::size_t learner_budget = 100 * kDefaultStepBudget;
  std::size_t probe_length = 6;
};

// Labels X with E, runs the learner on the encoded dataset, decodes its
// output as a machine F and compares E with F.
EquivalenceVerdict desiredone_probe(const TuringMachine& learner, const TuringMachine& target,
                                    const std::vector<std::string>& x, const ProbeBudget& budget = {});

}  // namespace advlogic
