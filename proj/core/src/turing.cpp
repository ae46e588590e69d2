#include "advlogic/turing.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

namespace advlogic {

namespace {

int symbol_index(char c) {
  switch (c) {
    case '0':
      return 0;
    case '1':
      return 1;
    case kBlank:
      return 2;
    default:
      return -1;
  }
}

}  // namespace

TuringMachine::TuringMachine(std::uint32_t states, std::uint32_t start)
    : states_(states), start_(start), table_(static_cast<std::size_t>(states) * 3) {
  if (states == 0) throw std::invalid_argument("a machine needs at least one state");
  if (start >= states) throw std::invalid_argument("start state out of range");
}

void TuringMachine::add(std::uint32_t state, char read, Transition t) {
  int a = symbol_index(read);
  if (state >= states_ || t.next >= states_) throw std::invalid_argument("state out of range");
  if (a < 0 || symbol_index(t.write) < 0) throw std::invalid_argument("symbol outside {0,1,_}");
  auto& slot = table_[static_cast<std::size_t>(state) * 3 + static_cast<std::size_t>(a)];
  if (slot) {
    throw std::invalid_argument("second transition for state " + std::to_string(state) + " on '" +
                                std::string(1, read) + "'");
  }
  slot = t;
}

const Transition* TuringMachine::find(std::uint32_t state, char read) const {
  int a = symbol_index(read);
  if (state >= states_ || a < 0) return nullptr;
  const auto& slot = table_[static_cast<std::size_t>(state) * 3 + static_cast<std::size_t>(a)];
  return slot ? &*slot : nullptr;
}

std::size_t TuringMachine::transition_count() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const auto& t) { return t.has_value(); }));
}

bool TuringMachine::is_total() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& t) { return t.has_value(); });
}

namespace {

std::uint32_t parse_index(std::string_view token, std::size_t line, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw MachineFormatError(line, std::string("expected ") + what + ", found '" + std::string(token) + "'");
  }
  return v;
}

char parse_symbol(const std::string& token, std::size_t line) {
  if (token.size() != 1 || symbol_index(token[0]) < 0) {
    throw MachineFormatError(line, "expected symbol 0, 1 or _, found '" + token + "'");
  }
  return token[0];
}

}  // namespace

TuringMachine parse_machine(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  std::optional<TuringMachine> m;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (!m) {
      if (tok.size() != 4 || tok[0] != "states" || tok[2] != "start") {
        throw MachineFormatError(number, "expected header 'states <n> start <s>'");
      }
      std::uint32_t n = parse_index(tok[1], number, "state count");
      std::uint32_t s = parse_index(tok[3], number, "start state");
      if (n == 0) throw MachineFormatError(number, "a machine needs at least one state");
      if (s >= n) throw MachineFormatError(number, "start state out of range");
      m.emplace(n, s);
      continue;
    }
    if (tok.size() != 6 || tok[2] != "->") throw MachineFormatError(number, "expected '<q> <a> -> <q'> <b> <L|R>'");
    std::uint32_t q = parse_index(tok[0], number, "state");
    char a = parse_symbol(tok[1], number);
    std::uint32_t next = parse_index(tok[3], number, "state");
    char b = parse_symbol(tok[4], number);
    if (tok[5] != "L" && tok[5] != "R") throw MachineFormatError(number, "expected move L or R, found '" + tok[5] + "'");
    if (q >= m->states() || next >= m->states()) throw MachineFormatError(number, "state out of range");
    if (m->find(q, a)) throw MachineFormatError(number, "second transition for state " + tok[0] + " on '" + tok[1] + "'");
    m->add(q, a, {next, b, tok[5] == "L" ? Move::L : Move::R});
  }
  if (!m) throw MachineFormatError(number + 1, "missing header 'states <n> start <s>'");
  return *std::move(m);
}

std::string render_machine(const TuringMachine& m) {
  std::string s = "states " + std::to_string(m.states()) + " start " + std::to_string(m.start()) + "\n";
  for (std::uint32_t q = 0; q < m.states(); ++q) {
    for (char a : kSymbols) {
      if (const Transition* t = m.find(q, a)) {
        s += std::to_string(q) + ' ' + a + " -> " + std::to_string(t->next) + ' ' + t->write + ' ' +
             (t->move == Move::L ? 'L' : 'R') + '\n';
      }
    }
  }
  return s;
}

SimulationResult simulate(const TuringMachine& m, std::string_view input, std::size_t step_budget) {
  for (char c : input) {
    if (c != '0' && c != '1') throw std::invalid_argument("input must be over {0,1}");
  }
  std::string tape(input);
  std::size_t head = 0;
  std::uint32_t state = m.start();
  std::size_t steps = 0;
  while (true) {
    if (head == tape.size()) tape.push_back(kBlank);
    const Transition* t = m.find(state, tape[head]);
    if (!t) break;
    if (steps == step_budget) return BudgetExhausted{step_budget};
    tape[head] = t->write;
    state = t->next;
    if (t->move == Move::R) {
      ++head;
    } else if (head > 0) {
      --head;
    }
    ++steps;
  }
  auto first = tape.find_first_not_of(kBlank);
  if (first == std::string::npos) return Halted{"", steps};
  auto last = tape.find_last_not_of(kBlank);
  return Halted{tape.substr(first, last - first + 1), steps};
}

std::string render_result(const SimulationResult& r) {
  if (const auto* h = std::get_if<Halted>(&r)) {
    return "halted output \"" + h->output + "\" steps " + std::to_string(h->steps);
  }
  return "budget exhausted after " + std::to_string(std::get<BudgetExhausted>(r).budget) + " steps";
}

namespace {

class MachineBuilder {
 public:
  std::uint32_t fresh() { return count_++; }

  void on(std::uint32_t q, char a, std::uint32_t next, char write, Move move) {
    edges_.emplace_back(q, a, Transition{next, write, move});
  }
  // Leaves the symbol unchanged.
  void pass(std::uint32_t q, char a, std::uint32_t next, Move move) { on(q, a, next, a, move); }
  void pass_any(std::uint32_t q, std::uint32_t next, Move move) {
    for (char a : kSymbols) pass(q, a, next, move);
  }
  void write_any(std::uint32_t q, char write, std::uint32_t next, Move move) {
    for (char a : kSymbols) on(q, a, next, write, move);
  }

  TuringMachine build(std::uint32_t start) const {
    TuringMachine m(count_, start);
    for (const auto& [q, a, t] : edges_) m.add(q, a, t);
    return m;
  }

 private:
  std::uint32_t count_ = 0;
  std::vector<std::tuple<std::uint32_t, char, Transition>> edges_;
};

void check_bits(std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1') throw std::invalid_argument("string must be over {0,1}");
  }
}

}  // namespace

TuringMachine build_looper() {
  TuringMachine m(1, 0);
  for (char a : kSymbols) m.add(0, a, {0, a, Move::R});
  return m;
}

TuringMachine build_immediate_halter() { return TuringMachine(1, 0); }

// Layout while simulating: cell 2k holds a marker for virtual cell k ('0' for
// k = 0, '1' once visited, blank if never visited) and cell 2k+1 its symbol.
TuringMachine build_halt_probe(const TuringMachine& m, std::string_view w) {
  check_bits(w);
  MachineBuilder b;
  const std::uint32_t start = b.fresh();
  const std::uint32_t erase = b.fresh();
  const std::uint32_t rewind = b.fresh();

  std::string layout;
  if (w.empty()) {
    layout = "_";
  } else {
    layout += w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
      layout += '1';
      layout += w[i];
    }
  }
  std::vector<std::uint32_t> lay(layout.size());
  for (auto& q : lay) q = b.fresh();
  const std::uint32_t back_marker = b.fresh();
  const std::uint32_t back_value = b.fresh();

  std::vector<std::uint32_t> ready(m.states()), arrive_right(m.states()), check_left(m.states());
  for (std::uint32_t q = 0; q < m.states(); ++q) {
    ready[q] = b.fresh();
    arrive_right[q] = b.fresh();
    check_left[q] = b.fresh();
  }
  const std::uint32_t seek_marker = b.fresh();
  const std::uint32_t seek_value = b.fresh();
  const std::uint32_t wipe_value = b.fresh();
  const std::uint32_t wipe_marker = b.fresh();
  std::vector<std::uint32_t> out(w.empty() ? 0 : w.size() - 1);
  for (auto& q : out) q = b.fresh();
  const std::uint32_t halt = b.fresh();

  // Erase the input, leaving the left marker in cell 0.
  b.write_any(start, '0', erase, Move::R);
  b.on(erase, '0', erase, kBlank, Move::R);
  b.on(erase, '1', erase, kBlank, Move::R);
  b.pass(erase, kBlank, rewind, Move::L);
  b.pass(rewind, kBlank, rewind, Move::L);
  b.pass(rewind, '0', lay[0], Move::R);

  // Lay out w and walk back to virtual cell 0.
  for (std::size_t i = 0; i + 1 < lay.size(); ++i) b.write_any(lay[i], layout[i], lay[i + 1], Move::R);
  b.write_any(lay.back(), layout.back(), back_marker, Move::L);
  b.pass(back_marker, '1', back_value, Move::L);
  b.pass(back_marker, '0', ready[m.start()], Move::R);
  b.pass_any(back_value, back_marker, Move::L);

  for (std::uint32_t q = 0; q < m.states(); ++q) {
    for (char a : kSymbols) {
      if (const Transition* t = m.find(q, a)) {
        b.on(ready[q], a, t->move == Move::R ? arrive_right[t->next] : check_left[t->next], t->write, t->move);
      } else {
        b.pass(ready[q], a, seek_marker, Move::R);
      }
    }
    b.on(arrive_right[q], kBlank, ready[q], '1', Move::R);
    b.pass(arrive_right[q], '1', ready[q], Move::R);
    b.pass(check_left[q], '0', ready[q], Move::R);
    b.pass(check_left[q], '1', ready[q], Move::L);
  }

  // M halted: find the last visited cell, wipe everything back to cell 0 and
  // write w there.
  b.pass(seek_marker, '1', seek_value, Move::R);
  b.pass(seek_marker, kBlank, wipe_value, Move::L);
  b.pass_any(seek_value, seek_marker, Move::R);
  b.write_any(wipe_value, kBlank, wipe_marker, Move::L);
  b.on(wipe_marker, '1', wipe_value, kBlank, Move::L);
  if (w.empty()) {
    b.on(wipe_marker, '0', halt, kBlank, Move::R);
  } else {
    b.on(wipe_marker, '0', out.empty() ? halt : out[0], w[0], Move::R);
    for (std::size_t i = 0; i < out.size(); ++i) {
      b.write_any(out[i], w[i + 1], i + 1 < out.size() ? out[i + 1] : halt, Move::R);
    }
  }
  return b.build(start);
}

TuringMachine build_constant_learner(const TuringMachine& target) {
  const std::string bits = tape_bits(encode_machine(target));
  MachineBuilder b;
  const std::uint32_t start = b.fresh();
  const std::uint32_t erase = b.fresh();
  const std::uint32_t rewind = b.fresh();
  std::vector<std::uint32_t> write(bits.size() - 1);
  for (auto& q : write) q = b.fresh();
  const std::uint32_t halt = b.fresh();

  // Cell 0 takes the first output bit straight away and doubles as the left
  // marker; everything after it is blank once the input is erased.
  b.write_any(start, bits[0], erase, Move::R);
  b.on(erase, '0', erase, kBlank, Move::R);
  b.on(erase, '1', erase, kBlank, Move::R);
  b.pass(erase, kBlank, rewind, Move::L);
  b.pass(rewind, kBlank, rewind, Move::L);
  const std::uint32_t after = write.empty() ? halt : write[0];
  b.pass(rewind, '0', after, Move::R);
  b.pass(rewind, '1', after, Move::R);
  for (std::size_t i = 0; i < write.size(); ++i) {
    b.write_any(write[i], bits[i + 1], i + 1 < write.size() ? write[i + 1] : halt, Move::R);
  }
  return b.build(start);
}

std::string encode_fields(const std::vector<std::string>& payloads) {
  std::string s;
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(payloads[i].size());
    s += ':';
    s += payloads[i];
  }
  return s;
}

std::vector<std::string> decode_fields(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!out.empty()) {
      if (text[pos] != '|') throw EncodingError("expected '|' at offset " + std::to_string(pos));
      ++pos;
    }
    std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos || colon == pos) {
      throw EncodingError("expected <length>: at offset " + std::to_string(pos));
    }
    std::size_t len = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + colon, len);
    if (ec != std::errc() || ptr != text.data() + colon) {
      throw EncodingError("bad field length at offset " + std::to_string(pos));
    }
    pos = colon + 1;
    if (len > text.size() - pos) throw EncodingError("field overruns the encoding at offset " + std::to_string(pos));
    out.emplace_back(text.substr(pos, len));
    pos += len;
  }
  return out;
}

std::string escape_machine_text(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == '\\') {
      s += "\\\\";
    } else if (c == '\n') {
      s += "\\n";
    } else {
      s += c;
    }
  }
  return s;
}

std::string unescape_machine_text(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      s += text[i];
      continue;
    }
    if (++i == text.size()) throw EncodingError("dangling escape");
    if (text[i] == '\\') {
      s += '\\';
    } else if (text[i] == 'n') {
      s += '\n';
    } else {
      throw EncodingError(std::string("unknown escape \\") + text[i]);
    }
  }
  return s;
}

namespace {

std::vector<std::string> expect_fields(std::string_view text, std::size_t n, const char* what) {
  auto fields = decode_fields(text);
  if (fields.size() != n) {
    throw EncodingError(std::string(what) + ": expected " + std::to_string(n) + " fields, found " +
                        std::to_string(fields.size()));
  }
  return fields;
}

TuringMachine machine_from_payload(std::string_view payload) {
  try {
    return parse_machine(unescape_machine_text(payload));
  } catch (const MachineFormatError& e) {
    throw EncodingError(std::string("machine: ") + e.what());
  }
}

std::string machine_payload(const TuringMachine& m) { return escape_machine_text(render_machine(m)); }

}  // namespace

std::string encode_machine(const TuringMachine& m) { return encode_fields({machine_payload(m)}); }

TuringMachine decode_machine(std::string_view text) {
  return machine_from_payload(expect_fields(text, 1, "machine")[0]);
}

std::string encode_dataset(const IoDataset& d) {
  std::vector<std::string> rows;
  rows.reserve(d.size());
  for (const auto& [x, y] : d) rows.push_back(encode_fields({x, y}));
  return encode_fields(rows);
}

IoDataset decode_dataset(std::string_view text) {
  IoDataset d;
  for (const auto& row : decode_fields(text)) {
    auto xy = expect_fields(row, 2, "dataset row");
    d.emplace_back(std::move(xy[0]), std::move(xy[1]));
  }
  return d;
}

std::string encode_halt_instance(const HaltInstance& h) { return encode_fields({machine_payload(h.machine), h.input}); }

HaltInstance decode_halt_instance(std::string_view text) {
  auto f = expect_fields(text, 2, "<M,w>");
  for (char c : f[1]) {
    if (c != '0' && c != '1') throw EncodingError("<M,w>: input must be over {0,1}");
  }
  return {machine_from_payload(f[0]), f[1]};
}

std::string encode_machine_pair(const MachinePair& p) {
  return encode_fields({machine_payload(p.first), machine_payload(p.second)});
}

MachinePair decode_machine_pair(std::string_view text) {
  auto f = expect_fields(text, 2, "<M1,M2>");
  return {machine_from_payload(f[0]), machine_from_payload(f[1])};
}

std::string encode_desiredone_instance(const DesiredOneInstance& d) {
  return encode_fields({machine_payload(d.learner), machine_payload(d.target), encode_dataset(d.examples)});
}

DesiredOneInstance decode_desiredone_instance(std::string_view text) {
  auto f = expect_fields(text, 3, "<A,M,X>");
  return {machine_from_payload(f[0]), machine_from_payload(f[1]), decode_dataset(f[2])};
}

std::string tape_bits(std::string_view bytes) {
  std::string bits;
  bits.reserve(bytes.size() * 8);
  for (unsigned char c : bytes) {
    for (int i = 7; i >= 0; --i) bits += ((c >> i) & 1) ? '1' : '0';
  }
  return bits;
}

std::string tape_bytes(std::string_view bits) {
  if (bits.size() % 8 != 0) throw EncodingError("bit string length is not a multiple of 8");
  std::string bytes;
  bytes.reserve(bits.size() / 8);
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      char c = bits[i + j];
      if (c != '0' && c != '1') throw EncodingError("bit string contains '" + std::string(1, c) + "'");
      v = (v << 1) | static_cast<unsigned>(c - '0');
    }
    bytes += static_cast<char>(v);
  }
  return bytes;
}

MachinePair reduce_halt_to_co_same(const HaltInstance& h) {
  return {build_looper(), build_halt_probe(h.machine, h.input)};
}

std::string reduce_halt_to_co_same(std::string_view encoded) {
  return encode_machine_pair(reduce_halt_to_co_same(decode_halt_instance(encoded)));
}

DesiredOneInstance reduce_same_to_desiredone(const MachinePair& p) {
  return {build_constant_learner(p.second), p.first, {}};
}

std::string reduce_same_to_desiredone(std::string_view encoded) {
  return encode_desiredone_instance(reduce_same_to_desiredone(decode_machine_pair(encoded)));
}

std::string render_verdict(const EquivalenceVerdict& v) {
  if (const auto* d = std::get_if<ProvenDifferent>(&v)) {
    std::string s = "proven different";
    if (!d->reason.empty()) s += ": " + d->reason;
    s += "\nwitness \"" + d->witness + "\"";
    if (!d->behavior_a.empty()) s += "\nfirst: " + d->behavior_a;
    if (!d->behavior_b.empty()) s += "\nsecond: " + d->behavior_b;
    return s + "\n";
  }
  const auto& i = std::get<IndistinguishableWithinBudget>(v);
  return "indistinguishable within budget: " + std::to_string(i.inputs_checked) + " inputs, " +
         std::to_string(i.step_budget) + " steps each\n";
}

std::vector<std::string> shortlex_strings(std::size_t max_length) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if ((v >> (len - 1 - i)) & 1) s[i] = '1';
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

struct Behavior {
  std::optional<Halted> halted;
  bool loops = false;  // provably
  std::string text;
};

Behavior observe(const TuringMachine& m, bool total, const std::string& input, std::size_t budget) {
  if (total) return {std::nullopt, true, "never halts (every transition is defined)"};
  SimulationResult r = simulate(m, input, budget);
  if (auto* h = std::get_if<Halted>(&r)) return {*h, false, render_result(r)};
  return {std::nullopt, false, render_result(r)};
}

}  // namespace

EquivalenceVerdict bounded_io_equivalence(const TuringMachine& a, const TuringMachine& b,
                                          std::vector<std::string> inputs, std::size_t step_budget) {
  std::sort(inputs.begin(), inputs.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  const bool total_a = a.is_total();
  const bool total_b = b.is_total();
  for (const auto& x : inputs) {
    Behavior ba = observe(a, total_a, x, step_budget);
    Behavior bb = observe(b, total_b, x, step_budget);
    if (ba.halted && bb.halted && ba.halted->output != bb.halted->output) {
      return ProvenDifferent{x, ba.text, bb.text, "outputs differ"};
    }
    if ((ba.halted && bb.loops) || (ba.loops && bb.halted)) {
      return ProvenDifferent{x, ba.text, bb.text, "one machine halts and the other never does"};
    }
  }
  return IndistinguishableWithinBudget{inputs.size(), step_budget};
}

EquivalenceVerdict desiredone_probe(const TuringMachine& learner, const TuringMachine& target,
                                    const std::vector<std::string>& x, const ProbeBudget& budget) {
  IoDataset data;
  for (const auto& input : x) {
    SimulationResult r = simulate(target, input, budget.step_budget);
    const auto* h = std::get_if<Halted>(&r);
    if (!h) {
      throw MembershipError("target does not halt on \"" + input + "\" within " + std::to_string(budget.step_budget) +
                            " steps");
    }
    data.emplace_back(input, h->output);
  }
  const std::string tape = tape_bits(encode_dataset(data));
  SimulationResult r = simulate(learner, tape, budget.learner_budget);
  const auto* h = std::get_if<Halted>(&r);
  if (!h) return ProvenDifferent{"", "", "", "learner did not halt on the dataset within budget"};
  TuringMachine learned = build_immediate_halter();
  try {
    learned = decode_machine(tape_bytes(h->output));
  } catch (const EncodingError& e) {
    return ProvenDifferent{"", "", "", std::string("learner output does not decode: ") + e.what()};
  }
  return bounded_io_equivalence(target, learned, shortlex_strings(budget.probe_length), budget.step_budget);
}

}  // namespace advlogic
