#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <negaxor/numeral.hpp>

namespace negaxor {

using StateId = std::size_t;

/// Output word emitted on one transition; index 0 is emitted first and
/// lands on the least significant of the positions the word covers.
using Word = std::vector<Digit>;

/// Complete deterministic Mealy machine over the digit alphabet {0..b-1},
/// with word-valued outputs. Immutable after construction; all algorithms
/// below are pure, so machines can be shared freely across threads.
///
/// Transition and output rows are stored flattened: the entry for
/// (state q, digit d) lives at q * b + d.
class Transducer {
public:
    /// Validates completeness (one entry per state/digit pair), output
    /// digit ranges, and index bounds; throws std::invalid_argument.
    Transducer(Radix radix, std::vector<std::string> labels, StateId initial,
               std::vector<StateId> delta, std::vector<Word> lambda);

    Radix radix() const noexcept { return radix_; }
    std::size_t state_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(StateId q) const { return labels_.at(q); }
    StateId initial_state() const noexcept { return initial_; }

    StateId next(StateId q, Digit d) const { return delta_[cell(q, d)]; }
    const Word& output(StateId q, Digit d) const { return lambda_[cell(q, d)]; }

    /// True when every transition emits exactly one digit.
    bool letter_to_letter() const noexcept;

private:
    std::size_t cell(StateId q, Digit d) const noexcept {
        return q * radix_.value() + d;
    }

    Radix radix_;
    std::vector<std::string> labels_;
    StateId initial_;
    std::vector<StateId> delta_;
    std::vector<Word> lambda_;
};

/// Incremental construction from diagram-style edges. Guards that overlap
/// (two edges for the same state/digit pair) are construction bugs and are
/// rejected at add_edge; missing pairs are rejected at build.
class TransducerBuilder {
public:
    explicit TransducerBuilder(Radix radix) : radix_(radix) {}

    StateId add_state(std::string label);
    void set_initial(StateId q);
    void add_edge(StateId from, Digit input, StateId to, Word output);
    void add_edge(StateId from, Digit input, StateId to, Digit output);

    Transducer build() const;

private:
    Radix radix_;
    std::vector<std::string> labels_;
    std::optional<StateId> initial_;
    std::map<std::pair<StateId, Digit>, std::pair<StateId, Word>> edges_;
};

struct RunResult {
    DigitString output;       // canonical (trailing zeros stripped)
    StateId final_state;
    std::size_t padded_steps; // zero digits fed beyond the input
};

/// Membership mask of the largest set S of states such that from any state
/// in S, reading digit 0 emits only zero digits and stays inside S.
/// Feeding zeros from a quiescent state can never change the output value.
std::vector<bool> quiescent_states(const Transducer& t);

/// Feed the input least-significant-digit first with standard Mealy
/// semantics: from state q reading digit d, emit output(q, d), then move to
/// next(q, d). After the input is exhausted, keeps feeding digit 0 until
/// the current state is quiescent. Throws std::runtime_error if no
/// quiescent state is reached within state_count() padding steps (the
/// zero trajectory has then entered a non-quiescent cycle, so it never
/// will be).
RunResult run(const Transducer& t, const DigitString& input);

/// Restriction to the states reachable from the initial state. State order
/// is breadth-first discovery order with digits ascending, so the result
/// is deterministic.
Transducer reachable(const Transducer& t);

/// Synchronous product over the reachable pair states: both machines read
/// the same digit, and the step output is combine(left digit, right digit).
/// Requires matching radices and letter-to-letter operands.
Transducer product(const Transducer& left, const Transducer& right,
                   const std::function<Digit(Digit, Digit)>& combine);

/// Map every output digit through f; states and transitions are unchanged.
Transducer relabel_outputs(const Transducer& t,
                           const std::function<Digit(Digit)>& f);

/// Replace each output digit o on input digit d by g(d, o); transitions are
/// unchanged. Requires a letter-to-letter machine.
Transducer relabel_outputs_with_input(
    const Transducer& t, const std::function<Digit(Digit, Digit)>& g);

/// Quotient by Mealy equivalence: iterated partition refinement starting
/// from output rows, on the reachable part. The result is reachable,
/// minimal, and run-equivalent to t on every input. Merged states get a
/// brace-joined label. Requires a complete letter-to-letter machine.
Transducer minimize(const Transducer& t);

/// State bijection certifying two machines are equal up to relabeling:
/// mapping[q] is the partner of state q of the first machine, it pairs the
/// initial states, and it commutes with both delta and lambda.
struct IsomorphismWitness {
    std::vector<StateId> mapping;
};

struct IsomorphismResult {
    std::optional<IsomorphismWitness> witness;
    std::string mismatch;  // first disagreement found, empty on success

    bool ok() const noexcept { return witness.has_value(); }
};

/// Lockstep traversal from the paired initial states, digits in ascending
/// order; the candidate bijection is unique, so the check is deterministic.
/// State-count, output and transition disagreements are reported
/// distinctly. Minimize both machines first to test equivalence.
IsomorphismResult isomorphic(const Transducer& a, const Transducer& b);

}  // namespace negaxor
