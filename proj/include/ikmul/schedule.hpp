#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ikmul/recursive_mult.hpp"

namespace ikmul {

// One partial multiplication: XOR the listed segments of A and of B, then
// multiply the two n-bit combinations. Segment lists are sorted and
// non-empty.
struct PartialMultSpec {
    std::vector<unsigned> a_segments;
    std::vector<unsigned> b_segments;

    bool operator==(const PartialMultSpec&) const = default;
};

// The flattened decomposition of a split strategy: an ordered list of
// partial products plus, per product, the result segments its low and high
// halves are XORed into. Diagonal products a^i*b^i come first in ascending
// order, then the pair sums, then the wider sums.
struct AccumulationTable {
    unsigned segment_count = 0;
    std::vector<PartialMultSpec> products;
    std::vector<std::vector<unsigned>> lo_targets;  // per product, sorted
    std::vector<std::vector<unsigned>> hi_targets;

    bool operator==(const AccumulationTable&) const = default;
};

// Expands the strategy into single-segment partial products. Contributions
// landing on the same (product, segment) an even number of times cancel.
AccumulationTable build_decomposition(const SplitStrategy& strategy);

// XOR operations needed when every result segment is accumulated on its
// own: one per joining of two contributing table rows.
std::uint64_t xor_count_separate(const AccumulationTable& table);

// A right-hand-side operand of a register update.
struct SourceRef {
    enum class Kind { reg, pr_lo, pr_hi };

    Kind kind = Kind::reg;
    unsigned index = 0;  // register index, meaningful for Kind::reg only

    static SourceRef reg(unsigned i) { return {Kind::reg, i}; }
    static SourceRef pr_lo() { return {Kind::pr_lo, 0}; }
    static SourceRef pr_hi() { return {Kind::pr_hi, 0}; }

    std::string name() const;                        // "c3", "pr.lo", "pr.hi"
    static SourceRef from_name(std::string_view s);  // throws on bad names

    bool operator==(const SourceRef&) const = default;
};

// target <- XOR of sources, all sources reading start-of-clock values.
struct RegisterUpdate {
    unsigned target = 0;
    std::vector<SourceRef> sources;

    bool operator==(const RegisterUpdate&) const = default;
};

// One clock: the partial multiplication performed plus the register
// updates applied on the clock edge. No two updates in a step may target
// the same register.
struct ScheduleStep {
    PartialMultSpec pm;
    std::vector<RegisterUpdate> updates;

    bool operator==(const ScheduleStep&) const = default;
};

struct ClockedSchedule {
    unsigned segment_count = 0;
    std::vector<ScheduleStep> steps;

    bool operator==(const ClockedSchedule&) const = default;
};

struct CostReport {
    std::uint64_t partial_mults = 0;
    std::uint64_t xor_ops = 0;  // segment-wide XOR operators across all updates
    std::uint64_t clocks = 0;

    bool operator==(const CostReport&) const = default;
};

// The hand-scheduled 4-segment sequence with cross-segment reuse; costs
// 9 partial multiplications, 29 XOR operations, 9 clocks.
ClockedSchedule canonical_4segment_schedule();

// Compiles an accumulation table into a one-product-per-clock schedule.
// When the product order starts with the ascending diagonal run the
// builder applies the same register-reuse pattern as the canonical
// 4-segment schedule whenever that costs no more XORs than plain
// accumulation. The default order is the table's own.
ClockedSchedule build_iterative_schedule(const AccumulationTable& table);
ClockedSchedule build_iterative_schedule(const AccumulationTable& table,
                                         std::span<const unsigned> pm_order);

CostReport cost_report(const ClockedSchedule& schedule);

// JSON text form: {"s": ..., "steps": [{"pm": {"a": [...], "b": [...]},
// "updates": [{"target": "c0", "sources": ["pr.lo", ...]}]}]}.
std::string schedule_to_json(const ClockedSchedule& schedule);
ClockedSchedule schedule_from_json(std::string_view text);

}  // namespace ikmul
