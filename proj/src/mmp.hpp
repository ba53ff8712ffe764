#pragma once

// Betti-number ledger for three-dimensional MMP runs: replay divisorial
// contractions, LCI-curve blow-downs, flips and flops, update b_0..b_6, and
// validate every inequality the run is supposed to satisfy. b_3 is tracked
// as an interval; flips widen it by the depth-indexed constant instead of
// fabricating a value.

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "poly.hpp"

namespace chitop {
namespace mmp {

struct IntInterval {
    BigInt lo, hi;

    IntInterval() : lo(0), hi(0) {}
    IntInterval(long v) : lo(v), hi(v) {}
    IntInterval(BigInt l, BigInt h) : lo(std::move(l)), hi(std::move(h)) {}

    bool exact() const { return lo == hi; }
    bool contains(const IntInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    IntInterval shifted(const BigInt& d) const { return {lo + d, hi + d}; }
    IntInterval widened(const BigInt& w) const { return {lo - w, hi + w}; }
    bool operator==(const IntInterval& o) const { return lo == o.lo && hi == o.hi; }
};

struct BettiVector {
    long b0 = 1, b1 = 0, b2 = 0, b4 = 0, b5 = 0, b6 = 1;
    IntInterval b3;

    IntInterval chi() const {
        BigInt fixed = BigInt(b0) - b1 + b2 + b4 - b5 + b6;
        return {fixed - b3.hi, fixed - b3.lo};
    }
    bool operator==(const BettiVector& o) const {
        return b0 == o.b0 && b1 == o.b1 && b2 == o.b2 && b3 == o.b3 && b4 == o.b4 &&
               b5 == o.b5 && b6 == o.b6;
    }
};

struct ThreefoldState {
    BettiVector betti;
    long dep = 0;
    long rho = 0;
    long aw = 0;
    long xi = 0;
};

enum class StepKind { DivToPoint, DivToCurveLCI, Flip, Flop };

struct StepRecord {
    StepKind kind = StepKind::Flop;
    IntInterval chiE;                  // DivToPoint
    IntInterval chiC;                  // DivToCurveLCI
    std::optional<std::string> catalog_ref;
    // user-supplied invariants of the resulting state
    long dep = 0;
    long rho = 0;
    long aw = 0;
    long xi = 0;
};

// Betti bookkeeping per step kind; throws Precondition on a flip at depth 0
// and when b2 or b4 would go negative.
ThreefoldState apply_step(const ThreefoldState& s, const StepRecord& step);

// Formal inverse of a divisorial step (blow-up direction); restores the
// Betti vector of apply_step exactly.
ThreefoldState apply_step_inverse(const ThreefoldState& s, const StepRecord& step);

struct WeightBoundFormula {
    enum class Kind { Const, AffineDep, DeferD } kind = Kind::Const;
    long c = 0;      // Const
    long a = 0, b = 0; // AffineDep: a*dep + b
};

struct CatalogSample {
    std::vector<std::string> vars;
    std::vector<std::string> equations;
    long sigma_m = 1;
    std::vector<long> sigma;
    long dep = 0;
};

struct CatalogEntry {
    std::string id;
    std::string group;           // classification family: w-morphism | to-point
    std::string type;            // singularity type
    int ambient_dim = 4;
    std::string quotient;        // printed quotient data
    std::string equation;        // printed template
    std::string blowup_weight;   // printed weight
    std::string relation;
    WeightBoundFormula bound;
    long min_dep = 0;
    std::string note;
    std::optional<CatalogSample> sample;
};

struct Catalog {
    int version = 0;
    std::vector<CatalogEntry> rows;
};

Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& json_text);

// The printed formula's value; DeferD rows evaluate through bound_D(dep+1)
// and report the weight bound as not-applicable via nullopt.
std::optional<long> catalog_weight_bound(const CatalogEntry& entry, long dep);

enum class Severity { Violation, Warning };

struct Violation {
    size_t index = 0; // state or step index
    Severity severity = Severity::Violation;
    std::string check;
    std::string detail;
};

// Replay validation of a full MMP run; violations are data, not errors.
std::vector<Violation> validate_run(const std::vector<ThreefoldState>& states,
                                    const std::vector<StepRecord>& steps, long rho0);

} // namespace mmp
} // namespace chitop
