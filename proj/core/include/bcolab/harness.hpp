#ifndef BCOLAB_HARNESS_HPP
#define BCOLAB_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcolab {

/// Optional corruption applied to each forward witness:
///   Recolor    one uniformly random vertex gets a different color;
///   Superstar  the superstar center is recolored, which always breaks
///              properness since its leaves carry every other color.
enum class PerturbMode { None, Recolor, Superstar };

/// Accepts "none", "recolor", "superstar"; throws PreconditionError.
PerturbMode parse_perturb_mode(const std::string& name);
std::string perturb_mode_name(PerturbMode mode);

struct RoundtripParams {
    std::uint64_t seed = 42;
    int trials = 100;
    int n = 7;      // source sizes vary per trial in [3..n]
    int cycles = 2; // superposed flow cycles; m <= cycles * n
    int wmax = 2;   // per-cycle flow; edge weights <= cycles * wmax
    PerturbMode perturb = PerturbMode::None;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t trial_seed = 0;
    int n = 0;
    int m = 0;
    long long total_weight = 0;
    int k = 0;
    int h_order = 0;
    int width_increment = -1; // lifted pd width minus source pd width

    bool solved = false;
    bool witness_ok = false;
    bool audit_ok = false;
    bool extract_ok = false;
    bool orientation_match = false;
    bool perturb_applied = false;
    bool perturb_caught = false;
    bool perturb_still_valid = false;

    bool ok = false;
    std::string failure;
    std::string repro;
    double millis = 0.0;
};

struct RunReport {
    RoundtripParams params;
    std::vector<TrialRecord> trials;
    int passed = 0;
    int failed = 0;
    int max_width_increment = -1;

    bool ok() const { return failed == 0; }
    std::string to_json() const;
    void print_human(std::ostream& out) const;
};

/// Per trial: generate a YES instance, solve it exhaustively, build the
/// target instance, produce the forward witness, audit it, extract the
/// orientation back, and compare with the solver's. The trial seed is
/// mix_seed(seed + index), so `--seed <base+index> --trials 1` replays
/// one trial exactly.
RunReport run_roundtrip(const RoundtripParams& params);

} // namespace bcolab

#endif
