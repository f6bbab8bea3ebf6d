#include "bcolab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/errors.hpp"
#include "bcolab/generators.hpp"
#include "bcolab/reduction.hpp"

namespace bcolab {

namespace {

std::string repro_command(const RoundtripParams& p, std::uint64_t base_plus_index) {
    std::ostringstream os;
    os << "bcolab roundtrip --seed " << base_plus_index << " --trials 1 --n " << p.n
       << " --cycles " << p.cycles << " --wmax " << p.wmax;
    if (p.perturb != PerturbMode::None) os << " --perturb " << perturb_mode_name(p.perturb);
    return os.str();
}

void run_one(const RoundtripParams& p, int index, TrialRecord& rec) {
    rec.index = index;
    rec.trial_seed = mix_seed(p.seed + static_cast<std::uint64_t>(index));
    rec.repro = repro_command(p, p.seed + static_cast<std::uint64_t>(index));

    const int n = p.n <= 3 ? 3 : 3 + static_cast<int>(rec.trial_seed % (p.n - 2));
    auto [inst, planted] = gen_yes_instance(rec.trial_seed, n, p.cycles, p.wmax);
    rec.n = inst.graph.vertex_count();
    rec.m = inst.graph.edge_count();
    rec.total_weight = total_weight(inst);

    auto solved = solve_circori_brute(inst);
    if (!solved) {
        rec.failure = "exhaustive solver found nothing despite a planted orientation";
        return;
    }
    rec.solved = true;

    ReducedInstance red = build_instance(inst);
    rec.k = red.k;
    rec.h_order = red.h.vertex_count();

    Coloring witness = forward_witness(red, *solved);
    const BColInstance target = bcol_instance(red);
    BColoringCheck chk = check_b_coloring(target, witness);
    if (!chk.ok) {
        rec.failure = "witness rejected: " + chk.reason;
        return;
    }
    rec.witness_ok = true;

    AuditReport audit = audit_coloring(red, witness);
    if (!audit.ok()) {
        rec.failure = "audit failed:\n" + audit.summary();
        return;
    }
    rec.audit_ok = true;

    Orientation back = extract_orientation(red, witness);
    rec.extract_ok = true;
    if (!(back == *solved)) {
        rec.failure = "extracted orientation differs from the solved one";
        return;
    }
    rec.orientation_match = true;

    // Lift the one-bag decomposition of the source along the way; its
    // width increment is the quantity the construction bounds by 6.
    PathDecomposition pd_src = PathDecomposition::from_bags({inst.graph.vertices()});
    PathDecomposition pd_h = build_pd_for_H(red, pd_src);
    rec.width_increment = pd_width(pd_h) - pd_width(pd_src);

    if (p.perturb != PerturbMode::None) {
        rec.perturb_applied = true;
        Rng rng(mix_seed(rec.trial_seed ^ 0x70657274ULL));
        VertexId victim;
        int fresh;
        if (p.perturb == PerturbMode::Superstar) {
            victim = red.superstar_center;
            fresh = 1;
        } else {
            victim = red.h.vertices()[rng.uniform_int(0, rec.h_order - 1)];
            const int old = witness.at(victim);
            fresh = rng.uniform_int(0, red.k - 2);
            if (fresh >= old) ++fresh;
        }
        Coloring mutated = witness;
        mutated.set(victim, fresh);
        BColoringCheck pchk = check_b_coloring(target, mutated);
        if (!pchk.ok) {
            rec.perturb_caught = true;
            rec.failure = "perturbation caught: " + pchk.reason;
            return;
        }
        // The recoloring happened to land on another valid b-coloring;
        // it must still audit clean and extract to a balanced orientation.
        rec.perturb_still_valid = true;
        AuditReport paudit = audit_coloring(red, mutated);
        if (!paudit.ok()) {
            rec.failure = "valid perturbed coloring failed the audit:\n" + paudit.summary();
            return;
        }
        try {
            extract_orientation(red, mutated);
        } catch (const ExtractionError& e) {
            rec.failure = std::string("valid perturbed coloring failed extraction: ") + e.what();
            return;
        }
    }

    rec.ok = true;
}

} // namespace

PerturbMode parse_perturb_mode(const std::string& name) {
    if (name == "none") return PerturbMode::None;
    if (name == "recolor") return PerturbMode::Recolor;
    if (name == "superstar") return PerturbMode::Superstar;
    throw PreconditionError("unknown perturb mode '" + name +
                            "' (expected none, recolor, or superstar)");
}

std::string perturb_mode_name(PerturbMode mode) {
    switch (mode) {
    case PerturbMode::None: return "none";
    case PerturbMode::Recolor: return "recolor";
    case PerturbMode::Superstar: return "superstar";
    }
    return "none";
}

RunReport run_roundtrip(const RoundtripParams& params) {
    if (params.trials < 0) throw PreconditionError("trials must be >= 0");
    if (params.n < 3) throw PreconditionError("n must be >= 3");

    RunReport report;
    report.params = params;
    for (int i = 0; i < params.trials; ++i) {
        TrialRecord rec;
        const auto start = std::chrono::steady_clock::now();
        try {
            run_one(params, i, rec);
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.failure = e.what();
        }
        rec.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        if (rec.ok)
            ++report.passed;
        else
            ++report.failed;
        report.max_width_increment = std::max(report.max_width_increment, rec.width_increment);
        report.trials.push_back(std::move(rec));
    }
    return report;
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["params"] = {{"seed", params.seed},
                   {"trials", params.trials},
                   {"n", params.n},
                   {"cycles", params.cycles},
                   {"wmax", params.wmax},
                   {"perturb", perturb_mode_name(params.perturb)}};
    j["summary"] = {{"passed", passed},
                    {"failed", failed},
                    {"ok", ok()},
                    {"max_width_increment", max_width_increment}};
    j["trials"] = nlohmann::json::array();
    for (const TrialRecord& t : trials) {
        nlohmann::json jt;
        jt["index"] = t.index;
        jt["seed"] = t.trial_seed;
        jt["n"] = t.n;
        jt["m"] = t.m;
        jt["W"] = t.total_weight;
        jt["k"] = t.k;
        jt["h_order"] = t.h_order;
        jt["width_increment"] = t.width_increment;
        jt["stages"] = {{"solved", t.solved},
                        {"witness", t.witness_ok},
                        {"audit", t.audit_ok},
                        {"extract", t.extract_ok},
                        {"match", t.orientation_match}};
        jt["perturb"] = {{"applied", t.perturb_applied},
                         {"caught", t.perturb_caught},
                         {"still_valid", t.perturb_still_valid}};
        jt["ok"] = t.ok;
        jt["failure"] = t.failure;
        jt["repro"] = t.repro;
        jt["millis"] = t.millis;
        j["trials"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

void RunReport::print_human(std::ostream& out) const {
    out << "roundtrip: seed=" << params.seed << " trials=" << params.trials
        << " n<=" << params.n << " cycles=" << params.cycles << " wmax=" << params.wmax
        << " perturb=" << perturb_mode_name(params.perturb) << "\n";
    for (const TrialRecord& t : trials) {
        out << "  trial " << t.index << ": n=" << t.n << " m=" << t.m << " W=" << t.total_weight
            << " k=" << t.k << " |V(H)|=" << t.h_order;
        if (t.width_increment >= 0) out << " dw=" << t.width_increment;
        out << (t.ok ? " ok" : " FAIL") << "\n";
        if (!t.ok) {
            out << "    " << t.failure << "\n";
            out << "    repro: " << t.repro << "\n";
        }
    }
    out << "passed " << passed << "/" << trials.size();
    if (max_width_increment >= 0) out << ", max width increment " << max_width_increment;
    out << (ok() ? "" : ", FAILURES PRESENT") << "\n";
}

} // namespace bcolab
