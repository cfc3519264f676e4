// degseq: degree-sequence toolkit front end.
//
// Subcommands: check, realize, witness, gap, sweep, scan.
// Exit codes: 0 success/graphic/confirmed, 2 usage/parse/guard errors,
// 3 non-graphic or violation found. No other codes.

#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <degseq/bounds.hpp>
#include <degseq/enumerate.hpp>
#include <degseq/erdos_gallai.hpp>
#include <degseq/extremal.hpp>
#include <degseq/oracle.hpp>
#include <degseq/realize.hpp>
#include <degseq/sequence.hpp>

using json = nlohmann::ordered_json;
using namespace degseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct Options {
    std::string format = "text";
    unsigned jobs = 1;
    bool naive_eg = false;
    bool force = false;

    bool json_output() const { return format == "json"; }
    EgEngine engine() const { return naive_eg ? EgEngine::Naive : EgEngine::Rle; }
};

// Numbers are emitted as integers, never floats; values beyond 64 bits fall
// back to decimal strings so the document stays loss-free.
json wide_int(u128 v) {
    if (v <= u128(std::numeric_limits<std::uint64_t>::max()))
        return json(static_cast<std::uint64_t>(v));
    return json(to_string(v));
}

json eg_to_json(const EgReport& r) {
    json j;
    j["parity_even"] = r.parity_even;
    j["graphic"] = r.graphic;
    if (r.first_violation) {
        j["first_violation"] = {{"k", r.first_violation->k},
                                {"lhs", wide_int(r.first_violation->lhs)},
                                {"rhs", wide_int(r.first_violation->rhs)}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

json verdict_to_json(const BoundVerdict& v) {
    json j;
    j["predicate"] = std::string(predicate_name(v.predicate));
    if (v.a) j["a"] = *v.a;
    if (v.b) j["b"] = *v.b;
    j["applicable"] = v.applicable;
    j["holds"] = v.holds;
    j["lhs"] = wide_int(v.lhs);
    j["rhs"] = wide_int(v.rhs);
    j["min_n"] = wide_int(v.min_n);
    if (v.epsilon_prime) j["epsilon_prime"] = *v.epsilon_prime;
    return j;
}

json sequence_header(const DegreeSequence& seq) {
    json j;
    j["sequence"] = seq.print();
    j["n"] = seq.n();
    j["sum"] = wide_int(seq.sum());
    j["d1"] = seq.d1();
    j["dn"] = seq.dn();
    return j;
}

void print_eg_text(const EgReport& eg) {
    std::printf("erdos_gallai: %s\n", eg.graphic ? "graphic" : "NOT GRAPHIC");
    std::printf("parity_even: %s\n", eg.parity_even ? "true" : "false");
    if (eg.first_violation)
        std::printf("first_violation: k=%llu lhs=%s rhs=%s\n",
                    static_cast<unsigned long long>(eg.first_violation->k),
                    to_string(eg.first_violation->lhs).c_str(),
                    to_string(eg.first_violation->rhs).c_str());
}

void print_bounds_text(const std::vector<BoundVerdict>& verdicts) {
    std::printf("bounds:\n");
    std::printf("  %-19s %-10s %-6s %-12s %-12s %s\n", "predicate", "applicable",
                "holds", "lhs", "rhs", "min_n");
    for (const BoundVerdict& v : verdicts) {
        std::string name(predicate_name(v.predicate));
        if (v.a) name += " a=" + std::to_string(*v.a) + " b=" + std::to_string(*v.b);
        if (v.epsilon_prime) name += " e'=" + std::to_string(*v.epsilon_prime);
        std::printf("  %-19s %-10s %-6s %-12s %-12s %s\n", name.c_str(),
                    v.applicable ? "true" : "false", v.holds ? "true" : "false",
                    to_string(v.lhs).c_str(), to_string(v.rhs).c_str(),
                    to_string(v.min_n).c_str());
    }
}

// --- check -----------------------------------------------------------------

struct CheckResult {
    json doc;
    bool graphic;
};

CheckResult check_one(const std::string& text, const Options& opt,
                      bool all_violations) {
    const DegreeSequence seq = parse_sequence(text);
    std::vector<BoundVerdict> verdicts;
    verdicts.push_back(zz_general(seq, seq.d1(), seq.dn()));
    verdicts.push_back(zz_simplified(seq));
    verdicts.push_back(zz_corollary(seq));
    verdicts.push_back(improved_bound(seq));
    verdicts.push_back(bhjw_bound(seq));
    const EgReport eg = erdos_gallai_check(seq, opt.engine());

    json doc;
    doc["input"] = text;
    doc.update(sequence_header(seq));
    doc["erdos_gallai"] = eg_to_json(eg);
    json bounds = json::array();
    for (const BoundVerdict& v : verdicts) bounds.push_back(verdict_to_json(v));
    doc["bounds"] = bounds;
    doc["graphic"] = eg.graphic;
    if (all_violations) {
        json list = json::array();
        for (const EgTerms& t : eg_all_violations(seq))
            list.push_back(
                {{"k", t.k}, {"lhs", wide_int(t.lhs)}, {"rhs", wide_int(t.rhs)}});
        doc["all_violations"] = list;
    }

    if (!opt.json_output()) {
        std::printf("sequence: %s\n", seq.print().c_str());
        std::printf("n: %llu\nsum: %s\nd1: %llu\ndn: %llu\n",
                    static_cast<unsigned long long>(seq.n()),
                    to_string(seq.sum()).c_str(),
                    static_cast<unsigned long long>(seq.d1()),
                    static_cast<unsigned long long>(seq.dn()));
        print_eg_text(eg);
        print_bounds_text(verdicts);
        if (all_violations) {
            std::printf("all_violations:");
            for (const EgTerms& t : eg_all_violations(seq))
                std::printf(" k=%llu", static_cast<unsigned long long>(t.k));
            std::printf("\n");
        }
    }
    return {std::move(doc), eg.graphic};
}

// Sequences come from the positional argument or, in batch mode, one per
// line on standard input.
std::vector<std::string> gather_inputs(const std::string& positional) {
    if (!positional.empty()) return {positional};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    return lines;
}

int cmd_check(const std::string& positional, const Options& opt,
              bool all_violations) {
    const std::vector<std::string> inputs = gather_inputs(positional);
    if (inputs.empty()) {
        std::cerr << "error: no sequence given\n";
        return kExitUsage;
    }
    if (inputs.size() == 1) {
        CheckResult r = check_one(inputs.front(), opt, all_violations);
        if (opt.json_output()) {
            json doc;
            doc["command"] = "check";
            doc.update(r.doc);
            std::printf("%s\n", doc.dump(2).c_str());
        }
        return r.graphic ? kExitOk : kExitViolation;
    }
    bool all_graphic = true;
    json results = json::array();
    bool first = true;
    for (const std::string& text : inputs) {
        if (!opt.json_output() && !first) std::printf("\n");
        first = false;
        CheckResult r = check_one(text, opt, all_violations);
        all_graphic = all_graphic && r.graphic;
        if (opt.json_output()) results.push_back(std::move(r.doc));
    }
    if (opt.json_output()) {
        json doc;
        doc["command"] = "check";
        doc["results"] = std::move(results);
        std::printf("%s\n", doc.dump(2).c_str());
    }
    return all_graphic ? kExitOk : kExitViolation;
}

// --- realize -----------------------------------------------------------------

int cmd_realize(const std::string& positional, const Options& opt) {
    const std::vector<std::string> inputs = gather_inputs(positional);
    if (inputs.empty()) {
        std::cerr << "error: no sequence given\n";
        return kExitUsage;
    }
    const bool batch = inputs.size() > 1;
    bool all_graphic = true;
    json results = json::array();
    bool first = true;
    for (const std::string& text : inputs) {
        const DegreeSequence seq = parse_sequence(text);
        const auto g = havel_hakimi_realize(seq);
        all_graphic = all_graphic && g.has_value();
        if (opt.json_output()) {
            json doc;
            doc["input"] = text;
            doc.update(sequence_header(seq));
            doc["graphic"] = g.has_value();
            if (g) {
                json edges = json::array();
                for (const auto& [u, v] : g->edges) edges.push_back({u, v});
                doc["edges"] = std::move(edges);
            } else {
                doc["edges"] = nullptr;
            }
            results.push_back(std::move(doc));
        } else {
            if (batch) {
                if (!first) std::printf("\n");
                std::printf("sequence: %s\n", seq.print().c_str());
            }
            if (g) {
                for (const auto& [u, v] : g->edges) std::printf("%u %u\n", u, v);
            } else {
                std::printf("NOT GRAPHIC\n");
            }
        }
        first = false;
    }
    if (opt.json_output()) {
        json doc;
        doc["command"] = "realize";
        if (batch)
            doc["results"] = std::move(results);
        else
            doc.update(results.front());
        std::printf("%s\n", doc.dump(2).c_str());
    }
    return all_graphic ? kExitOk : kExitViolation;
}

// --- witness / gap -------------------------------------------------------------

int emit_constructed(const char* command, const DegreeSequence& seq,
                     const json& params, const Options& opt, bool verify) {
    json doc;
    doc["command"] = command;
    doc.update(params);
    doc.update(sequence_header(seq));
    if (verify) {
        doc["erdos_gallai"] = eg_to_json(erdos_gallai_check(seq, opt.engine()));
        json bounds = json::array();
        for (const BoundVerdict& v :
             {zz_simplified(seq), zz_corollary(seq), improved_bound(seq),
              bhjw_bound(seq)})
            bounds.push_back(verdict_to_json(v));
        doc["bounds"] = std::move(bounds);
    }
    if (opt.json_output()) {
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("%s\n", seq.print().c_str());
        if (verify) {
            print_eg_text(erdos_gallai_check(seq, opt.engine()));
            print_bounds_text({zz_simplified(seq), zz_corollary(seq),
                               improved_bound(seq), bhjw_bound(seq)});
        }
    }
    return kExitOk;
}

// --- sweep -----------------------------------------------------------------

json findings_to_json(const std::vector<Finding>& fs) {
    json arr = json::array();
    for (const Finding& f : fs)
        arr.push_back({{"sequence", f.sequence},
                       {"check", f.check},
                       {"detail", f.detail}});
    return arr;
}

int cmd_sweep(std::uint64_t nmax, std::uint64_t dmax, const Options& opt) {
    const ViolationReport rep = cross_check(nmax, dmax, opt.jobs);
    if (opt.json_output()) {
        json doc;
        doc["command"] = "sweep";
        doc["nmax"] = nmax;
        doc["dmax"] = dmax;
        doc["sequences_checked"] = rep.sequences_checked;
        doc["graphic_count"] = rep.graphic_count;
        doc["realizations_checked"] = rep.realizations_checked;
        doc["violations"] = findings_to_json(rep.violations);
        doc["eg_hh_mismatches"] = findings_to_json(rep.eg_hh_mismatches);
        doc["rle_naive_mismatches"] = findings_to_json(rep.rle_naive_mismatches);
        doc["clean"] = rep.clean();
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("sweep: nmax=%llu dmax=%llu\n",
                    static_cast<unsigned long long>(nmax),
                    static_cast<unsigned long long>(dmax));
        std::printf("sequences_checked: %llu\n",
                    static_cast<unsigned long long>(rep.sequences_checked));
        std::printf("graphic_count: %llu\n",
                    static_cast<unsigned long long>(rep.graphic_count));
        std::printf("realizations_checked: %llu\n",
                    static_cast<unsigned long long>(rep.realizations_checked));
        std::printf("violations: %zu\n", rep.violations.size());
        std::printf("eg_hh_mismatches: %zu\n", rep.eg_hh_mismatches.size());
        std::printf("rle_naive_mismatches: %zu\n", rep.rle_naive_mismatches.size());
        for (const Finding& f : rep.violations)
            std::printf("  violation: %s %s %s\n", f.sequence.c_str(),
                        f.check.c_str(), f.detail.c_str());
        for (const Finding& f : rep.eg_hh_mismatches)
            std::printf("  eg/hh: %s %s\n", f.sequence.c_str(), f.detail.c_str());
        for (const Finding& f : rep.rle_naive_mismatches)
            std::printf("  rle/naive: %s %s\n", f.sequence.c_str(), f.detail.c_str());
        std::printf("result: %s\n", rep.clean() ? "ok" : "VIOLATIONS FOUND");
    }
    return rep.clean() ? kExitOk : kExitViolation;
}

// --- scan ------------------------------------------------------------------

int cmd_scan(std::uint64_t d1, std::uint64_t extra, const Options& opt) {
    const SharpnessResult res = sharpness_scan(d1, extra, opt.force, opt.jobs);
    if (opt.json_output()) {
        json doc;
        doc["command"] = "scan";
        doc["d1"] = res.d1;
        doc["threshold"] = res.threshold;
        doc["witness_at_threshold_minus_1"] =
            res.witness_at_threshold_minus_1
                ? json(res.witness_at_threshold_minus_1->print())
                : json(nullptr);
        doc["lengths_confirmed"] = res.lengths_confirmed;
        doc["sequences_per_length"] = res.sequences_per_length;
        doc["counterexamples"] = findings_to_json(res.counterexamples);
        doc["confirmed"] = res.confirmed;
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("scan: d1=%llu extra_lengths=%llu\n",
                    static_cast<unsigned long long>(d1),
                    static_cast<unsigned long long>(extra));
        std::printf("threshold: %llu\n",
                    static_cast<unsigned long long>(res.threshold));
        if (res.witness_at_threshold_minus_1)
            std::printf("witness (n=%llu): %s\n",
                        static_cast<unsigned long long>(
                            res.witness_at_threshold_minus_1->n()),
                        res.witness_at_threshold_minus_1->print().c_str());
        for (std::size_t i = 0; i < res.sequences_per_length.size(); ++i)
            std::printf("length %llu: %llu even-sum sequences checked\n",
                        static_cast<unsigned long long>(res.threshold + i),
                        static_cast<unsigned long long>(res.sequences_per_length[i]));
        for (const Finding& f : res.counterexamples)
            std::printf("  counterexample: %s (%s)\n", f.sequence.c_str(),
                        f.detail.c_str());
        std::printf("confirmed: %s\n", res.confirmed ? "true" : "false");
        std::printf(
            "note: lengths beyond the scanned window are covered by the bound "
            "itself\n");
    }
    return res.confirmed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence toolkit: exact graphicality checks, "
                 "sufficiency bounds, extremal families and exhaustive scans"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "Worker count for sweep/scan")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_flag("--naive-eg", opt.naive_eg, "Use the per-index EG evaluation");
    app.add_flag("--force", opt.force, "Override feasibility guards");

    std::string seq_text;
    bool all_violations = false;
    CLI::App* check = app.add_subcommand(
        "check", "Run the exact check and every sufficiency bound");
    check->add_option("sequence", seq_text,
                      "Sequence text, e.g. \"5,1^11\" (stdin batch mode if omitted)");
    check->add_flag("--all-violations", all_violations,
                    "List every violated inequality index");
    check->fallthrough();

    std::string realize_text;
    CLI::App* realize =
        app.add_subcommand("realize", "Construct a realization edge list");
    realize->add_option("sequence", realize_text,
                        "Sequence text (stdin batch mode if omitted)");
    realize->fallthrough();

    std::uint64_t witness_d = 0;
    bool witness_verify = false;
    CLI::App* witness = app.add_subcommand(
        "witness", "Emit the non-graphic witness one below the floor threshold");
    witness->add_option("d", witness_d, "Maximum degree d >= 2")->required();
    witness->add_flag("--verify", witness_verify, "Re-run checks on the output");
    witness->fallthrough();

    std::uint64_t gap_x = 0;
    bool gap_verify = false;
    CLI::App* gap = app.add_subcommand(
        "gap", "Emit the family meeting the floor bound but not the corollary");
    gap->add_option("x", gap_x, "Family parameter x >= 1")->required();
    gap->add_flag("--verify", gap_verify, "Re-run checks on the output");
    gap->fallthrough();

    std::uint64_t nmax = 0, dmax = 0;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Exhaustively cross-check every sequence up to nmax, dmax");
    sweep->add_option("--nmax", nmax, "Maximum length")->required();
    sweep->add_option("--dmax", dmax, "Maximum entry value")->required();
    sweep->fallthrough();

    std::uint64_t scan_d1 = 0, scan_extra = 2;
    CLI::App* scan = app.add_subcommand(
        "scan", "Confirm threshold sharpness empirically for one d1");
    scan->add_option("--d1", scan_d1, "Maximum degree")->required();
    scan->add_option("--extra", scan_extra, "Extra lengths above the threshold")
        ->capture_default_str();
    scan->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(seq_text, opt, all_violations);
        if (realize->parsed()) return cmd_realize(realize_text, opt);
        if (witness->parsed())
            return emit_constructed(
                "witness", witness_nongraphic(witness_d),
                json{{"d", witness_d}, {"x", family_params(witness_d).x}}, opt,
                witness_verify);
        if (gap->parsed())
            return emit_constructed("gap", gap_example(gap_x), json{{"x", gap_x}},
                                    opt, gap_verify);
        if (sweep->parsed()) return cmd_sweep(nmax, dmax, opt);
        if (scan->parsed()) return cmd_scan(scan_d1, scan_extra, opt);
    } catch (const Refused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
