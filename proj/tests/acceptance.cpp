// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion.
//
// Usage: greenseq_acceptance <path-to-cli-binary> <path-to-quivers-dir>

#include "greenseq/json_io.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace greenseq;
namespace ts = greenseq::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

WalkOptions oracle_options() {
    WalkOptions o;
    o.use_order_prune = false;
    o.use_degree_bound_prune = false;
    o.window_slack = 2;
    return o;
}

// enumeration counts recorded from the first derivation; criteria 3 and 4
// re-derive them through the oracle and enlarged-window routes on every run
struct MgsCase {
    const char* name;
    QuiverSpec quiver;
    int m;
    std::size_t expected;
    double budget_seconds;
};

const std::vector<MgsCase>& mgs_cases() {
    static const std::vector<MgsCase> cases = {
        {"Kronecker", ts::kronecker(), 1, 1, 60.0},
        {"Kronecker", ts::kronecker(), 2, 2, 60.0},
        {"Atilde21", ts::atilde21(), 1, 5, 300.0},
        {"A2", ts::a2(), 1, 2, 60.0},
        {"A2", ts::a2(), 2, 7, 60.0},
        {"A3", ts::a3(), 1, 9, 60.0},
        {"A3", ts::a3(), 2, 297, 60.0},
    };
    return cases;
}

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
    const std::string out_path = "acceptance_cli_output.tmp";
    const std::string command = cli + " " + args + " > " + out_path + " 2>/dev/null";
    exit_code = std::system(command.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return buf.str();
}

void criterion_1(const std::string& cli, const std::string& quivers) {
    const auto start = Clock::now();
    int code = 0;
    const std::string out =
        run_cli(cli, "ar-info -q " + quivers + "/kronecker.json --format json", code);
    const double elapsed = seconds_since(start);
    const bool has_n1 = out.find("\"N\":1") != std::string::npos;
    report(1, "ar-info reports N = 1 on the Kronecker quiver",
           code == 0 && has_n1 && elapsed < 1.0,
           "elapsed " + std::to_string(elapsed) + "s");
}

std::map<const MgsCase*, std::vector<MutationSequence>> criterion_2() {
    std::map<const MgsCase*, std::vector<MutationSequence>> runs;
    bool pass = true;
    std::string detail;
    for (const MgsCase& c : mgs_cases()) {
        ARCategory cat(c.quiver);
        const auto start = Clock::now();
        auto seqs = enumerate_mmgs(cat, c.m);
        const double elapsed = seconds_since(start);
        if (seqs.size() != c.expected || elapsed >= c.budget_seconds) {
            pass = false;
            detail += std::string(c.name) + " m=" + std::to_string(c.m) + " got " +
                      std::to_string(seqs.size()) + "; ";
        }
        runs[&c] = std::move(seqs);
    }
    report(2, "finite enumeration with recorded counts", pass, detail);
    return runs;
}

void criterion_3() {
    bool pass = true;
    std::string detail;
    struct OracleCase {
        QuiverSpec quiver;
        int m;
    };
    for (const OracleCase& c : std::vector<OracleCase>{
             {ts::a2(), 1}, {ts::a2(), 2}, {ts::a3(), 1}, {ts::kronecker(), 1}}) {
        ARCategory cat(c.quiver);
        const auto pruned = enumerate_mmgs(cat, c.m);
        const auto oracle = enumerate_mmgs(cat, c.m, oracle_options());
        if (pruned.size() != oracle.size()) {
            pass = false;
            detail += "m=" + std::to_string(c.m) + " pruned " + std::to_string(pruned.size()) +
                      " vs oracle " + std::to_string(oracle.size()) + "; ";
        }
    }
    // the pinned A2 shape: two walks of lengths 2 and 3
    ARCategory a2(ts::a2());
    const auto seqs = enumerate_mmgs(a2, 1, oracle_options());
    if (seqs.size() != 2 || seqs[0].steps.size() != 2 || seqs[1].steps.size() != 3) {
        pass = false;
        detail += "A2 m=1 shape off; ";
    }
    report(3, "pruned counts equal oracle-mode counts", pass, detail);
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const MgsCase& c : mgs_cases()) {
        ARCategory cat(c.quiver);
        WalkOptions slack;
        slack.window_slack = 2;
        const std::size_t count = enumerate_mmgs(cat, c.m, slack).size();
        if (count != c.expected) {
            pass = false;
            detail += std::string(c.name) + " m=" + std::to_string(c.m) + " slack count " +
                      std::to_string(count) + "; ";
        }
    }
    report(4, "window enlargement by +2 shifts and +2N degrees changes no count", pass, detail);
}

void criterion_5(const std::map<const MgsCase*, std::vector<MutationSequence>>& runs) {
    bool pass = true;
    std::string detail;
    for (const auto& [c, seqs] : runs) {
        ARCategory cat(c->quiver);
        const SearchBounds bounds = mgs_bounds(cat, c->m);
        for (const MutationSequence& seq : seqs) {
            const VerificationReport report_one = verify_sequence(cat, seq, bounds);
            if (!report_one.all_passed()) {
                pass = false;
                detail += std::string(c->name) + " m=" + std::to_string(c->m) + " failed; ";
                break;
            }
        }
    }
    // (e) the one-red walks of criterion 7 respect the visit cap
    for (const QuiverSpec& q : {ts::a2(), ts::kronecker()}) {
        ARCategory cat(q);
        const SiltingObject lambda = algebra_object(cat);
        for (const MutationSequence& seq : enumerate_m_red(cat, lambda, lambda, 1)) {
            std::map<std::string, int> visits;
            for (const SiltingObject& t : seq.objects(cat))
                if (++visits[canonical_key(t)] > 2) {
                    pass = false;
                    detail += "red visit cap; ";
                }
        }
    }
    report(5, "lemma invariant suite over every enumerated object and walk", pass, detail);
}

void criterion_6() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(101);
    long pair_count = 0;
    for (const QuiverSpec& q : {ts::kronecker(), ts::atilde21(), ts::dtilde4(), ts::a3()}) {
        ARCategory cat(q);
        for (int trial = 0; trial < 2600; ++trial) {
            const IndecObject x = ts::random_object(rng, cat);
            const IndecObject y = ts::random_object(rng, cat);
            ++pair_count;
            const HomExtPair he = hom_ext(cat, x, y);
            if (he.hom - he.ext != euler_form(q, cat.dim_vector(x), cat.dim_vector(y))) {
                pass = false;
                detail += "euler mismatch; ";
            }
            const bool projective = x.kind == ObjectKind::Preprojective && x.tau_power == 0;
            if (!projective) {
                const IndecObject tau_x = cat.tau(x);
                if (tau_x.shift == x.shift &&
                    he.ext != hom_ext(cat, y, tau_x).hom) {
                    pass = false;
                    detail += "AR duality mismatch; ";
                }
            }
        }
        // cross-tube orthogonality, exhaustive
        for (int t1 = 1; t1 <= cat.tube_count(); ++t1)
            for (int t2 = 1; t2 <= cat.tube_count(); ++t2) {
                if (t1 == t2) continue;
                for (int i = 1; i <= cat.tube_rank(t1); ++i)
                    for (int j = 1; j <= cat.tube_rank(t2); ++j) {
                        const IndecObject x = cat.regular(t1, i, 1);
                        const IndecObject y = cat.regular(t2, j, 1);
                        if (euler_form(q, cat.dim_vector(x), cat.dim_vector(y)) != 0 ||
                            !(hom_ext(cat, x, y) == HomExtPair{0, 0})) {
                            pass = false;
                            detail += "cross-tube; ";
                        }
                    }
            }
    }
    const double elapsed = seconds_since(start);
    report(6, "hom-oracle consistency over " + std::to_string(pair_count) + " pairs",
           pass && pair_count >= 10000 && elapsed < 60.0,
           detail + "elapsed " + std::to_string(elapsed) + "s");
}

void criterion_7() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    for (const QuiverSpec& q : {ts::a2(), ts::kronecker()}) {
        ARCategory cat(q);
        const SiltingObject lambda = algebra_object(cat);
        const auto seqs = enumerate_m_red(cat, lambda, lambda, 1);
        bool witness = false, cap_attained = false;
        for (const MutationSequence& seq : seqs) {
            if (seq.steps.size() == 2 && seq.steps[0].color == StepColor::Green &&
                seq.steps[1].color == StepColor::Red &&
                seq.steps[1].added == seq.steps[0].removed &&
                seq.steps[1].removed == seq.steps[0].added)
                witness = true;
            std::map<std::string, int> visits;
            for (const SiltingObject& t : seq.objects(cat))
                if (++visits[canonical_key(t)] == 2) cap_attained = true;
        }
        if (seqs.empty() || !witness || !cap_attained) {
            pass = false;
            detail += std::string(q.arrows.size() == 1 ? "A2" : "Kronecker") +
                      " missing witness; ";
        }
    }
    const double elapsed = seconds_since(start);
    report(7, "one-red walks terminate, contain the back-and-forth witness, attain the cap",
           pass && elapsed < 60.0, detail + "elapsed " + std::to_string(elapsed) + "s");
}

void criterion_8(const std::map<const MgsCase*, std::vector<MutationSequence>>& runs) {
    bool pass = true;
    std::string detail;

    ARCategory a2(ts::a2());
    const SiltingObject lambda_a2 = algebra_object(a2);
    if (!(mutate_forward(a2, lambda_a2, 1) ==
          make_silting(a2, {a2.projective(1), a2.injective(1)}))) {
        pass = false;
        detail += "A2 anchor at P2; ";
    }
    if (!(mutate_forward(a2, lambda_a2, 0) ==
          make_silting(a2, {a2.projective(2), a2.projective(1, 1)}))) {
        pass = false;
        detail += "A2 anchor at P1; ";
    }
    ARCategory kron(ts::kronecker());
    if (!(mutate_forward(kron, algebra_object(kron), 1) ==
          make_silting(kron, {kron.projective(1), kron.preprojective(1, 2)}))) {
        pass = false;
        detail += "Kronecker anchor at P2; ";
    }

    // involution across every object visited in the criterion-2 runs
    for (const auto& [c, seqs] : runs) {
        ARCategory cat(c->quiver);
        std::set<std::string> seen;
        for (const MutationSequence& seq : seqs) {
            for (const SiltingObject& t : seq.objects(cat)) {
                if (!seen.insert(canonical_key(t)).second) continue;
                for (int idx = 0; idx < cat.n(); ++idx) {
                    const SiltingObject next = mutate_forward(cat, t, idx);
                    IndecObject added;
                    for (const IndecObject& x : next.summands)
                        if (index_of_summand(t, x) < 0) added = x;
                    if (!(mutate_backward(cat, next, index_of_summand(next, added)) == t)) {
                        pass = false;
                        detail += std::string(c->name) + " involution; ";
                    }
                }
            }
        }
    }
    report(8, "mutation anchors and the backward-after-forward involution", pass, detail);
}

void criterion_9() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    const auto ranks = [](const QuiverSpec& q) {
        std::multiset<int> out;
        for (const Tube& t : compute_tubes(q).tubes) out.insert(t.rank);
        return out;
    };
    if (ranks(ts::dtilde4()) != std::multiset<int>{2, 2, 2}) {
        pass = false;
        detail += "Dtilde4; ";
    }
    if (ranks(ts::atilde21()) != std::multiset<int>{2}) {
        pass = false;
        detail += "Atilde21; ";
    }
    if (ranks(ts::etilde6()) != std::multiset<int>{2, 3, 3}) {
        pass = false;
        detail += "Etilde6; ";
    }
    if (!ranks(ts::kronecker()).empty()) {
        pass = false;
        detail += "Kronecker; ";
    }
    for (const QuiverSpec& q : {ts::atilde21(), ts::dtilde4(), ts::etilde6()}) {
        const IntVector delta = null_root(q);
        for (const Tube& t : compute_tubes(q).tubes) {
            IntVector sum = IntVector::Zero(q.n);
            for (const IntVector& v : t.quasi_simples) sum += v;
            if (sum != delta) {
                pass = false;
                detail += "quasi-simple sum; ";
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(9, "tube ranks and quasi-simple sums", pass && elapsed < 10.0,
           detail + "elapsed " + std::to_string(elapsed) + "s");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: greenseq_acceptance <cli-binary> <quivers-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string quivers = argv[2];

    try {
        criterion_1(cli, quivers);
        const auto runs = criterion_2();
        criterion_3();
        criterion_4();
        criterion_5(runs);
        criterion_6();
        criterion_7();
        criterion_8(runs);
        criterion_9();
    } catch (const std::exception& e) {
        std::cout << "FAIL: unexpected exception: " << e.what() << std::endl;
        return 1;
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
