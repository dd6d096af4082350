#include "greenseq/errors.hpp"
#include "greenseq/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace greenseq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitWild = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitInternal = 4;

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInputError("cannot open output file: " + path);
    out << data;
    if (!out) throw MalformedInputError("failed to write output file: " + path);
}

ojson matrix_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson vector_json(const IntVector& v) {
    ojson arr = ojson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

std::string summarize(const std::vector<MutationSequence>& seqs) {
    std::map<std::size_t, int> histogram;
    for (const MutationSequence& s : seqs) ++histogram[s.steps.size()];
    std::string out = "sequences: " + std::to_string(seqs.size()) + "\n";
    for (const auto& [len, count] : histogram)
        out += "length " + std::to_string(len) + ": " + std::to_string(count) + "\n";
    return out;
}

struct CommonOptions {
    std::string quiver_path;
    std::string output_path;
    std::string format;
    bool disable_prunes = false;
    int window_slack = 0;
};

WalkOptions walk_options(const CommonOptions& c) {
    WalkOptions o;
    o.use_order_prune = !c.disable_prunes;
    o.use_degree_bound_prune = !c.disable_prunes;
    o.window_slack = c.window_slack;
    return o;
}

ARCategory open_category(const CommonOptions& c) { return ARCategory(load_quiver_file(c.quiver_path)); }

int run(int argc, char** argv) {
    CLI::App app{"silting mutation and green sequence explorer for finite and tame acyclic quivers"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("-q,--quiver", common.quiver_path, "quiver JSON file")->required();
        cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");
        common.format = default_format;
        cmd->add_option("-f,--format", common.format, "output format");
        return cmd;
    };
    auto add_prune_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--disable-prunes", common.disable_prunes,
                      "oracle mode: turn off the order prune and the degree inequality prune");
        cmd->add_option("--window-slack", common.window_slack,
                        "enlarge every window by this many shifts and this many multiples of N");
    };

    auto* cmd_classify = add_common(app.add_subcommand("classify", "representation type"), "summary");

    auto* cmd_ar = add_common(
        app.add_subcommand("ar-info", "Cartan and Coxeter data, null root, tubes, sincerity bound"),
        "summary");

    std::string hom_x, hom_y;
    auto* cmd_hom = add_common(app.add_subcommand("hom", "module and derived hom between two objects"),
                               "json");
    cmd_hom->add_option("x", hom_x, "first object (canonical JSON)")->required();
    cmd_hom->add_option("y", hom_y, "second object (canonical JSON)")->required();

    std::string object_file, direction = "forward";
    int mutate_idx = 0;
    auto* cmd_mutate = add_common(app.add_subcommand("mutate", "single silting mutation"), "json");
    cmd_mutate->add_option("objects", object_file, "silting object file (JSON array)")->required();
    cmd_mutate->add_option("idx", mutate_idx, "summand position in canonical order")->required();
    cmd_mutate->add_option("-d,--direction", direction, "forward|backward");

    int m_mgs = 1;
    auto* cmd_mgs = add_common(app.add_subcommand("enumerate-mgs", "all m-maximal green sequences"),
                               "json");
    cmd_mgs->add_option("-m,--m", m_mgs, "shift target m")->required()->check(CLI::Range(1, 64));
    add_prune_flags(cmd_mgs);

    int m_red = 0;
    std::string from_file, to_file;
    auto* cmd_red = add_common(
        app.add_subcommand("enumerate-red", "all sequences with exactly m red steps"), "json");
    cmd_red->add_option("-m,--m", m_red, "number of red steps")->required()->check(CLI::Range(0, 64));
    cmd_red->add_option("--from", from_file, "start object file (default the algebra)");
    cmd_red->add_option("--to", to_file, "end object file (default the algebra)");
    add_prune_flags(cmd_red);

    std::string verify_file;
    int verify_m = 1, verify_red = 0;
    auto* cmd_verify = add_common(app.add_subcommand("verify", "re-check a sequence file"), "summary");
    cmd_verify->add_option("sequences", verify_file, "JSON-lines sequence file")->required();
    cmd_verify->add_option("-m,--m", verify_m, "m the sequences were enumerated with");
    cmd_verify->add_option("--red", verify_red, "red step count (0 = green walk)");
    cmd_verify->add_option("--from", from_file, "start object file (default the algebra)");

    int m_graph = 1;
    auto* cmd_graph = add_common(app.add_subcommand("export-graph", "green mutation graph"), "dot");
    cmd_graph->add_option("-m,--m", m_graph, "shift target m")->required()->check(CLI::Range(1, 64));
    add_prune_flags(cmd_graph);

    CLI11_PARSE(app, argc, argv);

    if (cmd_classify->parsed()) {
        const QuiverSpec q = load_quiver_file(common.quiver_path);
        write_output(common.output_path, std::string(to_string(classify(q))) + "\n");
        return kExitOk;
    }

    if (cmd_ar->parsed()) {
        const ARCategory cat = open_category(common);
        if (common.format == "json") {
            ojson j;
            j["class"] = to_string(cat.type());
            j["n"] = cat.n();
            j["cartan"] = matrix_json(cat.cartan());
            j["coxeter"] = matrix_json(cat.coxeter());
            if (cat.tame()) {
                j["delta"] = vector_json(cat.delta());
                j["N"] = cat.sincerity_bound().N;
                j["H"] = cat.sincerity_bound().H;
                ojson tubes = ojson::array();
                for (const Tube& t : cat.tubes().tubes) {
                    ojson tj;
                    tj["rank"] = t.rank;
                    ojson qs = ojson::array();
                    for (const IntVector& v : t.quasi_simples) qs.push_back(vector_json(v));
                    tj["quasi_simples"] = std::move(qs);
                    tubes.push_back(std::move(tj));
                }
                j["tubes"] = std::move(tubes);
            }
            write_output(common.output_path, j.dump() + "\n");
        } else {
            std::ostringstream out;
            out << "class: " << to_string(cat.type()) << "\n";
            out << "n: " << cat.n() << "\n";
            out << "cartan: " << matrix_json(cat.cartan()).dump() << "\n";
            out << "coxeter: " << matrix_json(cat.coxeter()).dump() << "\n";
            if (cat.tame()) {
                out << "delta: " << vector_json(cat.delta()).dump() << "\n";
                out << "N: " << cat.sincerity_bound().N << "\n";
                out << "H: " << cat.sincerity_bound().H << "\n";
                out << "tubes: " << cat.tube_count() << "\n";
                for (int t = 1; t <= cat.tube_count(); ++t) {
                    const Tube& tube = cat.tubes().tubes[t - 1];
                    out << "tube " << t << ": rank " << tube.rank << ", quasi-simples [";
                    for (std::size_t i = 0; i < tube.quasi_simples.size(); ++i)
                        out << (i ? "," : "") << vector_json(tube.quasi_simples[i]).dump();
                    out << "]\n";
                }
            }
            write_output(common.output_path, out.str());
        }
        return kExitOk;
    }

    if (cmd_hom->parsed()) {
        const ARCategory cat = open_category(common);
        const IndecObject x = decode_object_string(cat, hom_x);
        const IndecObject y = decode_object_string(cat, hom_y);
        const HomExtPair he = hom_ext(cat, x, y);
        ojson j;
        j["hom"] = he.hom;
        j["ext"] = he.ext;
        j["derived"] = hom_derived(cat, x, y);
        write_output(common.output_path, j.dump() + "\n");
        return kExitOk;
    }

    if (cmd_mutate->parsed()) {
        const ARCategory cat = open_category(common);
        const SiltingObject t = make_silting(cat, load_object_list_file(cat, object_file));
        if (mutate_idx < 0 || mutate_idx >= static_cast<int>(t.summands.size()))
            throw MalformedInputError("mutation index out of range");
        SiltingObject result;
        if (direction == "forward")
            result = mutate_forward(cat, t, mutate_idx);
        else if (direction == "backward")
            result = mutate_backward(cat, t, mutate_idx);
        else
            throw MalformedInputError("direction must be forward or backward");
        write_output(common.output_path, encode_silting_json(result) + "\n");
        return kExitOk;
    }

    if (cmd_mgs->parsed()) {
        const ARCategory cat = open_category(common);
        const auto seqs = enumerate_mmgs(cat, m_mgs, walk_options(common));
        write_output(common.output_path,
                     common.format == "summary" ? summarize(seqs) : emit_sequences(seqs));
        return kExitOk;
    }

    if (cmd_red->parsed()) {
        const ARCategory cat = open_category(common);
        const SiltingObject from = from_file.empty()
                                       ? algebra_object(cat)
                                       : make_silting(cat, load_object_list_file(cat, from_file));
        const SiltingObject to = to_file.empty()
                                     ? algebra_object(cat)
                                     : make_silting(cat, load_object_list_file(cat, to_file));
        const auto seqs = enumerate_m_red(cat, from, to, m_red, walk_options(common));
        write_output(common.output_path,
                     common.format == "summary" ? summarize(seqs) : emit_sequences(seqs));
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        const ARCategory cat = open_category(common);
        const SiltingObject start = from_file.empty()
                                        ? algebra_object(cat)
                                        : make_silting(cat, load_object_list_file(cat, from_file));
        std::ifstream in(verify_file);
        if (!in) throw MalformedInputError("cannot open sequence file: " + verify_file);
        const SearchBounds bounds =
            verify_red > 0 ? red_bounds(cat, start, start, verify_red) : mgs_bounds(cat, verify_m);
        std::ostringstream out;
        std::string line;
        int index = 0, failures = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const MutationSequence seq = decode_sequence_line(cat, start, line);
            const VerificationReport report = verify_sequence(cat, seq, bounds);
            int failed_checks = 0;
            for (const CheckEntry& e : report.entries) {
                if (e.pass) continue;
                ++failed_checks;
                out << "sequence " << index << ": FAIL " << e.check;
                if (e.index >= 0) out << " at " << e.index;
                if (!e.detail.empty()) out << " (" << e.detail << ")";
                out << "\n";
            }
            if (failed_checks == 0)
                out << "sequence " << index << ": PASS\n";
            else
                ++failures;
            ++index;
        }
        out << "verified " << index << " sequences, " << failures << " with failures\n";
        write_output(common.output_path, out.str());
        return failures == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_graph->parsed()) {
        const ARCategory cat = open_category(common);
        const ExchangeGraph g = exchange_graph(cat, m_graph, walk_options(common));
        if (common.format == "json")
            write_output(common.output_path, emit_graph_json(g) + "\n");
        else if (common.format == "summary")
            write_output(common.output_path, "nodes: " + std::to_string(g.nodes.size()) +
                                                 "\nedges: " + std::to_string(g.edges.size()) + "\n");
        else
            write_output(common.output_path, emit_dot(g));
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const WildQuiverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWild;
    } catch (const MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const NotSiltingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
