#include "greenseq/json_io.hpp"

#include "greenseq/errors.hpp"

#include <fstream>
#include <sstream>

namespace greenseq {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw MalformedInputError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const nlohmann::json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_integer())
        throw MalformedInputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

} // namespace

QuiverSpec parse_quiver_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("quiver file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw MalformedInputError("quiver file must hold a JSON object");
    QuiverSpec q;
    q.n = int_field(j, "vertices");
    const auto& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw MalformedInputError("\"arrows\" must be an array");
    for (const auto& a : arrows) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw MalformedInputError("each arrow must be a pair of vertex indices");
        q.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    validate_quiver(q);
    return q;
}

QuiverSpec load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open quiver file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver_json(buf.str());
}

ojson encode_object(const IndecObject& x) {
    ojson j;
    switch (x.kind) {
        case ObjectKind::Preprojective:
            j["class"] = "preproj";
            j["tau"] = x.tau_power;
            j["vertex"] = x.vertex;
            break;
        case ObjectKind::Preinjective:
            j["class"] = "preinj";
            j["tau"] = x.tau_power;
            j["vertex"] = x.vertex;
            break;
        case ObjectKind::Regular:
            j["class"] = "regular";
            j["tube"] = x.tube;
            j["socle"] = x.socle;
            j["len"] = x.len;
            break;
    }
    j["shift"] = x.shift;
    return j;
}

IndecObject decode_object(const ARCategory& cat, const nlohmann::json& j) {
    if (!j.is_object()) throw MalformedInputError("object encoding must be a JSON object");
    const auto& cls = field(j, "class");
    if (!cls.is_string()) throw MalformedInputError("\"class\" must be a string");
    const std::string kind = cls.get<std::string>();
    const int shift = j.contains("shift") ? int_field(j, "shift") : 0;
    if (kind == "preproj")
        return cat.preprojective(int_field(j, "tau"), int_field(j, "vertex"), shift);
    if (kind == "preinj")
        return cat.preinjective(int_field(j, "tau"), int_field(j, "vertex"), shift);
    if (kind == "regular")
        return cat.regular(int_field(j, "tube"), int_field(j, "socle"), int_field(j, "len"), shift);
    throw MalformedInputError("unknown object class \"" + kind + "\"");
}

std::string encode_object_string(const IndecObject& x) { return encode_object(x).dump(); }

IndecObject decode_object_string(const ARCategory& cat, const std::string& text) {
    try {
        return decode_object(cat, nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("object encoding is not valid JSON: ") + e.what());
    }
}

std::string encode_silting_json(const SiltingObject& t) {
    ojson arr = ojson::array();
    for (const IndecObject& x : t.summands) arr.push_back(encode_object(x));
    return arr.dump();
}

std::vector<IndecObject> decode_object_list(const ARCategory& cat, const nlohmann::json& j) {
    if (!j.is_array()) throw MalformedInputError("object list must be a JSON array");
    std::vector<IndecObject> out;
    for (const auto& e : j) out.push_back(decode_object(cat, e));
    return out;
}

std::vector<IndecObject> load_object_list_file(const ARCategory& cat, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open object file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("object file is not valid JSON: ") + e.what());
    }
    return decode_object_list(cat, j);
}

std::string encode_sequence_line(const MutationSequence& seq) {
    ojson j;
    j["length"] = seq.steps.size();
    ojson steps = ojson::array();
    for (const MutationStep& s : seq.steps) {
        ojson step;
        step["pos"] = s.pos;
        step["out"] = encode_object(s.removed);
        step["in"] = encode_object(s.added);
        step["color"] = to_string(s.color);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump();
}

MutationSequence decode_sequence_line(const ARCategory& cat, const SiltingObject& start,
                                      const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("sequence line is not valid JSON: ") + e.what());
    }
    const auto& steps = field(j, "steps");
    if (!steps.is_array()) throw MalformedInputError("\"steps\" must be an array");

    MutationSequence seq;
    seq.start = start;
    SiltingObject cur = start;
    for (const auto& sj : steps) {
        MutationStep step;
        step.pos = int_field(sj, "pos");
        step.removed = decode_object(cat, field(sj, "out"));
        step.added = decode_object(cat, field(sj, "in"));
        const std::string color = field(sj, "color").get<std::string>();
        if (color == "green")
            step.color = StepColor::Green;
        else if (color == "red")
            step.color = StepColor::Red;
        else
            throw MalformedInputError("unknown step color \"" + color + "\"");
        if (step.pos < 0 || step.pos >= static_cast<int>(cur.summands.size()) ||
            !(cur.summands[step.pos] == step.removed))
            throw MalformedInputError("step does not match the object it applies to");
        std::vector<IndecObject> xs = cur.summands;
        xs[step.pos] = step.added;
        cur = make_silting(cat, std::move(xs));
        seq.steps.push_back(std::move(step));
    }
    if (j.contains("length") && j["length"].get<std::size_t>() != seq.steps.size())
        throw MalformedInputError("declared length does not match the number of steps");
    seq.end = cur;
    return seq;
}

std::string emit_sequences(const std::vector<MutationSequence>& seqs) {
    std::string out;
    for (const MutationSequence& s : seqs) {
        out += encode_sequence_line(s);
        out += '\n';
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string emit_dot(const ExchangeGraph& g) {
    std::string out = "digraph exchange {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" +
               dot_escape(encode_silting_json(g.nodes[i])) + "\"];\n";
    }
    for (const auto& [a, b] : g.edges) {
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) +
               " [color=green,style=solid];\n";
    }
    out += "}\n";
    return out;
}

std::string emit_graph_json(const ExchangeGraph& g) {
    ojson j;
    ojson nodes = ojson::array();
    for (const SiltingObject& t : g.nodes) {
        ojson arr = ojson::array();
        for (const IndecObject& x : t.summands) arr.push_back(encode_object(x));
        nodes.push_back(std::move(arr));
    }
    j["nodes"] = std::move(nodes);
    ojson edges = ojson::array();
    for (const auto& [a, b] : g.edges) edges.push_back(ojson::array({a, b}));
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace greenseq
