#pragma once

#include "greenseq/walker.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace greenseq {

using ojson = nlohmann::ordered_json;

/// Quiver file: {"vertices": n, "arrows": [[s, t], ...]}, 1-based vertices,
/// parallel arrows repeated.
QuiverSpec parse_quiver_json(const std::string& text);
QuiverSpec load_quiver_file(const std::string& path);

/// Canonical object encoding, byte-exact field order:
/// {"class":"preproj"|"preinj"|"regular","tau":p,"vertex":j,
///  "tube":t,"socle":i,"len":l,"shift":k} with unused fields omitted.
ojson encode_object(const IndecObject& x);
IndecObject decode_object(const ARCategory& cat, const nlohmann::json& j);

std::string encode_object_string(const IndecObject& x);
IndecObject decode_object_string(const ARCategory& cat, const std::string& text);

/// JSON array of the canonically sorted summands.
std::string encode_silting_json(const SiltingObject& t);
std::vector<IndecObject> decode_object_list(const ARCategory& cat, const nlohmann::json& j);
std::vector<IndecObject> load_object_list_file(const ARCategory& cat, const std::string& path);

/// One sequence per line:
/// {"length":L,"steps":[{"pos":i,"out":obj,"in":obj,"color":"green"|"red"}]}
std::string encode_sequence_line(const MutationSequence& seq);
MutationSequence decode_sequence_line(const ARCategory& cat, const SiltingObject& start,
                                      const std::string& line);
std::string emit_sequences(const std::vector<MutationSequence>& seqs);

std::string emit_dot(const ExchangeGraph& g);
std::string emit_graph_json(const ExchangeGraph& g);

} // namespace greenseq
