#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cayley/counterexample.hpp"
#include "cayley/growth.hpp"
#include "cayley/isoperimetry.hpp"
#include "cayley/ringlike.hpp"
#include "cayley/vertex_set.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

/// Set literal: {"group": "<grammar>", "vertices": [[x, y], ...]} or, for
/// free groups, {"group": "free:R", "vertices": ["aB", ...]}.
Json set_to_json(const VertexSet& a);
VertexSet set_from_json(const Json& j);

VertexSet read_set_file(const std::filesystem::path& path);
void write_set_file(const std::filesystem::path& path, const VertexSet& a);

Json vertex_to_json(const GroupGraph& host, const Vertex& v);
Vertex vertex_from_json(const GroupGraph& host, const Json& j);

Json to_json(const GrowthReport& r);
Json to_json(const VaropoulosResult& r);
Json to_json(const SeparationReport& r);
Json to_json(const counterexample::CounterexampleStats& s);
Json to_json(const counterexample::FindResult& r);
Json to_json(const counterexample::TorusEmbedding& e);
Json to_json(const ringlike::CyclicSystem& sys);
Json to_json(const ringlike::IntervalCover& c, const ringlike::CyclicSystem& sys);
Json to_json(const ringlike::Branch2Report& r);

}  // namespace cayley
