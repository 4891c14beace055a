#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "twogroups/bibundle.hpp"
#include "twogroups/common.hpp"
#include "twogroups/covering.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/group.hpp"
#include "twogroups/groupoid.hpp"
#include "twogroups/simplicial.hpp"
#include "twogroups/two_group.hpp"

namespace twogroups::io {

using Json = nlohmann::ordered_json;

/// Readers refer to everything by name and throw StructuralError on
/// missing fields, unknown names and duplicate names. Missing table entries
/// are read as kNone and left for the validators to report.

Group read_group(const Json& j);
Json write_group(const Group& g);

FiniteGroupoid read_groupoid(const Json& j);
Json write_groupoid(const FiniteGroupoid& g);

CoherentTwoGroup read_two_group(const Json& j);
Json write_two_group(const CoherentTwoGroup& t);

/// "partial": {γ: x}; either "action": [[x, γ, x*γ], ...] or
/// "trivial_action": true.
CrossedModule read_crossed_module(const Json& j);
Json write_crossed_module(const CrossedModule& x);

/// "faces": {"n": [[d_i of each element of X_n, in layer order] for i]}.
TruncatedSimplicialSet read_simplicial(const Json& j);
Json write_simplicial(const TruncatedSimplicialSet& x);

PartialGroup read_partial_group(const Json& j);
Json write_partial_group(const PartialGroup& p);

Bibundle read_bibundle(const Json& j);
Json write_bibundle(const Bibundle& b);

/// "cells2" are edge words over edge ids ("e1 e2^-1"); "action" holds, per
/// Γ element, the images of the vertices, edges and cells (cells by index).
EquivariantComplex read_complex(const Json& j);
Json write_complex(const EquivariantComplex& c);

Json write_report(const ValidationReport& r);

/// Parses text, wrapping parse errors into StructuralError.
Json parse(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum_hex(std::string_view bytes);

}  // namespace twogroups::io
