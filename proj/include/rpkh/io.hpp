#pragma once

#include <string>

#include "rpkh/algebra.hpp"
#include "rpkh/diagram.hpp"
#include "rpkh/homology.hpp"

namespace rpkh {

// Diagram file format:
// {
//   "name": str,
//   "boundary_points": 2k,
//   "crossings": [ { "over_pair": "02"|"13" }, ... ],
//   "arcs": [ [A, B], ... ]            endpoint: ["x", crossing, slot] | ["b", index]
//   "free_loops": int                  optional, crossingless affine diagrams only
//   "orientation_seeds": [[arc, dir], ...]   optional
//   "basepoint_face": int              optional P override (face orbit id)
//   "marked_arc": int                  optional M override
//   "crosscap_face_dart": [arc, end]   optional, affine diagrams only
// }
DiagramRP2 diagram_from_json(const std::string& text);
DiagramRP2 load_diagram(const std::string& path);
std::string diagram_to_json(const DiagramRP2& d);

// Dyad file format:
// { "name": str, "V0": [[gen, qdeg], ...], "V1": [...],
//   "f": { gen: [targets...] }, "g": { gen: [targets...] } }
// Missing keys in f/g mean zero columns.
Dyad dyad_from_json(const std::string& text);
Dyad load_dyad(const std::string& path);
std::string dyad_to_json(const Dyad& a);

// Builtin name or a path to a dyad file.
Dyad resolve_dyad(const std::string& name_or_path);

std::string dims_to_json(const DimTable& dims);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rpkh
