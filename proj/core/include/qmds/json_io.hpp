#pragma once

#include <string>

#include "qmds/puncture.hpp"

namespace qmds {

// JSON serialization of the core objects.  Schemas:
//   field        {"p": int, "m": int, "modulus": [c0..cm]}
//   linear code  {"field": ..., "n": int, "k": int, "generator": [[int..]..]}
//   pair code    {"field": ..., "n": int, "r": int, "generator": [[int..]..]}
//   quantum code {"params": {"n","k","d","q","pure","distance_status"},
//                 "stabilizer": <pair code>, "provenance": str}
// Matrix entries are field-element indices.  Loading a field checks the
// stored modulus against the canonical one for (p, m): indices are only
// meaningful relative to the modulus, so a mismatch is an error.

std::string to_json(const FieldPtr& f, int indent = -1);
std::string to_json(const LinearCode& c, int indent = -1);
std::string to_json(const PairCode& c, int indent = -1);
std::string to_json(const QuantumCode& c, int indent = -1);

FieldPtr field_from_json(const std::string& text);
LinearCode linear_code_from_json(const std::string& text);
PairCode pair_code_from_json(const std::string& text);
QuantumCode quantum_code_from_json(const std::string& text);

const char* to_string(Purity p);
const char* to_string(DistanceStatus s);
Purity purity_from_string(const std::string& s);
DistanceStatus distance_status_from_string(const std::string& s);

}  // namespace qmds
