#pragma once

#include <iosfwd>
#include <string>

#include "trop/driver.hpp"

namespace trop {

// Instance files: {"prime": P, "n": N, "fn": [coeff strings, ascending],
// "tail": [[...], ...]} with rationals serialized as "a" or "a/b".
// Result files: {"points": [{"coords": [...], "mult": M}, ...]} sorted
// lexicographically; projections onto proper subsets additionally carry
// "coordinates": [labels].

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Projection parse_result(const std::string& text);
std::string serialize_result(const Projection& p, int nvars);

Instance load_instance(const std::string& path);
// path "-" writes to stdout.
void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream);

}  // namespace trop
