#pragma once

#include <filesystem>
#include <iosfwd>

#include "bfrg/truth_table.hpp"

namespace bfrg {

// BFRG v1: the ASCII line "BFRG 1 n=<arity>\n" followed by ceil(2^n / 8) raw
// bytes. Bit 0 of byte 0 is input index 0; unused high bits of the last byte
// must be zero.

void write_table(const TruthTable& t, std::ostream& out);
void write_table(const TruthTable& t, const std::filesystem::path& path);

TruthTable read_table(std::istream& in);
TruthTable read_table(const std::filesystem::path& path);

}  // namespace bfrg
