#pragma once

#include <string>
#include <string_view>

#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::io {

/// Parses "index value" lines; '#' lines and blank lines are skipped.
/// Throws MalformedLine or NonContiguousIndex with the 1-based line number.
seqgen::Sequence parse_bfile(std::string_view text);

/// One "index value" line per term, newline-terminated.
std::string render_bfile(const seqgen::Sequence& s);

}  // namespace seqexp::io
