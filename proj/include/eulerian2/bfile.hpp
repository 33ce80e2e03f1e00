#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian2/exact.hpp"

namespace eulerian2 {

/// Terms of an OEIS sequence in b-file order (1-based indices are implicit).
struct ReferenceData {
    std::string sequence_id;
    std::vector<ExactInt> values;
};

/// Malformed b-file content or an unreadable file.
class BFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "index value" lines. Blank lines and lines starting with '#' are
/// skipped. Indices must be contiguous, starting from the first index seen.
ReferenceData parse_bfile(std::istream& in, std::string sequence_id = {});

/// Reads a b-file from disk. The sequence id defaults to the file stem.
ReferenceData read_bfile(const std::filesystem::path& path);

struct Divergence {
    std::size_t position;  // 1-based position in row-major triangle order
    Index row;
    Index column;
    ExactInt expected;  // reference value
    ExactInt actual;    // computed value
};

/// Compares reference values, read row by row as <<1,1>>, <<2,1>>, <<2,2>>, ...,
/// against the recurrence. Stops after `max_rows` rows when given.
/// Returns the number of values compared and the first divergence, if any.
struct TriangleComparison {
    std::size_t compared = 0;
    std::optional<Divergence> divergence;
};
TriangleComparison compare_with_triangle(const ReferenceData& ref, std::optional<Index> max_rows = std::nullopt);

}  // namespace eulerian2
