#include "eulerian2/bfile.hpp"

#include <fstream>
#include <sstream>

#include "eulerian2/combinatorics.hpp"

namespace eulerian2 {

namespace {

bool parse_integer(const std::string& token, ExactInt& out)
{
    if (token.empty()) {
        return false;
    }
    std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (start == token.size()) {
        return false;
    }
    for (std::size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
            return false;
        }
    }
    return out.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

}  // namespace

ReferenceData parse_bfile(std::istream& in, std::string sequence_id)
{
    ReferenceData data{std::move(sequence_id), {}};
    std::optional<ExactInt> next_index;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_token;
        std::string value_token;
        std::string extra;
        fields >> index_token >> value_token;
        if (value_token.empty() || (fields >> extra)) {
            throw BFileError("line " + std::to_string(line_no) + ": expected 'index value'");
        }
        ExactInt index;
        ExactInt value;
        if (!parse_integer(index_token, index) || !parse_integer(value_token, value)) {
            throw BFileError("line " + std::to_string(line_no) + ": non-integer token");
        }
        if (next_index && index != *next_index) {
            throw BFileError("line " + std::to_string(line_no) + ": index " + index.get_str() +
                             " is not contiguous (expected " + next_index->get_str() + ")");
        }
        next_index = index + 1;
        data.values.push_back(std::move(value));
    }
    return data;
}

ReferenceData read_bfile(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw BFileError("cannot open " + path.string());
    }
    return parse_bfile(in, path.stem().string());
}

TriangleComparison compare_with_triangle(const ReferenceData& ref, std::optional<Index> max_rows)
{
    TriangleComparison result;
    Index row = 1;
    Index col = 1;
    for (const auto& expected : ref.values) {
        if (max_rows && row > *max_rows) {
            break;
        }
        ++result.compared;
        const ExactInt actual = eulerian2_rec(row, col);
        if (actual != expected) {
            result.divergence = Divergence{result.compared, row, col, expected, actual};
            break;
        }
        if (++col > row) {
            ++row;
            col = 1;
        }
    }
    return result;
}

}  // namespace eulerian2
