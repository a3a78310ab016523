#include "covmat/covering_io.hpp"

#include <fstream>
#include <sstream>

#include "covmat/errors.hpp"

namespace covmat {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

bool is_significant(const std::vector<std::string>& tokens) {
    return !tokens.empty() && tokens.front()[0] != '#';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Covering parse_covering(std::istream& in) {
    UniversePtr universe;
    std::vector<ElementSet> blocks;
    std::vector<std::size_t> block_lines;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = split_ws(line);
        if (!is_significant(tokens)) continue;

        if (!universe) {
            try {
                universe = Universe::make(std::move(tokens));
            } catch (const Error& e) {
                throw CoveringParseError(line_number, e.what());
            }
            continue;
        }
        try {
            blocks.push_back(ElementSet::of(universe, tokens));
            block_lines.push_back(line_number);
        } catch (const UnknownElementError& e) {
            throw CoveringParseError(line_number, e.what());
        }
    }
    if (!universe) throw CoveringParseError(line_number, "missing universe line");
    if (blocks.empty()) throw CoveringParseError(line_number, "no block lines after the universe");

    // Union coverage failures carry no single line; EmptyBlock cannot happen
    // here because every significant line has at least one token.
    return build_covering(std::move(universe), std::move(blocks));
}

Covering parse_covering_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_covering(in);
}

Covering parse_covering_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open covering file '" + path + "'");
    return parse_covering(in);
}

std::string print_covering(const Covering& cov) {
    std::ostringstream out;
    const auto& elements = cov.universe()->elements();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out << ' ';
        out << elements[i];
    }
    out << '\n';
    for (const auto& block : cov.blocks()) {
        const auto names = block.names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) out << ' ';
            out << names[i];
        }
        out << '\n';
    }
    return out.str();
}

ElementSet parse_set_spec(const UniversePtr& universe, std::string_view spec) {
    ElementSet result(universe);
    spec = trim(spec);
    if (spec.empty() || spec == "{}") return result;

    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const auto piece =
            trim(spec.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (piece.empty()) throw Error("empty element name in set spec '" + std::string(spec) + "'");
        result.add(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return result;
}

}  // namespace covmat
