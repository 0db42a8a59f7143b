#pragma once

#include "turan/constructions.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"

#include <cctype>
#include <regex>
#include <string>
#include <vector>

namespace turan {

/// Turn a pattern spec into a graph. Named shortcuts:
///   K7        complete graph
///   K2x3x4    complete multipartite with the given part sizes
///   K3^4      complete multipartite, 4 parts of size 3
///   C5        cycle
///   P4        path on 4 vertices
///   T10,3     Turan graph
/// Anything else is decoded as graph6. The two vocabularies cannot
/// collide: a digit after the letter is never valid graph6 payload.
inline Graph parse_pattern(const std::string& spec) {
    static const std::regex clique_re(R"(K(\d+))");
    static const std::regex multi_re(R"(K(\d+)((?:x\d+)+))");
    static const std::regex power_re(R"(K(\d+)\^(\d+))");
    static const std::regex cycle_re(R"(C(\d+))");
    static const std::regex path_re(R"(P(\d+))");
    static const std::regex turan_re(R"(T(\d+),(\d+))");

    std::smatch m;
    if (std::regex_match(spec, m, clique_re)) return clique(std::stoi(m[1]));
    if (std::regex_match(spec, m, multi_re)) {
        std::vector<int> sizes{std::stoi(m[1])};
        const std::string rest = m[2];
        for (std::size_t at = 0; at < rest.size();) {
            const std::size_t next = rest.find('x', at + 1);
            sizes.push_back(std::stoi(rest.substr(at + 1, next - at - 1)));
            at = next == std::string::npos ? rest.size() : next;
        }
        return complete_multipartite(sizes);
    }
    if (std::regex_match(spec, m, power_re))
        return complete_multipartite(std::vector<int>(static_cast<std::size_t>(std::stoi(m[2])), std::stoi(m[1])));
    if (std::regex_match(spec, m, cycle_re)) return cycle_graph(std::stoi(m[1]));
    if (std::regex_match(spec, m, path_re)) return path_graph(std::stoi(m[1]));
    if (std::regex_match(spec, m, turan_re)) return turan_graph(std::stoi(m[1]), std::stoi(m[2]));

    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P' || spec[0] == 'T') &&
        std::isdigit(static_cast<unsigned char>(spec[1])))
        throw std::invalid_argument("parse_pattern: '" + spec +
                                    "' looks like a named pattern but matches none of K<n>, K<a>x<b>..., "
                                    "K<a>^<r>, C<n>, P<n>, T<n>,<r>");
    return graph6_decode(spec);
}

}  // namespace turan
