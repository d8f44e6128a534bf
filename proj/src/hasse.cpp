#include "pilat/hasse.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "pilat/version.hpp"

namespace pilat {

namespace {

void write_header(std::ostream& out) {
    out << "// pilat " << kVersion << "\n";
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
}

void write_node(std::ostream& out, std::size_t id, const Partition& p) {
    out << "  n" << id << " [label=\"" << format(p) << "\"];\n";
}

}  // namespace

std::string hasse_dot(int n, const Limits& limits) {
    require_cap("hasse diagram", n, limits.hasse);
    const LatticeUniverse u = LatticeUniverse::build(n, limits);
    std::ostringstream out;
    write_header(out);
    for (std::size_t i = 0; i < u.size(); ++i) write_node(out, i, u[i]);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (const auto& up : upper_covers(u[i])) out << "  n" << i << " -> n" << u.index_of(up) << ";\n";
    out << "}\n";
    return out.str();
}

std::string hasse_dot(std::span<const Partition> members) {
    std::ostringstream out;
    write_header(out);
    for (std::size_t i = 0; i < members.size(); ++i) write_node(out, i, members[i]);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (!less(members[i], members[j])) continue;
            bool direct = true;
            for (std::size_t k = 0; k < members.size() && direct; ++k)
                if (less(members[i], members[k]) && less(members[k], members[j])) direct = false;
            if (direct) out << "  n" << i << " -> n" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::size_t covering_pair_count(int n) {
    std::size_t total = 0;
    for (RgsIterator it(n); !it.done(); it.next()) {
        int blocks = 0;
        for (int label : it.labels()) blocks = std::max(blocks, label + 1);
        total += static_cast<std::size_t>(blocks) * static_cast<std::size_t>(blocks > 0 ? blocks - 1 : 0) / 2;
    }
    return total;
}

}  // namespace pilat
