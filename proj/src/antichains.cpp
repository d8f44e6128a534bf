#include "pilat/antichains.hpp"

#include <unordered_set>

#include "pilat/error.hpp"

namespace pilat {

namespace {

bool incomparable_to_all(const Partition& p, std::span<const Partition> members) {
    for (const auto& m : members)
        if (comparable(p, m)) return false;
    return true;
}

void require_ground(std::span<const Partition> members, int n) {
    for (const auto& m : members)
        if (m.ground_size() != n) throw DomainError("antichain member on a different ground set");
}

}  // namespace

bool is_antichain(std::span<const Partition> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (comparable(members[i], members[j])) return false;
    return true;
}

AntichainReport verify_antichain(std::span<const Partition> members, int n, bool check_maximality,
                                 const Limits& limits) {
    require_ground(members, n);
    if (check_maximality) require_cap("antichain maximality", n, limits.antichain_maximality);
    AntichainReport report;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (comparable(members[i], members[j])) {
                report.comparable_pair = {i, j};
                return report;
            }
    report.is_antichain = true;
    if (!check_maximality) return report;

    report.maximality_checked = true;
    std::unordered_set<Partition, PartitionHash> present(members.begin(), members.end());
    for (RgsIterator it(n); !it.done(); it.next()) {
        Partition p = it.partition();
        if (present.contains(p)) continue;
        if (incomparable_to_all(p, members)) {
            report.extension = std::move(p);
            return report;
        }
    }
    report.is_maximal = true;
    return report;
}

Antichain doubleton_antichain(int n) {
    if (n < 2) throw DomainError("doubleton_antichain: n must be at least 2");
    return atoms(n);
}

Antichain bipartition_antichain(int n) {
    if (n < 2) throw DomainError("bipartition_antichain: n must be at least 2");
    return coatoms(n);
}

Antichain extend_to_maximal_antichain(std::span<const Partition> members, int n, const Limits& limits) {
    require_ground(members, n);
    require_cap("antichain extension", n, limits.antichain_maximality);
    if (!is_antichain(members)) throw DomainError("extend_to_maximal_antichain: input is not an antichain");
    Antichain out(members.begin(), members.end());
    for (RgsIterator it(n); !it.done(); it.next()) {
        Partition p = it.partition();
        if (incomparable_to_all(p, out)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace pilat
