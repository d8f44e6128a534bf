#include "pilat/lattice_enum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "pilat/error.hpp"

namespace pilat {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

}  // namespace

Limits Limits::from_env() {
    Limits limits;
    const char* raw = std::getenv("PILAT_MAX_N");
    if (raw == nullptr || *raw == '\0') return limits;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 0) throw DomainError("PILAT_MAX_N must be a non-negative integer");
    int cap = static_cast<int>(std::min<long>(v, kMaxGround));
    limits.enumerate = limits.maximal_chains = limits.antichain_maximality = cap;
    limits.complements = limits.census = limits.ortho_search = limits.ortho_exhaustive = cap;
    limits.hasse = cap;
    limits.keyframe_k = cap == 0 ? 0 : std::bit_width(static_cast<unsigned>(cap)) - 1;
    return limits;
}

void require_cap(const char* what, int value, int cap) {
    if (value > cap) throw CapExceeded(what, value, cap);
}

RgsIterator::RgsIterator(int n) : labels_(static_cast<std::size_t>(n), 0), prefix_max_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxGround) throw DomainError("RgsIterator: bad ground-set size");
}

void RgsIterator::next() {
    if (done_) return;
    const std::size_t n = labels_.size();
    for (std::size_t i = n; i-- > 1;) {
        if (labels_[i] <= prefix_max_[i - 1]) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return;
        }
    }
    done_ = true;
}

LatticeUniverse LatticeUniverse::build(int n, const Limits& limits) {
    require_cap("enumerate", n, limits.enumerate);
    LatticeUniverse u;
    u.n_ = n;
    u.elements_.reserve(static_cast<std::size_t>(bell(n)));
    for_each_partition(n, [&](Partition p) { u.elements_.push_back(std::move(p)); });

    const auto un = static_cast<std::size_t>(n);
    u.completions_.assign(un + 1, std::vector<std::uint64_t>(un + 2, 0));
    for (std::size_t m = 0; m <= un + 1; ++m) u.completions_[un][m] = 1;
    for (std::size_t i = un; i-- > 1;)
        for (std::size_t m = 0; m + 1 <= un; ++m)
            u.completions_[i][m] = (m + 1) * u.completions_[i + 1][m] + u.completions_[i + 1][m + 1];
    return u;
}

std::size_t LatticeUniverse::index_of(const Partition& p) const {
    if (p.ground_size() != n_) throw DomainError("index_of: ground-set mismatch");
    if (n_ == 0) return 0;
    const LabelVector labels = p.labels();
    std::uint64_t rank = 0;
    int prefix_max = 0;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        for (int v = 0; v < labels[i]; ++v)
            rank += completions_[i + 1][static_cast<std::size_t>(std::max(prefix_max, v))];
        prefix_max = std::max(prefix_max, labels[i]);
    }
    return static_cast<std::size_t>(rank);
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
    if (k > n) return 0;
    // row[j] = S(i, j), built up to i = n
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            auto uj = static_cast<std::size_t>(j);
            row[uj] = checked_add(checked_mul(static_cast<std::uint64_t>(j), row[uj], "stirling2"), row[uj - 1],
                                  "stirling2");
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

std::uint64_t bell(int n) {
    if (n < 0) throw DomainError("bell: negative argument");
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total = checked_add(total, stirling2(n, k), "bell");
    return total;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(n - k + i), "binomial") / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<Partition> atoms(int n) {
    std::vector<Partition> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(diag(ElementSet{i, j}, n));
    std::sort(out.begin(), out.end(), rgs_less);
    return out;
}

std::vector<Partition> coatoms(int n) {
    std::vector<Partition> out;
    if (n < 2) return out;
    if (n - 1 >= 63) throw OverflowError("coatoms: too many two-block partitions");
    // the block holding 0 is {0} plus a proper subset of {1..n-1}
    const std::uint64_t count = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        ElementSet first{0};
        for (int e = 1; e < n; ++e)
            if ((mask >> (e - 1)) & 1u) first.insert(e);
        out.push_back(Partition::from_blocks(n, {first, ElementSet::range(0, n) - first}));
    }
    std::sort(out.begin(), out.end(), rgs_less);
    return out;
}

}  // namespace pilat
