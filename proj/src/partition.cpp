#include "pilat/partition.hpp"

#include <algorithm>
#include <charconv>

#include "pilat/error.hpp"
#include "pilat/union_find.hpp"

namespace pilat {

namespace {

void check_ground_size(int n) {
    if (n < 0 || n > kMaxGround)
        throw DomainError("ground-set size " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxGround) + "]");
}

void sort_blocks(std::vector<ElementSet>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.min() < b.min(); });
}

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::vector<Element>> tokenize(std::string_view text) {
    std::vector<std::vector<Element>> blocks;
    text = trim(text);
    if (text.empty()) return blocks;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        std::string_view piece = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
        std::vector<Element> ids;
        std::size_t i = 0;
        while (i < piece.size()) {
            if (piece[i] == ' ' || piece[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < piece.size() && piece[j] != ' ' && piece[j] != '\t') ++j;
            std::string_view tok = piece.substr(i, j - i);
            long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
                throw ParseError("invalid element id '" + std::string(tok) + "'");
            if (value >= kMaxGround)
                throw ParseError("element " + std::string(tok) + " exceeds ground cap " +
                                 std::to_string(kMaxGround));
            ids.push_back(static_cast<Element>(value));
            i = j;
        }
        if (ids.empty()) throw ParseError("empty block");
        blocks.push_back(std::move(ids));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return blocks;
}

Partition from_ids(const std::vector<std::vector<Element>>& ids, int n) {
    std::vector<ElementSet> blocks;
    blocks.reserve(ids.size());
    for (const auto& block : ids) {
        ElementSet s;
        for (Element e : block) {
            if (s.contains(e)) throw ParseError("duplicate element " + std::to_string(e));
            s.insert(e);
        }
        blocks.push_back(s);
    }
    return Partition::from_blocks(n, std::move(blocks));
}

}  // namespace

Partition Partition::from_blocks(int n, std::vector<ElementSet> blocks) {
    check_ground_size(n);
    ElementSet seen;
    for (const auto& b : blocks) {
        if (b.empty()) throw ParseError("empty block");
        if (b.max() >= n)
            throw ParseError("element " + std::to_string(b.max()) + " out of range for n=" +
                             std::to_string(n));
        if (seen.intersects(b))
            throw ParseError("duplicate element " + std::to_string((seen & b).min()));
        seen |= b;
    }
    if (seen.size() != n) {
        ElementSet missing = ElementSet::range(0, n) - seen;
        throw ParseError("missing element " + std::to_string(missing.min()));
    }
    sort_blocks(blocks);
    return Partition(n, std::move(blocks));
}

Partition Partition::from_labels(std::span<const int> labels) {
    int n = static_cast<int>(labels.size());
    check_ground_size(n);
    std::vector<ElementSet> blocks;
    std::vector<int> slot;  // label -> block index
    for (int i = 0; i < n; ++i) {
        int lab = labels[static_cast<std::size_t>(i)];
        if (lab < 0) throw DomainError("negative block label");
        if (static_cast<std::size_t>(lab) >= slot.size()) slot.resize(static_cast<std::size_t>(lab) + 1, -1);
        int& b = slot[static_cast<std::size_t>(lab)];
        if (b < 0) {
            b = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(b)].insert(i);
    }
    // first-occurrence order is already ascending by least element
    return Partition(n, std::move(blocks));
}

int Partition::block_of(Element e) const {
    for (int i = 0; i < block_count(); ++i)
        if (blocks_[static_cast<std::size_t>(i)].contains(e)) return i;
    throw DomainError("element " + std::to_string(e) + " not in ground set");
}

LabelVector Partition::labels() const {
    LabelVector out(static_cast<std::size_t>(n_));
    for (int i = 0; i < block_count(); ++i)
        blocks_[static_cast<std::size_t>(i)].for_each([&](Element e) { out[static_cast<std::size_t>(e)] = i; });
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.size());
    return out;
}

std::size_t Partition::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const auto& b : blocks_) h = h * 1000003u ^ b.hash();
    return h;
}

bool rgs_less(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size()) return p.ground_size() < q.ground_size();
    return p.labels() < q.labels();
}

Partition parse(std::string_view text, int n) {
    check_ground_size(n);
    return from_ids(tokenize(text), n);
}

Partition parse(std::string_view text) {
    auto ids = tokenize(text);
    std::size_t count = 0;
    for (const auto& b : ids) count += b.size();
    if (count > static_cast<std::size_t>(kMaxGround))
        throw ParseError("literal has more than " + std::to_string(kMaxGround) + " elements");
    return from_ids(ids, static_cast<int>(count));
}

std::string format(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.block_count(); ++i) {
        if (i > 0) out += '|';
        bool first = true;
        p.block(i).for_each([&](Element e) {
            if (!first) out += ' ';
            out += std::to_string(e);
            first = false;
        });
    }
    return out;
}

Partition bottom(int n) {
    check_ground_size(n);
    std::vector<ElementSet> blocks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(i)].insert(i);
    return Partition::from_blocks(n, std::move(blocks));
}

Partition top(int n) {
    check_ground_size(n);
    if (n == 0) return Partition{};
    return Partition::from_blocks(n, {ElementSet::range(0, n)});
}

void require_same_ground(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size())
        throw DomainError("ground-set mismatch: " + std::to_string(p.ground_size()) + " vs " +
                          std::to_string(q.ground_size()));
}

bool leq(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    if (p.block_count() < q.block_count()) return false;
    for (const auto& b : p.blocks()) {
        const ElementSet& home = q.block(q.block_of(b.min()));
        if (!b.subset_of(home)) return false;
    }
    return true;
}

bool less(const Partition& p, const Partition& q) {
    return p.block_count() > q.block_count() && leq(p, q);
}

bool comparable(const Partition& p, const Partition& q) { return leq(p, q) || leq(q, p); }

Partition meet(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    std::vector<ElementSet> blocks;
    for (const auto& b : p.blocks())
        for (const auto& c : q.blocks()) {
            ElementSet x = b & c;
            if (!x.empty()) blocks.push_back(x);
        }
    sort_blocks(blocks);
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

Partition join(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    const int n = p.ground_size();
    DisjointSets sets(static_cast<std::size_t>(n));
    for (const Partition* part : {&p, &q})
        for (const auto& b : part->blocks()) {
            const auto root = static_cast<std::size_t>(b.min());
            b.for_each([&](Element e) { sets.unite(root, static_cast<std::size_t>(e)); });
        }
    LabelVector labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(sets.find(static_cast<std::size_t>(i)));
    return Partition::from_labels(labels);
}

bool covers(const Partition& p, const Partition& q) {
    return p.block_count() == q.block_count() + 1 && leq(p, q);
}

Partition merge_blocks(const Partition& p, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= p.block_count() || j >= p.block_count())
        throw DomainError("merge_blocks: invalid block pair");
    std::vector<ElementSet> blocks(p.blocks().begin(), p.blocks().end());
    if (i > j) std::swap(i, j);
    blocks[static_cast<std::size_t>(i)] |= blocks[static_cast<std::size_t>(j)];
    blocks.erase(blocks.begin() + j);
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

std::vector<Partition> upper_covers(const Partition& p) {
    std::vector<Partition> out;
    out.reserve(upper_cover_count(p));
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = i + 1; j < p.block_count(); ++j) out.push_back(merge_blocks(p, i, j));
    return out;
}

std::size_t lower_cover_count(const Partition& p) {
    std::size_t total = 0;
    for (const auto& b : p.blocks()) {
        if (b.size() > 64) throw OverflowError("lower_cover_count: block too large");
        total += (std::size_t{1} << (b.size() - 1)) - 1;
    }
    return total;
}

std::size_t upper_cover_count(const Partition& p) {
    const auto m = static_cast<std::size_t>(p.block_count());
    return m < 2 ? 0 : m * (m - 1) / 2;
}

Partition diag(const ElementSet& s, int n) {
    check_ground_size(n);
    if (s.empty()) throw DomainError("diag: empty set");
    if (s.max() >= n) throw DomainError("diag: element " + std::to_string(s.max()) + " out of range");
    std::vector<ElementSet> blocks{s};
    for (int i = 0; i < n; ++i)
        if (!s.contains(i)) blocks.push_back(ElementSet{i});
    return Partition::from_blocks(n, std::move(blocks));
}

}  // namespace pilat
