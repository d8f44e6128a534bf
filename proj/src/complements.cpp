#include "pilat/complements.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "pilat/error.hpp"
#include "pilat/union_find.hpp"

namespace pilat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("grieser_count: 64-bit overflow");
    return r;
}

class ComplementSearch {
public:
    ComplementSearch(const Partition& p, const std::function<void(const LabelVector&, int)>& visit)
        : n_(p.ground_size()),
          owner_(p.labels()),
          visit_(visit),
          components_(static_cast<std::size_t>(p.block_count())),
          labels_(static_cast<std::size_t>(n_), 0) {}

    void run() {
        if (n_ == 0) {
            visit_(labels_, 0);
            return;
        }
        place(0);
    }

private:
    void place(int e) {
        const auto remaining = static_cast<std::size_t>(n_ - e);
        // each remaining element joins at most two components
        if (components_.set_count() > remaining + 1) return;
        if (e == n_) {
            if (components_.set_count() == 1) visit_(labels_, static_cast<int>(hits_.size()));
            return;
        }
        const int owner = owner_[static_cast<std::size_t>(e)];
        for (std::size_t j = 0; j < hits_.size(); ++j) {
            if (hits_[j].contains(owner)) continue;
            hits_[j].insert(owner);
            components_.unite(static_cast<std::size_t>(owner), static_cast<std::size_t>(anchor_[j]));
            labels_[static_cast<std::size_t>(e)] = static_cast<int>(j);
            place(e + 1);
            components_.rollback();
            hits_[j].erase(owner);
        }
        labels_[static_cast<std::size_t>(e)] = static_cast<int>(hits_.size());
        hits_.push_back(ElementSet{owner});
        anchor_.push_back(owner);
        place(e + 1);
        hits_.pop_back();
        anchor_.pop_back();
    }

    int n_;
    LabelVector owner_;  // block of p holding each element
    const std::function<void(const LabelVector&, int)>& visit_;
    RollbackDisjointSets components_;  // over blocks of p
    LabelVector labels_;
    std::vector<ElementSet> hits_;  // per block of q: blocks of p it meets
    std::vector<int> anchor_;       // per block of q: one block of p it meets
};

void validate_choice(const Partition& p, const TransversalChoice& c) {
    const int m = p.block_count();
    if (c.split_block < 0 || c.split_block >= m) throw DomainError("transversal: split block out of range");
    const ElementSet& b0 = p.block(c.split_block);
    if (c.iota == c.upsilon || !b0.contains(c.iota) || !b0.contains(c.upsilon))
        throw DomainError("transversal: iota and upsilon must be distinct elements of the split block");
    if (c.gamma.size() != static_cast<std::size_t>(m - 1))
        throw DomainError("transversal: need one chosen element per other block");
    std::size_t g = 0;
    for (int i = 0; i < m; ++i) {
        if (i == c.split_block) continue;
        if (!p.block(i).contains(c.gamma[g]))
            throw DomainError("transversal: chosen element " + std::to_string(c.gamma[g]) + " not in its block");
        ++g;
    }
}

}  // namespace

bool is_complement(const Partition& p, const Partition& q) {
    return meet(p, q).is_bottom() && join(p, q).is_top();
}

void for_each_complement(const Partition& p, const std::function<void(const LabelVector&, int)>& visit,
                         const Limits& limits) {
    require_cap("complement enumeration", p.ground_size(), limits.complements);
    ComplementSearch(p, visit).run();
}

std::vector<Partition> enumerate_complements(const Partition& p, const Limits& limits) {
    std::vector<Partition> out;
    for_each_complement(p, [&](const LabelVector& labels, int) { out.push_back(Partition::from_labels(labels)); },
                        limits);
    return out;
}

std::uint64_t grieser_count(const Partition& p) {
    const int m = p.block_count();
    if (m <= 1) return 1;
    std::uint64_t r = 1;
    for (int size : p.block_sizes()) r = checked_mul(r, static_cast<std::uint64_t>(size));
    const auto base = static_cast<std::uint64_t>(p.ground_size() - m + 1);
    for (int i = 0; i < m - 2; ++i) r = checked_mul(r, base);
    return r;
}

TransversalChoice default_transversal(const Partition& p) {
    TransversalChoice c;
    c.split_block = -1;
    for (int i = 0; i < p.block_count(); ++i)
        if (p.block(i).size() >= 2) {
            c.split_block = i;
            break;
        }
    if (c.split_block < 0) throw DomainError("transversal: bottom has no block with two elements");
    ElementSet rest = p.block(c.split_block);
    c.iota = rest.min();
    rest.erase(c.iota);
    c.upsilon = rest.min();
    for (int i = 0; i < p.block_count(); ++i)
        if (i != c.split_block) c.gamma.push_back(p.block(i).min());
    return c;
}

Partition split_transversal_complement(const Partition& p, const TransversalChoice& choice,
                                       const ElementSet& first_side) {
    validate_choice(p, choice);
    const int others = p.block_count() - 1;
    if (!first_side.empty() && first_side.max() >= others)
        throw DomainError("transversal: subset index out of range");
    ElementSet q1{choice.iota};
    ElementSet q2{choice.upsilon};
    for (int i = 0; i < others; ++i) (first_side.contains(i) ? q1 : q2).insert(choice.gamma[static_cast<std::size_t>(i)]);
    std::vector<ElementSet> blocks{q1, q2};
    const ElementSet used = q1 | q2;
    for (int e = 0; e < p.ground_size(); ++e)
        if (!used.contains(e)) blocks.push_back(ElementSet{e});
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

std::vector<Partition> split_transversal_family(const Partition& p, const TransversalChoice& choice) {
    validate_choice(p, choice);
    const int others = p.block_count() - 1;
    if (others >= 30) throw CapExceeded("split transversal family size (blocks)", others + 1, 30);
    std::vector<Partition> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << others); ++mask) {
        ElementSet side;
        for (int i = 0; i < others; ++i)
            if ((mask >> i) & 1u) side.insert(i);
        out.push_back(split_transversal_complement(p, choice, side));
    }
    return out;
}

Partition injection_complement(const Partition& p, int big_block, std::span<const Element> images) {
    if (big_block < 0 || big_block >= p.block_count()) throw DomainError("injection: block index out of range");
    const ElementSet& big = p.block(big_block);
    const ElementSet residue = ElementSet::range(0, p.ground_size()) - big;
    if (images.size() != static_cast<std::size_t>(residue.size()))
        throw DomainError("injection: need one image per element outside the block");
    ElementSet used;
    std::vector<ElementSet> blocks;
    std::size_t i = 0;
    residue.for_each([&](Element e) {
        const Element img = images[i++];
        if (img < 0 || img >= kMaxGround || !big.contains(img))
            throw DomainError("injection: image " + std::to_string(img) + " outside the block");
        if (used.contains(img)) throw DomainError("injection: image " + std::to_string(img) + " used twice");
        used.insert(img);
        blocks.push_back(ElementSet{e, img});
    });
    (big - used).for_each([&](Element e) { blocks.push_back(ElementSet{e}); });
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

void for_each_injection_complement(const Partition& p, int big_block,
                                   const std::function<void(const Partition&)>& visit) {
    if (big_block < 0 || big_block >= p.block_count()) throw DomainError("injection: block index out of range");
    const std::vector<Element> targets = p.block(big_block).elements();
    const std::size_t residue = static_cast<std::size_t>(p.ground_size()) - targets.size();
    std::vector<Element> images(residue);
    std::vector<bool> taken(targets.size(), false);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == residue) {
            visit(injection_complement(p, big_block, images));
            return;
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (taken[t]) continue;
            taken[t] = true;
            images[i] = targets[t];
            assign(i + 1);
            taken[t] = false;
        }
    };
    assign(0);
}

ComplementCensusRow census_row(const Partition& p, const Limits& limits) {
    ComplementCensusRow row;
    row.partition = p;
    row.blocks = p.block_count();
    row.block_sizes = p.block_sizes();
    std::sort(row.block_sizes.rbegin(), row.block_sizes.rend());
    const int target = p.ground_size() - p.block_count() + 1;
    for_each_complement(
        p,
        [&](const LabelVector&, int blocks) {
            ++row.total;
            if (blocks == target) ++row.count_nm1;
        },
        limits);
    row.grieser = grieser_count(p);
    return row;
}

std::vector<ComplementCensusRow> complement_census(int n, unsigned jobs, const Limits& limits) {
    require_cap("complement census", n, limits.census);
    std::vector<Partition> all;
    for_each_partition(n, [&](Partition p) { all.push_back(std::move(p)); });
    std::vector<ComplementCensusRow> rows(all.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(all.size())));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < all.size(); i += jobs) rows[i] = census_row(all[i], limits);
    };
    if (jobs == 1) {
        work(0);
        return rows;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace pilat
