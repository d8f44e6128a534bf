#include "pilat/chains.hpp"

#include <algorithm>

#include "pilat/error.hpp"

namespace pilat {

namespace {

void require_common_ground(std::span<const Partition> chain) {
    for (const auto& p : chain) require_same_ground(chain.front(), p);
}

// A partition strictly between p < q: merge the first two blocks of p inside one q block.
Partition step_up_towards(const Partition& p, const Partition& q) {
    for (int i = 0; i < p.block_count(); ++i) {
        const int home = q.block_of(p.block(i).min());
        for (int j = i + 1; j < p.block_count(); ++j)
            if (q.block_of(p.block(j).min()) == home) return merge_blocks(p, i, j);
    }
    throw DomainError("step_up_towards: no refinement step available");
}

// Lower cover of p: split the largest element off the first non-singleton block.
Partition step_down(const Partition& p) {
    std::vector<ElementSet> blocks(p.blocks().begin(), p.blocks().end());
    for (auto& b : blocks)
        if (b.size() >= 2) {
            const Element last = b.max();
            b.erase(last);
            blocks.push_back(ElementSet{last});
            return Partition::from_blocks(p.ground_size(), std::move(blocks));
        }
    throw DomainError("step_down: partition is bottom");
}

}  // namespace

ChainReport verify_chain(std::span<const Partition> chain) {
    if (chain.empty()) throw DomainError("verify_chain: empty sequence");
    require_common_ground(chain);
    ChainReport report;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!less(chain[i], chain[i + 1])) {
            report.failing_pair = {i, i + 1};
            return report;
        }
    report.is_chain = true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!covers(chain[i], chain[i + 1])) {
            report.failing_pair = {i, i + 1};
            report.insertable = step_up_towards(chain[i], chain[i + 1]);
            return report;
        }
    report.is_saturated = true;
    if (!chain.front().is_bottom()) {
        report.insertable = step_down(chain.front());
        return report;
    }
    if (!chain.back().is_top()) {
        report.insertable = merge_blocks(chain.back(), 0, 1);
        return report;
    }
    report.is_maximal = true;
    return report;
}

Chain extend_to_maximal(std::span<const Partition> chain) {
    const ChainReport report = verify_chain(chain);
    if (!report.is_chain) throw DomainError("extend_to_maximal: input is not a chain");

    Chain below;
    for (Partition p = chain.front(); !p.is_bottom();) {
        p = step_down(p);
        below.push_back(p);
    }
    Chain out(below.rbegin(), below.rend());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out.push_back(chain[i]);
        if (i + 1 == chain.size()) break;
        for (Partition p = chain[i]; !covers(p, chain[i + 1]);) {
            p = step_up_towards(p, chain[i + 1]);
            out.push_back(p);
        }
    }
    for (Partition p = chain.back(); !p.is_top();) {
        p = merge_blocks(p, 0, 1);
        out.push_back(p);
    }
    return out;
}

void for_each_maximal_chain(int n, const std::function<void(const Chain&)>& visit, const Limits& limits) {
    require_cap("maximal chain enumeration", n, limits.maximal_chains);
    Chain current{bottom(n)};
    std::function<void()> descend = [&] {
        if (current.back().is_top()) {
            visit(current);
            return;
        }
        for (auto& next : upper_covers(current.back())) {
            current.push_back(std::move(next));
            descend();
            current.pop_back();
        }
    };
    descend();
}

std::vector<Chain> enumerate_maximal_chains(int n, const Limits& limits) {
    std::vector<Chain> out;
    for_each_maximal_chain(n, [&](const Chain& c) { out.push_back(c); }, limits);
    return out;
}

Chain lift_subset_chain(std::span<const ElementSet> sets, int n) {
    Chain out;
    out.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].size() < 2) throw DomainError("lift_subset_chain: set with fewer than two elements");
        if (i > 0 && !(sets[i - 1].subset_of(sets[i]) && sets[i - 1] != sets[i]))
            throw DomainError("lift_subset_chain: sets not strictly increasing");
        out.push_back(diag(sets[i], n));
    }
    return out;
}

KeyframePlan::KeyframePlan(int k, const Limits& limits) : k_(k) {
    if (k < 0) throw DomainError("keyframe: negative bit length");
    require_cap("keyframe bit length", k, limits.keyframe_k);
    if ((1 << k) > kMaxGround) throw CapExceeded("keyframe ground set", 1 << k, kMaxGround);
}

Partition KeyframePlan::keyframe(int level) const { return inbetween(level, 0); }

Partition KeyframePlan::inbetween(int level, std::size_t split) const {
    if (level < 0 || level > k_) throw DomainError("keyframe level out of range");
    if (split > blocks_at(level)) throw DomainError("inbetween: split count out of range");
    if (level == k_ && split > 0) throw DomainError("inbetween: bottom has no finer level");
    const int width = 1 << (k_ - level);
    std::vector<ElementSet> blocks;
    for (std::size_t prefix = 0; prefix < blocks_at(level); ++prefix) {
        const int start = static_cast<int>(prefix) * width;
        if (prefix < split) {
            blocks.push_back(ElementSet::range(start, start + width / 2));
            blocks.push_back(ElementSet::range(start + width / 2, start + width));
        } else {
            blocks.push_back(ElementSet::range(start, start + width));
        }
    }
    return Partition::from_blocks(ground_size(), std::move(blocks));
}

Chain keyframe_chain(int k, const Limits& limits) {
    const KeyframePlan plan(k, limits);
    Chain out{bottom(plan.ground_size())};
    for (int level = k - 1; level >= 0; --level)
        for (std::size_t split = plan.blocks_at(level); split-- > 0;) out.push_back(plan.inbetween(level, split));
    return out;
}

}  // namespace pilat
