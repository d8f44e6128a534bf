#include "pilat/ortho.hpp"

#include <functional>
#include <map>

#include "pilat/error.hpp"

namespace pilat {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Relations over universe indices, computed once per search.
struct LatticeTables {
    explicit LatticeTables(const LatticeUniverse& u) : size(u.size()) {
        order.assign(size * size, false);
        complement.assign(size * size, false);
        lower.resize(size);
        upper.resize(size);
        for (std::size_t i = 0; i < size; ++i) {
            lower[i] = lower_cover_count(u[i]);
            upper[i] = upper_cover_count(u[i]);
            for (std::size_t j = 0; j < size; ++j) {
                order[i * size + j] = leq(u[i], u[j]);
                complement[i * size + j] = meet(u[i], u[j]).is_bottom() && join(u[i], u[j]).is_top();
            }
        }
    }

    bool le(std::size_t a, std::size_t b) const { return order[a * size + b]; }
    bool compl_of(std::size_t a, std::size_t b) const { return complement[a * size + b]; }

    std::size_t size;
    std::vector<bool> order;
    std::vector<bool> complement;
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
};

class OrthoSearch {
public:
    OrthoSearch(const LatticeUniverse& u, bool prune) : universe_(u), tables_(u), prune_(prune), image_(u.size(), kUnassigned) {}

    OrthoSearchResult run() {
        OrthoSearchResult result;
        if (prune_ && !profiles_balanced()) return result;
        if (search()) result.map = OrthoMap{image_};
        result.nodes = nodes_;
        return result;
    }

private:
    // An ortho-map sends elements with (lower, upper) cover counts onto elements with
    // (upper, lower) counts, so the two classes must have equal sizes.
    bool profiles_balanced() const {
        std::map<std::pair<std::size_t, std::size_t>, long> balance;
        for (std::size_t i = 0; i < tables_.size; ++i) {
            ++balance[{tables_.lower[i], tables_.upper[i]}];
            --balance[{tables_.upper[i], tables_.lower[i]}];
        }
        for (const auto& [profile, count] : balance)
            if (count != 0) return false;
        return true;
    }

    bool consistent(std::size_t a, std::size_t b) const {
        if (prune_ && (tables_.lower[a] != tables_.upper[b] || tables_.upper[a] != tables_.lower[b])) return false;
        if (!prune_) return true;
        // order reversal against every assigned pair
        for (std::size_t x = 0; x < tables_.size; ++x) {
            const std::size_t y = image_[x];
            if (y == kUnassigned) continue;
            if (tables_.le(a, x) != tables_.le(y, b)) return false;
            if (tables_.le(x, a) != tables_.le(b, y)) return false;
            if (tables_.le(b, x) != tables_.le(y, a)) return false;
            if (tables_.le(x, b) != tables_.le(a, y)) return false;
        }
        return true;
    }

    bool search() {
        ++nodes_;
        std::size_t a = 0;
        while (a < image_.size() && image_[a] != kUnassigned) ++a;
        if (a == image_.size()) return check_ortho_map(OrthoMap{image_}, universe_).ok;
        for (std::size_t b = a; b < image_.size(); ++b) {
            if (image_[b] != kUnassigned || !tables_.compl_of(a, b)) continue;
            if (!consistent(a, b)) continue;
            image_[a] = b;
            image_[b] = a;
            if (search()) return true;
            image_[a] = kUnassigned;
            image_[b] = kUnassigned;
        }
        return false;
    }

    const LatticeUniverse& universe_;
    LatticeTables tables_;
    bool prune_;
    std::vector<std::size_t> image_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::string to_string(OrthoAxiom axiom) {
    switch (axiom) {
        case OrthoAxiom::none: return "none";
        case OrthoAxiom::meet_is_bottom: return "(i) a meet a' = bottom";
        case OrthoAxiom::join_is_top: return "(ii) a join a' = top";
        case OrthoAxiom::de_morgan: return "(iii) (a meet b)' = a' join b'";
        case OrthoAxiom::involution: return "(iv) a'' = a";
    }
    return "unknown";
}

OrthoCheck check_ortho_map(const OrthoMap& map, const LatticeUniverse& universe) {
    const std::size_t size = universe.size();
    if (map.image.size() != size) throw DomainError("ortho map is not total on the lattice");
    for (std::size_t img : map.image)
        if (img >= size) throw DomainError("ortho map image out of range");

    auto fail = [](OrthoAxiom axiom, std::size_t a, std::size_t b) {
        OrthoCheck c;
        c.violated = axiom;
        c.witness = std::make_pair(a, b);
        return c;
    };
    for (std::size_t a = 0; a < size; ++a)
        if (!meet(universe[a], universe[map.image[a]]).is_bottom()) return fail(OrthoAxiom::meet_is_bottom, a, a);
    for (std::size_t a = 0; a < size; ++a)
        if (!join(universe[a], universe[map.image[a]]).is_top()) return fail(OrthoAxiom::join_is_top, a, a);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) {
            const std::size_t lhs = map.image[universe.index_of(meet(universe[a], universe[b]))];
            const Partition rhs = join(universe[map.image[a]], universe[map.image[b]]);
            if (universe[lhs] != rhs) return fail(OrthoAxiom::de_morgan, a, b);
        }
    for (std::size_t a = 0; a < size; ++a)
        if (map.image[map.image[a]] != a) return fail(OrthoAxiom::involution, a, a);
    OrthoCheck ok;
    ok.ok = true;
    return ok;
}

OrthoSearchResult search_orthocomplementation(int n, const OrthoSearchOptions& options, const Limits& limits) {
    require_cap("ortho search", n, options.exhaustive ? limits.ortho_exhaustive : limits.ortho_search);
    const LatticeUniverse universe = LatticeUniverse::build(n, limits);
    return OrthoSearch(universe, options.prune).run();
}

NonOrthoWitness non_ortho_witness(int n) {
    if (n < 5) throw DomainError("non_ortho_witness: the counting argument needs n >= 5; use search for n <= 4");
    if (n > 64) throw OverflowError("non_ortho_witness: 2^(n-1) - 1 exceeds 64 bits");
    NonOrthoWitness w;
    w.n = n;
    w.atom_count = binomial(n, 2);
    w.coatom_count = (n == 64 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << (n - 1)) - 1);
    if (!(w.atom_count < w.coatom_count))
        throw DomainError("non_ortho_witness: inequality fails for n = " + std::to_string(n));
    w.reason = "bottom has " + std::to_string(w.atom_count) + " upper covers but top has " +
               std::to_string(w.coatom_count) +
               " lower covers; an orthocomplementation would map the lower covers of top bijectively "
               "onto the upper covers of bottom";
    return w;
}

}  // namespace pilat
