#ifndef COVMAT_COVERING_HPP_
#define COVMAT_COVERING_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covmat/boolmat.hpp"
#include "covmat/errors.hpp"

namespace covmat {

/// Ordered finite universe of named elements. The element order given at
/// construction fixes all matrix, vector, and printed-table indexing.
class Universe {
public:
    static std::shared_ptr<const Universe> make(std::vector<std::string> elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name_of(std::size_t i) const { return elements_.at(i); }

    bool contains(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws UnknownElementError

    bool operator==(const Universe& other) const { return elements_ == other.elements_; }

private:
    explicit Universe(std::vector<std::string> elements);

    std::vector<std::string> elements_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Subset of a universe, stored as the characteristic vector under the
/// universe's element order.
class ElementSet {
public:
    explicit ElementSet(UniversePtr universe);
    ElementSet(UniversePtr universe, BoolVector bits);  // DimensionMismatch if sizes differ
    static ElementSet full(UniversePtr universe);
    static ElementSet of(UniversePtr universe, const std::vector<std::string>& names);

    const UniversePtr& universe() const { return universe_; }
    const BoolVector& bits() const { return bits_; }

    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(std::string_view name) const;
    bool contains_index(std::size_t i) const { return bits_.get(i); }
    void add(std::string_view name);
    void add_index(std::size_t i) { bits_.set(i, true); }

    ElementSet complemented() const;
    ElementSet united(const ElementSet& other) const;
    ElementSet intersected(const ElementSet& other) const;
    bool is_subset_of(const ElementSet& other) const;
    bool intersects(const ElementSet& other) const;

    /// Member names in universe order.
    std::vector<std::string> names() const;

    bool operator==(const ElementSet& other) const;

    /// Throws UniverseMismatchError unless both sets share a universe.
    void check_same_universe(const ElementSet& other) const;

private:
    UniversePtr universe_;
    BoolVector bits_;
};

/// Characteristic-vector bridges.
BoolVector from_set(const ElementSet& x);
ElementSet to_set(const BoolVector& v, UniversePtr universe);

/// The map x -> N(x), where N(x) is the intersection of exactly the blocks
/// containing x. Every x lies in its own neighborhood.
class NeighborhoodSystem {
public:
    const ElementSet& of_index(std::size_t i) const { return neighborhoods_.at(i); }
    const ElementSet& of(std::string_view name) const;
    std::size_t size() const { return neighborhoods_.size(); }

private:
    NeighborhoodSystem(UniversePtr universe, std::vector<ElementSet> neighborhoods)
        : universe_(std::move(universe)), neighborhoods_(std::move(neighborhoods)) {}

    UniversePtr universe_;
    std::vector<ElementSet> neighborhoods_;

    friend class Covering;
};

/// Validated covering: nonempty blocks whose union is the universe,
/// deduplicated at construction (first occurrence kept, order preserved).
class Covering {
public:
    const UniversePtr& universe() const { return universe_; }
    const std::vector<ElementSet>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    const NeighborhoodSystem& neighborhoods() const { return neighborhoods_; }

private:
    Covering(UniversePtr universe, std::vector<ElementSet> blocks);

    UniversePtr universe_;
    std::vector<ElementSet> blocks_;
    NeighborhoodSystem neighborhoods_;

    friend Covering build_covering(UniversePtr, std::vector<ElementSet>);
};

Covering build_covering(UniversePtr universe, std::vector<ElementSet> raw_blocks);
Covering build_covering(UniversePtr universe,
                        const std::vector<std::vector<std::string>>& raw_blocks);

ElementSet neighborhood(const Covering& cov, std::string_view x);

/// The covering whose blocks are the distinct neighborhoods N(x), in first
/// occurrence order over the universe.
Covering induced_covering(const Covering& cov);

/// Neighborhood of x taken with respect to induced_covering(cov). Provably
/// equal to neighborhood(cov, x); both routes are kept and cross-checked.
ElementSet star_neighborhood(const Covering& cov, std::string_view x);

/// n x m matrix with entry (i,j) = 1 iff element i lies in block j.
BoolMatrix membership_matrix(const Covering& cov);

}  // namespace covmat

#endif  // COVMAT_COVERING_HPP_
