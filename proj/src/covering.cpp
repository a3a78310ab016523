#include "covmat/covering.hpp"

#include <algorithm>
#include <utility>

namespace covmat {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw Error("universe must contain at least one element");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].empty()) throw Error("universe element names must be nonempty");
        auto [it, inserted] = index_.emplace(elements_[i], i);
        if (!inserted) throw Error("duplicate element '" + elements_[i] + "' in universe");
    }
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> elements) {
    return std::shared_ptr<const Universe>(new Universe(std::move(elements)));
}

bool Universe::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

std::size_t Universe::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownElementError(std::string(name));
    return it->second;
}

ElementSet::ElementSet(UniversePtr universe)
    : universe_(std::move(universe)), bits_(universe_->size()) {}

ElementSet::ElementSet(UniversePtr universe, BoolVector bits)
    : universe_(std::move(universe)), bits_(std::move(bits)) {
    if (bits_.size() != universe_->size())
        throw DimensionMismatchError("characteristic vector length " +
                                     std::to_string(bits_.size()) +
                                     " does not match universe size " +
                                     std::to_string(universe_->size()));
}

ElementSet ElementSet::full(UniversePtr universe) {
    const std::size_t n = universe->size();
    return ElementSet(std::move(universe), BoolVector::ones(n));
}

ElementSet ElementSet::of(UniversePtr universe, const std::vector<std::string>& names) {
    ElementSet s(std::move(universe));
    for (const auto& name : names) s.add(name);
    return s;
}

bool ElementSet::contains(std::string_view name) const {
    return bits_.get(universe_->index_of(name));
}

void ElementSet::add(std::string_view name) { bits_.set(universe_->index_of(name), true); }

ElementSet ElementSet::complemented() const { return ElementSet(universe_, bits_.complemented()); }

ElementSet ElementSet::united(const ElementSet& other) const {
    check_same_universe(other);
    BoolVector bits = bits_;
    bits |= other.bits_;
    return ElementSet(universe_, std::move(bits));
}

ElementSet ElementSet::intersected(const ElementSet& other) const {
    check_same_universe(other);
    BoolVector bits = bits_;
    bits &= other.bits_;
    return ElementSet(universe_, std::move(bits));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    return bits_.is_subset_of(other.bits_);
}

bool ElementSet::intersects(const ElementSet& other) const {
    check_same_universe(other);
    return bits_.intersects(other.bits_);
}

std::vector<std::string> ElementSet::names() const {
    std::vector<std::string> result;
    for (std::size_t i = 0; i < universe_->size(); ++i)
        if (bits_.get(i)) result.push_back(universe_->name_of(i));
    return result;
}

bool ElementSet::operator==(const ElementSet& other) const {
    check_same_universe(other);
    return bits_ == other.bits_;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
    if (universe_ == other.universe_) return;
    if (!universe_ || !other.universe_ || !(*universe_ == *other.universe_))
        throw UniverseMismatchError();
}

BoolVector from_set(const ElementSet& x) { return x.bits(); }

ElementSet to_set(const BoolVector& v, UniversePtr universe) {
    return ElementSet(std::move(universe), v);
}

const ElementSet& NeighborhoodSystem::of(std::string_view name) const {
    return neighborhoods_.at(universe_->index_of(name));
}

namespace {

std::vector<ElementSet> compute_neighborhoods(const UniversePtr& universe,
                                              const std::vector<ElementSet>& blocks) {
    const std::size_t n = universe->size();
    std::vector<ElementSet> result(n, ElementSet::full(universe));
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < n; ++i)
            if (block.contains_index(i)) result[i] = result[i].intersected(block);
    return result;
}

}  // namespace

Covering::Covering(UniversePtr universe, std::vector<ElementSet> blocks)
    : universe_(std::move(universe)),
      blocks_(std::move(blocks)),
      neighborhoods_(universe_, compute_neighborhoods(universe_, blocks_)) {}

Covering build_covering(UniversePtr universe, std::vector<ElementSet> raw_blocks) {
    if (raw_blocks.empty()) throw Error("a covering needs at least one block");

    std::vector<ElementSet> blocks;
    ElementSet covered(universe);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
        auto& block = raw_blocks[b];
        block.check_same_universe(ElementSet(universe));
        if (block.empty()) throw EmptyBlockError(b);
        covered = covered.united(block);
        // First occurrence wins; later duplicates are dropped.
        if (std::find(blocks.begin(), blocks.end(), block) == blocks.end())
            blocks.push_back(std::move(block));
    }
    for (std::size_t i = 0; i < universe->size(); ++i)
        if (!covered.contains_index(i)) throw NotACoveringError(universe->name_of(i));

    return Covering(std::move(universe), std::move(blocks));
}

Covering build_covering(UniversePtr universe,
                        const std::vector<std::vector<std::string>>& raw_blocks) {
    std::vector<ElementSet> blocks;
    blocks.reserve(raw_blocks.size());
    for (const auto& names : raw_blocks) blocks.push_back(ElementSet::of(universe, names));
    return build_covering(std::move(universe), std::move(blocks));
}

ElementSet neighborhood(const Covering& cov, std::string_view x) {
    return cov.neighborhoods().of(x);
}

Covering induced_covering(const Covering& cov) {
    std::vector<ElementSet> blocks;
    for (std::size_t i = 0; i < cov.universe()->size(); ++i) {
        const auto& nbr = cov.neighborhoods().of_index(i);
        if (std::find(blocks.begin(), blocks.end(), nbr) == blocks.end()) blocks.push_back(nbr);
    }
    return build_covering(cov.universe(), std::move(blocks));
}

ElementSet star_neighborhood(const Covering& cov, std::string_view x) {
    return induced_covering(cov).neighborhoods().of(x);
}

BoolMatrix membership_matrix(const Covering& cov) {
    const std::size_t n = cov.universe()->size();
    const std::size_t m = cov.block_count();
    BoolMatrix matrix(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (cov.blocks()[j].contains_index(i)) matrix.set(i, j, true);
    return matrix;
}

}  // namespace covmat
