#pragma once

/**
 * @file element_index.hpp
 * @brief Deduplicating store of group elements.
 *
 * Words are bucketed by a hash of their action on a fixed level of the tree;
 * words in the same bucket are compared with the word-problem solver. Exact
 * word lookups are cached, so repeated queries cost one hash probe.
 */

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spinal/wreath.hpp"

namespace spinal {

class ElementIndex {
public:
    explicit ElementIndex(const WreathTable& table) : table_(&table), depth_(signature_depth(table.p())) {}

    std::size_t size() const noexcept { return reps_.size(); }
    const GroupWord& representative(std::size_t id) const { return reps_[id]; }
    const std::vector<GroupWord>& representatives() const noexcept { return reps_; }
    const WreathTable& table() const noexcept { return *table_; }

    std::optional<std::size_t> find(const GroupWord& w) const {
        if (auto it = word_cache_.find(w); it != word_cache_.end()) return it->second;
        auto id = lookup(w, signature(w));
        if (id) word_cache_.emplace(w, *id);
        return id;
    }

    /// Returns the element id and whether it is new. A known element adopts
    /// `w` as representative when `w` is shortlex-smaller.
    std::pair<std::size_t, bool> insert(const GroupWord& w) {
        const std::uint64_t sig = signature(w);
        if (auto id = lookup(w, sig)) {
            if (shortlex_less(w, reps_[*id])) reps_[*id] = w;
            word_cache_.emplace(w, *id);
            return {*id, false};
        }
        const std::size_t id = reps_.size();
        reps_.push_back(w);
        buckets_[sig].push_back(id);
        word_cache_.emplace(w, id);
        return {id, true};
    }

    /// Action on level `depth` folded into 64 bits.
    std::uint64_t signature(const GroupWord& w) const {
        std::uint64_t h = 1469598103934665603ull;
        sign(w, depth_, h);
        return h;
    }

private:
    static std::uint32_t signature_depth(std::uint32_t p) {
        std::uint32_t d = 1;
        for (std::uint64_t n = std::uint64_t{p} * p; n <= 128; n *= p) ++d;
        return d;
    }

    void sign(const GroupWord& w, std::uint32_t depth, std::uint64_t& h) const {
        for (std::uint32_t x = 0; x < table_->p(); ++x) h = (h ^ (root_image(w, x, *table_) + 1)) * 1099511628211ull;
        if (depth <= 1) return;
        for (std::uint32_t x = 0; x < table_->p(); ++x) sign(section(w, x, *table_), depth - 1, h);
    }

    std::optional<std::size_t> lookup(const GroupWord& w, std::uint64_t sig) const {
        auto it = buckets_.find(sig);
        if (it == buckets_.end()) return std::nullopt;
        for (std::size_t id : it->second)
            if (are_equal(w, reps_[id], *table_)) return id;
        return std::nullopt;
    }

    const WreathTable* table_;
    std::uint32_t depth_;
    std::vector<GroupWord> reps_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
    mutable std::unordered_map<GroupWord, std::size_t, GroupWordHash> word_cache_;
};

}  // namespace spinal
