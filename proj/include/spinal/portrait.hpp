#pragma once

/**
 * @file portrait.hpp
 * @brief Nucleus portraits: finite trees whose internal nodes carry root
 * permutations and whose leaves carry nucleus elements.
 */

#include <memory>
#include <string>
#include <vector>

#include "spinal/element_index.hpp"
#include "spinal/nucleus.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

struct Portrait {
    /// Leaf: index into the nucleus; otherwise an internal node.
    bool is_leaf = false;
    std::size_t leaf = 0;
    Perm root;
    std::vector<Portrait> children;

    std::size_t depth() const {
        std::size_t d = 0;
        for (const auto& c : children) d = std::max(d, c.depth() + 1);
        return d;
    }

    bool operator==(const Portrait&) const = default;
};

inline constexpr std::size_t kMaxPortraitDepth = 64;

/// Looks up nucleus membership through a shared index so repeated portraits
/// reuse equality verdicts.
class PortraitBuilder {
public:
    PortraitBuilder(const Nucleus& nucleus, const WreathTable& table) : nucleus_(&nucleus), index_(table) {
        for (const auto& w : nucleus.elements) index_.insert(w);
    }

    Portrait build(const GroupWord& w) const { return build(w, 0); }

private:
    Portrait build(const GroupWord& w, std::size_t depth) const {
        if (auto id = index_.find(w)) {
            Portrait leaf;
            leaf.is_leaf = true;
            leaf.leaf = *id;
            return leaf;
        }
        if (depth >= kMaxPortraitDepth)
            throw Error(ErrorKind::DepthBoundExceeded, "portrait deeper than " + std::to_string(kMaxPortraitDepth) +
                                                           " levels; is the set really the nucleus?");
        const WreathTable& t = index_.table();
        Portrait node;
        node.root = root_perm(w, t);
        for (std::uint32_t x = 0; x < t.p(); ++x) node.children.push_back(build(section(w, x, t), depth + 1));
        return node;
    }

    const Nucleus* nucleus_;
    ElementIndex index_;
};

inline Portrait portrait(const GroupWord& w, const Nucleus& nucleus, const WreathTable& table) {
    return PortraitBuilder(nucleus, table).build(w);
}

}  // namespace spinal
