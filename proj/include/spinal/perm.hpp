#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace spinal {

/// Permutation of the alphabet {0, ..., p-1}, stored as its image table.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

    static Perm identity(std::uint32_t p) {
        std::vector<std::uint32_t> im(p);
        std::iota(im.begin(), im.end(), 0u);
        return Perm(std::move(im));
    }

    /// x -> x + shift (mod p); shift = 1 is the long cycle (0 1 ... p-1).
    static Perm rotation(std::uint32_t p, std::uint32_t shift) {
        std::vector<std::uint32_t> im(p);
        for (std::uint32_t x = 0; x < p; ++x) im[x] = (x + shift) % p;
        return Perm(std::move(im));
    }

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    bool is_identity() const {
        for (std::uint32_t x = 0; x < images_.size(); ++x)
            if (images_[x] != x) return false;
        return true;
    }

    bool is_bijection() const {
        std::vector<bool> seen(images_.size(), false);
        for (auto y : images_) {
            if (y >= images_.size() || seen[y]) return false;
            seen[y] = true;
        }
        return true;
    }

    /// Composite acting as *this first, then `next`.
    Perm then(const Perm& next) const {
        std::vector<std::uint32_t> im(images_.size());
        for (std::uint32_t x = 0; x < images_.size(); ++x) im[x] = next(images_[x]);
        return Perm(std::move(im));
    }

    Perm inverse() const {
        std::vector<std::uint32_t> im(images_.size());
        for (std::uint32_t x = 0; x < images_.size(); ++x) im[images_[x]] = x;
        return Perm(std::move(im));
    }

    Perm pow(std::uint32_t k) const {
        Perm r = identity(size());
        for (std::uint32_t i = 0; i < k; ++i) r = r.then(*this);
        return r;
    }

    /// Cycle notation over 0-based letters, e.g. "(0,1,2)"; "()" for identity.
    std::string cycles(std::uint32_t offset = 0) const {
        std::string out;
        std::vector<bool> done(images_.size(), false);
        for (std::uint32_t x = 0; x < images_.size(); ++x) {
            if (done[x] || images_[x] == x) continue;
            out += '(';
            for (std::uint32_t y = x; !done[y]; y = images_[y]) {
                done[y] = true;
                if (y != x) out += ',';
                out += std::to_string(y + offset);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    bool operator==(const Perm&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

}  // namespace spinal
