#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace vog {

// Packs an unordered node pair into one key; requires u < v.
inline std::uint64_t pack_cell(std::uint32_t u, std::uint32_t v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}
inline std::uint32_t cell_lo(std::uint64_t key) { return static_cast<std::uint32_t>(key >> 32); }
inline std::uint32_t cell_hi(std::uint64_t key) { return static_cast<std::uint32_t>(key); }

// Open-addressing hash map from packed cell to a 32-bit value, tuned for the
// coverage bookkeeping: millions of inserts, occasional erases (rollback of a
// tentative structure). Linear probing with backward-shift deletion.
class CellMap {
public:
    CellMap() { rehash(1024); }

    std::size_t size() const { return size_; }

    // Returns a reference to the value for key, inserting 0 if absent.
    std::uint32_t& operator[](std::uint64_t key) {
        if ((size_ + 1) * 10 >= capacity() * 7) rehash(capacity() * 2);
        std::size_t i = slot(key);
        while (keys_[i] != kEmpty) {
            if (keys_[i] == key) return values_[i];
            i = (i + 1) & mask_;
        }
        keys_[i] = key;
        values_[i] = 0;
        ++size_;
        return values_[i];
    }

    const std::uint32_t* find(std::uint64_t key) const {
        std::size_t i = slot(key);
        while (keys_[i] != kEmpty) {
            if (keys_[i] == key) return &values_[i];
            i = (i + 1) & mask_;
        }
        return nullptr;
    }

    void erase(std::uint64_t key) {
        std::size_t i = slot(key);
        while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
        if (keys_[i] == kEmpty) return;
        --size_;
        // backward-shift: close the probe chain
        std::size_t hole = i;
        std::size_t j = (i + 1) & mask_;
        while (keys_[j] != kEmpty) {
            std::size_t home = slot(keys_[j]);
            // can keys_[j] be moved into the hole without breaking its probe path?
            bool movable = ((hole - home) & mask_) <= ((j - home) & mask_);
            if (movable) {
                keys_[hole] = keys_[j];
                values_[hole] = values_[j];
                hole = j;
            }
            j = (j + 1) & mask_;
        }
        keys_[hole] = kEmpty;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty) fn(keys_[i], values_[i]);
    }

    void clear() {
        keys_.assign(keys_.size(), kEmpty);
        size_ = 0;
    }

private:
    static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();

    std::size_t capacity() const { return keys_.size(); }

    std::size_t slot(std::uint64_t key) const {
        // splitmix64 finalizer
        key ^= key >> 30;
        key *= 0xbf58476d1ce4e5b9ULL;
        key ^= key >> 27;
        key *= 0x94d049bb133111ebULL;
        key ^= key >> 31;
        return key & mask_;
    }

    void rehash(std::size_t new_capacity) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint32_t> old_values = std::move(values_);
        keys_.assign(new_capacity, kEmpty);
        values_.assign(new_capacity, 0);
        mask_ = new_capacity - 1;
        size_ = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kEmpty) continue;
            std::size_t j = slot(old_keys[i]);
            while (keys_[j] != kEmpty) j = (j + 1) & mask_;
            keys_[j] = old_keys[i];
            values_[j] = old_values[i];
            ++size_;
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> values_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

} // namespace vog
