#pragma once

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <chrono>

namespace rtv {

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t evictions = 0;
    std::size_t entries = 0;
};

/// Thread-safe LRU map from canonical request keys to serialized responses.
///
/// Concurrent misses on one key are coalesced: the first caller runs the
/// producer, later callers wait for its result. Producer exceptions propagate
/// to every waiter and nothing is stored.
class LruCache {
public:
    using Producer = std::function<std::string()>;

    explicit LruCache(std::size_t capacity);

    LruCache(const LruCache&) = delete;
    LruCache& operator=(const LruCache&) = delete;

    std::string get_or_compute(const std::string& key, const Producer& producer);

    bool contains(const std::string& key) const;
    std::size_t capacity() const noexcept { return capacity_; }
    CacheStats stats() const;
    void clear();

private:
    struct Entry {
        std::string value;
        std::chrono::system_clock::time_point computed_at;
        std::list<std::string>::iterator lru_pos;
    };

    struct InFlight {
        bool done = false;
        std::string value;
        std::exception_ptr error;
    };

    void insert_locked(const std::string& key, std::string value);

    std::size_t capacity_;
    mutable std::mutex mu_;
    std::condition_variable cv_;
    std::list<std::string> lru_;  // front = most recently used
    std::unordered_map<std::string, Entry> entries_;
    std::unordered_map<std::string, std::shared_ptr<InFlight>> in_flight_;
    CacheStats stats_;
};

} // namespace rtv
