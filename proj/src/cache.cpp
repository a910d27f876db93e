#include "rtv/cache.hpp"

namespace rtv {

LruCache::LruCache(std::size_t capacity) : capacity_(capacity) {}

std::string LruCache::get_or_compute(const std::string& key, const Producer& producer) {
    std::shared_ptr<InFlight> flight;
    {
        std::unique_lock lock(mu_);
        if (auto it = entries_.find(key); it != entries_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
            ++stats_.hits;
            return it->second.value;
        }
        if (auto it = in_flight_.find(key); it != in_flight_.end()) {
            // Another caller is producing this key; wait for its outcome.
            auto waiting = it->second;
            cv_.wait(lock, [&] { return waiting->done; });
            if (waiting->error) std::rethrow_exception(waiting->error);
            ++stats_.hits;
            return waiting->value;
        }
        ++stats_.misses;
        flight = std::make_shared<InFlight>();
        in_flight_.emplace(key, flight);
    }

    std::string value;
    try {
        value = producer();
    } catch (...) {
        std::lock_guard lock(mu_);
        flight->error = std::current_exception();
        flight->done = true;
        in_flight_.erase(key);
        cv_.notify_all();
        throw;
    }

    std::lock_guard lock(mu_);
    flight->value = value;
    flight->done = true;
    in_flight_.erase(key);
    insert_locked(key, value);
    cv_.notify_all();
    return value;
}

void LruCache::insert_locked(const std::string& key, std::string value) {
    if (capacity_ == 0) return;
    if (auto it = entries_.find(key); it != entries_.end()) {
        it->second.value = std::move(value);
        lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
        return;
    }
    while (entries_.size() >= capacity_) {
        entries_.erase(lru_.back());
        lru_.pop_back();
        ++stats_.evictions;
    }
    lru_.push_front(key);
    entries_.emplace(key, Entry{std::move(value), std::chrono::system_clock::now(), lru_.begin()});
}

bool LruCache::contains(const std::string& key) const {
    std::lock_guard lock(mu_);
    return entries_.contains(key);
}

CacheStats LruCache::stats() const {
    std::lock_guard lock(mu_);
    CacheStats s = stats_;
    s.entries = entries_.size();
    return s;
}

void LruCache::clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
    lru_.clear();
}

} // namespace rtv
