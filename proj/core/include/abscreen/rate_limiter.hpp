#pragma once

#include "abscreen/clock.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace abscreen::gateway {

/// Token bucket gating outbound request dispatch. A rate of 0 disables
/// limiting. Thread-safe; blocking waits go through the injected clock.
class TokenBucket {
public:
    TokenBucket(double tokens_per_second, double capacity, std::shared_ptr<Clock> clock)
        : rate_(tokens_per_second),
          capacity_(capacity),
          tokens_(capacity),
          clock_(std::move(clock)),
          last_refill_(clock_->now()) {}

    /// Block until one token is available, then consume it.
    void acquire() {
        if (rate_ <= 0.0)
            return;
        std::unique_lock lock(mutex_);
        refill();
        while (tokens_ < 1.0) {
            const double deficit = 1.0 - tokens_;
            const auto wait = std::chrono::milliseconds(
                static_cast<long long>(deficit / rate_ * 1000.0) + 1);
            lock.unlock();
            clock_->sleep_for(wait);
            lock.lock();
            refill();
        }
        tokens_ -= 1.0;
    }

    double available() {
        if (rate_ <= 0.0)
            return capacity_;
        std::lock_guard lock(mutex_);
        refill();
        return tokens_;
    }

private:
    void refill() {
        const auto now = clock_->now();
        const double elapsed_s =
            std::chrono::duration<double>(now - last_refill_).count();
        if (elapsed_s > 0) {
            tokens_ = std::min(capacity_, tokens_ + elapsed_s * rate_);
            last_refill_ = now;
        }
    }

    double rate_;
    double capacity_;
    double tokens_;
    std::shared_ptr<Clock> clock_;
    std::chrono::milliseconds last_refill_;
    std::mutex mutex_;
};

} // namespace abscreen::gateway
