#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace abscreen::gateway {

/// Time source used by retry delays and rate limiting, injectable so tests
/// can run schedules instantly against a manual clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::milliseconds now() const = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::milliseconds now() const override;
    void sleep_for(std::chrono::milliseconds d) override;
};

/// Virtual clock: sleep advances time instantly and records the request.
class ManualClock final : public Clock {
public:
    std::chrono::milliseconds now() const override {
        std::lock_guard lock(mutex_);
        return now_;
    }
    void sleep_for(std::chrono::milliseconds d) override {
        std::lock_guard lock(mutex_);
        now_ += d;
        sleeps_.push_back(d);
    }
    void advance(std::chrono::milliseconds d) {
        std::lock_guard lock(mutex_);
        now_ += d;
    }
    std::vector<std::chrono::milliseconds> sleeps() const {
        std::lock_guard lock(mutex_);
        return sleeps_;
    }

private:
    mutable std::mutex mutex_;
    std::chrono::milliseconds now_{0};
    std::vector<std::chrono::milliseconds> sleeps_;
};

std::shared_ptr<Clock> system_clock();

} // namespace abscreen::gateway
