#pragma once

#include <filesystem>
#include <string_view>

#include "vulnfactory/bigint.hpp"

namespace vulnfactory {

inline constexpr const char* kCounterFileName = "vuln_counter.txt";
inline constexpr const char* kLockFileName = "vuln_counter.lock";

/// Lock file adjacent to a counter file. For the canonical name this is
/// "vuln_counter.lock"; other names get their extension replaced by ".lock".
[[nodiscard]] std::filesystem::path lock_path_for(const std::filesystem::path& counter_path);

/// Exclusive advisory lock (flock) over a counter's read-modify-write
/// window. Blocks until acquired; released on destruction.
class CounterLock {
public:
    explicit CounterLock(const std::filesystem::path& counter_path);
    ~CounterLock();

    CounterLock(const CounterLock&) = delete;
    CounterLock& operator=(const CounterLock&) = delete;
    CounterLock(CounterLock&& other) noexcept;
    CounterLock& operator=(CounterLock&& other) noexcept;

    [[nodiscard]] const std::filesystem::path& counter_path() const noexcept { return counter_path_; }

private:
    std::filesystem::path counter_path_;
    int fd_ = -1;
};

/// Stored value, or 0 when the file does not exist.
/// Throws CorruptionError if the content is not "<digits>" or "<digits>\n",
/// PersistenceError if the file exists but cannot be read.
[[nodiscard]] BigInt read_counter(const std::filesystem::path& path);

/// Atomically replaces the counter with old+1 and returns the new value.
/// Takes the advisory lock for the duration.
BigInt increment_counter(const std::filesystem::path& path);

/// Same, for callers already holding the lock (the generate cycle keeps it
/// across read, emit and increment).
BigInt increment_counter(const CounterLock& held);

/// Removes the counter file; idempotent.
void reset_counter(const std::filesystem::path& path);
void reset_counter(const CounterLock& held);

/// Writes `contents` to `path` via a sibling temp file, fsync and rename.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace vulnfactory
