#include "vulnfactory/counter_store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {
namespace fs = std::filesystem;

namespace {

std::string errno_text() { return std::strerror(errno); }

std::string describe(const fs::path& p) { return "'" + p.string() + "'"; }

void write_all(int fd, std::string_view data, const fs::path& p) {
    while (!data.empty()) {
        const ssize_t written = ::write(fd, data.data(), data.size());
        if (written < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw PersistenceError("write to " + describe(p) + " failed: " + errno_text());
        }
        data.remove_prefix(static_cast<std::size_t>(written));
    }
}

std::string temp_name_for(const fs::path& target) {
    static std::atomic<unsigned long> sequence{0};
    return target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(sequence.fetch_add(1));
}

}  // namespace

fs::path lock_path_for(const fs::path& counter_path) {
    fs::path lock = counter_path;
    lock.replace_extension(".lock");
    return lock;
}

CounterLock::CounterLock(const fs::path& counter_path) : counter_path_(counter_path) {
    const fs::path lock = lock_path_for(counter_path_);
    fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) {
        throw PersistenceError("cannot open lock file " + describe(lock) + ": " + errno_text());
    }
    while (::flock(fd_, LOCK_EX) != 0) {
        if (errno == EINTR) {
            continue;
        }
        const std::string why = errno_text();
        ::close(fd_);
        fd_ = -1;
        throw PersistenceError("cannot lock " + describe(lock) + ": " + why);
    }
}

CounterLock::~CounterLock() {
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

CounterLock::CounterLock(CounterLock&& other) noexcept
    : counter_path_(std::move(other.counter_path_)), fd_(other.fd_) {
    other.fd_ = -1;
}

CounterLock& CounterLock::operator=(CounterLock&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
        counter_path_ = std::move(other.counter_path_);
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

BigInt read_counter(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::error_code ec;
        if (!fs::exists(path, ec) && !ec) {
            return 0;
        }
        throw PersistenceError("cannot read counter " + describe(path));
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw PersistenceError("read error on counter " + describe(path));
    }

    std::string_view digits = content;
    if (!digits.empty() && digits.back() == '\n') {
        digits.remove_suffix(1);
    }
    if (!is_decimal(digits)) {
        throw CorruptionError("counter " + describe(path) + " does not hold a decimal value");
    }
    return parse_decimal(digits);
}

void write_file_atomically(const fs::path& path, std::string_view contents) {
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / temp_name_for(path);

    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
    if (fd < 0) {
        throw PersistenceError("cannot create " + describe(tmp) + ": " + errno_text());
    }
    try {
        write_all(fd, contents, tmp);
        if (::fsync(fd) != 0) {
            throw PersistenceError("fsync of " + describe(tmp) + " failed: " + errno_text());
        }
    } catch (...) {
        ::close(fd);
        ::unlink(tmp.c_str());
        throw;
    }
    ::close(fd);

    if (::rename(tmp.c_str(), path.c_str()) != 0) {
        const std::string why = errno_text();
        ::unlink(tmp.c_str());
        throw PersistenceError("cannot replace " + describe(path) + ": " + why);
    }
}

BigInt increment_counter(const CounterLock& held) {
    const fs::path& path = held.counter_path();
    const BigInt next = read_counter(path) + 1;
    write_file_atomically(path, to_decimal(next) + "\n");
    return next;
}

BigInt increment_counter(const fs::path& path) {
    const CounterLock lock(path);
    return increment_counter(lock);
}

void reset_counter(const CounterLock& held) {
    std::error_code ec;
    fs::remove(held.counter_path(), ec);
    if (ec) {
        throw PersistenceError("cannot remove counter " + describe(held.counter_path()) + ": " +
                               ec.message());
    }
}

void reset_counter(const fs::path& path) {
    const CounterLock lock(path);
    reset_counter(lock);
}

}  // namespace vulnfactory
