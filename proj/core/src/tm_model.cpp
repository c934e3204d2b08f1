#include "vulnfactory/tm_model.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <stdexcept>

#include "vulnfactory/errors.hpp"
#include "vulnfactory/factory.hpp"

namespace vulnfactory {
namespace {

constexpr char kBlank = '_';

void require_binary(std::string_view tape) {
    if (tape.empty()) {
        throw EncodingError("empty counter tape");
    }
    for (char c : tape) {
        if (c != '0' && c != '1') {
            throw EncodingError(std::string("non-binary symbol '") + c + "' on counter tape");
        }
    }
}

// The factory machine's control states.
enum class Control { Read, Generate, Rewind, Carry, Accept };

// Explicit-tape machine for one invocation. The counter tape is unbounded to
// the left (a carry past the first cell grows it); the output tape is
// append-only.
class FactoryMachine {
public:
    explicit FactoryMachine(std::string counter) : counter_(std::move(counter)) {}

    void run() {
        // Each phase is linear in its tape; the budget only guards against a
        // broken transition table.
        const std::size_t budget = 4 * counter_.size() + 4 * output_budget_hint() + 16;
        while (control_ != Control::Accept) {
            if (++steps_ > budget) {
                throw std::logic_error("factory machine exceeded its step budget");
            }
            step();
        }
    }

    [[nodiscard]] std::size_t steps() const noexcept { return steps_; }
    [[nodiscard]] const BigInt& read_value() const noexcept { return n_; }
    [[nodiscard]] std::string take_output() { return std::move(output_); }
    [[nodiscard]] std::string counter() const {
        std::string tape = counter_;
        const auto first = tape.find_first_not_of(kBlank);
        return first == std::string::npos ? std::string("0") : tape.substr(first);
    }

private:
    std::size_t output_budget_hint() const { return 4096 + 64 * counter_.size(); }

    void step() {
        switch (control_) {
            case Control::Read: {
                // Sweep right, folding each bit into n.
                if (head_ < counter_.size()) {
                    const char symbol = counter_[head_];
                    if (symbol != '0' && symbol != '1') {
                        throw EncodingError(std::string("non-binary symbol '") + symbol +
                                            "' on counter tape");
                    }
                    n_ = 2 * n_ + (symbol == '1' ? 1 : 0);
                    ++head_;
                } else {
                    pending_ = machine_description(n_);
                    control_ = Control::Generate;
                }
                break;
            }
            case Control::Generate: {
                // One output symbol per step.
                if (written_ < pending_.size()) {
                    output_.push_back(pending_[written_++]);
                } else {
                    control_ = Control::Rewind;
                }
                break;
            }
            case Control::Rewind: {
                // Head sits one past the last cell; step onto it.
                --head_;
                control_ = Control::Carry;
                break;
            }
            case Control::Carry: {
                char& cell = counter_[head_];
                if (cell == '1') {
                    cell = '0';
                    if (head_ == 0) {
                        counter_.insert(counter_.begin(), kBlank);
                    } else {
                        --head_;
                    }
                } else {
                    // '0' or the blank left of the first cell.
                    cell = '1';
                    control_ = Control::Accept;
                }
                break;
            }
            case Control::Accept:
                break;
        }
    }

    std::string counter_;
    std::size_t head_ = 0;
    Control control_ = Control::Read;
    BigInt n_ = 0;
    std::string pending_;
    std::size_t written_ = 0;
    std::string output_;
    std::size_t steps_ = 0;
};

}  // namespace

BigInt decode_tape(std::string_view tape) {
    require_binary(tape);
    BigInt value = 0;
    for (char c : tape) {
        value <<= 1;
        if (c == '1') {
            value |= 1;
        }
    }
    return value;
}

std::string encode_tape(const BigInt& value) {
    if (value < 0) {
        throw DomainError("tape values are non-negative");
    }
    if (value == 0) {
        return "0";
    }
    std::string out;
    const std::size_t top = msb(value);
    out.reserve(top + 1);
    for (std::size_t i = top + 1; i-- > 0;) {
        out.push_back(bit_test(value, static_cast<unsigned>(i)) ? '1' : '0');
    }
    return out;
}

bool is_canonical_tape(std::string_view tape) noexcept {
    if (tape.empty()) {
        return false;
    }
    for (char c : tape) {
        if (c != '0' && c != '1') {
            return false;
        }
    }
    return tape == "0" || tape.front() == '1';
}

std::string binary_increment(std::string_view tape) {
    require_binary(tape);
    std::string out(tape);
    std::size_t i = out.size();
    while (i > 0 && out[i - 1] == '1') {
        out[--i] = '0';
    }
    if (i == 0) {
        out.insert(out.begin(), '1');
    } else {
        out[i - 1] = '1';
    }
    const auto first = out.find('1');
    return out.substr(first);
}

std::string machine_description(const BigInt& n) {
    std::string text;
    text += "MACHINE S_" + to_decimal(n) + "\n";
    text += "counter " + encode_tape(n) + "\n";
    text += "note: textual description; memory-safety weaknesses have no meaning on an abstract tape\n";
    text += "begin\n";
    text += render_module(n).source;
    text += "end\n";
    return text;
}

Invocation tm_invoke(const TmState& state) {
    require_binary(state.counter_tape);
    FactoryMachine machine(state.counter_tape);
    machine.run();

    Invocation result;
    result.emission = Emission{machine.read_value(), machine.take_output()};
    result.state = TmState{machine.counter(), state.invocation_count + 1};
    result.steps = machine.steps();
    result.halted = true;
    return result;
}

BigInt compose(const Composition& c) {
    if (c.yields.empty()) {
        throw DomainError("composition of zero factories");
    }
    BigInt total = 0;
    for (const BigInt& y : c.yields) {
        if (y <= 0) {
            throw DomainError("factory yield must be positive, got " + to_decimal(y));
        }
        total += y;
    }
    return total;
}

BigInt fermi_factory_count(unsigned long num_cwes) {
    if (num_cwes == 0) {
        throw DomainError("number of CWEs must be at least 1");
    }
    BigInt value = 1;
    value <<= num_cwes;
    return value;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0x0f]);
    }
    return out;
}

EmissionSummary summarize(const Emission& e) {
    return {e.n, sha256_hex(e.description), e.description.size()};
}

}  // namespace vulnfactory
