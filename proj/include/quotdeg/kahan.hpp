#pragma once

namespace quotdeg {

/**
 * Compensated (Kahan) accumulator.
 *
 * The float cross-check paths sum terms whose magnitudes span many orders
 * (the smallest sine term scales like sin(pi/(2p))^{2g-2}); naive summation
 * loses digits there, compensation keeps the cheap paths at ~1e-15 relative.
 */
template <typename Value>
struct KahanSum {
    Value sum{};
    Value compensation{};

    void add(const Value& value) {
        const Value y = value - compensation;
        const Value t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    KahanSum& operator+=(const Value& value) {
        add(value);
        return *this;
    }

    operator Value() const { return sum; }
};

}  // namespace quotdeg
