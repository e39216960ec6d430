#ifndef LEFSCHETZ_INT_SEQ_HPP
#define LEFSCHETZ_INT_SEQ_HPP

#include <cstdint>
#include <vector>

namespace lefschetz {

/**
 * Integer sequence Z -> Z supported on a finite window [lo, hi].
 *
 * Values below lo are zero by construction; values above hi are simply not
 * represented (callers track the degree bound they computed up to).  This
 * is the shape Hilbert functions take here: left-finite, evaluated up to
 * some maximum degree.
 */
class IntSeq {
  public:
    IntSeq() = default;
    IntSeq(int lo, std::vector<std::int64_t> values) : lo_(lo), values_(std::move(values)) {}

    /// Sequence with window [0, hi] given by `values`.
    static IntSeq from_zero(std::vector<std::int64_t> values) { return IntSeq(0, std::move(values)); }

    std::int64_t at(int m) const {
        if (m < lo_) return 0;
        std::size_t k = static_cast<std::size_t>(m - lo_);
        return k < values_.size() ? values_[k] : 0;
    }

    int lo() const { return lo_; }
    /// Largest index carried by the window (lo-1 for an empty window).
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }

    bool window_empty() const { return values_.empty(); }

    /// True if every represented value is zero from `m` on.
    bool zero_from(int m) const;

    /// Trim trailing zeros (the window shrinks, values are unchanged).
    IntSeq trimmed() const;

    /// Largest index with a nonzero value, or lo-1 if all are zero.
    int last_nonzero() const;

    std::int64_t sum() const;

    bool operator==(const IntSeq& other) const;

    const std::vector<std::int64_t>& raw() const { return values_; }

  private:
    int lo_ = 0;
    std::vector<std::int64_t> values_;
};

/// First difference: m |-> h(m) - h(m-1), on the window of h.
IntSeq delta(const IntSeq& h);

/// Truncated difference: m |-> max(0, h(m) - h(m-1)).
IntSeq delta_plus(const IntSeq& h);

/// Partial sums: m |-> sum_{i <= m} h(i).  Beyond the window of h the sums
/// keep growing, so the result is only meaningful on that window.
IntSeq gamma(const IntSeq& h);

IntSeq delta_pow(const IntSeq& h, int q);
IntSeq gamma_pow(const IntSeq& h, int q);

/// Pointwise equality on [lo, m_max] (both sequences read as 0 below their window).
bool equal_on(const IntSeq& a, const IntSeq& b, int m_max);

}  // namespace lefschetz

#endif
