#include "lefschetz/int_seq.hpp"

#include <algorithm>
#include <numeric>

namespace lefschetz {

bool IntSeq::zero_from(int m) const {
    for (int i = std::max(m, lo_); i <= hi(); ++i) {
        if (at(i) != 0) return false;
    }
    return true;
}

IntSeq IntSeq::trimmed() const {
    std::vector<std::int64_t> v = values_;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return IntSeq(lo_, std::move(v));
}

int IntSeq::last_nonzero() const {
    for (int i = hi(); i >= lo_; --i) {
        if (at(i) != 0) return i;
    }
    return lo_ - 1;
}

std::int64_t IntSeq::sum() const {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

bool IntSeq::operator==(const IntSeq& other) const {
    int lo = std::min(lo_, other.lo_);
    int hi_common = std::max(hi(), other.hi());
    for (int m = lo; m <= hi_common; ++m) {
        if (at(m) != other.at(m)) return false;
    }
    return true;
}

IntSeq delta(const IntSeq& h) {
    std::vector<std::int64_t> v;
    v.reserve(h.raw().size());
    for (int m = h.lo(); m <= h.hi(); ++m) v.push_back(h.at(m) - h.at(m - 1));
    return IntSeq(h.lo(), std::move(v));
}

IntSeq delta_plus(const IntSeq& h) {
    std::vector<std::int64_t> v;
    v.reserve(h.raw().size());
    for (int m = h.lo(); m <= h.hi(); ++m) v.push_back(std::max<std::int64_t>(0, h.at(m) - h.at(m - 1)));
    return IntSeq(h.lo(), std::move(v));
}

IntSeq gamma(const IntSeq& h) {
    std::vector<std::int64_t> v;
    v.reserve(h.raw().size());
    std::int64_t acc = 0;
    for (int m = h.lo(); m <= h.hi(); ++m) {
        acc += h.at(m);
        v.push_back(acc);
    }
    return IntSeq(h.lo(), std::move(v));
}

IntSeq delta_pow(const IntSeq& h, int q) {
    IntSeq out = h;
    for (int i = 0; i < q; ++i) out = delta(out);
    return out;
}

IntSeq gamma_pow(const IntSeq& h, int q) {
    IntSeq out = h;
    for (int i = 0; i < q; ++i) out = gamma(out);
    return out;
}

bool equal_on(const IntSeq& a, const IntSeq& b, int m_max) {
    int lo = std::min(a.lo(), b.lo());
    for (int m = lo; m <= m_max; ++m) {
        if (a.at(m) != b.at(m)) return false;
    }
    return true;
}

}  // namespace lefschetz
