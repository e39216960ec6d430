#include "lefschetz/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace lefschetz {

PolyRing plain_ring(int nvars) {
    PolyRing ring;
    ring.nvars = nvars;
    ring.names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) ring.names.push_back("y" + std::to_string(i));
    return ring;
}

PolyRing extend_with_t(const PolyRing& ring) {
    PolyRing out;
    out.nvars = ring.nvars + 1;
    out.t_index = 0;
    out.names.push_back("T");
    out.names.insert(out.names.end(), ring.names.begin(), ring.names.end());
    if (!ring.labels.empty()) {
        out.labels.push_back(-1);
        out.labels.insert(out.labels.end(), ring.labels.begin(), ring.labels.end());
    }
    return out;
}

int degree_of(const Exponents& e) {
    int d = 0;
    for (std::int32_t v : e) d += v;
    return d;
}

bool revlex_greater(const Exponents& a, const Exponents& b) {
    const int da = degree_of(a);
    const int db = degree_of(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        const std::int32_t diff = a[i] - b[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

namespace {

void enumerate(int nvars, int degree, Exponents& current, int pos, std::vector<Exponents>& out) {
    if (pos == nvars - 1) {
        current[static_cast<std::size_t>(pos)] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current[static_cast<std::size_t>(pos)] = e;
        enumerate(nvars, degree - e, current, pos + 1, out);
    }
    current[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

DegreeTable::DegreeTable(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1 || degree < 0) {
        throw Error(ErrorCode::BadParameters, "degree table needs nvars >= 1 and degree >= 0");
    }
    Exponents current(static_cast<std::size_t>(nvars), 0);
    enumerate(nvars, degree, current, 0, monomials_);
    std::sort(monomials_.begin(), monomials_.end(),
              [](const Exponents& a, const Exponents& b) { return revlex_greater(a, b); });
    index_.reserve(monomials_.size() * 2);
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i], static_cast<std::int32_t>(i));
    }
}

std::int32_t DegreeTable::index_of(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
        throw Error(ErrorCode::DegreeOutOfRange, "monomial not in degree table");
    }
    return it->second;
}

const DegreeTable& degree_table(int nvars, int degree) {
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<DegreeTable>> cache;

    const std::pair<int, int> key{nvars, degree};
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    std::unique_lock lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<DegreeTable>(nvars, degree)).first;
    }
    return *it->second;
}

std::string monomial_to_string(const PolyRing& ring, const Exponents& e) {
    std::string out;
    for (int i = 0; i < ring.nvars; ++i) {
        const std::int32_t exp = e[static_cast<std::size_t>(i)];
        if (exp == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.names[static_cast<std::size_t>(i)];
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out.empty() ? "1" : out;
}

}  // namespace lefschetz
