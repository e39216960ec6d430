#ifndef LEFSCHETZ_MONOMIAL_HPP
#define LEFSCHETZ_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lefschetz/errors.hpp"

namespace lefschetz {

/// Exponent vector of a monomial; position 0 is the largest variable in the
/// term order.
using Exponents = std::vector<std::int32_t>;

/**
 * Descriptor of a standard graded polynomial ring.
 *
 * Variables are ordered by importance: index 0 is the largest variable in
 * the graded reverse lexicographic order.  For Stanley-Reisner rings the
 * variables follow ascending vertex labels, so the smallest label is the
 * largest variable.  The T-extension puts T at index 0 (T > x_1 > ... > x_n).
 */
struct PolyRing {
    int nvars = 0;
    std::vector<std::string> names;  // size nvars
    std::vector<int> labels;         // vertex label per variable; -1 for T; may be empty
    int t_index = -1;                // distinguished variable (T) or -1

    bool operator==(const PolyRing& other) const {
        return nvars == other.nvars && names == other.names && labels == other.labels &&
               t_index == other.t_index;
    }
};

/// Ring with variables y0..y{n-1} (no labels, no distinguished variable).
PolyRing plain_ring(int nvars);

/// New ring with T prepended as the largest variable.
PolyRing extend_with_t(const PolyRing& ring);

int degree_of(const Exponents& e);

/// Graded reverse lexicographic comparison: higher degree wins; among equal
/// degrees a > b iff the last nonzero entry of a - b is negative.
bool revlex_greater(const Exponents& a, const Exponents& b);

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::int32_t v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/**
 * All monomials of a fixed degree in a fixed number of variables, sorted
 * descending in revlex (column 0 is the largest monomial).  Tables are
 * built once and shared process-wide; lookups after construction are
 * thread-safe.
 */
class DegreeTable {
  public:
    DegreeTable(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::int64_t size() const { return static_cast<std::int64_t>(monomials_.size()); }
    const std::vector<Exponents>& monomials() const { return monomials_; }
    const Exponents& monomial(std::int64_t col) const {
        return monomials_[static_cast<std::size_t>(col)];
    }

    /// Column of a monomial; throws DegreeOutOfRange on degree mismatch.
    std::int32_t index_of(const Exponents& e) const;

  private:
    int nvars_;
    int degree_;
    std::vector<Exponents> monomials_;
    std::unordered_map<Exponents, std::int32_t, ExponentsHash> index_;
};

/// Shared table cache; safe for concurrent callers.
const DegreeTable& degree_table(int nvars, int degree);

std::string monomial_to_string(const PolyRing& ring, const Exponents& e);

}  // namespace lefschetz

#endif
