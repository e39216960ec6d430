#ifndef LEFSCHETZ_SIMPLICIAL_COMPLEX_HPP
#define LEFSCHETZ_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/int_seq.hpp"

namespace lefschetz {

/// A face is a sorted set of vertex labels; {} is the empty face.
using Face = std::vector<int>;

/// Dimension of a face (cardinality minus one).
inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

/**
 * A simplicial complex stored by its facets.
 *
 * Faces are implicit: s is a face iff s is a subset of some facet, so
 * downward closure holds by construction.  The facet list is an antichain
 * in lexicographic order, which makes serialization canonical.
 *
 * vertex_labels is the ambient vertex set and may strictly contain the
 * support (the vertices that actually appear in a face); the Stanley-Reisner
 * ideal then picks up linear generators for the missing vertices.
 *
 * Instances are immutable after construction.
 */
class SimplicialComplex {
  public:
    /// Normalizes: sorts faces, drops non-maximal ones.  Every vertex used by a
    /// facet must appear in `vertices`.  An empty facet list denotes {{}}.
    static SimplicialComplex from_facets(std::vector<int> vertices, std::vector<Face> facets);

    const std::vector<int>& vertex_labels() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// Dimension of the complex; -1 for the complex {{}}.
    int dim() const { return dim_; }

    /// Vertices appearing in some face, sorted.
    std::vector<int> support() const;

    bool is_face(const Face& s) const;

    /// Every face including the empty one, sorted by (size, lex).
    std::vector<Face> all_faces() const;

    std::vector<Face> faces_of_dim(int q) const;

    /// f[i] = number of (i-1)-dimensional faces; f[0] = 1 counts the empty face.
    std::vector<std::int64_t> f_vector() const;

    /// Standard transform of the f-vector; length dim()+2.
    std::vector<std::int64_t> h_vector() const;

    std::int64_t euler_characteristic() const;

    std::string to_json() const;
    static SimplicialComplex from_json(const std::string& text);

    /// FNV-1a over the canonical serialization.
    std::uint64_t hash() const;

    bool operator==(const SimplicialComplex& other) const {
        return vertices_ == other.vertices_ && facets_ == other.facets_;
    }

  private:
    std::vector<int> vertices_;
    std::vector<Face> facets_;
    int dim_ = -1;
};

/// {alpha : alpha and s disjoint, alpha union s in D}, on vertex set supp(D) \ s.
SimplicialComplex link(const SimplicialComplex& d, const Face& s);

/// {alpha : alpha union s in D}, on the ambient vertex set of D.
SimplicialComplex star(const SimplicialComplex& d, const Face& s);

/// Join of complexes on disjoint vertex sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/**
 * Stellar subdivision with respect to a face s of dimension >= 1:
 * replace star(s) by the cone with apex `new_vertex` over link(s) * boundary(s).
 */
SimplicialComplex stellar_subdivision(const SimplicialComplex& d, const Face& s, int new_vertex);

/// Boundary complex of the simplex on vertices 1..n (all (n-1)-subsets as facets).
SimplicialComplex simplex_boundary(int n);

/// Boundary of the m-fold cross-polytope: vertices 1..2m, antipodal pairs {k, k+m}.
SimplicialComplex cross_polytope_boundary(int m);

/**
 * Boundary complex of the cyclic polytope C(n, dim) on vertices 1..n.
 *
 * A dim-subset S is a facet iff for every pair i < j of vertices outside S
 * the count |{k in S : i < k < j}| is even (Gale's evenness condition).
 */
SimplicialComplex cyclic_polytope_boundary(int n, int dim);

/// C(n, k), valid for the desk-scale ranges used here.
std::int64_t binomial(int n, int k);

/// Hilbert function of the Stanley-Reisner ring from face counts:
/// HF(m) = sum_j f_j * C(m-1, j) for m >= 1, HF(0) = 1.
IntSeq sr_hilbert_from_faces(const SimplicialComplex& d, int m_max);

}  // namespace lefschetz

#endif
