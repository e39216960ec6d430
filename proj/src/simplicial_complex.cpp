#include "lefschetz/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace lefschetz {

namespace {

bool is_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face sorted_unique(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertices, std::vector<Face> facets) {
    SimplicialComplex out;
    out.vertices_ = sorted_unique(std::move(vertices));

    for (Face& f : facets) f = sorted_unique(std::move(f));
    if (facets.empty()) facets.push_back({});

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Keep only maximal faces.
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
            if (i != j && facets[i].size() <= facets[j].size() && is_subset(facets[i], facets[j]) &&
                facets[i] != facets[j]) {
                dominated = true;
            }
        }
        if (!dominated) maximal.push_back(facets[i]);
    }

    for (const Face& f : maximal) {
        for (int v : f) {
            if (!std::binary_search(out.vertices_.begin(), out.vertices_.end(), v)) {
                throw Error(ErrorCode::BadParameters,
                            "facet vertex " + std::to_string(v) + " missing from vertex set");
            }
        }
    }

    out.facets_ = std::move(maximal);
    out.dim_ = -1;
    for (const Face& f : out.facets_) out.dim_ = std::max(out.dim_, face_dim(f));
    return out;
}

std::vector<int> SimplicialComplex::support() const {
    std::set<int> s;
    for (const Face& f : facets_) s.insert(f.begin(), f.end());
    return std::vector<int>(s.begin(), s.end());
}

bool SimplicialComplex::is_face(const Face& s) const {
    Face f = sorted_unique(s);
    for (const Face& facet : facets_) {
        if (is_subset(f, facet)) return true;
    }
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> seen;
    for (const Face& facet : facets_) {
        const std::size_t n = facet.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) sub.push_back(facet[i]);
            }
            seen.insert(std::move(sub));
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int q) const {
    std::vector<Face> out;
    for (const Face& f : all_faces()) {
        if (face_dim(f) == q) out.push_back(f);
    }
    return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(dim_ + 2), 0);
    for (const Face& face : all_faces()) f[face.size()] += 1;
    return f;
}

std::vector<std::int64_t> SimplicialComplex::h_vector() const {
    const std::vector<std::int64_t> f = f_vector();
    const int d = dim_ + 1;
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i) {
            const std::int64_t sign = ((j - i) % 2 == 0) ? 1 : -1;
            acc += sign * binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    const std::vector<std::int64_t> f = f_vector();
    std::int64_t chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += ((i - 1) % 2 == 0 ? 1 : -1) * f[i];
    return chi;
}

std::string SimplicialComplex::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices_;
    j["facets"] = facets_;
    return j.dump();
}

SimplicialComplex SimplicialComplex::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets")) {
        throw Error(ErrorCode::ParseError, "complex JSON must have 'vertices' and 'facets'");
    }
    try {
        std::vector<int> vertices = j["vertices"].get<std::vector<int>>();
        std::vector<Face> facets = j["facets"].get<std::vector<Face>>();
        for (int v : vertices) {
            if (v < 0) throw Error(ErrorCode::ParseError, "vertex labels must be non-negative");
        }
        return from_facets(std::move(vertices), std::move(facets));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid complex JSON: ") + e.what());
    }
}

std::uint64_t SimplicialComplex::hash() const {
    const std::string s = to_json();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

SimplicialComplex link(const SimplicialComplex& d, const Face& s) {
    if (!d.is_face(s)) throw Error(ErrorCode::NotAFace, "link of a non-face");
    Face sf = s;
    std::sort(sf.begin(), sf.end());

    std::vector<Face> facets;
    for (const Face& f : d.facets()) {
        if (std::includes(f.begin(), f.end(), sf.begin(), sf.end())) {
            Face rest;
            std::set_difference(f.begin(), f.end(), sf.begin(), sf.end(), std::back_inserter(rest));
            facets.push_back(std::move(rest));
        }
    }

    std::vector<int> verts;
    const std::vector<int> supp = d.support();
    std::set_difference(supp.begin(), supp.end(), sf.begin(), sf.end(), std::back_inserter(verts));
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& d, const Face& s) {
    if (!d.is_face(s)) throw Error(ErrorCode::NotAFace, "star of a non-face");
    Face sf = s;
    std::sort(sf.begin(), sf.end());

    std::vector<Face> facets;
    for (const Face& f : d.facets()) {
        if (std::includes(f.begin(), f.end(), sf.begin(), sf.end())) facets.push_back(f);
    }
    return SimplicialComplex::from_facets(d.vertex_labels(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<int> common;
    std::set_intersection(a.vertex_labels().begin(), a.vertex_labels().end(), b.vertex_labels().begin(),
                          b.vertex_labels().end(), std::back_inserter(common));
    if (!common.empty()) {
        throw Error(ErrorCode::VertexClash, "join requires disjoint vertex sets");
    }

    std::vector<int> verts = a.vertex_labels();
    verts.insert(verts.end(), b.vertex_labels().begin(), b.vertex_labels().end());

    std::vector<Face> facets;
    for (const Face& fa : a.facets()) {
        for (const Face& fb : b.facets()) {
            Face u = fa;
            u.insert(u.end(), fb.begin(), fb.end());
            facets.push_back(std::move(u));
        }
    }
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& d, const Face& s, int new_vertex) {
    Face sf = s;
    std::sort(sf.begin(), sf.end());
    if (!d.is_face(sf)) throw Error(ErrorCode::NotAFace, "stellar subdivision of a non-face");
    if (face_dim(sf) < 1) {
        throw Error(ErrorCode::FaceTooSmall, "stellar subdivision requires a face of dimension >= 1");
    }
    if (std::binary_search(d.vertex_labels().begin(), d.vertex_labels().end(), new_vertex)) {
        throw Error(ErrorCode::VertexClash,
                    "new vertex " + std::to_string(new_vertex) + " already present");
    }

    std::vector<Face> facets;
    for (const Face& f : d.facets()) {
        if (!std::includes(f.begin(), f.end(), sf.begin(), sf.end())) facets.push_back(f);
    }

    const SimplicialComplex lk = link(d, sf);
    for (const Face& alpha : lk.facets()) {
        for (std::size_t drop = 0; drop < sf.size(); ++drop) {
            Face facet;
            facet.push_back(new_vertex);
            facet.insert(facet.end(), alpha.begin(), alpha.end());
            for (std::size_t i = 0; i < sf.size(); ++i) {
                if (i != drop) facet.push_back(sf[i]);
            }
            facets.push_back(std::move(facet));
        }
    }

    std::vector<int> verts = d.vertex_labels();
    verts.push_back(new_vertex);
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw Error(ErrorCode::BadParameters, "simplex boundary needs n >= 1");
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Face> facets;
    for (int skip = 0; skip < n; ++skip) {
        Face f;
        for (int i = 0; i < n; ++i) {
            if (i != skip) f.push_back(i + 1);
        }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

SimplicialComplex cross_polytope_boundary(int m) {
    if (m < 1) throw Error(ErrorCode::BadParameters, "cross-polytope boundary needs m >= 1");
    std::vector<int> verts(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) verts[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Face> facets;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        Face f;
        for (int k = 0; k < m; ++k) {
            f.push_back((mask & (std::uint32_t{1} << k)) ? k + 1 + m : k + 1);
        }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

SimplicialComplex cyclic_polytope_boundary(int n, int dim) {
    if (!(n > dim && dim >= 2)) {
        throw Error(ErrorCode::BadParameters, "cyclic polytope boundary needs n > dim >= 2");
    }

    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Face> facets;
    std::vector<int> subset(static_cast<std::size_t>(dim));
    // Iterate dim-subsets of {1..n} in lexicographic order.
    for (int i = 0; i < dim; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        bool gale = true;
        for (int i = 1; i <= n && gale; ++i) {
            if (std::binary_search(subset.begin(), subset.end(), i)) continue;
            for (int j = i + 1; j <= n && gale; ++j) {
                if (std::binary_search(subset.begin(), subset.end(), j)) continue;
                int count = 0;
                for (int k : subset) {
                    if (i < k && k < j) ++count;
                }
                if (count % 2 != 0) gale = false;
            }
        }
        if (gale) facets.push_back(subset);

        // Next subset.
        int pos = dim - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - (dim - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < dim; ++i) {
            subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

IntSeq sr_hilbert_from_faces(const SimplicialComplex& d, int m_max) {
    const std::vector<std::int64_t> f = d.f_vector();
    std::vector<std::int64_t> hf(static_cast<std::size_t>(m_max + 1), 0);
    hf[0] = 1;
    for (int m = 1; m <= m_max; ++m) {
        std::int64_t acc = 0;
        for (std::size_t j = 1; j < f.size(); ++j) {
            acc += f[j] * binomial(m - 1, static_cast<int>(j) - 1);
        }
        hf[static_cast<std::size_t>(m)] = acc;
    }
    return IntSeq::from_zero(std::move(hf));
}

}  // namespace lefschetz
