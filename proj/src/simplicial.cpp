#include "fpindex/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fpindex {

namespace {

Simplex normalized(Simplex s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("simplex has a repeated vertex");
    if (!s.empty() && s.front() < 0)
        throw std::invalid_argument("negative vertex id");
    return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices,
                                                    bool auto_close,
                                                    size_t* closed_faces_added) {
    std::set<Simplex> all;
    for (const Simplex& raw : simplices) {
        Simplex s = normalized(raw);
        if (s.empty())
            throw std::invalid_argument("empty simplex");
        if (static_cast<int>(s.size()) - 1 > kMaxDim)
            throw std::invalid_argument("simplex dimension exceeds 3");
        all.insert(std::move(s));
    }

    size_t added = 0;
    std::set<Simplex> closed = all;
    std::vector<Simplex> queue(closed.begin(), closed.end());
    while (!queue.empty()) {
        Simplex s = std::move(queue.back());
        queue.pop_back();
        if (s.size() <= 1)
            continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    face.push_back(s[i]);
            if (closed.insert(face).second) {
                ++added;
                queue.push_back(std::move(face));
            }
        }
    }
    if (added > 0 && !auto_close)
        throw std::invalid_argument("simplex list is not face-closed");
    if (closed_faces_added)
        *closed_faces_added = added;

    SimplicialComplex out;
    for (const Simplex& s : closed)
        out.by_dim_[s.size() - 1].push_back(s);
    for (auto& list : out.by_dim_)
        std::sort(list.begin(), list.end());
    return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > kMaxDim)
        throw std::out_of_range("simplex dimension out of range");
    return by_dim_[static_cast<size_t>(dim)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > kMaxDim)
        return false;
    const auto& list = by_dim_[s.size() - 1];
    return std::binary_search(list.begin(), list.end(), s);
}

bool SimplicialComplex::empty() const {
    for (const auto& list : by_dim_)
        if (!list.empty())
            return false;
    return true;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= kMaxDim; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
}

void SimplicialPair::validate() const {
    for (int d = 0; d <= kMaxDim; ++d)
        for (const Simplex& s : sub.simplices(d))
            if (!total.contains(s))
                throw std::invalid_argument("sub is not a subcomplex of total");
}

std::vector<Simplex> relative_basis(const SimplicialPair& p, int dim) {
    std::vector<Simplex> basis;
    for (const Simplex& s : p.total.simplices(dim))
        if (!p.sub.contains(s))
            basis.push_back(s);
    return basis;
}

namespace {

// d[s] = sum_i (-1)^i (s with vertex i dropped), ascending-order orientation.
std::array<IntMatrix, kMaxDim> boundaries_for(const SimplicialPair& pair) {
    std::array<IntMatrix, kMaxDim> out;
    std::array<std::vector<Simplex>, kMaxDim + 1> basis;
    for (int d = 0; d <= kMaxDim; ++d)
        basis[static_cast<size_t>(d)] = relative_basis(pair, d);

    for (int d = 1; d <= kMaxDim; ++d) {
        const auto& cols = basis[static_cast<size_t>(d)];
        const auto& rows = basis[static_cast<size_t>(d - 1)];
        IntMatrix m(rows.size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            const Simplex& s = cols[j];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        face.push_back(s[i]);
                auto it = std::lower_bound(rows.begin(), rows.end(), face);
                if (it == rows.end() || *it != face)
                    continue;  // face lies in sub: zero in the relative complex
                size_t r = static_cast<size_t>(it - rows.begin());
                m.at(r, j) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        out[static_cast<size_t>(d - 1)] = std::move(m);
    }
    return out;
}

}  // namespace

std::array<IntMatrix, kMaxDim> boundary_matrices(const SimplicialComplex& c) {
    return boundaries_for(SimplicialPair{c, SimplicialComplex{}});
}

std::array<IntMatrix, kMaxDim> boundary_matrices(const SimplicialPair& p) {
    p.validate();
    return boundaries_for(p);
}

}  // namespace fpindex
