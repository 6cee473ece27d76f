#include "fpindex/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpindex {

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, size_t a, size_t b, const Int& c) {
    for (size_t j = 0; j < m.cols(); ++j)
        m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMatrix& m, size_t a, size_t b, const Int& c) {
    for (size_t i = 0; i < m.rows(); ++i)
        m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, size_t a) {
    for (size_t j = 0; j < m.cols(); ++j)
        m.at(a, j) = -m.at(a, j);
}

}  // namespace

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> out;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0)
            out.push_back(d.at(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& a = f.d;
    const size_t limit = std::min(a.rows(), a.cols());

    for (size_t t = 0; t < limit; ++t) {
        // Locate a pivot of minimal absolute value in the trailing block.
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < a.rows(); ++i)
            for (size_t j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0)
                    continue;
                Int mag = abs(a.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (!found)
            break;
        if (pi != t) { swap_rows(a, t, pi); swap_rows(f.u, t, pi); }
        if (pj != t) { swap_cols(a, t, pj); swap_cols(f.v, t, pj); }

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0)
                    continue;
                Int q = a.at(i, t) / a.at(t, t);  // truncated quotient shrinks the entry
                if (q != 0) { add_row(a, i, t, -q); add_row(f.u, i, t, -q); }
                if (a.at(i, t) != 0) {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(a, t, i);
                    swap_rows(f.u, t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0)
                    continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) { add_col(a, j, t, -q); add_col(f.v, j, t, -q); }
                if (a.at(t, j) != 0) {
                    swap_cols(a, t, j);
                    swap_cols(f.v, t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;

            // Pivot must divide every entry of the trailing block.
            bool divides_all = true;
            for (size_t i = t + 1; i < a.rows() && divides_all; ++i)
                for (size_t j = t + 1; j < a.cols() && divides_all; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(a, t, i, Int(1));
                        add_row(f.u, t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all)
                break;
        }
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(f.u, t);
        }
    }
    return f;
}

namespace {

long long matrix_rank(const IntMatrix& m) {
    if (m.empty())
        return 0;
    return static_cast<long long>(smith_normal_form(m).invariant_factors().size());
}

}  // namespace

std::array<HomologyGroup, kMaxDim + 1> relative_homology(const SimplicialPair& p) {
    p.validate();
    auto boundaries = boundary_matrices(p);
    std::array<long long, kMaxDim + 1> chain_rank{};
    for (int d = 0; d <= kMaxDim; ++d)
        chain_rank[static_cast<size_t>(d)] =
            static_cast<long long>(relative_basis(p, d).size());

    std::array<HomologyGroup, kMaxDim + 1> out;
    for (int d = 0; d <= kMaxDim; ++d) {
        long long rank_in = d >= 1 ? matrix_rank(boundaries[static_cast<size_t>(d - 1)]) : 0;
        HomologyGroup g;
        if (d < kMaxDim) {
            SmithForm f = smith_normal_form(boundaries[static_cast<size_t>(d)]);
            auto factors = f.invariant_factors();
            long long rank_out = static_cast<long long>(factors.size());
            g.betti = chain_rank[static_cast<size_t>(d)] - rank_in - rank_out;
            for (const Int& v : factors)
                if (v >= 2)
                    g.torsion.push_back(v);
        } else {
            g.betti = chain_rank[static_cast<size_t>(d)] - rank_in;
        }
        out[static_cast<size_t>(d)] = std::move(g);
    }
    return out;
}

ChainMap chain_map_from_vertex_map(const SimplicialPair& p, const std::vector<int>& vertex_map) {
    p.validate();
    auto image_vertex = [&](int v) {
        if (v < 0 || static_cast<size_t>(v) >= vertex_map.size())
            throw std::invalid_argument("vertex map does not cover all vertices");
        return vertex_map[static_cast<size_t>(v)];
    };

    // The map must be simplicial and must send sub into sub.
    for (int d = 0; d <= kMaxDim; ++d) {
        for (const Simplex& s : p.total.simplices(d)) {
            Simplex img;
            for (int v : s)
                img.push_back(image_vertex(v));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!p.total.contains(img))
                throw std::invalid_argument("vertex map is not simplicial");
            if (p.sub.contains(s) && !p.sub.contains(img))
                throw std::invalid_argument("vertex map does not preserve the subcomplex");
        }
    }

    ChainMap cm;
    for (int d = 0; d <= kMaxDim; ++d) {
        auto basis = relative_basis(p, d);
        IntMatrix m(basis.size(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            Simplex img;
            for (int v : basis[j])
                img.push_back(image_vertex(v));
            // Degenerate images (repeated vertices) map to zero.
            Simplex sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;
            // Sign of the permutation sorting the image tuple.
            int sign = 1;
            Simplex work = img;
            for (size_t x = 0; x < work.size(); ++x)
                for (size_t y = x + 1; y < work.size(); ++y)
                    if (work[x] > work[y]) {
                        std::swap(work[x], work[y]);
                        sign = -sign;
                    }
            auto it = std::lower_bound(basis.begin(), basis.end(), work);
            if (it == basis.end() || *it != work)
                continue;  // image lies in sub: zero relative chain
            m.at(static_cast<size_t>(it - basis.begin()), j) = sign;
        }
        cm.matrices[static_cast<size_t>(d)] = std::move(m);
    }

    // d_i M_i = M_{i-1} d_i on the relative complex.
    auto boundaries = boundary_matrices(p);
    for (int d = 1; d <= kMaxDim; ++d) {
        const IntMatrix& bd = boundaries[static_cast<size_t>(d - 1)];
        if (!(bd * cm.matrices[static_cast<size_t>(d)] ==
              cm.matrices[static_cast<size_t>(d - 1)] * bd))
            throw std::invalid_argument("chain map does not commute with the boundary");
    }
    return cm;
}

Int lefschetz_number(const ChainMap& m, long long n) {
    if (n < 1)
        throw std::invalid_argument("lefschetz_number: n must be >= 1");
    Int total = 0;
    for (int d = 0; d <= kMaxDim; ++d) {
        const IntMatrix& mat = m.matrices[static_cast<size_t>(d)];
        if (mat.empty())
            continue;
        if (!mat.is_square())
            throw std::invalid_argument("lefschetz_number: non-square matrix");
        Int t = matrix_power(mat, n).trace();
        total += (d % 2 == 0) ? t : -t;
    }
    return total;
}

Int index_from_traces(const ChainMap& m, long long n) {
    const IntMatrix& m0 = m.matrices[0];
    const IntMatrix& m3 = m.matrices[3];
    if (!(m0.rows() == 1 && m0.cols() == 1 && m0.at(0, 0) == 1))
        throw std::invalid_argument("index_from_traces: M_0 must be the rank-1 identity");
    if (!m3.empty() && !m3.is_zero())
        throw std::invalid_argument("index_from_traces: M_3 must vanish");
    Int t1 = m.matrices[1].empty() ? Int(0) : matrix_power(m.matrices[1], n).trace();
    Int t2 = m.matrices[2].empty() ? Int(0) : matrix_power(m.matrices[2], n).trace();
    return -t1 + t2;
}

bool nonzero_spectrum_match(const IntMatrix& u, const IntMatrix& v, long long bound) {
    if (!u.is_square() || !v.is_square())
        throw std::invalid_argument("nonzero_spectrum_match: matrices must be square");
    if (bound < static_cast<long long>(u.rows() + v.rows()))
        throw std::invalid_argument("nonzero_spectrum_match: bound below dim(u) + dim(v)");
    auto qu = strip_power_of_x(characteristic_polynomial(u)).second;
    auto qv = strip_power_of_x(characteristic_polynomial(v)).second;
    return qu == qv;
}

EigencheckResult roots_of_unity_eigencheck(const IntMatrix& m, long long max_order) {
    if (!m.is_square())
        throw std::invalid_argument("roots_of_unity_eigencheck: matrix must be square");
    auto [s, q] = strip_power_of_x(characteristic_polynomial(m));
    (void)s;
    if (q.size() <= 1)
        return {true, 1};  // nilpotent or empty: no nonzero eigenvalues

    long long period = 1;
    for (long long d = 1; d <= max_order && q.size() > 1; ++d) {
        IntPoly phi = cyclotomic(d);
        if (phi.size() > q.size())
            continue;
        bool used = false;
        for (;;) {
            auto quot = poly_divide_exact(q, phi);
            if (!quot)
                break;
            q = *quot;
            used = true;
        }
        if (used)
            period = lcm_ll(period, d);
    }
    if (q.size() == 1 && q[0] == 1)
        return {true, period};
    return {false, std::nullopt};
}

}  // namespace fpindex
