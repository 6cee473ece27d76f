#include "fpindex/int_matrix.hpp"

#include <map>
#include <stdexcept>

namespace fpindex {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (size_t j = 0; j < c; ++j)
            m.at(i, j) = to_int(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] - other.data_[i];
    return out;
}

Int IntMatrix::trace() const {
    if (!is_square())
        throw std::invalid_argument("IntMatrix::trace: matrix not square");
    Int t = 0;
    for (size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square())
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix matrix_power(const IntMatrix& a, long long n) {
    if (!a.is_square())
        throw std::invalid_argument("matrix_power: matrix not square");
    if (n < 0)
        throw std::invalid_argument("matrix_power: negative exponent");
    IntMatrix result = IntMatrix::identity(a.rows());
    IntMatrix base = a;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

namespace {

void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty())
        return {};
    IntPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

std::optional<IntPoly> poly_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty())
        throw std::invalid_argument("poly_divide_exact: division by zero polynomial");
    IntPoly rem = a;
    poly_trim(rem);
    if (rem.empty())
        return IntPoly{};
    if (rem.size() < b.size())
        return std::nullopt;
    IntPoly quot(rem.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + b.size() - 1];
        if (top == 0)
            continue;
        if (top % lead != 0)
            return std::nullopt;
        Int q = top / lead;
        quot[i] = q;
        for (size_t j = 0; j < b.size(); ++j)
            rem[i + j] -= q * b[j];
    }
    for (const Int& c : rem)
        if (c != 0)
            return std::nullopt;
    return quot;
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("characteristic_polynomial: matrix not square");
    const size_t n = a.rows();
    IntPoly coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    if (n == 0)
        return coeffs;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with exact division.
    IntMatrix m = a;
    for (size_t k = 1; k <= n; ++k) {
        Int t = m.trace();
        if (t % Int(static_cast<unsigned long>(k)) != 0)
            throw std::logic_error("characteristic_polynomial: inexact division");
        coeffs[n - k] = -t / Int(static_cast<unsigned long>(k));
        if (k < n) {
            IntMatrix shifted = m;
            for (size_t i = 0; i < n; ++i)
                shifted.at(i, i) += coeffs[n - k];
            m = a * shifted;
        }
    }
    return coeffs;
}

std::pair<size_t, IntPoly> strip_power_of_x(const IntPoly& p) {
    IntPoly q = p;
    poly_trim(q);
    if (q.empty())
        return {0, {}};
    size_t s = 0;
    while (s < q.size() && q[s] == 0)
        ++s;
    return {s, IntPoly(q.begin() + static_cast<long>(s), q.end())};
}

IntPoly cyclotomic(long long d) {
    if (d < 1)
        throw std::invalid_argument("cyclotomic: d must be >= 1");
    static std::map<long long, IntPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    // X^d - 1 divided by the cyclotomics of the proper divisors.
    IntPoly num(static_cast<size_t>(d) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (long long e : divisors_of(d)) {
        if (e == d)
            continue;
        auto q = poly_divide_exact(num, cyclotomic(e));
        if (!q)
            throw std::logic_error("cyclotomic: inexact division");
        num = *q;
    }
    cache.emplace(d, num);
    return num;
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix not square");
    const size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            for (size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                if (prev != 1 && v % prev != 0)
                    throw std::logic_error("determinant: inexact Bareiss step");
                m.at(i, j) = v / prev;
            }
        prev = m.at(k, k);
    }
    Int det = m.at(n - 1, n - 1);
    return sign == 1 ? det : -det;
}

}  // namespace fpindex
