#include "scottpersist/linalg.hpp"

#include "scottpersist/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace scottpersist {

namespace {

bool is_prime_u32(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(what) + ": shape mismatch");
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw DomainError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

Field Field::parse(std::string_view spec)
{
    if (spec.empty() || spec == "rational" || spec == "Q")
        return rational();
    if (spec.starts_with("fp:")) {
        auto digits = spec.substr(3);
        if (digits.empty() || digits.size() > 10)
            throw ParseError("bad field spec '" + std::string(spec) + "'");
        std::uint64_t p = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw ParseError("bad field spec '" + std::string(spec) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (p >= (1ull << 31))
            throw ParseError("field characteristic too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("bad field spec '" + std::string(spec) + "' (expected rational or fp:<prime>)");
}

const Field& default_field()
{
    static const Field field = [] {
        const char* env = std::getenv("SCOTTPERSIST_FIELD");
        return env ? Field::parse(env) : Field::rational();
    }();
    return field;
}

std::string Field::name() const
{
    return is_rational() ? "rational" : "fp:" + std::to_string(modulus_);
}

void Field::reduce_in_place(Rational& x) const
{
    if (is_rational())
        return;
    const mpz_class p(modulus_);
    mpz_class num = x.get_num() % p;
    if (num < 0)
        num += p;
    if (x.get_den() == 1) {
        x = Rational(num);
        return;
    }
    mpz_class den = x.get_den() % p;
    mpz_class inv;
    if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("denominator " + x.get_den().get_str() + " vanishes in " + name());
    mpz_class r = (num * inv) % p;
    x = Rational(r);
}

Rational Field::reduce(const Rational& x) const
{
    Rational y = x;
    reduce_in_place(y);
    return y;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols)
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows)
    , cols_(cols)
    , data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("matrix entry count does not equal rows * cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size())
    , cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t j) const
{
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        c(i, 0) = (*this)(i, j);
    return c;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const
{
    Matrix c(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i)
            c(i, k) = (*this)(i, which[k]);
    return c;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const
{
    if (row0 + rows > rows_ || col0 + cols > cols_)
        throw DimensionError("block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b)
{
    if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
        throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(row0 + i, col0 + j) = b(i, j);
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << format_rational(m(i, j));
        out << ']';
    }
    out << ']';
    return out.str();
}

RowEchelon row_reduce(Matrix a, const Field& field)
{
    RowEchelon out;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    Rational factor;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(a(pivot, c)) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a(pivot, j), a(r, j));
        if (a(r, c) != 1) {
            Rational inv = 1 / a(r, c);
            field.reduce_in_place(inv);
            for (std::size_t j = c; j < cols; ++j) {
                a(r, j) *= inv;
                field.reduce_in_place(a(r, j));
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0)
                continue;
            factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(a(r, j)) == 0)
                    continue;
                a(i, j) -= factor * a(r, j);
                field.reduce_in_place(a(i, j));
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& field)
{
    if (a.cols() != b.rows())
        throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols())
                             + " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += aik * b(k, j);
        }
    if (!field.is_rational())
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                field.reduce_in_place(c(i, j));
    return c;
}

Matrix add(const Matrix& a, const Matrix& b, const Field& field)
{
    require_same_shape(a, b, "add");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) + b(i, j);
            field.reduce_in_place(c(i, j));
        }
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b, const Field& field)
{
    require_same_shape(a, b, "subtract");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
            field.reduce_in_place(c(i, j));
        }
    return c;
}

Matrix scale(const Matrix& a, const Rational& s, const Field& field)
{
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) * s;
            field.reduce_in_place(c(i, j));
        }
    return c;
}

Matrix reduce(const Matrix& a, const Field& field)
{
    Matrix c = a;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            field.reduce_in_place(c(i, j));
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ");
    Matrix c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionError("vstack: column counts differ");
    Matrix c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b)
{
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
}

std::size_t rank(const Matrix& a, const Field& field)
{
    if (!field.is_rational())
        return row_reduce(a, field).pivots.size();

    // Bareiss on the row-wise integer scaling of a.
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<mpz_class> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j)
            m[i * cols + j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * cols + j]; };

    std::size_t r = 0;
    mpz_class previous = 1;
    mpz_class t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(at(pivot, c)) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(at(pivot, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, c) = 0;
        }
        previous = at(r, c);
        ++r;
    }
    return r;
}

Matrix kernel_basis(const Matrix& a, const Field& field)
{
    const std::size_t cols = a.cols();
    RowEchelon e = row_reduce(a, field);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j])
            free.push_back(j);

    Matrix basis(cols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            Rational v = -e.reduced(r, free[k]);
            field.reduce_in_place(v);
            basis(e.pivots[r], k) = v;
        }
    }
    return basis;
}

Matrix image_basis(const Matrix& a, const Field& field)
{
    RowEchelon e = row_reduce(a, field);
    return reduce(a.columns(e.pivots), field);
}

Matrix subspace_intersection(std::span<const Matrix> bases, const Field& field)
{
    if (bases.empty())
        throw DimensionError("subspace_intersection of an empty family");
    Matrix current = image_basis(bases[0], field);
    for (std::size_t k = 1; k < bases.size(); ++k) {
        const Matrix& other = bases[k];
        if (other.rows() != current.rows())
            throw DimensionError("subspace_intersection: ambient dimensions differ");
        if (current.cols() == 0)
            break;
        // x in span(U) cap span(W)  <=>  x = U a = W b  <=>  [U | -W] (a; b) = 0
        Matrix stacked = hstack(current, scale(other, -1, field));
        Matrix ker = kernel_basis(stacked, field);
        Matrix coeffs = ker.block(0, 0, current.cols(), ker.cols());
        current = image_basis(multiply(current, coeffs, field), field);
    }
    return current;
}

Matrix quotient_map(std::size_t dim, const Matrix& subspace, const Field& field)
{
    if (subspace.rows() != dim)
        throw DimensionError("quotient_map: subspace lives in a different ambient space");
    // Rows of q span the annihilator of the subspace.
    return kernel_basis(subspace.transposed(), field).transposed();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Field& field)
{
    if (a.rows() != b.rows())
        throw DimensionError("solve: row counts differ");
    const std::size_t n = a.cols();
    RowEchelon e = row_reduce(hstack(a, b), field);
    for (auto p : e.pivots)
        if (p >= n)
            return std::nullopt;
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[r], j) = e.reduced(r, n + j);
    return x;
}

Matrix right_inverse(const Matrix& a, const Field& field)
{
    auto s = solve(a, Matrix::identity(a.rows()), field);
    if (!s)
        throw DomainError("right_inverse: matrix is not surjective");
    return *s;
}

} // namespace scottpersist
