#pragma once

// Dense exact linear algebra over Q or a prime field F_p.
//
// Matrices always store rationals. In prime mode every entry is kept as a
// canonical residue in [0, p) and every arithmetic result is reduced again,
// so the same routines serve both fields.

#include "scottpersist/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scottpersist {

class Field {
public:
    static Field rational() { return Field(0); }
    /// Throws DomainError unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    /// "rational" or "fp:<p>". Throws ParseError.
    static Field parse(std::string_view spec);

    bool is_rational() const { return modulus_ == 0; }
    std::uint32_t characteristic() const { return modulus_; }
    std::string name() const;

    /// Image of a rational in the field (identity over Q). Throws DomainError
    /// when the denominator vanishes mod p.
    Rational reduce(const Rational& x) const;
    void reduce_in_place(Rational& x) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p)
        : modulus_(p)
    {
    }
    std::uint32_t modulus_;
};

/// Field named by SCOTTPERSIST_FIELD, read once; rational when unset.
const Field& default_field();

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    Matrix transposed() const;
    Matrix column(std::size_t j) const;
    /// Columns listed in `which`, in order.
    Matrix columns(std::span<const std::size_t> which) const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);

struct RowEchelon {
    Matrix reduced;                   ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix a, const Field& field = Field::rational());

/// a * b. Throws DimensionError.
Matrix multiply(const Matrix& a, const Matrix& b, const Field& field = Field::rational());
/// compose(a, b) = a after b.
inline Matrix compose(const Matrix& a, const Matrix& b, const Field& field = Field::rational())
{
    return multiply(a, b, field);
}
Matrix add(const Matrix& a, const Matrix& b, const Field& field = Field::rational());
Matrix subtract(const Matrix& a, const Matrix& b, const Field& field = Field::rational());
Matrix scale(const Matrix& a, const Rational& s, const Field& field = Field::rational());
Matrix reduce(const Matrix& a, const Field& field);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Fraction-free (Bareiss) elimination over Q; plain elimination mod p.
std::size_t rank(const Matrix& a, const Field& field = Field::rational());

/// Columns form a basis of ker a.
Matrix kernel_basis(const Matrix& a, const Field& field = Field::rational());
/// Columns form a basis of the column space of a (a subset of a's columns).
Matrix image_basis(const Matrix& a, const Field& field = Field::rational());
/// Basis of the intersection of the column spans. All bases live in the same
/// ambient space; an empty list is an error.
Matrix subspace_intersection(std::span<const Matrix> bases, const Field& field = Field::rational());
/// Surjection k^dim -> k^(dim - r) whose kernel is exactly span(subspace).
Matrix quotient_map(std::size_t dim, const Matrix& subspace, const Field& field = Field::rational());
/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Field& field = Field::rational());
/// s with a s = I. Throws DomainError when a is not surjective.
Matrix right_inverse(const Matrix& a, const Field& field = Field::rational());

inline bool is_injective(const Matrix& a, const Field& field = Field::rational())
{
    return rank(a, field) == a.cols();
}
inline bool is_surjective(const Matrix& a, const Field& field = Field::rational())
{
    return rank(a, field) == a.rows();
}

} // namespace scottpersist
