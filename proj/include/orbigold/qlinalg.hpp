#pragma once

// Dense exact linear algebra over the rationals: echelon forms, rank, kernel
// and image bases, linear solving, and subquotient (homology) spaces with
// coordinate maps. Matrices here are small (tens of rows), so the code favors
// clarity over asymptotic cleverness; everything is exact.

#include "orbigold/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orbigold::qlinalg {

class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMat operator*(const QMat& rhs) const;
    QMat operator+(const QMat& rhs) const;
    QMat operator-(const QMat& rhs) const;
    QMat operator-() const;
    bool operator==(const QMat& rhs) const = default;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column vector
    QMat transpose() const;
    bool is_zero() const;

    std::vector<Rat> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Rat>& v);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Columns of a stacked side by side with columns of b (row counts must agree).
QMat hcat(const QMat& a, const QMat& b);

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(QMat& m);

std::size_t rank(QMat m);

// Basis of { x : m x = 0 } as the columns of the returned matrix.
QMat kernel_basis(const QMat& m);

// Basis of the column space: the pivot columns of m, kept verbatim.
QMat image_basis(const QMat& m);

// Solves m x = b; empty optional if the system is inconsistent.
std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b);

// A basis of a subquotient ker(d_out)/im(d_in), where d_out leaves and d_in
// enters the same space and d_out * d_in = 0. `representatives` holds one
// cycle per class as columns; coordinates_of expresses any cycle in that
// basis (throwing if the vector is not a cycle).
class Subquotient {
public:
    Subquotient(QMat d_out, QMat d_in);

    std::size_t dim() const { return representatives_.cols(); }
    const QMat& representatives() const { return representatives_; }
    std::vector<Rat> coordinates_of(const std::vector<Rat>& cycle) const;

private:
    QMat d_out_;
    QMat representatives_;  // ambient-dim x dim()
    QMat rep_and_image_;    // [representatives | image basis], for coordinates
};

}  // namespace orbigold::qlinalg
