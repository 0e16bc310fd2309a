#include "orbigold/qlinalg.hpp"

#include <stdexcept>

namespace orbigold::qlinalg {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    QMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rat& bkj = rhs.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

QMat QMat::operator+(const QMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    QMat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

QMat QMat::operator-(const QMat& rhs) const { return *this + (-rhs); }

QMat QMat::operator-() const {
    QMat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

QMat QMat::transpose() const {
    QMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool QMat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> QMat::column(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void QMat::set_column(std::size_t j, const std::vector<Rat>& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

QMat hcat(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    QMat out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

std::vector<std::size_t> rref_in_place(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMat m) { return rref_in_place(m).size(); }

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    QMat basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(pivots[pi], k) = -r.at(pi, fc);
    }
    return basis;
}

QMat image_basis(const QMat& m) {
    QMat r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    QMat basis(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        basis.set_column(k, m.column(pivots[k]));
    return basis;
}

std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<Rat> x(m.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols());
    return x;
}

Subquotient::Subquotient(QMat d_out, QMat d_in) : d_out_(std::move(d_out)) {
    if (d_out_.cols() != d_in.rows())
        throw std::invalid_argument("subquotient: interface dimension mismatch");
    if (!(d_out_ * d_in).is_zero())
        throw std::invalid_argument("subquotient: maps do not compose to zero");

    QMat cycles = kernel_basis(d_out_);
    QMat image = image_basis(d_in);

    // Extend the image basis to a basis of the cycle space; the added cycle
    // columns represent the classes.
    QMat kept(d_out_.cols(), 0);
    QMat spanning = image;
    std::size_t base_rank = rank(spanning);
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
        QMat one(d_out_.cols(), 1);
        one.set_column(0, cycles.column(j));
        QMat candidate = hcat(spanning, one);
        if (rank(candidate) > base_rank) {
            spanning = std::move(candidate);
            ++base_rank;
            kept = hcat(kept, one);
        }
    }
    representatives_ = kept;
    rep_and_image_ = hcat(representatives_, image);
}

std::vector<Rat> Subquotient::coordinates_of(const std::vector<Rat>& cycle) const {
    if (cycle.size() != d_out_.cols())
        throw std::invalid_argument("subquotient coordinates: length mismatch");
    for (const Rat& x : d_out_.apply(cycle))
        if (x != 0) throw std::invalid_argument("subquotient coordinates: vector is not a cycle");
    auto combo = solve(rep_and_image_, cycle);
    if (!combo) throw std::logic_error("subquotient coordinates: cycle outside cycle space");
    return std::vector<Rat>(combo->begin(), combo->begin() + static_cast<long>(dim()));
}

}  // namespace orbigold::qlinalg
