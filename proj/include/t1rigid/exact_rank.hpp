#ifndef T1RIGID_EXACT_RANK_HPP
#define T1RIGID_EXACT_RANK_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "t1rigid/scalar.hpp"

namespace t1rigid {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/**
 * Row-echelon basis grown one row at a time. Only exact scalars make sense
 * here: a pivot is any entry that compares unequal to zero.
 */
template <class Scalar>
class RankAccumulator
{
public:
    explicit RankAccumulator(Eigen::Index cols)
        : basis_(cols, cols)
    {
    }

    Eigen::Index cols() const { return basis_.cols(); }
    Eigen::Index rank() const { return rank_; }
    bool full() const { return rank_ == basis_.cols(); }

    /// Returns true when the row was independent of the rows seen so far.
    template <class Derived>
    bool add(const Eigen::MatrixBase<Derived> & row)
    {
        if (full())
            return false;
        DenseRow<Scalar> v = row;
        for (Eigen::Index k = 0; k < rank_; ++k) {
            const Scalar factor = v(pivots_[k]);
            if (factor != Scalar(0))
                v -= factor * basis_.row(k);
        }
        Eigen::Index p = 0;
        while (p < v.cols() && v(p) == Scalar(0))
            ++p;
        if (p == v.cols())
            return false;
        const Scalar lead = v(p);
        basis_.row(rank_) = v / lead;
        pivots_.push_back(p);
        ++rank_;
        return true;
    }

private:
    DenseMatrix<Scalar> basis_;
    std::vector<Eigen::Index> pivots_;
    Eigen::Index rank_ = 0;
};

/// Rank by Gaussian elimination over the scalar's field.
template <class Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived> & matrix)
{
    using Scalar = typename Derived::Scalar;
    RankAccumulator<Scalar> acc(matrix.cols());
    for (Eigen::Index r = 0; r < matrix.rows() && !acc.full(); ++r)
        acc.add(matrix.row(r));
    return acc.rank();
}

template <class Derived>
Eigen::Index kernel_dimension(const Eigen::MatrixBase<Derived> & matrix)
{
    return matrix.cols() - exact_rank(matrix);
}

} // namespace t1rigid

#endif
