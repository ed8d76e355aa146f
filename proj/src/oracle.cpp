#include "t1rigid/oracle.hpp"

#include <algorithm>
#include <map>

#include "t1rigid/errors.hpp"

namespace t1rigid {

namespace {

struct OracleDomain
{
    std::vector<Face> n_b;       // columns
    std::vector<Face> n_b_tilde;
    std::map<Face, Eigen::Index, LexLess> column;
};

OracleDomain oracle_domain(const SimplicialComplex & complex, const VertexSet & b)
{
    if (b.empty())
        throw DomainError("T1 in degree -b needs a nonempty support B");
    if (!b.is_subset_of(complex.ground()))
        throw DomainError("B is not contained in the ground set");

    OracleDomain dom;
    for (const Face & f : all_faces(complex)) {
        if (f.intersects(b) || complex.is_face(f | b))
            continue;
        dom.column.emplace(f, static_cast<Eigen::Index>(dom.n_b.size()));
        dom.n_b.push_back(f);

        bool tilde = false;
        for_each_subset(b, [&](const Face & proper) {
            if (!tilde && proper != b && !complex.is_face(f | proper))
                tilde = true;
        });
        if (tilde)
            dom.n_b_tilde.push_back(f);
    }
    return dom;
}

template <class Scalar, class Fn>
void for_each_row(const OracleDomain & dom, Fn && fn)
{
    const auto cols = static_cast<Eigen::Index>(dom.n_b.size());
    DenseRow<Scalar> row(cols);
    // (Y1, Y0) gives the negated row of (Y0, Y1) and Y0 = Y1 a zero row;
    // neither changes the rank, so only Y0 before Y1 is emitted.
    for (std::size_t i0 = 0; i0 < dom.n_b.size(); ++i0)
        for (std::size_t i1 = i0 + 1; i1 < dom.n_b.size(); ++i1) {
            if (!dom.column.count(dom.n_b[i0] | dom.n_b[i1]))
                continue;
            row.setConstant(Scalar(0));
            row(static_cast<Eigen::Index>(i1)) += Scalar(1);
            row(static_cast<Eigen::Index>(i0)) -= Scalar(1);
            if (!fn(row))
                return;
        }
    for (const Face & f : dom.n_b_tilde) {
        row.setConstant(Scalar(0));
        row(dom.column.at(f)) = Scalar(1);
        if (!fn(row))
            return;
    }
}

template <class Scalar>
Eigen::Index kernel_of(const OracleDomain & dom)
{
    RankAccumulator<Scalar> acc(static_cast<Eigen::Index>(dom.n_b.size()));
    for_each_row<Scalar>(dom, [&](const DenseRow<Scalar> & row) {
        acc.add(row);
        return !acc.full();
    });
    return acc.cols() - acc.rank();
}

} // namespace

template <class Scalar>
DenseMatrix<Scalar> oracle_matrix(const SimplicialComplex & complex, const VertexSet & b)
{
    const OracleDomain dom = oracle_domain(complex, b);
    std::vector<DenseRow<Scalar>> rows;
    for_each_row<Scalar>(dom, [&](const DenseRow<Scalar> & row) {
        rows.push_back(row);
        return true;
    });
    DenseMatrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dom.n_b.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.row(static_cast<Eigen::Index>(r)) = rows[r];
    return m;
}

template DenseMatrix<Rational> oracle_matrix<Rational>(const SimplicialComplex &, const VertexSet &);
template DenseMatrix<ModMersenne31> oracle_matrix<ModMersenne31>(const SimplicialComplex &, const VertexSet &);
template DenseMatrix<Mod1e9p7> oracle_matrix<Mod1e9p7>(const SimplicialComplex &, const VertexSet &);

std::size_t t1_dim_oracle(const SimplicialComplex & complex, const VertexSet & b, OracleArithmetic arithmetic)
{
    const OracleDomain dom = oracle_domain(complex, b);

    Eigen::Index kernel = 0;
    if (arithmetic == OracleArithmetic::modular) {
        kernel = kernel_of<ModMersenne31>(dom);
        if (kernel_of<Mod1e9p7>(dom) != kernel)
            kernel = kernel_of<Rational>(dom);
    } else {
        kernel = kernel_of<Rational>(dom);
    }

    if (b.size() == 1)
        return kernel > 0 ? static_cast<std::size_t>(kernel - 1) : 0;
    return static_cast<std::size_t>(kernel);
}

} // namespace t1rigid
