#include "enriques7/p3.hpp"

#include "enriques7/errors.hpp"
#include "enriques7/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace enr7 {

namespace {

void require_size(const PPoint& a) {
    if (a.size() != 3 && a.size() != 4)
        throw DegenerateInput("projective point needs 3 or 4 coordinates");
}

} // namespace

bool ppoint_is_zero(const PPoint& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool ppoint_same(const PPoint& a, const PPoint& b) {
    require_size(a);
    if (a.size() != b.size())
        throw DegenerateInput("projective points of different sizes");
    if (ppoint_is_zero(a) || ppoint_is_zero(b))
        throw DegenerateInput("zero vector is not a projective point");
    return ppoint_rank({a, b}) <= 1;
}

bool collinear_exact(const PPoint& a, const PPoint& b, const PPoint& c) {
    require_size(a);
    return ppoint_rank({a, b, c}) <= 2;
}

double collinear_sv_ratio(const PPoint& a, const PPoint& b, const PPoint& c) {
    require_size(a);
    Eigen::MatrixXcd m(3, int(a.size()));
    const PPoint* rows[3] = {&a, &b, &c};
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < int(a.size()); ++j)
            m(r, j) = to_cd((*rows[r])[size_t(j)]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    auto sv = svd.singularValues();
    if (sv(0) == 0.0)
        return 0.0;
    return sv(2) / sv(0);
}

int ppoint_rank(const std::vector<PPoint>& pts) {
    QiMat m;
    for (const auto& p : pts)
        m.push_back(QiVec(p.begin(), p.end()));
    return rank(m);
}

} // namespace enr7
