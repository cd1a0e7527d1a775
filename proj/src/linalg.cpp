#include "sostiae/linalg.hpp"

#include <cmath>

namespace sostiae {

namespace {

using Mat = Eigen::MatrixXd;

// Assemble U (odd part) and V (even part) of the [m/m] Pade approximant so
// that (V - U) X = (V + U) solves for the approximant X.
void pade_uv(const Mat& A, const double* b, int m, Mat& U, Mat& V) {
    const int n = static_cast<int>(A.rows());
    const Mat I = Mat::Identity(n, n);
    const Mat A2 = A * A;

    Mat even = b[0] * I;
    Mat odd = b[1] * I;
    Mat power = I;  // A^(2k)
    for (int k = 1; 2 * k <= m; ++k) {
        power = power * A2;
        even += b[2 * k] * power;
        if (2 * k + 1 <= m) {
            odd += b[2 * k + 1] * power;
        }
    }
    U = A * odd;
    V = even;
}

Mat pade_13(const Mat& A) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const int n = static_cast<int>(A.rows());
    const Mat I = Mat::Identity(n, n);
    const Mat A2 = A * A;
    const Mat A4 = A2 * A2;
    const Mat A6 = A2 * A4;
    Mat U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) +
                 b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    Mat V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) +
            b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
    return (V - U).partialPivLu().solve(V + U);
}

Mat pade_m(const Mat& A, int m) {
    static const double b3[] = {120., 60., 12., 1.};
    static const double b5[] = {30240., 15120., 3360., 420., 30., 1.};
    static const double b7[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    static const double b9[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                                2162160.,     110880.,     3960.,       90.,        1.};
    const double* b = m == 3 ? b3 : m == 5 ? b5 : m == 7 ? b7 : b9;
    Mat U, V;
    pade_uv(A, b, m, U, V);
    return (V - U).partialPivLu().solve(V + U);
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
    if (A.rows() == 0) {
        return A;
    }
    const double norm = A.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm

    if (norm <= 1.495585217958292e-2) return pade_m(A, 3);
    if (norm <= 2.539398330063230e-1) return pade_m(A, 5);
    if (norm <= 9.504178996162932e-1) return pade_m(A, 7);
    if (norm <= 2.097847961257068e0) return pade_m(A, 9);

    const double theta13 = 5.371920351148152;
    int squarings = 0;
    Mat scaled = A;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        scaled = A / std::ldexp(1.0, squarings);
    }
    Mat E = pade_13(scaled);
    for (int i = 0; i < squarings; ++i) {
        E = E * E;
    }
    return E;
}

}  // namespace sostiae
