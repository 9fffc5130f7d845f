#pragma once

#include <functional>
#include <vector>

namespace vlse::quad {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1] for Legendre, on R for Hermite
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_k.
Rule gauss_legendre(int k);

// Gauss-Hermite (weight e^{-x^2}) via Golub-Welsch on the Jacobi matrix.
Rule gauss_hermite(int k);

// Panel edges on [a,b], geometrically refined toward the flagged endpoints so
// algebraic endpoint singularities never sit inside a panel.
std::vector<double> graded_edges(double a, double b, bool grade_left, bool grade_right,
                                 int levels = 28);

double integrate_1d(const std::function<double(double)>& f, const std::vector<double>& edges,
                    const Rule& rule);

// Integral of f over the square [0,tstar]^2 as the sum of its two triangles,
// each mapped by s = v*t (Jacobian t) so the diagonal kink lands on v = 1 and
// the axes land on panel edges. Makes no symmetry assumption about f.
double integrate_square(const std::function<double(double, double)>& f, double tstar,
                        const Rule& rule);

// Evaluates eval(tstar) on a doubling truncation ladder starting at t0 until
// two successive values agree to rel_tol; throws QuadratureNotConverged.
double improper_sweep(const std::function<double(double)>& eval, double t0, double rel_tol,
                      int max_doublings);

}  // namespace vlse::quad
