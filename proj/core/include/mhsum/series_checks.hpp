#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mhsum/nested_sum.hpp"
#include "mhsum/sequence.hpp"
#include "mhsum/series.hpp"
#include "mhsum/verify.hpp"

namespace mhsum {

// Coefficientwise checks of the operator identities on truncated series.
// Every check compares all coefficients (zeros included) up to the smaller
// degree bound of its two sides; a comparison's index is the exponent.

/// lhs and rhs coefficient by coefficient.
Report compare_series(std::string identity, std::string statement, std::string subject,
                      const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// F_a = f_a(X - Y) exp(Y_1 + ... + Y_r).
Report check_difference_series_factorization(const SequenceRule& a, std::uint32_t degree);

/// F_a(X, 0) = f_a(X) and F_a(0, Y) = f_{nabla a}(Y), as one report.
Report check_difference_series_slices(const SequenceRule& a, std::uint32_t degree);

/// F_{nabla a}(X, Y) = F_a(Y, X).
Report check_difference_series_symmetry(const SequenceRule& a, std::uint32_t degree);

/// (d/dX_i + d/dY_i - 1) F_a = 0 for every i, as one report.
Report check_difference_series_annihilator(const SequenceRule& a, std::uint32_t degree);

/// f_{nabla a} = f_a(-X) exp(X_1 + ... + X_r).
Report check_series_inversion(const SequenceRule& a, std::uint32_t degree);

/// nabla(X_i f) = -X_i nabla f and nabla(d_i f) = (1 - d_i) nabla f, all i.
Report check_inverted_multiplication_and_derivative(const TruncatedSeries& f);

/// nabla(xi_x f) = xi_{1-x}(nabla f).
Report check_inverted_xi(const TruncatedSeries& f, const std::vector<Rational>& x);

/// [sum_{i in S} d_i - c, xi_x + t] = sum_{i in S} d_i - c with c = sum_{i in S} x_i,
/// applied to every monomial of degree < degree_bound.
Report check_commutator(const std::vector<Rational>& x, const std::vector<std::size_t>& subset,
                        const Rational& t, std::uint32_t degree_bound);

/// nabla f_{x}^{t} = f_{1-x}^{t}.
Report check_series_duality(const NestedSumSpec& spec, std::uint32_t degree);

/// (xi_{x_{.1}} + t_1) f_{x}^{t} = f_{reduced x}^{t_2..}. Needs depth >= 2.
Report check_depth_step(const NestedSumSpec& spec, std::uint32_t degree);

/// (xi_{x_{.,p-1}} + t_{p-1}) ... (xi_{x_{.,1}} + t_1) f_{x}^{t} = exp(x_{.,p} . X).
Report check_telescoped_depth_steps(const NestedSumSpec& spec, std::uint32_t degree);

/// Every check above on seeded random inputs with at most two variables:
/// `trials` random sequences and specs per check, commutator on all
/// monomials of degree < degree.
std::vector<Report> run_series_suite(std::uint64_t seed, std::uint32_t degree, unsigned trials);

}  // namespace mhsum
