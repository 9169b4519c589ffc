#pragma once

// Dimensions on the E_1 page of the spectral sequence converging to IH^{2i}(X_n),
// and the Euler-characteristic identity tying them to KL coefficients.

#include "klbraid/graph.hpp"

#include <vector>

namespace klb {

struct E1Cell {
  int i = 0, p = 0, q = 0;
  BigInt dim;
  friend bool operator==(const E1Cell&, const E1Cell&) = default;
};

/// Sum over ordered surjections f:[n]->[p+1] of the degree-j part of
/// H_*(Conf_{|f^-1(1)|}) x ... x H_*(Conf_{|f^-1(p+1)|}).
BigInt comp_dim(int p, int j, int n);

/// comp_dim(p, 2i-p-q, n)/(p+1)! * d_coeff(i-q, p+1). Throws std::logic_error if the
/// division is not exact.
BigInt b_dim(int i, int p, int q, int n);

/// Nonzero cells of the E_1 page, ordered by (p, q).
std::vector<E1Cell> e1_page(int i, int n);

struct EulerReport {
  BigInt lhs;  // sum (-1)^{p+q} dim
  BigInt rhs;  // KL coefficient
  bool equal = false;
  std::vector<E1Cell> cells;  // nonzero cells
};

EulerReport euler_identity(int i, int n);

constexpr int kRelativeMaxVertices = 10;

/// Same identity for the cone graph cone_extend(gamma, n), enumerating connected partitions
/// directly. Throws std::invalid_argument when |V| + n > 10.
EulerReport euler_identity_graph(const Graph& gamma, int i, int n);

struct RatioRow {
  int n = 0;
  BigRat b_ratio;  // b_dim(i, 2i-1, 1, n) / (2i)^n
  BigRat d_ratio;  // d_coeff(i, n) / (2i)^n
};

std::vector<RatioRow> ratio_diagnostic(int i, int n_lo, int n_hi);

}  // namespace klb
