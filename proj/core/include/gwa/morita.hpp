#pragma once

#include <cstdint>

#include "gwa/matrix_rep.hpp"
#include "gwa/toeplitz.hpp"

namespace gwa {

/// The coupling families xi_i = e_{i,0} (x) U1^i and eta_j = e_{0,j} (x) Um1^j
/// with truncated matrix coefficients.
struct MoritaContext {
  std::vector<ToeplitzElement<TruncatedMatrix>> xi;
  std::vector<ToeplitzElement<TruncatedMatrix>> eta;
  std::size_t truncation = 0;
  unsigned max_index = 0;
};

/// Builds the context for a representable canonical presentation.
MoritaContext build_context(std::size_t M, unsigned max_index,
                            const Presentation& pres);

/// Identities of the coupling between the kernel ideal and its corner copy,
/// on random elements sum e_ij (x) y^{i+1} p_ij(h) x^{j+1}:
/// corner products land on explicitly constructed preimages, and
/// (sum xi_i eta_i) acts as the identity, all exactly on the agreement window.
Report verify_lambda_context(const Presentation& pres, unsigned cases,
                             std::size_t M, unsigned max_index,
                             std::uint64_t seed);

/// Same identities for the degree-zero coupling on random elements
/// sum e_ij (x) y^i p_ij(h) x^j.
Report verify_c_context(const Presentation& pres, unsigned cases,
                        std::size_t M, unsigned max_index, std::uint64_t seed);

}  // namespace gwa
