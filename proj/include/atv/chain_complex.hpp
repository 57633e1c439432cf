#ifndef ATV_CHAIN_COMPLEX_HPP
#define ATV_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "atv/int_matrix.hpp"

namespace atv {

/// Cellular chain complex: ranks |C_p| for p = 0..dim and boundary
/// matrices of shape |C_{p-1}| x |C_p| for p = 1..dim, with dd = 0.
/// Immutable after construction.
class ChainComplex {
public:
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries,
                 std::string name = "", std::map<std::string, std::string> metadata = {});

    std::size_t dim() const { return ranks_.size() - 1; }
    std::size_t rank_of(std::size_t p) const { return p < ranks_.size() ? ranks_[p] : 0; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Matrix of d_p for p in 1..dim; outside that range the zero map
    /// of the appropriate shape (d_0 : C_0 -> 0, d_{dim+1} : 0 -> C_dim).
    IntMatrix boundary(std::size_t p) const;

    /// Transpose of boundary(p+1); requires 0 <= p < dim.
    IntMatrix coboundary(std::size_t p) const;

    const std::string& name() const { return name_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    /// Throws ValidationError (BoundarySquareNonzero) naming the first
    /// failing (p, row, col); shape mismatches are rejected at construction.
    void validate() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_; // boundaries_[p-1] is d_p
    std::string name_;
    std::map<std::string, std::string> metadata_;
};

/// Two cells per degree, boundary columns (1,1) and (-1,-1). Requires n >= 1.
ChainComplex build_sphere_minimal(std::size_t n);

/// The 4-vertex, 5-edge, 3-face, 2-cell decomposition of S^3; ranks [4,5,3,2].
ChainComplex build_sphere3_figure();

/// One cell per degree with d_2 = [[r]]; requires r >= 2, gcd(r,s) = 1.
/// s is retained as metadata ("lens_s") for the linking form s/r.
ChainComplex build_lens(long r, long s);

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

/// Builtin spec: "sphere-min:N", "sphere3-fig", "lens:R:S", or products
/// of those joined by 'x' (left-associative tensor product).
ChainComplex build_builtin(const std::string& spec);

/// Names accepted by build_builtin, for listings.
std::vector<std::string> builtin_names();

} // namespace atv

#endif
