#ifndef ATV_HOMOLOGY_HPP
#define ATV_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "atv/chain_complex.hpp"
#include "atv/int_matrix.hpp"

namespace atv {

/// Integral homology in one degree: H_p = Z^betti + Z/z1 + ... with
/// z_i >= 2 and z_i | z_{i+1}.
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;

    /// |T_p| = product of the torsion coefficients.
    mpz_class torsion_order() const;
};

/// Cardinalities of the mod-k cohomology in one degree, split per the
/// Universal Coefficient Theorem: |H^p_k| = k^{b_p} |Hom(T_p, Z/k)| |Hom(T_{p-1}, Z/k)|.
struct ModKSizes {
    mpz_class k;
    mpz_class hom_free;         // k^{b_p}
    mpz_class hom_torsion;      // prod gcd(zeta_i, k) over T_p
    mpz_class hom_torsion_prev; // same over T_{p-1}; 1 at p = 0
    mpz_class hk;               // product of the three
};

HomologyGroup homology(const ChainComplex& cc, std::size_t p);

/// |Hom(F_p + T_p, Z/kZ)| = k^betti * prod gcd(zeta_i, k).
mpz_class hom_to_zk_size(const HomologyGroup& g, const mpz_class& k);

ModKSizes mod_k_cohomology_size(const ChainComplex& cc, std::size_t p, const mpz_class& k);

enum class CountMethod { snf, brute };

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// |Z^p_k|, the number of p-labelings killed by the coboundary mod k.
/// brute walks all k^{|C_p|} labelings and is capped.
mpz_class count_cocycles(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                         CountMethod method = CountMethod::snf,
                         std::uint64_t cap = kDefaultEnumerationCap);

struct RecursionCheck {
    bool ok;
    mpz_class lhs; // |Z^p_k| counted directly
    mpq_class rhs; // k^(|C_{p-1}| - |C_{p-2}| + ...) times the alternating |H^j_k| product
};

/// Checks the cocycle-count recursion that reduces |Z^p_k| to mod-k
/// cohomology cardinalities; requires 1 <= p < dim.
RecursionCheck cocycle_count_recursion_check(const ChainComplex& cc, std::size_t p,
                                             const mpz_class& k);

} // namespace atv

#endif
