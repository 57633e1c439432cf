#ifndef ATV_INVARIANTS_HPP
#define ATV_INVARIANTS_HPP

#include <string>
#include <vector>

#include "atv/chain_complex.hpp"
#include "atv/homology.hpp"

namespace atv {

enum class TvMethod { brute, snf, formula };
enum class TvNormalization { closed, tqft };
enum class BfMethod { torsion_formula, pairing_sum };

struct TvValue {
    mpq_class value;
    TvMethod method;
    TvNormalization normalization;
};

struct BfValue {
    mpz_class value;
    BfMethod method;
};

/// Finite-group orders and a rational Gram matrix for the exponential
/// sum over the torsion pairing. q[i][j] pairs the i-th Z/ordersB factor
/// with the j-th Z/ordersA factor, taken mod 1.
struct TorsionPairing {
    std::vector<mpz_class> orders_b;
    std::vector<mpz_class> orders_a;
    std::vector<std::vector<mpq_class>> q;
};

/// Z^p_TV_k. Counts mod-k p-cocycles (by the requested method) and
/// divides by k^((-1)^p + |C_{p-1}| - |C_{p-2}| + ... +- |C_0|); the tqft
/// normalization divides the closed value by one further factor of k.
/// Returns 1 when |C_{p+1}| = 0.
TvValue tv_invariant(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                     TvMethod method = TvMethod::snf,
                     TvNormalization normalization = TvNormalization::closed,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Evaluates both closed forms of Z^p_TV_k (the Hom(H_p) route and the
/// Hom(T_p) route) and returns the common value; they must agree.
TvValue tv_closed_form(const ChainComplex& cc, std::size_t p, const mpz_class& k);

/// Z^p_BF_k = |T_p| * prod gcd(zeta_i, k), for 1 <= p <= dim-1.
BfValue bf_partition(const ChainComplex& cc, std::size_t p, const mpz_class& k);

/// Exact evaluation of sum over (kappa_B, kappa_A) of e^(-2 pi i k Q(kappa_B, kappa_A)):
/// the inner sum over kappa_A is |A| when the character is trivial and 0 otherwise.
mpz_class pairing_sum(const TorsionPairing& tp, const mpz_class& k);

/// Floating-point brute force over the same double sum (real part);
/// the oracle against which pairing_sum is cross-checked.
double pairing_sum_float(const TorsionPairing& tp, const mpz_class& k);

/// The standard lens-space pairing Q = [[s/r]] on Z/r x Z/r.
TorsionPairing lens_pairing(long r, long s);

/// The discrete BF double sum over primal p-labelings and dual
/// q-labelings, evaluated exactly via the character collapse and
/// cross-checked internally against a full floating-point sum (1e-6).
/// Equals tv_invariant(cc, p, k) with the closed normalization.
mpq_class discrete_bf_double_sum(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct RelationReport {
    mpz_class bf;
    mpq_class tv;
    mpq_class factor; // |T_p| k^((-1)^p) k^(-b_p + b_{p-1} - ... +- b_0)
    bool ok;          // bf == factor * tv
};

/// Checks the BF <-> TV relation for 1 <= p <= dim-1.
RelationReport bf_tv_relation_check(const ChainComplex& cc, std::size_t p, const mpz_class& k);

} // namespace atv

#endif
