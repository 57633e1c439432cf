#include "atv/homology.hpp"

#include <cmath>

#include "atv/error.hpp"

namespace atv {

mpz_class HomologyGroup::torsion_order() const {
    mpz_class t = 1;
    for (const auto& z : torsion) t *= z;
    return t;
}

HomologyGroup homology(const ChainComplex& cc, std::size_t p) {
    if (p > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "homology degree exceeds complex dimension");
    }
    HomologyGroup g;
    auto snf_out = smith_normal_form(cc.boundary(p + 1));
    auto divisors = snf_out.elementary_divisors();
    std::size_t rank_in = rank(cc.boundary(p));
    g.betti = cc.rank_of(p) - rank_in - divisors.size();
    for (auto& d : divisors) {
        if (d > 1) g.torsion.push_back(std::move(d));
    }
    return g;
}

mpz_class hom_to_zk_size(const HomologyGroup& g, const mpz_class& k) {
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "modulus k must be >= 1");
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(g.betti));
    for (const auto& z : g.torsion) {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), z.get_mpz_t(), k.get_mpz_t());
        out *= gcd;
    }
    return out;
}

namespace {

mpz_class hom_torsion_size(const HomologyGroup& g, const mpz_class& k) {
    mpz_class out = 1;
    for (const auto& z : g.torsion) {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), z.get_mpz_t(), k.get_mpz_t());
        out *= gcd;
    }
    return out;
}

} // namespace

ModKSizes mod_k_cohomology_size(const ChainComplex& cc, std::size_t p, const mpz_class& k) {
    if (p > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "cohomology degree exceeds complex dimension");
    }
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "modulus k must be >= 1");
    HomologyGroup hp = homology(cc, p);
    ModKSizes s;
    s.k = k;
    mpz_pow_ui(s.hom_free.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(hp.betti));
    s.hom_torsion = hom_torsion_size(hp, k);
    // T_{-1} is trivial, so the Ext contribution vanishes at p = 0.
    s.hom_torsion_prev = p == 0 ? 1 : hom_torsion_size(homology(cc, p - 1), k);
    s.hk = s.hom_free * s.hom_torsion * s.hom_torsion_prev;
    return s;
}

mpz_class count_cocycles(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                         CountMethod method, std::uint64_t cap) {
    IntMatrix d = cc.coboundary(p); // throws DegreeOutOfRange for p >= dim
    if (method == CountMethod::snf) {
        return count_kernel_mod_k(d, k);
    }

    if (k < 1) throw Error(ErrorCode::invalid_parameters, "modulus k must be >= 1");
    const std::size_t ncells = cc.rank_of(p);
    mpz_class states;
    mpz_pow_ui(states.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(ncells));
    if (states > cap) {
        throw Error(ErrorCode::enumeration_cap_exceeded,
                    "EnumerationCapExceeded: k^|C_p| labelings exceed the brute-force cap");
    }
    const std::uint64_t total = states.get_ui();
    const std::uint64_t kk = mpz_get_ui(k.get_mpz_t());

    std::vector<std::uint64_t> labeling(ncells, 0);
    mpz_class count = 0;
    for (std::uint64_t it = 0;; ++it) {
        bool cocycle = true;
        for (std::size_t r = 0; r < d.rows() && cocycle; ++r) {
            mpz_class acc = 0;
            for (std::size_t c = 0; c < d.cols(); ++c) {
                acc += d.at(r, c) * mpz_class(labeling[c]);
            }
            cocycle = mpz_divisible_p(acc.get_mpz_t(), k.get_mpz_t());
        }
        if (cocycle) ++count;
        if (it + 1 == total) break;
        for (std::size_t i = 0; i < ncells; ++i) {
            if (++labeling[i] < kk) break;
            labeling[i] = 0;
        }
    }
    return count;
}

RecursionCheck cocycle_count_recursion_check(const ChainComplex& cc, std::size_t p,
                                             const mpz_class& k) {
    if (p < 1 || p >= cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "recursion check requires 1 <= p < dim");
    }
    RecursionCheck out;
    out.lhs = count_cocycles(cc, p, k, CountMethod::snf);

    // k^(|C_{p-1}| - |C_{p-2}| + ... +- |C_0|) * |H^p_k| |H^{p-2}_k| ... / (|H^{p-1}_k| ...)
    long cell_exp = 0;
    for (std::size_t j = 0; j < p; ++j) {
        const long sign = ((p - 1 - j) % 2 == 0) ? 1 : -1;
        cell_exp += sign * static_cast<long>(cc.rank_of(j));
    }
    mpq_class rhs(1);
    mpz_class kp;
    mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(std::abs(cell_exp)));
    if (cell_exp >= 0) rhs *= kp; else rhs /= kp;
    for (std::size_t j = 0; j <= p; ++j) {
        mpz_class hj = mod_k_cohomology_size(cc, j, k).hk;
        if ((p - j) % 2 == 0) rhs *= hj; else rhs /= hj;
    }
    rhs.canonicalize();
    out.rhs = rhs;
    out.ok = mpq_class(out.lhs) == rhs;
    return out;
}

} // namespace atv
