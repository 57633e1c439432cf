#include "atv/invariants.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "atv/error.hpp"

namespace atv {

namespace {

void require_connected(const ChainComplex& cc) {
    if (homology(cc, 0).betti != 1) {
        throw Error(ErrorCode::not_connected, "NotConnected: complex has b_0 != 1");
    }
}

mpz_class pow_k(const mpz_class& k, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), k.get_mpz_t(), e);
    return out;
}

mpq_class pow_k_signed(const mpz_class& k, long e) {
    mpz_class p = pow_k(k, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? mpq_class(p) : mpq_class(1, p);
}

// Exponent of the closed normalization: (-1)^p + |C_{p-1}| - |C_{p-2}| + ... +- |C_0|.
long tv_norm_exponent(const ChainComplex& cc, std::size_t p) {
    long e = (p % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j < p; ++j) {
        const long sign = ((p - 1 - j) % 2 == 0) ? 1 : -1;
        e += sign * static_cast<long>(cc.rank_of(j));
    }
    return e;
}

mpq_class reduced(mpq_class q) {
    q.canonicalize();
    return q;
}

} // namespace

TvValue tv_invariant(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                     TvMethod method, TvNormalization normalization, std::uint64_t cap) {
    if (p + 1 > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "tv degree must satisfy 0 <= p <= dim-1");
    }
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "level k must be >= 1");
    require_connected(cc);

    mpq_class value;
    if (cc.rank_of(p + 1) == 0) {
        value = 1; // no (p+1)-cells, no constraints: the invariant is set to 1
    } else if (method == TvMethod::formula) {
        // |Z^p_k| / k^E reduced to the alternating |H^j_k| product.
        value = pow_k_signed(k, (p % 2 == 0) ? -1 : 1);
        for (std::size_t j = 0; j <= p; ++j) {
            mpz_class hj = mod_k_cohomology_size(cc, j, k).hk;
            if ((p - j) % 2 == 0) value *= hj; else value /= hj;
        }
    } else {
        CountMethod cm = method == TvMethod::brute ? CountMethod::brute : CountMethod::snf;
        mpz_class cocycles = count_cocycles(cc, p, k, cm, cap);
        value = mpq_class(cocycles) * pow_k_signed(k, -tv_norm_exponent(cc, p));
    }
    if (normalization == TvNormalization::tqft) value /= k;
    return TvValue{reduced(value), method, normalization};
}

TvValue tv_closed_form(const ChainComplex& cc, std::size_t p, const mpz_class& k) {
    if (p + 1 > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "tv degree must satisfy 0 <= p <= dim-1");
    }
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "level k must be >= 1");
    require_connected(cc);

    std::vector<HomologyGroup> h(p + 1);
    for (std::size_t j = 0; j <= p; ++j) h[j] = homology(cc, j);

    auto hom_free = [&](std::size_t j) { return pow_k(k, static_cast<unsigned long>(h[j].betti)); };
    auto hom_torsion = [&](std::size_t j) {
        HomologyGroup t;
        t.torsion = h[j].torsion;
        return hom_to_zk_size(t, k);
    };

    // Alternating Hom(F_j) product: numerator degrees step down from `top`
    // by 2, denominator from p-1 by 2.
    auto free_chain = [&](std::size_t top) {
        mpq_class acc(1);
        for (long j = static_cast<long>(top); j >= 0; j -= 2) acc *= hom_free(static_cast<std::size_t>(j));
        for (long j = static_cast<long>(p) - 1; j >= 0; j -= 2) acc /= hom_free(static_cast<std::size_t>(j));
        return acc;
    };
    const mpq_class kfac = pow_k_signed(k, (p % 2 == 0) ? -1 : 1);

    // Hom(H_p) route: the free chain starts at p-2.
    mpq_class via_h = mpq_class(hom_free(p) * hom_torsion(p)) * kfac;
    if (p >= 2) via_h *= free_chain(p - 2);
    else if (p == 1) via_h /= hom_free(0); // empty numerator, denominator is Hom(F_0)

    // Hom(T_p) route: the free chain starts at p.
    mpq_class via_t = mpq_class(hom_torsion(p)) * free_chain(p) * kfac;

    via_h = reduced(via_h);
    via_t = reduced(via_t);
    if (via_h != via_t) {
        throw Error(ErrorCode::internal_inconsistency,
                    "closed-form routes disagree: " + via_h.get_str() + " vs " + via_t.get_str());
    }
    return TvValue{via_t, TvMethod::formula, TvNormalization::closed};
}

BfValue bf_partition(const ChainComplex& cc, std::size_t p, const mpz_class& k) {
    if (p < 1 || p + 1 > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "bf degree must satisfy 1 <= p <= dim-1");
    }
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "level k must be >= 1");
    HomologyGroup g = homology(cc, p);
    HomologyGroup torsion_only;
    torsion_only.torsion = g.torsion;
    return BfValue{g.torsion_order() * hom_to_zk_size(torsion_only, k), BfMethod::torsion_formula};
}

namespace {

void validate_pairing(const TorsionPairing& tp) {
    for (const auto& o : tp.orders_b)
        if (o < 2) throw Error(ErrorCode::ill_formed_pairing, "IllFormedPairing: order < 2");
    for (const auto& o : tp.orders_a)
        if (o < 2) throw Error(ErrorCode::ill_formed_pairing, "IllFormedPairing: order < 2");
    if (tp.q.size() != tp.orders_b.size()) {
        throw Error(ErrorCode::ill_formed_pairing, "IllFormedPairing: Gram matrix row count");
    }
    for (std::size_t i = 0; i < tp.q.size(); ++i) {
        if (tp.q[i].size() != tp.orders_a.size()) {
            throw Error(ErrorCode::ill_formed_pairing, "IllFormedPairing: Gram matrix column count");
        }
        for (std::size_t j = 0; j < tp.q[i].size(); ++j) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), tp.orders_b[i].get_mpz_t(), tp.orders_a[j].get_mpz_t());
            if (l % tp.q[i][j].get_den() != 0) {
                throw Error(ErrorCode::ill_formed_pairing,
                            "IllFormedPairing: q denominator does not divide lcm of the orders");
            }
        }
    }
}

std::vector<unsigned long> small_orders(const std::vector<mpz_class>& orders) {
    std::vector<unsigned long> out;
    out.reserve(orders.size());
    for (const auto& o : orders) {
        if (!o.fits_ulong_p()) {
            throw Error(ErrorCode::ill_formed_pairing, "IllFormedPairing: order too large");
        }
        out.push_back(o.get_ui());
    }
    return out;
}

} // namespace

mpz_class pairing_sum(const TorsionPairing& tp, const mpz_class& k) {
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "level k must be >= 1");
    validate_pairing(tp);

    mpz_class order_a = 1;
    for (const auto& o : tp.orders_a) order_a *= o;

    const auto ob = small_orders(tp.orders_b);
    std::vector<unsigned long> kappa_b(ob.size(), 0);
    mpz_class trivial_count = 0;
    while (true) {
        // Character on the A side induced by kappa_b: trivial iff
        // k * sum_i q_ij b_i is an integer for every j.
        bool trivial = true;
        for (std::size_t j = 0; j < tp.orders_a.size(); ++j) {
            mpq_class theta(0);
            for (std::size_t i = 0; i < ob.size(); ++i) {
                theta += tp.q[i][j] * mpz_class(kappa_b[i]);
            }
            theta *= k;
            theta.canonicalize();
            // Exactness of the geometric-series collapse needs the phase
            // step to live in (1/A_j) Z; otherwise the sum is not a
            // character sum over Z/A_j at all.
            if (tp.orders_a[j] % theta.get_den() != 0) {
                throw Error(ErrorCode::ill_formed_pairing,
                            "IllFormedPairing: pairing not defined modulo the A-side order");
            }
            if (theta.get_den() != 1) {
                trivial = false;
                break;
            }
        }
        if (trivial) ++trivial_count;

        std::size_t i = 0;
        for (; i < ob.size(); ++i) {
            if (++kappa_b[i] < ob[i]) break;
            kappa_b[i] = 0;
        }
        if (i == ob.size()) break;
    }
    return trivial_count * order_a;
}

double pairing_sum_float(const TorsionPairing& tp, const mpz_class& k) {
    validate_pairing(tp);
    const auto ob = small_orders(tp.orders_b);
    const auto oa = small_orders(tp.orders_a);
    const double kd = k.get_d();

    std::vector<unsigned long> b(ob.size(), 0), a(oa.size(), 0);
    double total = 0.0;
    while (true) {
        std::fill(a.begin(), a.end(), 0);
        while (true) {
            double phase = 0.0;
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j)
                    phase += tp.q[i][j].get_d() * static_cast<double>(b[i]) * static_cast<double>(a[j]);
            total += std::cos(2.0 * std::numbers::pi * kd * phase);

            std::size_t j = 0;
            for (; j < oa.size(); ++j) {
                if (++a[j] < oa[j]) break;
                a[j] = 0;
            }
            if (j == oa.size()) break;
        }
        std::size_t i = 0;
        for (; i < ob.size(); ++i) {
            if (++b[i] < ob[i]) break;
            b[i] = 0;
        }
        if (i == ob.size()) break;
    }
    return total;
}

TorsionPairing lens_pairing(long r, long s) {
    if (r < 2 || std::gcd(r, s) != 1) {
        throw Error(ErrorCode::invalid_parameters, "lens pairing needs r >= 2, gcd(r,s) = 1");
    }
    TorsionPairing tp;
    tp.orders_b = {mpz_class(r)};
    tp.orders_a = {mpz_class(r)};
    tp.q = {{reduced(mpq_class(s, r))}};
    return tp;
}

mpq_class discrete_bf_double_sum(const ChainComplex& cc, std::size_t p, const mpz_class& k,
                                 std::uint64_t cap) {
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "level k must be >= 1");
    require_connected(cc);
    IntMatrix d = cc.coboundary(p); // DegreeOutOfRange for p >= dim

    const std::size_t np = cc.rank_of(p);
    const std::size_t nq = cc.rank_of(p + 1); // |dual C_q| = |C_{p+1}|
    mpz_class states = pow_k(k, static_cast<unsigned long>(np + nq));
    if (states > cap) {
        throw Error(ErrorCode::enumeration_cap_exceeded,
                    "EnumerationCapExceeded: k^(|C_p|+|C_{p+1}|) exceeds the double-sum cap");
    }
    const unsigned long kk = k.get_ui();

    mpz_class cocycles = 0;
    double float_total = 0.0;
    std::vector<unsigned long> l(np, 0);
    std::vector<long> image(nq);
    std::vector<unsigned long> m(nq);
    while (true) {
        for (std::size_t r = 0; r < nq; ++r) {
            mpz_class acc = 0;
            for (std::size_t c = 0; c < np; ++c) acc += d.at(r, c) * mpz_class(l[c]);
            mpz_class rem = acc % k;
            if (rem < 0) rem += k;
            image[r] = rem.get_si();
        }
        bool cocycle = true;
        for (std::size_t r = 0; r < nq; ++r) cocycle = cocycle && image[r] == 0;
        if (cocycle) ++cocycles;

        // Full dual sum, no collapse: sum over all m of e^(2 pi i m.(d l)/k).
        std::fill(m.begin(), m.end(), 0);
        while (true) {
            long dot = 0;
            for (std::size_t r = 0; r < nq; ++r) dot += static_cast<long>(m[r]) * image[r];
            float_total += std::cos(2.0 * std::numbers::pi * static_cast<double>(dot) / static_cast<double>(kk));
            std::size_t r = 0;
            for (; r < nq; ++r) {
                if (++m[r] < kk) break;
                m[r] = 0;
            }
            if (r == nq) break;
        }

        std::size_t i = 0;
        for (; i < np; ++i) {
            if (++l[i] < kk) break;
            l[i] = 0;
        }
        if (i == np) break;
    }

    const long norm_exp = static_cast<long>(nq) + tv_norm_exponent(cc, p);
    mpq_class exact = mpq_class(cocycles * pow_k(k, static_cast<unsigned long>(nq)))
                      * pow_k_signed(k, -norm_exp);
    exact = reduced(exact);

    const double normalized = float_total / std::pow(k.get_d(), static_cast<double>(norm_exp));
    const double exact_d = exact.get_d();
    if (std::abs(normalized - exact_d) > 1e-6 * std::max(1.0, std::abs(exact_d))) {
        throw Error(ErrorCode::internal_inconsistency,
                    "discrete BF float oracle disagrees with the exact collapse");
    }
    return exact;
}

RelationReport bf_tv_relation_check(const ChainComplex& cc, std::size_t p, const mpz_class& k) {
    if (p < 1 || p + 1 > cc.dim()) {
        throw Error(ErrorCode::degree_out_of_range, "relation check requires 1 <= p <= dim-1");
    }
    require_connected(cc);

    RelationReport rep;
    rep.bf = bf_partition(cc, p, k).value;
    rep.tv = tv_invariant(cc, p, k, TvMethod::snf, TvNormalization::closed).value;

    // factor = |T_p| k^((-1)^p) k^(-b_p + b_{p-1} - ... +- b_0)
    long exp = (p % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j <= p; ++j) {
        const long sign = ((p - j) % 2 == 0) ? -1 : 1;
        exp += sign * static_cast<long>(homology(cc, j).betti);
    }
    rep.factor = reduced(mpq_class(homology(cc, p).torsion_order()) * pow_k_signed(k, exp));
    rep.ok = mpq_class(rep.bf) == reduced(rep.factor * rep.tv);
    return rep;
}

} // namespace atv
