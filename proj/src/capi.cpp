#include "atv/atv.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "atv/chain_complex.hpp"
#include "atv/error.hpp"
#include "atv/format.hpp"
#include "atv/homology.hpp"
#include "atv/invariants.hpp"

struct atv_complex {
    atv::ChainComplex cc;
};

namespace {

thread_local std::string g_last_error;

atv_status to_status(const atv::Error& e) {
    using atv::ErrorCode;
    switch (e.code()) {
        case ErrorCode::parse_error: return ATV_ERR_PARSE;
        case ErrorCode::validation_error: return ATV_ERR_VALIDATION;
        case ErrorCode::degree_out_of_range: return ATV_ERR_DEGREE;
        case ErrorCode::not_connected: return ATV_ERR_NOT_CONNECTED;
        case ErrorCode::enumeration_cap_exceeded: return ATV_ERR_CAP_EXCEEDED;
        case ErrorCode::invalid_parameters: return ATV_ERR_INVALID_ARG;
        case ErrorCode::internal_inconsistency: return ATV_ERR_INCONSISTENT;
        case ErrorCode::ill_formed_pairing: return ATV_ERR_ILL_FORMED;
    }
    return ATV_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

atv_status fail(atv_status st, const char* msg) {
    g_last_error = msg;
    return st;
}

template <typename Fn>
atv_status guarded(Fn&& fn) {
    try {
        fn();
        return ATV_OK;
    } catch (const atv::Error& e) {
        g_last_error = e.what();
        return to_status(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ATV_ERR_INTERNAL;
    }
}

atv::TvMethod parse_tv_method(const char* method) {
    std::string m = method ? method : "snf";
    if (m == "brute") return atv::TvMethod::brute;
    if (m == "snf" || m.empty()) return atv::TvMethod::snf;
    if (m == "formula") return atv::TvMethod::formula;
    throw atv::Error(atv::ErrorCode::invalid_parameters, "unknown tv method '" + m + "'");
}

// BF by pairing_sum needs Gram data; the library derives it only in the
// cases the inputs determine: torsion-free (empty pairing, value 1) and
// lens complexes carrying the s metadata.
mpz_class bf_by_pairing(const atv::ChainComplex& cc, std::size_t p, const mpz_class& k) {
    if (p < 1 || p + 1 > cc.dim()) {
        throw atv::Error(atv::ErrorCode::degree_out_of_range,
                         "bf degree must satisfy 1 <= p <= dim-1");
    }
    atv::HomologyGroup g = atv::homology(cc, p);
    if (g.torsion.empty()) return 1;
    auto it = cc.metadata().find("lens_s");
    if (cc.dim() == 3 && p == 1 && it != cc.metadata().end() && g.torsion.size() == 1) {
        long r = static_cast<long>(g.torsion[0].get_si());
        long s = std::stol(it->second);
        return atv::pairing_sum(atv::lens_pairing(r, s), k);
    }
    throw atv::Error(atv::ErrorCode::invalid_parameters,
                     "pairing method needs torsion-free homology or a lens complex with s metadata");
}

} // namespace

extern "C" {

const char* atv_last_error(void) { return g_last_error.c_str(); }

void atv_string_free(char* s) { std::free(s); }

atv_status atv_complex_from_text(const char* text, atv_complex** out) {
    if (!text || !out) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new atv_complex{atv::parse_complex(text)}; });
}

atv_status atv_complex_builtin(const char* spec, atv_complex** out) {
    if (!spec || !out) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new atv_complex{atv::build_builtin(spec)}; });
}

void atv_complex_free(atv_complex* cc) { delete cc; }

atv_status atv_complex_dim(const atv_complex* cc, size_t* out_dim) {
    if (!cc || !out_dim) return fail(ATV_ERR_INVALID_ARG, "null argument");
    *out_dim = cc->cc.dim();
    return ATV_OK;
}

atv_status atv_complex_rank(const atv_complex* cc, size_t p, size_t* out_rank) {
    if (!cc || !out_rank) return fail(ATV_ERR_INVALID_ARG, "null argument");
    *out_rank = cc->cc.rank_of(p);
    return ATV_OK;
}

atv_status atv_complex_name(const atv_complex* cc, char** out_name) {
    if (!cc || !out_name) return fail(ATV_ERR_INVALID_ARG, "null argument");
    *out_name = dup_string(cc->cc.name());
    return ATV_OK;
}

atv_status atv_complex_to_text(const atv_complex* cc, char** out_text) {
    if (!cc || !out_text) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out_text = dup_string(atv::serialize_complex(cc->cc)); });
}

atv_status atv_complex_validate(const atv_complex* cc) {
    if (!cc) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] { cc->cc.validate(); });
}

atv_status atv_homology(const atv_complex* cc, size_t p, size_t* out_betti,
                        char** out_torsion) {
    if (!cc || !out_betti || !out_torsion) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        atv::HomologyGroup g = atv::homology(cc->cc, p);
        *out_betti = g.betti;
        std::ostringstream os;
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) os << ',';
            os << g.torsion[i];
        }
        *out_torsion = dup_string(os.str());
    });
}

atv_status atv_tv(const atv_complex* cc, size_t p, long k, const char* method,
                  const char* normalization, char** out_num, char** out_den) {
    if (!cc || !out_num || !out_den) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        std::string norm = normalization ? normalization : "closed";
        atv::TvNormalization tn;
        if (norm == "closed" || norm.empty()) tn = atv::TvNormalization::closed;
        else if (norm == "tqft") tn = atv::TvNormalization::tqft;
        else throw atv::Error(atv::ErrorCode::invalid_parameters,
                              "unknown normalization '" + norm + "'");

        mpq_class value;
        std::string m = method ? method : "snf";
        if (m == "closed_form") {
            value = atv::tv_closed_form(cc->cc, p, k).value;
            if (tn == atv::TvNormalization::tqft) {
                value /= k;
                value.canonicalize();
            }
        } else {
            value = atv::tv_invariant(cc->cc, p, k, parse_tv_method(method), tn).value;
        }
        *out_num = dup_string(value.get_num().get_str());
        *out_den = dup_string(value.get_den().get_str());
    });
}

atv_status atv_bf(const atv_complex* cc, size_t p, long k, const char* method,
                  char** out_value) {
    if (!cc || !out_value) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        std::string m = method ? method : "torsion";
        mpz_class value;
        if (m == "torsion" || m.empty()) {
            value = atv::bf_partition(cc->cc, p, k).value;
        } else if (m == "pairing") {
            value = bf_by_pairing(cc->cc, p, k);
        } else {
            throw atv::Error(atv::ErrorCode::invalid_parameters, "unknown bf method '" + m + "'");
        }
        *out_value = dup_string(value.get_str());
    });
}

atv_status atv_dbf(const atv_complex* cc, size_t p, long k, char** out_num,
                   char** out_den) {
    if (!cc || !out_num || !out_den) return fail(ATV_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        mpq_class value = atv::discrete_bf_double_sum(cc->cc, p, k);
        *out_num = dup_string(value.get_num().get_str());
        *out_den = dup_string(value.get_den().get_str());
    });
}

atv_status atv_relation(const atv_complex* cc, size_t p, long k, int* out_ok,
                        char** out_bf, char** out_tv_num, char** out_tv_den,
                        char** out_factor_num, char** out_factor_den) {
    if (!cc || !out_ok || !out_bf || !out_tv_num || !out_tv_den || !out_factor_num ||
        !out_factor_den) {
        return fail(ATV_ERR_INVALID_ARG, "null argument");
    }
    return guarded([&] {
        atv::RelationReport rep = atv::bf_tv_relation_check(cc->cc, p, k);
        *out_ok = rep.ok ? 1 : 0;
        *out_bf = dup_string(rep.bf.get_str());
        *out_tv_num = dup_string(rep.tv.get_num().get_str());
        *out_tv_den = dup_string(rep.tv.get_den().get_str());
        *out_factor_num = dup_string(rep.factor.get_num().get_str());
        *out_factor_den = dup_string(rep.factor.get_den().get_str());
    });
}

} // extern "C"
