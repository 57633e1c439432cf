// Command-line front end for the invariant library. Talks to the core
// exclusively through the C API in atv/atv.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atv/atv.h"

namespace {

constexpr int kExitRelationFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitCapExceeded = 3;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { atv_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct OwnedComplex {
    atv_complex* cc = nullptr;
    ~OwnedComplex() { atv_complex_free(cc); }
};

int exit_code_for(atv_status st) {
    switch (st) {
        case ATV_OK: return 0;
        case ATV_ERR_PARSE:
        case ATV_ERR_VALIDATION:
        case ATV_ERR_INVALID_ARG:
        case ATV_ERR_NOT_CONNECTED:
        case ATV_ERR_DEGREE:
            return kExitParseError;
        case ATV_ERR_CAP_EXCEEDED:
            return kExitCapExceeded;
        default:
            return kExitParseError;
    }
}

[[noreturn]] void die(atv_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << atv_last_error() << "\n";
    std::exit(exit_code_for(st));
}

// Loads from --builtin NAME or a file path.
OwnedComplex load_complex(const std::string& file, const std::string& builtin,
                          std::string& input_name) {
    OwnedComplex out;
    atv_status st;
    if (!builtin.empty()) {
        input_name = builtin;
        st = atv_complex_builtin(builtin.c_str(), &out.cc);
        if (st != ATV_OK) die(st, "builtin '" + builtin + "'");
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            std::exit(kExitParseError);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        input_name = file;
        st = atv_complex_from_text(buf.str().c_str(), &out.cc);
        if (st != ATV_OK) die(st, "parsing '" + file + "'");
    }
    return out;
}

std::string rational_str(const std::string& num, const std::string& den) {
    return den == "1" ? num : num + "/" + den;
}

void emit_value_json(const std::string& command, const std::string& input, std::size_t p,
                     long k, const std::string& method, const std::string& num,
                     const std::string& den) {
    nlohmann::json j{
        {"command", command}, {"input", input},         {"p", p},
        {"k", k},             {"method", method},       {"value_num", num},
        {"value_den", den},
    };
    std::cout << j.dump() << "\n";
}

void add_source_options(CLI::App* cmd, std::string& file, std::string& builtin) {
    auto* pos = cmd->add_option("file", file, "chain-complex file");
    auto* opt = cmd->add_option("--builtin", builtin, "builtin complex name");
    pos->excludes(opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian Turaev-Viro and U(1) BF invariants of cellular chain complexes"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string file, builtin;
    long p_opt = -1;
    long k = 1;
    std::string method, normalization = "closed";

    auto* homology_cmd = app.add_subcommand("homology", "integral homology with torsion");
    add_source_options(homology_cmd, file, builtin);
    homology_cmd->add_option("-p", p_opt, "degree (all degrees when omitted)");

    auto* tv = app.add_subcommand("tv", "Turaev-Viro invariant Z^p_TV_k");
    add_source_options(tv, file, builtin);
    tv->add_option("-p", p_opt, "degree")->required();
    tv->add_option("-k", k, "level")->required();
    tv->add_option("--method", method, "brute|snf|formula")
        ->check(CLI::IsMember({"brute", "snf", "formula"}));
    tv->add_option("--normalization", normalization, "closed|tqft")
        ->check(CLI::IsMember({"closed", "tqft"}));

    auto* bf = app.add_subcommand("bf", "BF partition function Z^p_BF_k");
    add_source_options(bf, file, builtin);
    bf->add_option("-p", p_opt, "degree")->required();
    bf->add_option("-k", k, "level")->required();
    bf->add_option("--method", method, "torsion|pairing")
        ->check(CLI::IsMember({"torsion", "pairing"}));

    auto* dbf = app.add_subcommand("dbf", "discrete BF double sum");
    add_source_options(dbf, file, builtin);
    dbf->add_option("-p", p_opt, "degree")->required();
    dbf->add_option("-k", k, "level")->required();

    auto* relation = app.add_subcommand("relation", "check the BF <-> TV relation");
    add_source_options(relation, file, builtin);
    relation->add_option("-p", p_opt, "degree")->required();
    relation->add_option("-k", k, "level")->required();

    auto* builtins = app.add_subcommand("builtins", "list builtin complexes");

    CLI11_PARSE(app, argc, argv);

    if (builtins->parsed()) {
        std::cout << "sphere-min:N   minimal sphere S^N (two cells per degree), N >= 1\n"
                  << "sphere3-fig    the 4-vertex cellular decomposition of S^3\n"
                  << "lens:R:S       lens space L(R,S), gcd(R,S) = 1\n"
                  << "Join builtins with 'x' for tensor products, e.g. lens:3:1xsphere-min:2\n";
        return 0;
    }

    if (file.empty() && builtin.empty()) {
        std::cerr << "error: give a file or --builtin NAME\n";
        return kExitParseError;
    }
    std::string input;
    OwnedComplex cc = load_complex(file, builtin, input);

    if (homology_cmd->parsed()) {
        size_t dim = 0;
        atv_complex_dim(cc.cc, &dim);
        size_t lo = 0, hi = dim;
        if (p_opt >= 0) lo = hi = static_cast<size_t>(p_opt);
        for (size_t p = lo; p <= hi; ++p) {
            size_t betti = 0;
            OwnedString torsion;
            atv_status st = atv_homology(cc.cc, p, &betti, &torsion.s);
            if (st != ATV_OK) die(st, "homology");
            if (json) {
                nlohmann::json j{{"command", "homology"},
                                 {"input", input},
                                 {"p", p},
                                 {"betti", betti},
                                 {"torsion", torsion.str()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "H_" << p << ": betti=" << betti << " torsion=["
                          << torsion.str() << "]\n";
            }
        }
        return 0;
    }

    if (tv->parsed()) {
        OwnedString num, den;
        const std::string m = method.empty() ? "snf" : method;
        atv_status st = atv_tv(cc.cc, static_cast<size_t>(p_opt), k, m.c_str(),
                               normalization.c_str(), &num.s, &den.s);
        if (st != ATV_OK) die(st, "tv");
        if (json) emit_value_json("tv", input, p_opt, k, m, num.str(), den.str());
        else std::cout << rational_str(num.str(), den.str()) << "\n";
        return 0;
    }

    if (bf->parsed()) {
        OwnedString value;
        const std::string m = method.empty() ? "torsion" : method;
        atv_status st = atv_bf(cc.cc, static_cast<size_t>(p_opt), k, m.c_str(), &value.s);
        if (st != ATV_OK) die(st, "bf");
        if (json) emit_value_json("bf", input, p_opt, k, m, value.str(), "1");
        else std::cout << value.str() << "\n";
        return 0;
    }

    if (dbf->parsed()) {
        OwnedString num, den;
        atv_status st = atv_dbf(cc.cc, static_cast<size_t>(p_opt), k, &num.s, &den.s);
        if (st != ATV_OK) die(st, "dbf");
        if (json) emit_value_json("dbf", input, p_opt, k, "double_sum", num.str(), den.str());
        else std::cout << rational_str(num.str(), den.str()) << "\n";
        return 0;
    }

    if (relation->parsed()) {
        int ok = 0;
        OwnedString bf_val, tv_num, tv_den, fac_num, fac_den;
        atv_status st = atv_relation(cc.cc, static_cast<size_t>(p_opt), k, &ok, &bf_val.s,
                                     &tv_num.s, &tv_den.s, &fac_num.s, &fac_den.s);
        if (st != ATV_OK) die(st, "relation");
        if (json) {
            nlohmann::json j{{"command", "relation"},
                             {"input", input},
                             {"p", p_opt},
                             {"k", k},
                             {"bf", bf_val.str()},
                             {"tv", rational_str(tv_num.str(), tv_den.str())},
                             {"factor", rational_str(fac_num.str(), fac_den.str())},
                             {"ok", ok == 1}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "bf=" << bf_val.str() << " tv=" << rational_str(tv_num.str(), tv_den.str())
                      << " factor=" << rational_str(fac_num.str(), fac_den.str())
                      << (ok ? " ok" : " MISMATCH") << "\n";
            if (!ok) {
                std::cerr << "relation check failed: bf != factor * tv\n";
            }
        }
        return ok ? 0 : kExitRelationFailed;
    }

    return 0;
}
