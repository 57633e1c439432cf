#include "atv/chain_complex.hpp"

#include <numeric>
#include <sstream>

#include "atv/error.hpp"

namespace atv {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries,
                           std::string name, std::map<std::string, std::string> metadata)
    : ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)),
      name_(std::move(name)),
      metadata_(std::move(metadata)) {
    if (ranks_.empty()) {
        throw Error(ErrorCode::invalid_parameters, "chain complex needs at least degree 0");
    }
    if (boundaries_.size() != ranks_.size() - 1) {
        throw Error(ErrorCode::validation_error, "ShapeMismatch: expected one boundary per degree 1..dim");
    }
    for (std::size_t p = 1; p < ranks_.size(); ++p) {
        const IntMatrix& b = boundaries_[p - 1];
        if (b.rows() != ranks_[p - 1] || b.cols() != ranks_[p]) {
            std::ostringstream os;
            os << "ShapeMismatch: boundary " << p << " is " << b.rows() << "x" << b.cols()
               << ", expected " << ranks_[p - 1] << "x" << ranks_[p];
            throw Error(ErrorCode::validation_error, os.str());
        }
    }
}

IntMatrix ChainComplex::boundary(std::size_t p) const {
    if (p >= 1 && p <= dim()) return boundaries_[p - 1];
    if (p == 0) return IntMatrix(0, ranks_[0]);
    return IntMatrix(ranks_[dim()], 0); // p == dim()+1 and beyond
}

IntMatrix ChainComplex::coboundary(std::size_t p) const {
    if (p >= dim()) {
        throw Error(ErrorCode::degree_out_of_range, "coboundary degree must satisfy p < dim");
    }
    return boundary(p + 1).transpose();
}

void ChainComplex::validate() const {
    for (std::size_t p = 2; p <= dim(); ++p) {
        IntMatrix prod = boundary(p - 1) * boundary(p);
        for (std::size_t i = 0; i < prod.rows(); ++i) {
            for (std::size_t j = 0; j < prod.cols(); ++j) {
                if (prod.at(i, j) != 0) {
                    std::ostringstream os;
                    os << "BoundarySquareNonzero: d_" << (p - 1) << " d_" << p
                       << " has nonzero entry at (" << i << ", " << j << ")";
                    throw Error(ErrorCode::validation_error, os.str());
                }
            }
        }
    }
}

ChainComplex build_sphere_minimal(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::invalid_parameters, "sphere-min requires n >= 1");
    std::vector<std::size_t> ranks(n + 1, 2);
    std::vector<IntMatrix> boundaries(n, IntMatrix{{1, -1}, {1, -1}});
    return ChainComplex(std::move(ranks), std::move(boundaries),
                        "sphere-min:" + std::to_string(n));
}

ChainComplex build_sphere3_figure() {
    // Edge boundaries: e1 = v2-v1, e2 = v1-v4, e3 = v4-v2, e4 = v3-v2, e5 = v4-v3.
    IntMatrix d1{{-1, 1, 0, 0, 0},
                 {1, 0, -1, -1, 0},
                 {0, 0, 0, 1, -1},
                 {0, -1, 1, 0, 1}};
    // Face boundaries: f1 = e1+e2+e4+e5, f2 = e1+e2+e3, f3 = e3-e4-e5.
    IntMatrix d2{{1, 1, 0},
                 {1, 1, 0},
                 {0, 1, 1},
                 {1, 0, -1},
                 {1, 0, -1}};
    // The two 3-cells are glued along all three faces with opposite
    // orientations; the relative face signs are forced by dd = 0.
    IntMatrix d3{{1, -1},
                 {-1, 1},
                 {1, -1}};
    return ChainComplex({4, 5, 3, 2}, {d1, d2, d3}, "sphere3-fig");
}

ChainComplex build_lens(long r, long s) {
    if (r < 2 || std::gcd(r, s) != 1) {
        throw Error(ErrorCode::invalid_parameters,
                    "InvalidParameters: lens space needs r >= 2 and gcd(r,s) = 1");
    }
    IntMatrix d1{{0}};
    IntMatrix d2(1, 1);
    d2.at(0, 0) = r;
    IntMatrix d3{{0}};
    std::string name = "lens:" + std::to_string(r) + ":" + std::to_string(s);
    return ChainComplex({1, 1, 1, 1}, {d1, d2, d3}, name, {{"lens_s", std::to_string(s)}});
}

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    const std::size_t n = na + nb;

    // Cell order in degree p: blocks with a-degree i ascending, within a
    // block a's index major, b's index minor.
    auto block_offset = [&](std::size_t p, std::size_t i) {
        std::size_t off = 0;
        for (std::size_t i2 = 0; i2 < i; ++i2) {
            if (i2 <= na && p - i2 <= nb) off += a.rank_of(i2) * b.rank_of(p - i2);
        }
        return off;
    };

    std::vector<std::size_t> ranks(n + 1, 0);
    for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t i = 0; i <= std::min(p, na); ++i) {
            if (p - i <= nb) ranks[p] += a.rank_of(i) * b.rank_of(p - i);
        }
    }

    std::vector<IntMatrix> boundaries;
    for (std::size_t p = 1; p <= n; ++p) {
        IntMatrix d(ranks[p - 1], ranks[p]);
        for (std::size_t i = 0; i <= std::min(p, na); ++i) {
            const std::size_t j = p - i;
            if (j > nb) continue;
            const std::size_t col_base = block_offset(p, i);
            IntMatrix da = a.boundary(i);
            IntMatrix db = b.boundary(j);
            for (std::size_t ai = 0; ai < a.rank_of(i); ++ai) {
                for (std::size_t bi = 0; bi < b.rank_of(j); ++bi) {
                    const std::size_t col = col_base + ai * b.rank_of(j) + bi;
                    if (i >= 1) {
                        const std::size_t row_base = block_offset(p - 1, i - 1);
                        for (std::size_t ar = 0; ar < a.rank_of(i - 1); ++ar) {
                            const mpz_class& c = da.at(ar, ai);
                            if (c == 0) continue;
                            d.at(row_base + ar * b.rank_of(j) + bi, col) += c;
                        }
                    }
                    if (j >= 1) {
                        const std::size_t row_base = block_offset(p - 1, i);
                        const int sign = (i % 2 == 0) ? 1 : -1;
                        for (std::size_t br = 0; br < b.rank_of(j - 1); ++br) {
                            const mpz_class& c = db.at(br, bi);
                            if (c == 0) continue;
                            d.at(row_base + ai * b.rank_of(j - 1) + br, col) += sign * c;
                        }
                    }
                }
            }
        }
        boundaries.push_back(std::move(d));
    }
    std::string name = a.name().empty() || b.name().empty() ? "" : a.name() + "x" + b.name();
    return ChainComplex(std::move(ranks), std::move(boundaries), name);
}

namespace {

ChainComplex build_one_builtin(const std::string& tok) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = tok.find(':', start);
        parts.push_back(tok.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    auto as_long = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorCode::invalid_parameters, "bad builtin parameter '" + s + "'");
        }
    };
    if (parts[0] == "sphere3-fig" && parts.size() == 1) return build_sphere3_figure();
    if (parts[0] == "sphere-min" && parts.size() == 2) {
        long n = as_long(parts[1]);
        if (n < 1) throw Error(ErrorCode::invalid_parameters, "sphere-min:N requires N >= 1");
        return build_sphere_minimal(static_cast<std::size_t>(n));
    }
    if (parts[0] == "lens" && parts.size() == 3) {
        return build_lens(as_long(parts[1]), as_long(parts[2]));
    }
    throw Error(ErrorCode::invalid_parameters, "unknown builtin '" + tok + "'");
}

} // namespace

ChainComplex build_builtin(const std::string& spec) {
    std::vector<std::string> toks;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = spec.find('x', start);
        toks.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    ChainComplex cc = build_one_builtin(toks[0]);
    for (std::size_t i = 1; i < toks.size(); ++i) {
        cc = tensor_product(cc, build_one_builtin(toks[i]));
    }
    return cc;
}

std::vector<std::string> builtin_names() {
    return {"sphere-min:N", "sphere3-fig", "lens:R:S"};
}

} // namespace atv
