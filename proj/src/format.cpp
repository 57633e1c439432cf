#include "atv/format.hpp"

#include <sstream>
#include <vector>

#include "atv/error.hpp"

namespace atv {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

struct Cursor {
    std::vector<Token> toks;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        std::ostringstream os;
        os << "ParseError: " << why;
        if (pos < toks.size()) {
            os << " at line " << toks[pos].line << ", column " << toks[pos].col
               << " ('" << toks[pos].text << "')";
        } else if (!toks.empty()) {
            os << " at end of input (after line " << toks.back().line << ")";
        }
        throw Error(ErrorCode::parse_error, os.str());
    }

    bool done() const { return pos == toks.size(); }
    const Token& peek() const {
        if (done()) fail("unexpected end of input");
        return toks[pos];
    }
    Token next() {
        const Token& t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& kw) {
        if (peek().text != kw) fail("expected '" + kw + "'");
        ++pos;
    }

    long integer(const std::string& what) {
        Token t = next();
        try {
            std::size_t used = 0;
            long v = std::stol(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument(t.text);
            return v;
        } catch (const std::exception&) {
            --pos;
            fail("expected integer for " + what);
        }
    }

    mpz_class big_integer(const std::string& what) {
        Token t = next();
        try {
            return mpz_class(t.text);
        } catch (const std::exception&) {
            --pos;
            fail("expected integer for " + what);
        }
    }
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    std::size_t line = 1, col = 1;
    std::string cur;
    std::size_t cur_line = 0, cur_col = 0;
    auto flush = [&]() {
        if (!cur.empty()) {
            toks.push_back({cur, cur_line, cur_col});
            cur.clear();
        }
    };
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (in_comment) { ++col; continue; }
        if (c == '#') {
            flush();
            in_comment = true;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            if (cur.empty()) { cur_line = line; cur_col = col; }
            cur.push_back(c);
        }
        ++col;
    }
    flush();
    return toks;
}

} // namespace

ChainComplex parse_complex(const std::string& text) {
    Cursor cur{tokenize(text)};
    if (cur.done()) cur.fail("empty document");

    cur.expect("name");
    // The name runs to the next recognized directive.
    std::string name;
    while (!cur.done() && cur.peek().text != "meta" && cur.peek().text != "dim") {
        if (!name.empty()) name += ' ';
        name += cur.next().text;
    }

    std::map<std::string, std::string> metadata;
    while (!cur.done() && cur.peek().text == "meta") {
        cur.next();
        std::string key = cur.next().text;
        std::string value = cur.next().text;
        metadata[key] = value;
    }

    cur.expect("dim");
    long dim = cur.integer("dim");
    if (dim < 0) cur.fail("dim must be nonnegative");

    cur.expect("ranks");
    std::vector<std::size_t> ranks;
    for (long p = 0; p <= dim; ++p) {
        long r = cur.integer("rank");
        if (r < 0) cur.fail("ranks must be nonnegative");
        ranks.push_back(static_cast<std::size_t>(r));
    }

    std::vector<IntMatrix> boundaries;
    for (long p = 1; p <= dim; ++p) {
        cur.expect("boundary");
        long got = cur.integer("boundary degree");
        if (got != p) cur.fail("boundary blocks must appear in order 1..dim");
        IntMatrix m(ranks[p - 1], ranks[p]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = cur.big_integer("boundary entry");
        boundaries.push_back(std::move(m));
    }
    if (!cur.done()) cur.fail("trailing content after last boundary block");

    ChainComplex cc(std::move(ranks), std::move(boundaries), name, std::move(metadata));
    cc.validate(); // ValidationError if dd != 0
    return cc;
}

std::string serialize_complex(const ChainComplex& cc) {
    std::ostringstream os;
    os << "name " << (cc.name().empty() ? "unnamed" : cc.name()) << '\n';
    for (const auto& [key, value] : cc.metadata()) {
        os << "meta " << key << ' ' << value << '\n';
    }
    os << "dim " << cc.dim() << '\n';
    os << "ranks";
    for (std::size_t r : cc.ranks()) os << ' ' << r;
    os << '\n';
    for (std::size_t p = 1; p <= cc.dim(); ++p) {
        os << "boundary " << p << '\n' << cc.boundary(p).to_string();
    }
    return os.str();
}

} // namespace atv
