#include "ccw/textio.hpp"

#include <cctype>
#include <sstream>

#include "ccw/errors.hpp"
#include "ccw/rational.hpp"

namespace ccw {

std::string to_string(const CyclicArrangement& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.ranks.size(); ++i) os << (i ? "," : "") << a.ranks[i];
    os << ']';
    return os.str();
}

std::string to_string(const Configuration& c) {
    return "X=" + to_string(c.x) + ";Y=" + to_string(c.y);
}

namespace {

// Minimal recursive-descent reader over the whitespace-stripped input,
// tracking offsets into the original text for error messages.
struct Reader {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    void expect_ci(char c) {
        skip_ws();
        if (pos < text.size() &&
            std::tolower(static_cast<unsigned char>(text[pos])) ==
                std::tolower(static_cast<unsigned char>(c))) {
            ++pos;
            return;
        }
        throw ParseError(std::string("expected '") + c + "'", pos);
    }
    int integer() {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an integer", start);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("integer out of range", start);
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }
    std::vector<int> rank_list() {
        expect('[');
        std::vector<int> out;
        skip_ws();
        if (eat(']')) return out;
        out.push_back(integer());
        while (eat(',')) out.push_back(integer());
        expect(']');
        return out;
    }
};

}  // namespace

Configuration parse_config(const std::string& text) {
    Reader r{text};
    r.expect_ci('X');
    r.expect('=');
    std::vector<int> xr = r.rank_list();
    r.expect(';');
    r.expect_ci('Y');
    r.expect('=');
    std::vector<int> yr = r.rank_list();
    r.skip_ws();
    if (r.pos != text.size()) throw ParseError("trailing characters", r.pos);
    if (xr.size() != yr.size())
        throw ParseError("factor lengths differ (" + std::to_string(xr.size()) + " vs " +
                             std::to_string(yr.size()) + ")",
                         text.size());
    Configuration c{std::move(xr), std::move(yr)};
    validate(c);
    return canonical(c);
}

std::string rational_to_string(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational", 0);
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator", slash + 1);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational '" + text + "'", 0);
    }
}

}  // namespace ccw
