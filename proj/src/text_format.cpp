#include "mzv/text_format.hpp"

#include "mzv/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace mzv {

namespace {

template <class Monomial, class MonoText>
std::string serialize(const LinearCombination<Monomial>& p, MonoText mono_text) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        BigRational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = mono_text(m);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag == BigRational(1)) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

struct SignedTerm {
    bool negative = false;
    std::string body;
};

// Splits on top-level '+'/'-'. Commas, braces and digits never contain signs,
// so a plain scan is enough.
std::vector<SignedTerm> split_terms(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    std::vector<SignedTerm> terms;
    SignedTerm cur;
    bool have_sign = false;
    for (char c : compact) {
        if (c == '+' || c == '-') {
            if (!cur.body.empty()) {
                terms.push_back(cur);
                cur = {};
                have_sign = false;
            }
            if (have_sign) throw ParseError("repeated sign in polynomial '" + std::string(text) + "'");
            cur.negative = c == '-';
            have_sign = true;
        } else {
            cur.body.push_back(c);
        }
    }
    if (have_sign && cur.body.empty()) throw ParseError("dangling sign in polynomial '" + std::string(text) + "'");
    terms.push_back(cur);
    return terms;
}

std::pair<BigRational, std::string> split_coefficient(const std::string& body) {
    auto star = body.find('*');
    if (star == std::string::npos) return {BigRational(1), body};
    if (body.find('*', star + 1) != std::string::npos) throw ParseError("malformed term '" + body + "'");
    return {BigRational::parse(body.substr(0, star)), body.substr(star + 1)};
}

bool is_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') return false;
    }
    return true;
}

}  // namespace

std::string to_string(const WordPoly& p) {
    return serialize(p, [](const Word& w) { return w.str(); });
}

std::string to_string(const ZPoly& p) {
    return serialize(p, [](const Composition& c) { return c.empty() ? std::string("()") : c.to_string(); });
}

WordPoly parse_wordpoly(std::string_view text) {
    WordPoly out;
    for (const auto& term : split_terms(text)) {
        BigRational coeff(1);
        Word mono;
        if (is_rational_literal(term.body)) {
            coeff = BigRational::parse(term.body);
        } else {
            auto [c, m] = split_coefficient(term.body);
            coeff = c;
            mono = m == "1" ? Word() : Word::parse(m);
        }
        out.add_term(mono, term.negative ? -coeff : coeff);
    }
    return out;
}

ZPoly parse_zpoly(std::string_view text) {
    ZPoly out;
    for (const auto& term : split_terms(text)) {
        if (term.body == "0") continue;
        auto [c, m] = split_coefficient(term.body);
        out.add_term(Composition::parse(m), term.negative ? -c : c);
    }
    return out;
}

}  // namespace mzv
