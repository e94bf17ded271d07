#include "mzv/word.hpp"

#include "mzv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

namespace mzv {

Word::Word(std::initializer_list<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push_back(l);
}

Word Word::parse(std::string_view text) {
    std::string letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c != 'x' && c != 'y') {
            throw ParseError("invalid word '" + std::string(text) + "': letters must be x or y");
        }
        letters.push_back(c);
    }
    return Word(std::move(letters));
}

std::size_t Word::count(Letter l) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(l)));
}

Word Word::substr(std::size_t pos, std::size_t len) const { return Word(letters_.substr(pos, len)); }

Word& Word::operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
}

Word repeat(const Word& w, std::size_t times) {
    Word out;
    for (std::size_t i = 0; i < times; ++i) out += w;
    return out;
}

Word sigma_dual(const Word& w) {
    Word out;
    for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i] == Letter::x ? Letter::y : Letter::x);
    return out;
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw DomainError("composition parts must be >= 1");
    }
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("invalid composition '" + std::string(whole) + "': bad part '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Composition Composition::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    Composition out;
    if (compact.empty() || compact == "()") return out;

    std::string_view rest(compact);
    while (true) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        if (!item.empty() && item.front() == '{') {
            // {k}^r
            auto close = item.find('}');
            if (close == std::string_view::npos || close + 1 >= item.size() || item[close + 1] != '^') {
                throw ParseError("invalid repetition macro '" + std::string(item) + "' in '" + std::string(text) + "'");
            }
            int k = parse_positive(item.substr(1, close - 1), text);
            std::string_view count_text = item.substr(close + 2);
            int r = 0;
            auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), r);
            if (count_text.empty() || ec != std::errc() || ptr != count_text.data() + count_text.size() || r < 0) {
                throw ParseError("invalid repetition count in '" + std::string(text) + "'");
            }
            if (k < 1) throw ParseError("composition parts must be >= 1 in '" + std::string(text) + "'");
            for (int i = 0; i < r; ++i) out.parts_.push_back(k);
        } else {
            int k = parse_positive(item, text);
            if (k < 1) throw ParseError("composition parts must be >= 1 in '" + std::string(text) + "'");
            out.parts_.push_back(k);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

long Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

void Composition::push_back(int part) {
    if (part < 1) throw DomainError("composition parts must be >= 1");
    parts_.push_back(part);
}

Composition& Composition::operator+=(const Composition& rhs) {
    parts_.insert(parts_.end(), rhs.parts_.begin(), rhs.parts_.end());
    return *this;
}

std::string Composition::to_string() const {
    if (parts_.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(parts_[i]);
    }
    return out;
}

Composition repeat(const Composition& c, std::size_t times) {
    Composition out;
    for (std::size_t i = 0; i < times; ++i) out += c;
    return out;
}

Word encode_z(const Composition& c) {
    Word out;
    for (int k : c.parts()) {
        for (int i = 1; i < k; ++i) out.push_back(Letter::x);
        out.push_back(Letter::y);
    }
    return out;
}

Composition decode_z(const Word& w) {
    if (!w.empty() && w.back() != Letter::y) {
        throw DomainError("word '" + w.str() + "' does not end in y; it is not a product of z-letters");
    }
    Composition out;
    int run = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::x) {
            ++run;
        } else {
            out.push_back(run);
            run = 1;
        }
    }
    return out;
}

bool is_admissible(const Composition& c) { return c.empty() || c[0] >= 2; }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << (w.empty() ? std::string("1") : w.str()); }

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

bool CanonicalOrder::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    // 'y' < 'x' here; keeps encode_z monotone for compositions of equal weight and depth.
    return a.str() > b.str();
}

bool CanonicalOrder::operator()(const Composition& a, const Composition& b) const {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.parts() < b.parts();
}

}  // namespace mzv
