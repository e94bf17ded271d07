#include "mzv/poly.hpp"

namespace mzv {

WordPoly encode_zpoly(const ZPoly& p) {
    WordPoly out;
    for (const auto& [c, coeff] : p) out.add_term(encode_z(c), coeff);
    return out;
}

ZPoly decode_wordpoly(const WordPoly& p) {
    ZPoly out;
    for (const auto& [w, coeff] : p) out.add_term(decode_z(w), coeff);
    return out;
}

}  // namespace mzv
