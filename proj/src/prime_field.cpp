#include "lefschetz/prime_field.hpp"

namespace lefschetz {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::VertexClash: return "VertexClash";
        case ErrorCode::FaceTooSmall: return "FaceTooSmall";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::BadT: return "BadT";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::NotArtinian: return "NotArtinian";
        case ErrorCode::NotArtinianSeed: return "NotArtinianSeed";
        case ErrorCode::NotGorensteinShaped: return "NotGorensteinShaped";
        case ErrorCode::NotGorensteinStar: return "NotGorensteinStar";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= kMaxModulus || !is_prime(p)) {
        throw Error(ErrorCode::BadPrime, "modulus " + std::to_string(p) + " is not a supported prime");
    }
}

std::int64_t PrimeField::pow(std::int64_t base, std::int64_t exp) const {
    std::int64_t result = 1;
    std::int64_t b = reduce(base);
    while (exp > 0) {
        if (exp & 1) result = mul(result, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    if (a == 0) throw Error(ErrorCode::BadParameters, "inverse of zero in GF(p)");
    return pow(a, p_ - 2);
}

}  // namespace lefschetz
