#include "ffr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ffr {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '/') {
            if (slash != std::string::npos) return std::nullopt;
            slash = i;
            continue;
        }
        if (c == '-' || c == '+') {
            // A sign is only legal at the very front of numerator or denominator.
            if (i != 0 && !(slash != std::string::npos && i == slash + 1))
                return std::nullopt;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto bare = [](const std::string& s) {
        std::string t = s;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.erase(0, 1);
        return t;
    };
    if (bare(num).empty() || bare(den).empty()) return std::nullopt;

    mpq_class value;
    if (mpq_set_str(value.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        return std::nullopt;
    if (sgn(Integer(value.get_den())) == 0) return std::nullopt;
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_from_double(double x) {
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) throw std::invalid_argument("exact_sqrt: negative argument");
    if (sgn(r) == 0) return Rational(0);
    const Integer num = r.get_num();
    const Integer den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn) / Rational(sd);
}

int compare_with_surd(const Rational& q, const Rational& a, const Rational& b,
                      const Rational& s) {
    if (sgn(s) < 0) throw std::invalid_argument("compare_with_surd: negative radicand");
    const Rational diff = q - a;  // compare diff against b*sqrt(s)
    if (sgn(b) == 0 || sgn(s) == 0) return sgn(diff);
    if (sgn(b) > 0) {
        if (sgn(diff) <= 0) return -1;
        return sgn(Rational(diff * diff - b * b * s));
    }
    // b < 0: the surd term is negative.
    if (sgn(diff) >= 0) return 1;
    return sgn(Rational(b * b * s - diff * diff));
}

}  // namespace ffr
