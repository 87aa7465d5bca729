#include "kdiv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace kdiv::exact {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num);
    q_ /= mpq_class(den);  // mpq_class division canonicalizes
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::from_string(std::string_view s) {
    // mpq_set_str accepts whitespace and some surprising forms; validate the
    // shape ourselves so that "p" and "p/q" are the only accepted spellings.
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = is_int(s);
    } else {
        ok = is_int(s.substr(0, slash)) && is_int(s.substr(slash + 1));
    }
    if (!ok) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");

    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace kdiv::exact
