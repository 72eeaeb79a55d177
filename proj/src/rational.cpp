#include "conegauge/rational.hpp"

#include <cctype>
#include <sstream>

namespace conegauge {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Singular("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

RVector operator+(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RVector operator-(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RVector operator*(const Rational& s, const RVector& a) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RVector parse_rvector(std::string_view text) {
    RVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(Rational::parse(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const RVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace conegauge
