#include "primesum/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "primesum/convert.hpp"

namespace primesum {

LogLogPoly::LogLogPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LogLogPoly LogLogPoly::constant(Rational c) { return LogLogPoly(std::vector<Rational>{std::move(c)}); }

LogLogPoly LogLogPoly::monomial(int degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("LogLogPoly: negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = std::move(c);
    return LogLogPoly(std::move(v));
}

const Rational& LogLogPoly::coeff(int k) const {
    static const Rational zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

LogLogPoly operator+(const LogLogPoly& p, const LogLogPoly& q) {
    std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return LogLogPoly(std::move(out));
}

LogLogPoly operator-(const LogLogPoly& p, const LogLogPoly& q) { return p + q.scale(Rational(-1)); }

LogLogPoly LogLogPoly::scale(const Rational& c) const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = coeffs_[k] * c;
    return LogLogPoly(std::move(out));
}

Real LogLogPoly::eval(Real x) const {
    Real acc = 0;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + to_real(coeffs_[k]);
    return acc;
}

std::string LogLogPoly::serialize() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ',';
        out += coeffs_[k].str();
    }
    return out;
}

LogLogPoly LogLogPoly::deserialize(std::string_view text) {
    std::vector<Rational> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        coeffs.push_back(Rational::parse(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return LogLogPoly(std::move(coeffs));
}

std::string LogLogPoly::pretty(const std::function<std::string(int)>& monomial_name, bool tight) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeff(d);
        if (c.is_zero()) continue;
        Rational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << a.str();
        } else if (a == Rational(1)) {
            os << monomial_name(d);
        } else {
            os << a.str() << (tight ? "" : " ") << monomial_name(d);
        }
    }
    return os.str();
}

std::string LogLogPoly::pretty_x() const {
    return pretty([](int d) { return d == 1 ? std::string("x") : "x^" + std::to_string(d); }, true);
}

std::string LogLogPoly::pretty_loglog() const {
    return pretty(
        [](int d) { return d == 1 ? std::string("loglog n") : "loglog^" + std::to_string(d) + " n"; },
        false);
}

}  // namespace primesum
