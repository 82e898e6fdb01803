#include "primesum/cipolla.hpp"

#include <fstream>
#include <sstream>

namespace primesum {

namespace {

std::string entry_str(int i, int s) {
    return "(i=" + std::to_string(i) + ", s=" + std::to_string(s) + ")";
}

}  // namespace

const Rational& CipollaCoeffs::at(int i, int s) const {
    auto it = a.find({i, s});
    if (it == a.end())
        throw std::out_of_range("CipollaCoeffs: no entry " + entry_str(i, s));
    return it->second;
}

CipollaCoeffs builtin_coeffs(int m) {
    if (m != 1 && m != 2)
        throw UnsupportedOrder(
            "built-in Cipolla coefficients cover only orders 1 and 2; "
            "for order " + std::to_string(m) +
            " supply a coefficient file (load_coeffs_file / --cipolla-file)");
    CipollaCoeffs c;
    c.order = m;
    c.a[{0, 1}] = Rational(-2);
    c.a[{1, 1}] = Rational(1);
    if (m == 2) {
        c.a[{0, 2}] = Rational(11);
        c.a[{1, 2}] = Rational(-6);
        c.a[{2, 2}] = Rational(1);
    }
    return c;
}

CipollaCoeffs parse_coeffs(std::istream& in, int m, const std::string& source_name) {
    if (m < 1)
        throw CoeffsFileError(source_name + ": order must be >= 1, got " + std::to_string(m));

    CipollaCoeffs c;
    c.order = m;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string i_tok, s_tok, value_tok;
        if (!(fields >> i_tok)) continue;  // blank or comment-only line
        auto where = source_name + ":" + std::to_string(line_no);
        if (!(fields >> s_tok >> value_tok))
            throw CoeffsFileError(where + ": expected \"i s value\", got \"" + line + "\"");
        std::string extra;
        if (fields >> extra)
            throw CoeffsFileError(where + ": trailing token \"" + extra + "\"");

        int i, s;
        try {
            size_t used;
            i = std::stoi(i_tok, &used);
            if (used != i_tok.size()) throw std::invalid_argument(i_tok);
            s = std::stoi(s_tok, &used);
            if (used != s_tok.size()) throw std::invalid_argument(s_tok);
        } catch (const std::exception&) {
            throw CoeffsFileError(where + ": malformed index in \"" + line + "\"");
        }
        if (i < 0 || s < 1 || i > s)
            throw CoeffsFileError(where + ": entry " + entry_str(i, s) +
                                  " outside the valid range 0 <= i <= s, s >= 1");
        if (s > m) continue;  // beyond the requested order

        Rational value;
        try {
            value = Rational::parse(value_tok);
        } catch (const std::exception& e) {
            throw CoeffsFileError(where + ": malformed rational for entry " + entry_str(i, s) +
                                  ": " + e.what());
        }
        if (!c.a.emplace(std::make_pair(i, s), value).second)
            throw CoeffsFileError(where + ": duplicate entry " + entry_str(i, s));
    }

    for (int s = 1; s <= m; ++s)
        for (int i = 0; i <= s; ++i)
            if (!c.a.count({i, s}))
                throw CoeffsFileError(source_name + ": missing entry " + entry_str(i, s) +
                                      " for order " + std::to_string(m));
    for (int s = 1; s <= m; ++s)
        if (c.at(s, s) != Rational(1))
            throw CoeffsFileError(source_name + ": leading entry " + entry_str(s, s) +
                                  " must equal 1, got " + c.at(s, s).str());
    return c;
}

CipollaCoeffs load_coeffs_file(const std::string& path, int m) {
    std::ifstream in(path);
    if (!in) throw CoeffsFileError(path + ": cannot open coefficient file");
    return parse_coeffs(in, m, path);
}

std::string format_coeffs(const CipollaCoeffs& coeffs) {
    std::ostringstream os;
    os << "# Cipolla coefficients a(i,s), order m = " << coeffs.order << "\n";
    os << "# line format: i s value\n";
    for (int s = 1; s <= coeffs.order; ++s)
        for (int i = 0; i <= s; ++i) os << i << " " << s << " " << coeffs.at(i, s).str() << "\n";
    return os.str();
}

}  // namespace primesum
