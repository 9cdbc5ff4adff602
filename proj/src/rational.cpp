#include "twoside/rational.hpp"

#include <cctype>

#include "twoside/error.hpp"

namespace twoside {

BigRat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::Validation, "empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        for (char c : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorKind::Validation, "bad rational literal '" + text + "'");
        BigInt num(whole + frac), den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        BigRat q(num, den);
        q.canonicalize();
        return neg ? BigRat(-q) : q;
    }

    BigRat q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) fail(ErrorKind::Validation, "bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const BigRat& q) { return q.get_str(10); }

bool is_rational_square(const BigRat& q, BigRat* root) {
    if (sgn(q) < 0) return false;
    if (sgn(q) == 0) {
        if (root) *root = 0;
        return true;
    }
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    if (root) {
        BigInt n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = BigRat(n, d);
    }
    return true;
}

}  // namespace twoside
