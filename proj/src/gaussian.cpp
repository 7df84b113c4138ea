#include "enriques7/gaussian.hpp"

#include "enriques7/errors.hpp"

#include <ostream>

namespace enr7 {

std::string rat_str(const Rat& r) {
    return r.get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    const char* c = s.c_str();
    if (*c == '+')
        ++c;  // mpq_set_str accepts '-' but not '+'
    if (*c == '\0' || mpq_set_str(r.get_mpq_t(), c, 10) != 0)
        throw DegenerateInput("cannot parse rational '" + s + "'");
    if (r.get_den() == 0)
        throw DegenerateInput("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0)
        return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

Qi& Qi::operator/=(const Qi& o) {
    if (o.is_zero())
        throw DegenerateInput("division by zero in Q(i)");
    Rat n = o.norm();
    Rat r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
}

std::optional<Qi> qi_sqrt(const Qi& z) {
    if (z.im == 0) {
        if (z.re >= 0) {
            auto s = rat_sqrt(z.re);
            if (!s)
                return std::nullopt;
            return Qi(*s, 0);
        }
        auto s = rat_sqrt(-z.re);
        if (!s)
            return std::nullopt;
        return Qi(0, *s);
    }
    // (u+vi)^2 = a+bi needs u^2-v^2 = a, 2uv = b, so u^2 = (a + sqrt(a^2+b^2))/2.
    auto r = rat_sqrt(z.norm());
    if (!r)
        return std::nullopt;
    auto u = rat_sqrt((z.re + *r) / 2);
    if (!u)
        return std::nullopt;
    Rat v = z.im / (2 * (*u));
    return Qi(*u, v);
}

std::string qi_str(const Qi& z) {
    if (z.im == 0)
        return rat_str(z.re);
    std::string im;
    if (z.im == 1)
        im = "i";
    else if (z.im == -1)
        im = "-i";
    else
        im = rat_str(z.im) + "i";
    if (z.re == 0)
        return im;
    if (z.im > 0)
        return rat_str(z.re) + "+" + im;
    return rat_str(z.re) + im;
}

Qi parse_qi(const std::string& s) {
    if (s.empty())
        throw DegenerateInput("empty Gaussian-rational literal");
    // Locate the sign splitting real and imaginary parts, if any. Signs at
    // position 0 or following '/' belong to a single term.
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/')
            split = k;
    }
    auto parse_im = [](std::string t) {
        if (t == "" || t == "+")
            return Rat(1);
        if (t == "-")
            return Rat(-1);
        return parse_rat(t);
    };
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        if (split == std::string::npos)
            return Qi(0, parse_im(body));
        return Qi(parse_rat(s.substr(0, split)),
                  parse_im(body.substr(split)));
    }
    if (split != std::string::npos)
        throw DegenerateInput("cannot parse Gaussian rational '" + s + "'");
    return Qi(parse_rat(s), 0);
}

Cd to_cd(const Qi& z) {
    return {z.re.get_d(), z.im.get_d()};
}

std::ostream& operator<<(std::ostream& os, const Qi& z) {
    return os << qi_str(z);
}

} // namespace enr7
