#include "g2abv/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace g2abv {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::Parse: return "ParseError";
        case Errc::InvalidRoot: return "InvalidRoot";
        case Errc::NotEmbeddable: return "NotEmbeddable";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NoStandardMatch: return "NoStandardMatch";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::UnsupportedSubCase: return "UnsupportedSubCase";
        case Errc::NotInPacket: return "NotInPacket";
        case Errc::NotArthurType: return "NotArthurType";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::AmbiguousOrbit: return "AmbiguousOrbit";
        case Errc::NotRelevant: return "NotRelevant";
        case Errc::NotSConormal: return "NotSConormal";
        case Errc::UnsupportedRestriction: return "UnsupportedRestriction";
    }
    return "Error";
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string str(s);
    Rational r;
    if (str.empty() || r.set_str(str, 10) != 0) throw ParseError(0, "bad rational '" + str + "'");
    if (r.get_den() == 0) throw ParseError(0, "zero denominator");
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- RootOfUnity

namespace {

Rational mod_one(Rational f) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
    f -= q;
    f.canonicalize();
    return f;
}

}  // namespace

RootOfUnity::RootOfUnity(long k, long n) {
    if (n <= 0) throw Error(Errc::InvalidParameter, "root of unity order must be positive");
    frac_ = mod_one(make_rational(k, n));
}

RootOfUnity RootOfUnity::from_fraction(const Rational& f) {
    RootOfUnity u;
    u.frac_ = mod_one(f);
    return u;
}

long RootOfUnity::order() const { return frac_.get_den().get_si(); }
long RootOfUnity::exponent() const { return frac_.get_num().get_si(); }

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    return from_fraction(frac_ + o.frac_);
}

RootOfUnity RootOfUnity::inverse() const { return from_fraction(-frac_); }

RootOfUnity RootOfUnity::pow(long k) const { return from_fraction(frac_ * k); }

std::string RootOfUnity::to_string() const {
    if (is_one()) return "1";
    if (order() == 2) return "-1";
    std::string s = "zeta(" + std::to_string(order()) + ")";
    if (exponent() != 1) s += "^" + std::to_string(exponent());
    return s;
}

// ---------------------------------------------------------------- Cyclo

Cyclo Cyclo::zeta_pow(long k) {
    k %= 12;
    if (k < 0) k += 12;
    Cyclo z(Rational(0), Rational(1), Rational(0), Rational(0));
    Cyclo r(1);
    for (long i = 0; i < k; ++i) r = r * z;
    return r;
}

Cyclo Cyclo::embed(const RootOfUnity& u) {
    Rational t = u.fraction() * 12;
    if (t.get_den() != 1)
        throw Error(Errc::NotEmbeddable,
                    "root of unity of order " + std::to_string(u.order()) + " does not lie in Q(zeta_12)");
    return zeta_pow(t.get_num().get_si());
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    std::array<Rational, 7> p{};
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) p[i + j] += c_[i] * o.c_[j];
    }
    // z^k = z^(k-2) - z^(k-4)
    for (int k = 6; k >= 4; --k) {
        if (p[k] == 0) continue;
        p[k - 2] += p[k];
        p[k - 4] -= p[k];
        p[k] = 0;
    }
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c_[i] = p[i];
    return r;
}

Cyclo Cyclo::galois(int j) const {
    Cyclo r;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        r += Cyclo(c_[i]) * zeta_pow(static_cast<long>(i) * j);
    }
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in Q(zeta_12)");
    // The product of the other three conjugates; x times it is the norm.
    Cyclo others = galois(5) * galois(7) * galois(11);
    Cyclo norm = *this * others;
    return others * Cyclo(Rational(1) / norm.c_[0]);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

bool Cyclo::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyclo::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool Cyclo::operator==(const Cyclo& o) const {
    for (int i = 0; i < 4; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

bool Cyclo::operator<(const Cyclo& o) const {
    for (int i = 0; i < 4; ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::string Cyclo::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        Rational a = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Cyclo cyclo_arith(const Cyclo& x, const Cyclo& y, char op) {
    switch (op) {
        case '+': return x + y;
        case '-': return x - y;
        case '*': return x * y;
        default: throw Error(Errc::InvalidParameter, std::string("unknown operation '") + op + "'");
    }
}

// ---------------------------------------------------------------- QValue

QValue QValue::pow(long k) const { return QValue(unit_.pow(k), exp_ * k); }

bool QValue::operator<(const QValue& o) const {
    if (unit_ != o.unit_) return unit_ < o.unit_;
    return exp_ < o.exp_;
}

std::string QValue::to_string() const {
    std::string u;
    bool neg = false;
    if (unit_.order() == 2) {
        neg = true;
    } else if (!unit_.is_one()) {
        u = unit_.to_string();
    }
    std::string qpart;
    if (exp_ != 0) {
        qpart = "q";
        if (exp_ != 1) {
            if (exp_.get_den() == 1 && exp_ > 0)
                qpart += "^" + exp_.get_str();
            else
                qpart += "^(" + exp_.get_str() + ")";
        }
    }
    std::string body;
    if (!u.empty() && !qpart.empty())
        body = u + "*" + qpart;
    else if (!u.empty())
        body = u;
    else if (!qpart.empty())
        body = qpart;
    else
        body = "1";
    return neg ? "-" + body : body;
}

namespace {

class QParser {
public:
    explicit QParser(std::string_view s) : s_(s) {}

    QValue parse() {
        skip();
        RootOfUnity unit;
        Rational exp(0);
        if (peek() == '-') {
            ++pos_;
            unit = unit * RootOfUnity(1, 2);
            skip();
        }
        bool any = false;
        while (true) {
            skip();
            if (starts("zeta")) {
                pos_ += 4;
                expect('(');
                long n = integer();
                expect(')');
                long k = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    k = signed_integer();
                }
                if (n <= 0) throw ParseError(pos_, "zeta order must be positive");
                unit = unit * RootOfUnity(k, n);
            } else if (peek() == 'q') {
                ++pos_;
                Rational a(1);
                skip();
                if (peek() == '^') {
                    ++pos_;
                    a = exponent();
                }
                exp += a;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                long v = integer();
                if (v != 1) throw ParseError(pos_, "only the constant 1 is allowed");
            } else {
                throw ParseError(pos_, "expected 'zeta', 'q' or '1'");
            }
            any = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        skip();
        if (!any || pos_ != s_.size()) throw ParseError(pos_, "unexpected trailing input");
        return QValue(unit, exp);
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool starts(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }
    void expect(char c) {
        skip();
        if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
        skip();
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    long signed_integer() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        long v = integer();
        return neg ? -v : v;
    }
    Rational exponent() {
        skip();
        if (peek() == '(') {
            ++pos_;
            long p = signed_integer();
            long r = 1;
            skip();
            if (peek() == '/') {
                ++pos_;
                r = integer();
                if (r == 0) throw ParseError(pos_, "zero denominator");
            }
            expect(')');
            return make_rational(p, r);
        }
        return Rational(signed_integer());
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QValue QValue::parse(std::string_view s) { return QParser(s).parse(); }

}  // namespace g2abv
