#include "cbmw/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cbmw/errors.hpp"

namespace cbmw {

// ---------------------------------------------------------------- Variable

Variable Variable::u(int index) {
    if (index < 1) throw std::invalid_argument("u-index must be >= 1");
    return Variable(VarKind::U, index);
}

std::string Variable::name() const {
    switch (kind_) {
        case VarKind::U: return "u" + std::to_string(index_);
        case VarKind::Rho: return "rho";
        case VarKind::Q: return "q";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.name(); }

// ---------------------------------------------------------- LaurentMonomial

LaurentMonomial LaurentMonomial::var(Variable v, int exp) {
    LaurentMonomial m;
    if (exp != 0) m.exps_.emplace_back(v, exp);
    return m;
}

int LaurentMonomial::exponent(Variable v) const {
    for (const auto& [var, e] : exps_)
        if (var == v) return e;
    return 0;
}

int LaurentMonomial::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    LaurentMonomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.exps_.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    return out;
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial out;
    out.exps_ = exps_;
    for (auto& [var, e] : out.exps_) e = -e;
    return out;
}

LaurentMonomial LaurentMonomial::pow(int k) const {
    LaurentMonomial out;
    if (k == 0) return out;
    out.exps_ = exps_;
    for (auto& [var, e] : out.exps_) e *= k;
    return out;
}

bool LaurentMonomial::divides(const LaurentMonomial& o) const {
    // componentwise this.e <= o.e, with absent variables counting as 0
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        int ea, eb;
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            ea = a->second, eb = 0;
            ++a;
        } else if (a == exps_.end() || b->first < a->first) {
            ea = 0, eb = b->second;
            ++b;
        } else {
            ea = a->second, eb = b->second;
            ++a, ++b;
        }
        if (ea > eb) return false;
    }
    return true;
}

int LaurentMonomial::grlex_cmp(const LaurentMonomial& a, const LaurentMonomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        int ea, eb;
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            ea = ia->second, eb = 0;
            ++ia;
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            ea = 0, eb = ib->second;
            ++ib;
        } else {
            ea = ia->second, eb = ib->second;
            ++ia, ++ib;
        }
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

std::string LaurentMonomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [var, e] : exps_) {
        if (!s.empty()) s += "*";
        s += var.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long c) : LaurentPolynomial(mpz_class(c)) {}

LaurentPolynomial::LaurentPolynomial(const mpz_class& c) {
    if (c != 0) terms_.emplace(LaurentMonomial(), c);
}

LaurentPolynomial LaurentPolynomial::variable(Variable v, int exp) {
    return term(1, LaurentMonomial::var(v, exp));
}

LaurentPolynomial LaurentPolynomial::term(const mpz_class& coeff, const LaurentMonomial& m) {
    LaurentPolynomial p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const mpz_class& LaurentPolynomial::coeff(const LaurentMonomial& m) const {
    static const mpz_class zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

const std::pair<const LaurentMonomial, mpz_class>& LaurentPolynomial::lead() const {
    if (terms_.empty()) throw std::logic_error("lead() of zero polynomial");
    return *terms_.begin();
}

void LaurentPolynomial::add_term(const LaurentMonomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out;
    out.terms_ = terms_;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial out = *this;
    out += o;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial out = *this;
    out -= o;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const mpz_class& c) const {
    LaurentPolynomial out;
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, coef] : out.terms_) coef *= c;
    return out;
}

LaurentPolynomial operator*(const mpz_class& c, const LaurentPolynomial& p) { return p * c; }

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::shifted(const LaurentMonomial& m) const {
    LaurentPolynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
    return out;
}

std::set<Variable> LaurentPolynomial::variables() const {
    std::set<Variable> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) vars.insert(v);
    return vars;
}

std::optional<std::pair<int, int>> LaurentPolynomial::exponent_range(Variable v) const {
    bool occurs = false, first = true;
    int mn = 0, mx = 0;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);  // 0 when absent from this term
        if (e != 0) occurs = true;
        if (first) {
            mn = mx = e;
            first = false;
        } else {
            mn = std::min(mn, e);
            mx = std::max(mx, e);
        }
    }
    if (!occurs) return std::nullopt;
    return std::pair<int, int>{mn, mx};
}

LaurentMonomial LaurentPolynomial::monomial_gcd() const {
    LaurentMonomial out;
    for (Variable v : variables()) {
        int mn = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            mn = first ? e : std::min(mn, e);
            first = false;
        }
        if (mn != 0) out = out * LaurentMonomial::var(v, mn);
    }
    return out;
}

bool LaurentPolynomial::is_laurent_free() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents())
            if (e < 0) return false;
    return true;
}

mpz_class LaurentPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Rational LaurentPolynomial::evaluate(const std::map<Variable, Rational>& point) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term{mpz_class(c)};
        for (const auto& [v, e] : m.exponents()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("unbound variable " + v.name() + " in evaluation");
            if (e < 0 && it->second.is_zero())
                throw MathError("negative power of zero at " + v.name());
            term *= it->second.pow(e);
        }
        sum += term;
    }
    return sum;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << m.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

LaurentPolynomial q_minus_q_inv() {
    return LaurentPolynomial::variable(Variable::q()) - LaurentPolynomial::variable(Variable::q(), -1);
}

LaurentPolynomial substitute_variable(const LaurentPolynomial& f, Variable v,
                                      const LaurentPolynomial& value) {
    bool unit = value.is_single_term() &&
                (value.lead().second == 1 || value.lead().second == -1);
    LaurentPolynomial out;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        LaurentPolynomial rest =
            LaurentPolynomial::term(c, m * LaurentMonomial::var(v, -e));  // drop v
        if (e == 0) {
            out += rest;
        } else if (e > 0) {
            out += rest * value.pow(static_cast<unsigned>(e));
        } else {
            if (!unit)
                throw MathError("substituting a non-unit for " + v.name() +
                                " raised to a negative power");
            const auto& [mono, coef] = value.lead();
            mpz_class cpow = (coef == -1 && (e % 2 != 0)) ? mpz_class(-1) : mpz_class(1);
            out += rest.shifted(mono.pow(e)) * cpow;
        }
    }
    return out;
}

}  // namespace cbmw
