#include "chowm0/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chowm0 {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits = true;
        } else if (text[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("malformed rational literal: " + text);
        }
    }
    if (!digits) throw std::invalid_argument("malformed rational literal: " + text);
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

int variable_degree(const std::string& name) {
    return name == "a2" ? 2 : 1;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += variable_degree(v) * e;
    return d;
}

static int plain_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = plain_degree(a), db = plain_degree(b);
    if (da != db) return da < db;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The monomial owning the alphabetically earlier variable has a
            // positive exponent where the other has zero: it is larger.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;  // equal (both exhausted simultaneously at equal degree)
}

Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        int n = (r[v] += e);
        if (n == 0) r.erase(v);
    }
    return r;
}

std::optional<Monomial> try_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        auto it = r.find(v);
        if (it == r.end() || it->second < e) return std::nullopt;
        it->second -= e;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_[Monomial{}] = constant;
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial{{name, 1}}] = 1;
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    p.add_term(coeff, m);
    return p;
}

void Polynomial::add_term(const Rational& coeff, const Monomial& m) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

std::vector<std::string> Polynomial::variables() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(c, m);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(-c, m);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, mul(ma, mb));
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Polynomial Polynomial::pow(int k) const {
    Polynomial r(1L);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            Polynomial base = it != images.end() ? it->second : Polynomial::variable(v);
            term = term * base.pow(e);
        }
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::graded_part(int d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == d) r.terms_[m] = c;
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& q) const {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial rem = *this, quot;
    const auto& [qm, qc] = *q.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        auto m = try_div(rm, qm);
        if (!m) throw NotDivisible();
        Polynomial s = Polynomial::term(rc / qc, *m);
        quot = quot + s;
        rem = rem - s * q;
    }
    return quot;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex, matching the canonical text form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_shown = (a != 1) || m.empty();
        if (coeff_shown) os << to_string(a);
        bool need_star = coeff_shown;
        for (const auto& [v, e] : m) {
            if (need_star) os << "*";
            os << v;
            if (e != 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        int sign = read_sign();
        out = out + parse_term() * Rational(sign);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            out = out + parse_term() * Rational(c == '-' ? -1 : 1);
            skip_ws();
        }
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    int read_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            int sg = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return sg;
        }
        return 1;
    }

    bool at_digit() const {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_var() const {
        return pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z';
    }

    std::string read_integer() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return s_.substr(start, pos_ - start);
    }

    Polynomial parse_term() {
        Rational coeff(1);
        bool have_factor = false;
        Monomial mon;
        if (at_digit()) {
            std::string num = read_integer();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string den = read_integer();
                if (parse_rational(den) == 0) throw ParseError("zero denominator", pos_);
                coeff = parse_rational(num + "/" + den);
            } else {
                coeff = parse_rational(num);
            }
            have_factor = true;
        }
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else if (have_factor && !at_var()) {
                break;
            }
            if (!at_var()) {
                if (!have_factor) throw ParseError("expected coefficient or variable", pos_);
                throw ParseError("expected variable after '*'", pos_);
            }
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int exp = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                exp = std::stoi(read_integer());
                if (exp < 0) throw ParseError("negative exponent", pos_);
            }
            mon[name] += exp;
            have_factor = true;
        }
        return Polynomial::term(coeff, mon);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace chowm0
