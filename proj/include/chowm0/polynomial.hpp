#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowm0/rational.hpp"

namespace chowm0 {

// A monomial maps variable names to positive exponents; the empty map is 1.
using Monomial = std::map<std::string, int>;

// Grading degree of a variable. All variables have degree 1 except the
// 0-node stratum generator a2, which has degree 2.
int variable_degree(const std::string& name);

// Weighted (grading) degree of a monomial.
int monomial_degree(const Monomial& m);

// Graded lexicographic order: by unweighted total degree, then by
// exponent of the alphabetically first variable where the two differ
// (higher exponent wins). A genuine monomial order, so leading terms
// are multiplicative; divide_exact depends on that.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial mul(const Monomial& a, const Monomial& b);
// Componentwise quotient, or nullopt when some exponent would go negative.
std::optional<Monomial> try_div(const Monomial& a, const Monomial& b);

class NotDivisible : public std::runtime_error {
  public:
    NotDivisible() : std::runtime_error("no exact polynomial quotient exists") {}
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms with coefficient zero are never stored, so equality of term maps
// is equality of polynomials. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(long constant);

    static Polynomial variable(const std::string& name);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Weighted degree of the highest-degree term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    // Names of all variables that occur.
    std::vector<std::string> variables() const;

    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Simultaneous substitution. Variables absent from the map stay fixed.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

    // Sum of terms of weighted degree exactly d.
    Polynomial graded_part(int d) const;

    // Exact quotient: returns s with s*q == *this. Throws NotDivisible if
    // no such s exists, std::domain_error if q is zero.
    Polynomial divide_exact(const Polynomial& q) const;

    // Canonical text form, terms in descending grlex order, e.g.
    // "-3/2*t1^2*r + t2". print/parse round-trip bit-exactly.
    std::string str() const;

    void add_term(const Rational& coeff, const Monomial& m);

  private:
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Parses the polynomial text grammar. Throws ParseError with position info.
Polynomial parse_polynomial(const std::string& text);

}  // namespace chowm0
