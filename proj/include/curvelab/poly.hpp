#pragma once

#include <curvelab/errors.hpp>
#include <curvelab/rat.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curvelab {

// ---------------------------------------------------------------------------
// Monomial in at most three variables (slots 0,1,2; canonically x,y,z).
// ---------------------------------------------------------------------------

struct Monomial {
    int e[3] = {0, 0, 0};

    Monomial() = default;
    Monomial(int a, int b, int c) : e{a, b, c} {}

    int total() const { return e[0] + e[1] + e[2]; }
    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    Monomial operator*(const Monomial& m) const {
        return {e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]};
    }
    // Requires this->divides(m) == false to never happen at call sites.
    Monomial quotient_under(const Monomial& m) const {
        return {m.e[0] - e[0], m.e[1] - e[1], m.e[2] - e[2]};
    }
    bool operator==(const Monomial& m) const {
        return e[0] == m.e[0] && e[1] == m.e[1] && e[2] == m.e[2];
    }
};

// Graded lexicographic order with x > y > z.  The comparator sorts in
// descending order so map iteration starts at the leading term.
struct MonoDescGrlex {
    bool operator()(const Monomial& l, const Monomial& r) const {
        int tl = l.total(), tr = r.total();
        if (tl != tr) return tl > tr;
        if (l.e[0] != r.e[0]) return l.e[0] > r.e[0];
        return l.e[1] > r.e[1];
    }
};

// ---------------------------------------------------------------------------
// Variable naming for parsing/printing.  A VarSet binds up to three single
// letter variable names to slots.
// ---------------------------------------------------------------------------

struct VarSet {
    std::array<char, 3> names{'x', 'y', 'z'};
    int count = 3;

    static VarSet xyz() { return {{'x', 'y', 'z'}, 3}; }
    static VarSet st() { return {{'s', 't', '?'}, 2}; }
    static VarSet single(char v) { return {{v, '?', '?'}, 1}; }

    int slot_of(char v) const {
        for (int i = 0; i < count; ++i)
            if (names[i] == v) return i;
        return -1;
    }
};

// ---------------------------------------------------------------------------
// Poly: sparse multivariate polynomial over Q in slots 0..2, canonical term
// order, no zero coefficients stored.  Immutable in spirit: all operations
// return new values.
// ---------------------------------------------------------------------------

class Poly {
  public:
    using Terms = std::map<Monomial, Rat, MonoDescGrlex>;

    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly variable(int slot);
    static Poly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
    bool is_homogeneous() const;
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);  // builder helper

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator-() const;
    Poly operator*(const Poly& g) const;
    Poly operator*(const Rat& c) const;
    Poly pow(int n) const;
    bool operator==(const Poly& g) const { return terms_ == g.terms_; }

    Poly partial(int slot) const;
    // Multiply every term by slot^(target - total); target must dominate
    // every term's degree.
    Poly homogenize(int slot, int target_degree) const;
    // Substitute 1 for the given variable.
    Poly dehomogenize(int slot) const;
    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

    // Smallest positive rational c with f/c integral and content-free.
    Rat content() const;
    Poly primitive_integer() const;  // f / content, sign of leading term kept

    std::string str(const VarSet& vars = VarSet::xyz()) const;

  private:
    Terms terms_;
};

Poly operator*(const Rat& c, const Poly& f);

// Formal Euler check: x f_x + y f_y + z f_z == d f for homogeneous f of
// degree d.  True for every polynomial; exercised as an arithmetic self-test.
bool euler_check(const Poly& f);

// Exact division: returns q with f = q*g; throws ExactDivisionError if the
// remainder is nonzero, DegreeError if g = 0.
Poly exact_div(const Poly& f, const Poly& g);

// Grammar (whitespace ignored, multiplication explicit):
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := var | rational | '(' expr ')'
//   rational := int ('/' uint)?
Poly parse_poly(std::string_view text, const VarSet& vars = VarSet::xyz());

// ---------------------------------------------------------------------------
// UniPoly: dense univariate polynomial over Q.
// ---------------------------------------------------------------------------

class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);  // coeffs[i] is the t^i coefficient
    static UniPoly constant(const Rat& c);
    static UniPoly monomial(int k, const Rat& c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& g) const;
    UniPoly operator-(const UniPoly& g) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& g) const;
    UniPoly operator*(const Rat& c) const;
    UniPoly pow(int n) const;
    bool operator==(const UniPoly& g) const { return c_ == g.c_; }

    UniPoly derivative() const;
    Rat eval(const Rat& t) const;
    // Lowest index with nonzero coefficient; -1 for zero polynomial.
    int order() const;

    std::string str(char var = 't') const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly exact_div(const UniPoly& f, const UniPoly& g);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic (or zero)
UniPoly parse_unipoly(std::string_view text, char var);

// ---------------------------------------------------------------------------
// BinaryForm: homogeneous form in (s,t); coefficient i multiplies s^(n-i) t^i.
// The identically zero form is representable (all coefficients zero) and is
// only meaningful where an operation explicitly allows it.
// ---------------------------------------------------------------------------

class BinaryForm {
  public:
    BinaryForm() : n_(0), c_(1, Rat(0)) {}
    BinaryForm(int degree, std::vector<Rat> coeffs);
    static BinaryForm zero(int degree);
    // Homogenize u to the given degree: coefficient of t^i is u_i.
    // Throws DegreeError if degree < deg u.
    static BinaryForm from_unipoly(const UniPoly& u, int degree);

    int degree() const { return n_; }
    bool is_zero() const;
    Rat coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly at_s1() const;  // q(1,t)
    Rat eval(const Rat& s, const Rat& t) const;

    BinaryForm operator+(const BinaryForm& g) const;  // degrees must match
    BinaryForm operator-(const BinaryForm& g) const;
    BinaryForm operator*(const BinaryForm& g) const;
    BinaryForm operator*(const Rat& c) const;
    BinaryForm pow(int n) const;
    bool operator==(const BinaryForm& g) const { return n_ == g.n_ && c_ == g.c_; }

    int s_order() const;  // multiplicity of s dividing the form; -1 for zero
    int t_order() const;
    BinaryForm mul_s_power(int k) const;
    BinaryForm mul_t_power(int k) const;
    BinaryForm div_s_power(int k) const;  // throws ExactDivisionError
    BinaryForm div_t_power(int k) const;

    std::string str(char sv = 's', char tv = 't') const;

  private:
    int n_;
    std::vector<Rat> c_;
};

// Greatest common divisor up to scalar, returned with integer primitive
// coefficients and positive leading coefficient.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
bool coprime3(const BinaryForm& a, const BinaryForm& b, const BinaryForm& c);

// Parses a homogeneous expression in two variables (default s,t); throws
// DegreeError if the result is not homogeneous.
BinaryForm parse_binary_form(std::string_view text, char sv = 's', char tv = 't');

// f(A,B,C) for homogeneous f of degree d: a binary form of degree d*n.
BinaryForm compose3(const Poly& f, const BinaryForm& A, const BinaryForm& B,
                    const BinaryForm& C);

}  // namespace curvelab
