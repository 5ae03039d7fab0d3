#include <curvelab/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curvelab {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::variable(int slot) {
    Monomial m;
    m.e[slot] = 1;
    Poly p;
    p.terms_[m] = Rat(1);
    return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (const auto& [m, c] : terms_)
        if (m.total() != d) return false;
    return true;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& g) const {
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& g) const {
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& g) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r;
    for (const auto& [m, a] : terms_) r.terms_[m] = a * c;
    return r;
}

Poly operator*(const Rat& c, const Poly& f) { return f * c; }

Poly Poly::pow(int n) const {
    Poly r = Poly::constant(Rat(1));
    Poly b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Poly Poly::partial(int slot) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[slot] == 0) continue;
        Monomial q = m;
        q.e[slot] -= 1;
        r.add_term(q, c * m.e[slot]);
    }
    return r;
}

Poly Poly::homogenize(int slot, int target_degree) const {
    if (!terms_.empty() && degree() > target_degree)
        throw DegreeError("homogenization degree below actual degree");
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial q = m;
        q.e[slot] += target_degree - m.total();
        r.add_term(q, c);
    }
    return r;
}

Poly Poly::dehomogenize(int slot) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial q = m;
        q.e[slot] = 0;
        r.add_term(q, c);
    }
    return r;
}

Rat Poly::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < m.e[0]; ++i) v *= x;
        for (int i = 0; i < m.e[1]; ++i) v *= y;
        for (int i = 0; i < m.e[2]; ++i) v *= z;
        total += v;
    }
    return total;
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Poly Poly::primitive_integer() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / content());
}

bool euler_check(const Poly& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) return false;
    Poly lhs = Poly::variable(0) * f.partial(0) + Poly::variable(1) * f.partial(1) +
               Poly::variable(2) * f.partial(2);
    return lhs == f * Rat(f.degree());
}

Poly exact_div(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DegreeError("division by zero polynomial");
    Poly q;
    Poly p = f;
    const auto& gl = *g.terms().begin();
    while (!p.is_zero()) {
        const auto& pl = *p.terms().begin();
        if (!gl.first.divides(pl.first))
            throw ExactDivisionError("non-exact polynomial division");
        Monomial m = gl.first.quotient_under(pl.first);
        Rat c = pl.second / gl.second;
        q.add_term(m, c);
        p = p - Poly::term(m, c) * g;
    }
    return q;
}

std::string Poly::str(const VarSet& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool have_var = m.total() > 0;
        if (a != 1 || !have_var) {
            out << a.get_str();
            if (have_var) out << "*";
        }
        bool first_var = true;
        for (int s = 0; s < 3; ++s) {
            if (m.e[s] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << vars.names[static_cast<size_t>(s)];
            if (m.e[s] > 1) out << "^" << m.e[s];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
  public:
    Parser(std::string_view text, const VarSet& vars) : s_(text), vars_(vars) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc;
        bool neg = false;
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            int e = parse_uint();
            b = b.pow(e);
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int slot = vars_.slot_of(c);
            if (slot < 0) fail(std::string("unknown variable '") + c + "'");
            ++pos_;
            return Poly::variable(slot);
        }
        fail("expected variable, number, or '('");
    }

    Poly rational() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected digits");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Int n(std::string(s_.substr(start, pos_ - start)));
        Int d(1);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected denominator digits");
            d = Int(std::string(s_.substr(dstart, pos_ - dstart)));
            if (d == 0) fail("zero denominator literal");
        }
        Rat r(n, d);
        r.canonicalize();
        return Poly::constant(r);
    }

    int parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent digits");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    VarSet vars_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarSet& vars) { return Parser(text, vars).run(); }

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(int k, const Rat& c) {
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& g) const {
    std::vector<Rat> v(std::max(c_.size(), g.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) v[i] += g.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& g) const { return *this + (-g); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& g) const {
    if (c_.empty() || g.c_.empty()) return UniPoly();
    std::vector<Rat> v(c_.size() + g.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) v[i + j] += c_[i] * g.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int n) const {
    UniPoly r = UniPoly::constant(Rat(1));
    UniPoly b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

int UniPoly::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string UniPoly::str(char var) const {
    Poly p;
    for (size_t i = 0; i < c_.size(); ++i)
        p.add_term(Monomial{static_cast<int>(i), 0, 0}, c_[i]);
    VarSet vs = VarSet::single(var);
    return p.str(vs);
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw DegreeError("division by zero polynomial");
    if (f.is_zero()) return UniPoly();
    int df = f.degree(), dg = g.degree();
    if (df < dg) throw ExactDivisionError("non-exact univariate division");
    std::vector<Rat> rem = f.coeffs();
    std::vector<Rat> q(static_cast<size_t>(df - dg) + 1, Rat(0));
    const auto& gc = g.coeffs();
    for (int k = df - dg; k >= 0; --k) {
        Rat c = rem[static_cast<size_t>(k + dg)] / gc[static_cast<size_t>(dg)];
        q[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[static_cast<size_t>(k + j)] -= c * gc[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw ExactDivisionError("non-exact univariate division");
    return UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        // remainder of x by y
        std::vector<Rat> rem = x.coeffs();
        int dx = x.degree(), dy = y.degree();
        const auto& yc = y.coeffs();
        for (int k = dx - dy; k >= 0; --k) {
            Rat c = rem[static_cast<size_t>(k + dy)] / yc[static_cast<size_t>(dy)];
            if (c == 0) continue;
            for (int j = 0; j <= dy; ++j)
                rem[static_cast<size_t>(k + j)] -= c * yc[static_cast<size_t>(j)];
        }
        x = y;
        y = UniPoly(std::move(rem));
    }
    if (x.is_zero()) return x;
    return x * (Rat(1) / x.coeffs().back());  // monic
}

UniPoly parse_unipoly(std::string_view text, char var) {
    Poly p = parse_poly(text, VarSet::single(var));
    std::vector<Rat> v;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<size_t>(m.e[0]) >= v.size()) v.resize(static_cast<size_t>(m.e[0]) + 1, Rat(0));
        v[static_cast<size_t>(m.e[0])] = c;
    }
    return UniPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// BinaryForm
// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : n_(degree), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != degree + 1)
        throw DegreeError("binary form coefficient count mismatch");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rat>(static_cast<size_t>(degree) + 1, Rat(0)));
}

BinaryForm BinaryForm::from_unipoly(const UniPoly& u, int degree) {
    if (u.degree() > degree) throw DegreeError("homogenization degree below actual degree");
    BinaryForm r = zero(degree);
    for (int i = 0; i <= u.degree(); ++i) r.c_[static_cast<size_t>(i)] = u.coeff(i);
    return r;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

UniPoly BinaryForm::at_s1() const { return UniPoly(c_); }

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
    Rat acc(0);
    Rat spow(1);
    std::vector<Rat> sp(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        sp[c_.size() - 1 - i] = spow;
        spow *= s;
    }
    Rat tpow(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * sp[i] * tpow;
        tpow *= t;
    }
    return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& g) const {
    if (n_ != g.n_) throw DegreeError("binary form degree mismatch in addition");
    BinaryForm r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += g.c_[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& g) const { return *this + (g * Rat(-1)); }

BinaryForm BinaryForm::operator*(const BinaryForm& g) const {
    BinaryForm r = zero(n_ + g.n_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) r.c_[i + j] += c_[i] * g.c_[j];
    }
    return r;
}

BinaryForm BinaryForm::operator*(const Rat& c) const {
    BinaryForm r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

BinaryForm BinaryForm::pow(int n) const {
    BinaryForm r(0, {Rat(1)});
    BinaryForm b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

int BinaryForm::s_order() const {
    // s^(n-i) factor: smallest power of s present is n - (largest i with c_i != 0)
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != 0) return n_ - static_cast<int>(i);
    return -1;
}

int BinaryForm::t_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

BinaryForm BinaryForm::mul_s_power(int k) const {
    BinaryForm r = zero(n_ + k);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    return r;
}

BinaryForm BinaryForm::mul_t_power(int k) const {
    BinaryForm r = zero(n_ + k);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

BinaryForm BinaryForm::div_s_power(int k) const {
    if (!is_zero() && s_order() < k) throw ExactDivisionError("form not divisible by s^k");
    BinaryForm r = zero(n_ - k);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i];
    return r;
}

BinaryForm BinaryForm::div_t_power(int k) const {
    if (!is_zero() && t_order() < k) throw ExactDivisionError("form not divisible by t^k");
    BinaryForm r = zero(n_ - k);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i + static_cast<size_t>(k)];
    return r;
}

std::string BinaryForm::str(char sv, char tv) const {
    Poly p;
    for (size_t i = 0; i < c_.size(); ++i)
        p.add_term(Monomial{n_ - static_cast<int>(i), static_cast<int>(i), 0}, c_[i]);
    VarSet vs{{sv, tv, '?'}, 2};
    return p.str(vs);
}

namespace {

BinaryForm normalize_primitive(const BinaryForm& f) {
    if (f.is_zero()) return f;
    Poly tmp;
    for (int i = 0; i <= f.degree(); ++i) tmp.add_term(Monomial{i, 0, 0}, f.coeff(i));
    BinaryForm r = f * (Rat(1) / tmp.content());
    for (int i = 0; i <= r.degree(); ++i) {
        if (r.coeff(i) != 0) {
            if (r.coeff(i) < 0) r = r * Rat(-1);
            break;
        }
    }
    return r;
}

}  // namespace

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) return BinaryForm(0, {Rat(0)});
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    int sa = a.s_order(), ta = a.t_order();
    int sb = b.s_order(), tb = b.t_order();
    int sc = std::min(sa, sb), tc = std::min(ta, tb);
    UniPoly ua = a.div_t_power(ta).at_s1();  // poly in t of degree n - sa - ta
    UniPoly ub = b.div_t_power(tb).at_s1();
    UniPoly g = gcd(ua, ub);
    BinaryForm core = BinaryForm::from_unipoly(g, g.degree());
    return normalize_primitive(core.mul_s_power(sc).mul_t_power(tc));
}

bool coprime3(const BinaryForm& a, const BinaryForm& b, const BinaryForm& c) {
    return gcd(gcd(a, b), c).degree() == 0;
}

BinaryForm parse_binary_form(std::string_view text, char sv, char tv) {
    Poly p = parse_poly(text, VarSet{{sv, tv, '?'}, 2});
    if (!p.is_homogeneous()) throw DegreeError("binary form input is not homogeneous");
    if (p.is_zero()) return BinaryForm(0, {Rat(0)});
    int n = p.degree();
    BinaryForm r = BinaryForm::zero(n);
    std::vector<Rat> v(static_cast<size_t>(n) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) v[static_cast<size_t>(m.e[1])] = c;
    return BinaryForm(n, std::move(v));
}

BinaryForm compose3(const Poly& f, const BinaryForm& A, const BinaryForm& B,
                    const BinaryForm& C) {
    if (!f.is_homogeneous()) throw DegreeError("compose3 requires homogeneous input");
    if (A.degree() != B.degree() || B.degree() != C.degree())
        throw DegreeError("parametrization components must share a degree");
    if (f.is_zero()) return BinaryForm(0, {Rat(0)});
    int d = f.degree(), n = A.degree();
    // cache powers
    std::vector<BinaryForm> pa, pb, pc;
    auto powers = [d](const BinaryForm& g) {
        std::vector<BinaryForm> p;
        p.push_back(BinaryForm(0, {Rat(1)}));
        for (int i = 1; i <= d; ++i) p.push_back(p.back() * g);
        return p;
    };
    pa = powers(A);
    pb = powers(B);
    pc = powers(C);
    BinaryForm acc = BinaryForm::zero(d * n);
    for (const auto& [m, c] : f.terms()) {
        BinaryForm t = pa[static_cast<size_t>(m.e[0])] * pb[static_cast<size_t>(m.e[1])] *
                       pc[static_cast<size_t>(m.e[2])];
        acc = acc + t * c;
    }
    return acc;
}

}  // namespace curvelab
