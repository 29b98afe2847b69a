#include "treepat/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace treepat {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
}

Polynomial::Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial{0, 1}; }

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Int Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

const Int& Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Polynomial::content() const {
    Int g = 0;
    for (const Int& c : c_) g = int_gcd(g, c);
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& c : c_) out.push_back(c / g);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<Int> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Int(i));
    return Polynomial(std::move(out));
}

Rat Polynomial::eval(const Rat& at) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + Rat(*it);
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& c : c_) out.push_back(-c);
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.str();
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    return os.str();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over the integers.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
    int db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading();
        std::vector<Int> scaled(a.coeffs());
        for (Int& c : scaled) c *= lb;
        Polynomial sa{std::move(scaled)};
        std::vector<Int> sub(static_cast<size_t>(db + shift) + 1);
        for (int i = 0; i <= db; ++i) sub[static_cast<size_t>(i + shift)] = la * b.coeff(i);
        a = sa - Polynomial(std::move(sub));
    }
    return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Polynomial p = a.primitive_part();
    Polynomial q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        Polynomial r = pseudo_rem(p, q).primitive_part();
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("inexact polynomial division");
    // long division over Q, then check integrality of the quotient
    std::vector<Rat> rem;
    rem.reserve(a.coeffs().size());
    for (const Int& c : a.coeffs()) rem.emplace_back(c);
    Rat lb{b.leading()};
    std::vector<Rat> quot(static_cast<size_t>(da - db) + 1);
    for (int sh = da - db; sh >= 0; --sh) {
        Rat f = rem[static_cast<size_t>(sh + db)] / lb;
        quot[static_cast<size_t>(sh)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(sh + i)] -= f * Rat(b.coeff(i));
    }
    for (const Rat& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    std::vector<Int> out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1) throw std::domain_error("inexact polynomial division");
        out[i] = numerator(quot[i]);
    }
    return Polynomial(std::move(out));
}

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= Int(n - i + 1);
        r /= Int(i);
    }
    return r;
}

RationalGF::RationalGF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial{1};
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
        std::vector<Int> nc(num_.coeffs()), dc(den_.coeffs());
        for (Int& v : nc) v /= c;
        for (Int& v : dc) v /= c;
        num_ = Polynomial(std::move(nc));
        den_ = Polynomial(std::move(dc));
    }
    // sign: lowest nonzero denominator coefficient positive
    for (const Int& v : den_.coeffs()) {
        if (v == 0) continue;
        if (v < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        break;
    }
}

RationalGF RationalGF::constant(Int c) { return RationalGF(Polynomial::constant(std::move(c)), Polynomial{1}); }

RationalGF RationalGF::operator-() const {
    RationalGF r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalGF(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<Int> RationalGF::series(int nmax) const {
    if (nmax < 0) throw std::domain_error("series length must be nonnegative");
    if (den_.coeff(0) == 0) throw std::domain_error("series undefined: denominator vanishes at 0");
    Rat d0{den_.coeff(0)};
    std::vector<Rat> s(static_cast<size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) {
        Rat acc{num_.coeff(n)};
        int dmax = std::min(n, den_.degree());
        for (int i = 1; i <= dmax; ++i) acc -= Rat(den_.coeff(i)) * s[static_cast<size_t>(n - i)];
        s[static_cast<size_t>(n)] = acc / d0;
    }
    std::vector<Int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (denominator(s[i]) != 1) throw std::domain_error("series has non-integer coefficients");
        out[i] = numerator(s[i]);
    }
    return out;
}

namespace {

// Sturm-chain machinery over Q for locating the smallest positive real root.
using RatPoly = std::vector<Rat>;  // ascending, trimmed

RatPoly to_ratpoly(const Polynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) out.emplace_back(c);
    return out;
}

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(Int(i)));
    return out;
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rp_trim(a);
    }
    return a;
}

Rat rp_eval(const RatPoly& p, const Rat& at) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, rp_derivative(p)};
    while (chain.back().size() > 1) {
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& at) {
    int v = 0, prev = 0;
    for (const RatPoly& p : chain) {
        Rat e = rp_eval(p, at);
        int s = e > 0 ? 1 : (e < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

double RationalGF::growth_rate() const {
    if (den_.degree() <= 0) return 0.0;
    // multiple roots would hide sign changes, so isolate on the squarefree part
    Polynomial sf = divide_exact(den_, poly_gcd(den_, den_.derivative()));
    RatPoly p = to_ratpoly(sf);
    auto chain = sturm_chain(p);

    // Cauchy bound: every root has |r| < 1 + max|a_i|/|a_d|
    Rat lead = p.back();
    if (lead < 0) lead = -lead;
    Rat maxc = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rat m = p[i] < 0 ? Rat(-p[i]) : p[i];
        if (m > maxc) maxc = m;
    }
    Rat hi = 1 + maxc / lead;
    Rat lo = 0;

    auto count = [&](const Rat& a, const Rat& b) { return sign_variations(chain, a) - sign_variations(chain, b); };
    if (count(lo, hi) <= 0) throw std::domain_error("growth_rate: denominator has no positive real root");

    const Rat tol{Int(1), Int(1000000000000LL)};  // 1e-12
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (rp_eval(p, mid) == 0) {
            if (count(lo, mid) == 1) return 1.0 / static_cast<double>(mid);
            hi = mid;
            continue;
        }
        if (count(lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 1.0 / static_cast<double>((lo + hi) / 2);
}

std::string RationalGF::str() const {
    if (num_.is_zero()) return "0";
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace treepat
