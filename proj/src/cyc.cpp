#include "braidlift/cyc.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace braidlift {

Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division of integer polynomials; divisor must be monic here.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size()) {
        ztrim(num);
        if (num.size() < den.size()) break;
        Int c = num.back();
        size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    ztrim(num);
    if (!num.empty()) throw std::runtime_error("inexact polynomial division");
    ztrim(quot);
    return quot;
}

std::map<int, ZPoly> g_phi_cache;
std::recursive_mutex g_phi_mutex;

}  // namespace

const ZPoly& cyclotomic_poly(int n) {
    if (n < 1) throw std::runtime_error("cyclotomic_poly: n must be positive");
    std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    ZPoly result;
    if (n == 1) {
        result = {Int(-1), Int(1)};
    } else {
        ZPoly num(n + 1, Int(0));
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = zdiv_exact(std::move(num), cyclotomic_poly(d));
        result = std::move(num);
    }
    return g_phi_cache.emplace(n, std::move(result)).first->second;
}

ZPoly gauss_binom_poly(int n, int k) {
    if (k < 0 || k > n) throw std::runtime_error("gauss_binom_poly: need 0 <= k <= n");
    // (n,k)_t = (n-1,k-1)_t + t^k (n-1,k)_t
    std::vector<ZPoly> row(1, ZPoly{Int(1)});  // n = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<ZPoly> next(m + 1);
        next[0] = ZPoly{Int(1)};
        next[m] = ZPoly{Int(1)};
        for (int j = 1; j < m; ++j) {
            ZPoly a = row[j - 1];
            const ZPoly& b = row[j];
            ZPoly shifted(j, Int(0));
            shifted.insert(shifted.end(), b.begin(), b.end());
            if (a.size() < shifted.size()) a.resize(shifted.size(), Int(0));
            for (size_t i = 0; i < shifted.size(); ++i) a[i] += shifted[i];
            ztrim(a);
            next[j] = std::move(a);
        }
        row = std::move(next);
    }
    return row[k];
}

// ---------------------------------------------------------------------------
// Cyc

Cyc Cyc::zero(int order) {
    Cyc c;
    c.order_ = order;
    c.c_.assign(euler_phi(order), Rat(0));
    return c;
}

Cyc Cyc::one(int order) { return from_rat(order, Rat(1)); }

Cyc Cyc::from_rat(int order, const Rat& r) {
    Cyc c = zero(order);
    if (c.c_.empty()) throw std::runtime_error("cyclotomic field of order < 1");
    c.c_[0] = r;
    return c;
}

Cyc Cyc::zeta(int order, long e) {
    long n = order;
    long k = ((e % n) + n) % n;
    std::vector<Rat> raw(k + 1, Rat(0));
    raw[k] = 1;
    Cyc c = zero(order);
    c.reduce_(raw);
    c.c_ = std::move(raw);
    return c;
}

void Cyc::reduce_(std::vector<Rat>& raw) const {
    const ZPoly& phi = cyclotomic_poly(order_);
    size_t deg = phi.size() - 1;  // = phi(order)
    for (size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        Rat c = raw[i];
        raw[i] = 0;
        for (size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rat(phi[j]);
    }
    raw.resize(deg, Rat(0));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyc::is_rational(Rat* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_.empty() ? Rat(0) : c_[0];
    return true;
}

void Cyc::check_same_order(const Cyc& a, const Cyc& b) {
    if (a.order_ != b.order_)
        throw std::runtime_error("cyclotomic order mismatch: " + std::to_string(a.order_) +
                                 " vs " + std::to_string(b.order_));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    check_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    check_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    Cyc::check_same_order(a, b);
    size_t n = a.c_.size();
    std::vector<Rat> raw(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyc r = Cyc::zero(a.order_);
    r.reduce_(raw);
    r.c_ = std::move(raw);
    return r;
}

namespace {

using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// division with remainder in Q[x]
void qdivmod(QPoly num, const QPoly& den, QPoly& quot, QPoly& rem) {
    qtrim(num);
    quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] += c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        qtrim(num);
    }
    rem = std::move(num);
}

QPoly qsubmul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly r = a;
    if (!q.empty() && !b.empty()) {
        if (r.size() < q.size() + b.size() - 1) r.resize(q.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    }
    qtrim(r);
    return r;
}

}  // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero in Q(zeta)");
    // extended Euclid: u*a + v*Phi = gcd = const, so a^{-1} = u/gcd
    const ZPoly& phi_z = cyclotomic_poly(order_);
    QPoly r0(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rat(phi_z[i]);
    QPoly r1(c_.begin(), c_.end());
    qtrim(r1);
    QPoly u0{}, u1{Rat(1)};  // coefficients of a
    while (true) {
        QPoly q, rem;
        qdivmod(r0, r1, q, rem);
        if (rem.empty()) break;
        QPoly u2 = qsubmul(u0, q, u1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.size() != 1)
        throw std::runtime_error("inverse: gcd with Phi_N not constant (Phi_N reducible?)");
    Cyc res = Cyc::zero(order_);
    std::vector<Rat> raw = u1;
    raw.resize(std::max(raw.size(), res.c_.size()), Rat(0));
    res.reduce_(raw);
    res.c_ = std::move(raw);
    Rat g = r1[0];
    for (auto& x : res.c_) x /= g;
    return res;
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc base = *this;
    Cyc acc = Cyc::one(order_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Cyc::root_of_unity_order() const {
    if (is_zero()) return 0;
    Cyc p = *this;
    for (int k = 1; k <= 2 * order_; ++k) {
        if (p.is_one()) return k;
        p = p * *this;
    }
    return 0;
}

std::string Cyc::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        bool neg = a < 0;
        Rat mag = neg ? Rat(-a) : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << rat_str(mag);
        } else {
            if (!unit) os << rat_str(mag) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

size_t Cyc::hash() const {
    size_t h = std::hash<int>()(order_);
    for (const auto& x : c_) {
        h = h * 1000003u + std::hash<double>()(x.get_d());
    }
    return h;
}

Cyc eval_zpoly(const ZPoly& p, const Cyc& q) {
    Cyc acc = Cyc::zero(q.order());
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * q;
        acc += Cyc::from_rat(q.order(), Rat(p[i]));
    }
    return acc;
}

Cyc gaussian_binomial(int n, int k, const Cyc& q) {
    if (k < 0 || k > n) throw std::runtime_error("gaussian_binomial: need 0 <= k <= n");
    return eval_zpoly(gauss_binom_poly(n, k), q);
}

}  // namespace braidlift
