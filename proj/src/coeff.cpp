#include "braidlift/coeff.hpp"

#include <sstream>
#include <stdexcept>

namespace braidlift {

namespace {

void trim(Coefficient::Exps& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Coefficient Coefficient::scalar(const Cyc& c) {
    Coefficient r(c.order());
    if (!c.is_zero()) r.t_.emplace(Exps{}, c);
    return r;
}

Coefficient Coefficient::param(int order, int idx) {
    if (idx < 1) throw std::runtime_error("parameter index must be >= 1");
    Coefficient r(order);
    Exps e(idx, 0);
    e[idx - 1] = 1;
    r.t_.emplace(std::move(e), Cyc::one(order));
    return r;
}

bool Coefficient::is_scalar(Cyc* out) const {
    if (t_.empty()) {
        if (out) *out = Cyc::zero(order_);
        return true;
    }
    if (t_.size() == 1 && t_.begin()->first.empty()) {
        if (out) *out = t_.begin()->second;
        return true;
    }
    return false;
}

int Coefficient::param_degree() const {
    int d = 0;
    for (const auto& [e, v] : t_) {
        int s = 0;
        for (auto x : e) s += (int)x;
        d = std::max(d, s);
    }
    return d;
}

int Coefficient::max_param_index() const {
    int m = 0;
    for (const auto& [e, v] : t_) m = std::max(m, (int)e.size());
    return m;
}

Coefficient Coefficient::operator-() const {
    Coefficient r(order_);
    for (const auto& [e, v] : t_) r.t_.emplace(e, -v);
    return r;
}

void Coefficient::add_term(const Exps& e0, const Cyc& v) {
    if (v.is_zero()) return;
    Exps e = e0;
    trim(e);
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(std::move(e), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (!o.t_.empty() && !t_.empty() && order_ != o.order_)
        throw std::runtime_error("coefficient order mismatch");
    if (t_.empty()) order_ = o.order_;
    for (const auto& [e, v] : o.t_) add_term(e, v);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    if (!o.t_.empty() && !t_.empty() && order_ != o.order_)
        throw std::runtime_error("coefficient order mismatch");
    if (t_.empty()) order_ = o.order_;
    for (const auto& [e, v] : o.t_) add_term(e, -v);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient r(a.order_);
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.order_ != b.order_) throw std::runtime_error("coefficient order mismatch");
    for (const auto& [ea, va] : a.t_) {
        for (const auto& [eb, vb] : b.t_) {
            Coefficient::Exps e(std::max(ea.size(), eb.size()), 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, va * vb);
        }
    }
    return r;
}

Coefficient& Coefficient::scale(const Cyc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, v] : t_) v = v * c;
    return *this;
}

Coefficient Coefficient::scaled(const Cyc& c) const {
    Coefficient r = *this;
    r.scale(c);
    return r;
}

Coefficient Coefficient::substitute(const std::vector<Cyc>& values) const {
    Coefficient r(order_);
    for (const auto& [e, v] : t_) {
        Cyc c = v;
        bool dead = false;
        for (size_t i = 0; i < e.size() && !dead; ++i) {
            if (e[i] == 0) continue;
            Cyc val = i < values.size() ? values[i] : Cyc::zero(order_);
            if (val.is_zero()) {
                dead = true;
            } else {
                c = c * val.pow(e[i]);
            }
        }
        if (!dead) r.add_term(Exps{}, c);
    }
    return r;
}

std::string Coefficient::str(const std::string& qvar, const std::string& lprefix) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : t_) {
        std::string cs = v.str(qvar);
        bool neg = false;
        if (!cs.empty() && cs[0] == '-') {
            // pull a leading minus out only for single-term cyclotomic parts
            if (cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
        }
        std::string lam;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!lam.empty()) lam += "*";
            lam += lprefix + std::to_string(i + 1);
            if (e[i] > 1) lam += "^" + std::to_string(e[i]);
        }
        bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        std::string body;
        if (lam.empty()) {
            body = composite ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            body = lam;
        } else {
            body = (composite ? "(" + cs + ")" : cs) + "*" + lam;
        }
        if (first) {
            os << (neg ? "-" : "") << body;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
    }
    return os.str();
}

}  // namespace braidlift
