#pragma once

#include <map>
#include <vector>

#include "braidlift/cyc.hpp"

namespace braidlift {

/// Multivariate polynomial in the deformation parameters l1..lm over Q(zeta_N).
/// Exponent vectors are stored dense with trailing zeros trimmed; the zero
/// polynomial is the empty term map.
class Coefficient {
  public:
    using Exps = std::vector<uint32_t>;

    explicit Coefficient(int order = 1) : order_(order) {}
    static Coefficient scalar(const Cyc& c);
    static Coefficient one(int order) { return scalar(Cyc::one(order)); }
    /// The parameter l<idx>, idx 1-based.
    static Coefficient param(int order, int idx);

    int order() const { return order_; }
    bool is_zero() const { return t_.empty(); }
    /// True when no parameter occurs; then *out is the constant value.
    bool is_scalar(Cyc* out = nullptr) const;
    /// Degree in the parameters (0 for scalars and for 0).
    int param_degree() const;
    int max_param_index() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

    Coefficient& scale(const Cyc& c);
    Coefficient scaled(const Cyc& c) const;

    bool operator==(const Coefficient& o) const { return order_ == o.order_ && t_ == o.t_; }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    /// Substitute values for the parameters (values[i] stands for l<i+1>;
    /// parameters beyond the vector are substituted by 0).
    Coefficient substitute(const std::vector<Cyc>& values) const;

    const std::map<Exps, Cyc>& terms() const { return t_; }
    void add_term(const Exps& e, const Cyc& v);

    std::string str(const std::string& qvar = "q", const std::string& lprefix = "l") const;

  private:
    int order_;
    std::map<Exps, Cyc> t_;
};

}  // namespace braidlift
