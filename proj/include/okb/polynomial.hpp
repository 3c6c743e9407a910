#pragma once

#include "okb/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace okb {

using Exponents = std::vector<unsigned>;

/**
 * @brief Multivariate polynomial with exact rational coefficients.
 *
 * Terms are kept in a std::map keyed by exponent vector, so iteration order
 * is deterministic. Zero coefficients are never stored.
 */
class Polynomial {
public:
    explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

    static Polynomial constant(std::size_t dim, const Rat& c) {
        Polynomial p(dim);
        p.add_term(Exponents(dim, 0), c);
        return p;
    }

    /// The coordinate function x_i (0-based).
    static Polynomial variable(std::size_t dim, std::size_t i) {
        Exponents e(dim, 0);
        e.at(i) = 1;
        Polynomial p(dim);
        p.add_term(e, Rat(1));
        return p;
    }

    static Polynomial monomial(const Exponents& e, const Rat& c = Rat(1)) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    /// c + coeffs·x
    static Polynomial affine(const RatVec& coeffs, const Rat& c) {
        Polynomial p = constant(coeffs.size(), c);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    std::size_t dim() const { return dim_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (e.size() != dim_) throw Error(ErrorKind::InvalidArgument, "exponent length does not match polynomial dimension");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
    friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_dim(b);
        Polynomial out(a.dim_);
        Exponents e(a.dim_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned n) const {
        Polynomial out = constant(dim_, Rat(1));
        for (unsigned i = 0; i < n; ++i) out = out * *this;
        return out;
    }

    Rat evaluate(const RatVec& x) const {
        if (x.size() != dim_) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
        Rat sum = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < dim_; ++i) t *= okb::pow(x[i], e[i]);
            sum += t;
        }
        return sum;
    }

    double evaluate(std::span<const double> x) const {
        double sum = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c.get_d();
            for (std::size_t i = 0; i < dim_; ++i) {
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            }
            sum += t;
        }
        return sum;
    }

    /**
     * @brief Substitutes x = origin + M y.
     *
     * M has dim() rows and `cols` columns (row-major), the result lives in
     * dimension `cols`.
     */
    Polynomial pullback(const RatVec& origin, const std::vector<RatVec>& M, std::size_t cols) const {
        if (origin.size() != dim_ || M.size() != dim_)
            throw Error(ErrorKind::InvalidArgument, "affine map does not match polynomial dimension");
        std::vector<std::vector<Polynomial>> powers(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            powers[i].push_back(constant(cols, Rat(1)));
            powers[i].push_back(affine(M[i], origin[i]));
        }
        Polynomial out(cols);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(cols, c);
            for (std::size_t i = 0; i < dim_; ++i) {
                while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
                if (e[i] > 0) t = t * powers[i][e[i]];
            }
            out += t;
        }
        return out;
    }

private:
    void check_dim(const Polynomial& o) const {
        if (o.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "polynomial dimension mismatch");
    }

    std::size_t dim_;
    std::map<Exponents, Rat> terms_;
};

} // namespace okb
