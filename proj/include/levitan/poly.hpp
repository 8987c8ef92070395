#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "levitan/rational.hpp"

namespace levitan {

// Sparse multivariate polynomial over the Gaussian rationals with a fixed
// variable count. Terms are kept in graded-lex order of the exponent
// vectors, which makes iteration (and hence serialization) canonical.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const {
            unsigned da = 0, db = 0;
            for (unsigned e : a) da += e;
            for (unsigned e : b) db += e;
            if (da != db) return da < db;
            return a < b;
        }
    };

    using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const GaussianRational& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i, unsigned exp = 1) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e[i] = exp;
        p.add_term(e, GaussianRational(1));
        return p;
    }
    static Polynomial monomial(std::size_t nvars, Exponents e, const GaussianRational& c) {
        Polynomial p(nvars);
        p.add_term(std::move(e), c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(Exponents(nvars_, 0)); }

    void add_term(Exponents e, const GaussianRational& c) {
        if (c.is_zero()) return;
        if (e.size() != nvars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (adopt_arity(o)) return *this;
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (adopt_arity(o)) return *this;
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_adaptive_zero()) return Polynomial(b.nvars_);
        if (b.is_adaptive_zero()) return Polynomial(a.nvars_);
        a.check_arity(b);
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    friend Polynomial operator*(Polynomial p, const GaussianRational& c) {
        if (c.is_zero()) return Polynomial(p.nvars_);
        for (auto& [e, x] : p.terms_) x *= c;
        return p;
    }
    friend Polynomial operator*(const GaussianRational& c, Polynomial p) { return std::move(p) * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial out = constant(nvars_, GaussianRational(1));
        for (unsigned k = 0; k < e; ++k) out = out * *this;
        return out;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            out.add_term(std::move(d), c * GaussianRational(Rational(static_cast<long>(e[var]))));
        }
        return out;
    }

    // Substitute variable i by images[i]; all images share a common arity,
    // which becomes the arity of the result.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("substitute: image count mismatch");
        const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
        Polynomial out(out_vars);
        std::map<std::pair<std::size_t, unsigned>, Polynomial> pow_cache;
        auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
            auto key = std::make_pair(var, e);
            auto it = pow_cache.find(key);
            if (it != pow_cache.end()) return it->second;
            return pow_cache.emplace(key, images[var].pow(e)).first->second;
        };
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] > 0) term = term * power(i, e[i]);
            out += term;
        }
        return out;
    }

    template <class F>
    Polynomial map_coefficients(F&& f) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    // Remap variable i of this polynomial to variable perm[i] of a polynomial
    // with new_arity variables.
    Polynomial remap_variables(const std::vector<std::size_t>& perm, std::size_t new_arity) const {
        if (perm.size() != nvars_) throw std::invalid_argument("remap_variables: size mismatch");
        Polynomial out(new_arity);
        for (const auto& [e, c] : terms_) {
            Exponents ne(new_arity, 0);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (perm[i] >= new_arity) throw std::invalid_argument("remap_variables: bad target");
                ne[perm[i]] += e[i];
            }
            out.add_term(std::move(ne), c);
        }
        return out;
    }

    bool is_homogeneous(const std::vector<unsigned>& weights, unsigned degree) const {
        for (const auto& [e, c] : terms_) {
            unsigned d = 0;
            for (std::size_t i = 0; i < nvars_; ++i) d += e[i] * weights[i];
            if (d != degree) return false;
        }
        return true;
    }

    // Debug form with generic variable names x0, x1, ...
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*x" << i;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    // A default-constructed polynomial is the zero of any arity; it adopts
    // the arity of its first nonzero peer so that generic scalar code can use
    // S() as the additive identity.
    bool is_adaptive_zero() const { return nvars_ == 0 && terms_.empty(); }
    bool adopt_arity(const Polynomial& o) {
        if (is_adaptive_zero() && o.nvars_ != 0) {
            nvars_ = o.nvars_;
            return false;
        }
        return o.is_adaptive_zero();
    }
    void check_arity(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

}  // namespace levitan
