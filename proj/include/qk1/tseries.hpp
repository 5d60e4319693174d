#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "qk1/display.hpp"
#include "qk1/errors.hpp"
#include "qk1/rational.hpp"

namespace qk1
{

using Monomial = std::vector<int>;

// Degree ascending, then lexicographically descending (t0^2*t2 before t0*t1^2).
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) {
            return da < db;
        }
        return a > b;
    }
};

inline int total_degree(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0); }

// Ideal order of a series: lowest total degree present, or infinite for 0.
struct IdealOrder {
    static constexpr int infinite = std::numeric_limits<int>::max();
    int value = infinite;
    bool is_infinite() const noexcept { return value == infinite; }
    friend auto operator<=>(const IdealOrder &, const IdealOrder &) = default;
};

// Power series in named variables truncated at total degree `cutoff`,
// with coefficients in a ring R.
template <typename R>
class TSeries
{
  public:
    using coeff_type = R;
    using Names = std::shared_ptr<const std::vector<std::string>>;

    TSeries() = default;
    TSeries(Names names, int cutoff) : names_(std::move(names)), cutoff_(cutoff) {}

    static Names make_names(std::vector<std::string> v)
    {
        return std::make_shared<const std::vector<std::string>>(std::move(v));
    }
    static Names t_names(int count)
    {
        std::vector<std::string> v;
        for (int i = 0; i < count; ++i) {
            v.push_back("t" + std::to_string(i));
        }
        return make_names(std::move(v));
    }

    static TSeries constant(Names names, int cutoff, R c)
    {
        TSeries s(std::move(names), cutoff);
        s.add(Monomial(s.num_vars(), 0), std::move(c));
        return s;
    }
    static TSeries variable(Names names, int cutoff, int index, R c = R(1))
    {
        TSeries s(std::move(names), cutoff);
        Monomial m(s.num_vars(), 0);
        m[static_cast<std::size_t>(index)] = 1;
        s.add(std::move(m), std::move(c));
        return s;
    }

    const Names &names() const noexcept { return names_; }
    int num_vars() const noexcept { return names_ ? static_cast<int>(names_->size()) : 0; }
    int cutoff() const noexcept { return cutoff_; }
    const std::map<Monomial, R, MonomialOrder> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Strict mode refuses to combine series of different cutoffs.
    TSeries &strict(bool on = true)
    {
        strict_ = on;
        return *this;
    }

    void add(Monomial m, R c)
    {
        if (qk1::is_zero(c) || total_degree(m) > cutoff_) {
            return;
        }
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (qk1::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    R coefficient(const Monomial &m) const
    {
        if (static_cast<int>(m.size()) != num_vars()) {
            throw Error("multi-index has wrong length");
        }
        if (total_degree(m) > cutoff_) {
            throw IndexBeyondCutoff("degree " + std::to_string(total_degree(m)) + " > cutoff " +
                                    std::to_string(cutoff_));
        }
        auto it = terms_.find(m);
        return it == terms_.end() ? R(0) : it->second;
    }
    R constant_term() const
    {
        auto it = terms_.find(Monomial(num_vars(), 0));
        return it == terms_.end() ? R(0) : it->second;
    }

    IdealOrder ideal_order() const
    {
        return terms_.empty() ? IdealOrder{} : IdealOrder{total_degree(terms_.begin()->first)};
    }

    TSeries truncated(int cutoff) const
    {
        TSeries r(names_, std::min(cutoff, cutoff_));
        for (const auto &[m, c] : terms_) {
            r.add(m, c);
        }
        return r;
    }

    // Same terms, larger cutoff (exact only when the caller knows the tail vanishes).
    TSeries with_cutoff(int cutoff) const
    {
        TSeries r(names_, cutoff);
        for (const auto &[m, c] : terms_) {
            r.add(m, c);
        }
        return r;
    }

    template <typename Fn>
    auto map(Fn &&fn) const -> TSeries<std::invoke_result_t<Fn, const R &>>
    {
        TSeries<std::invoke_result_t<Fn, const R &>> r(names_, cutoff_);
        for (const auto &[m, c] : terms_) {
            r.add(m, fn(c));
        }
        return r;
    }

    TSeries &operator+=(const TSeries &o)
    {
        const int d = combine_cutoff(o);
        if (d < cutoff_) {
            *this = truncated(d);
        }
        for (const auto &[m, c] : o.terms_) {
            add(m, c);
        }
        return *this;
    }
    TSeries &operator-=(const TSeries &o) { return *this += -o; }

    friend TSeries operator+(TSeries a, const TSeries &b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries &b) { return a -= b; }
    friend TSeries operator-(TSeries a)
    {
        for (auto &[m, c] : a.terms_) {
            c = -c;
        }
        return a;
    }

    friend TSeries operator*(const TSeries &a, const TSeries &b)
    {
        TSeries r(a.names_ ? a.names_ : b.names_, a.combine_cutoff(b));
        r.strict_ = a.strict_ || b.strict_;
        for (const auto &[ma, ca] : a.terms_) {
            const int da = total_degree(ma);
            if (da > r.cutoff_) {
                break;
            }
            for (const auto &[mb, cb] : b.terms_) {
                if (da + total_degree(mb) > r.cutoff_) {
                    break;
                }
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = ma[i] + mb[i];
                }
                r.add(std::move(m), ca * cb);
            }
        }
        return r;
    }
    TSeries &operator*=(const TSeries &o) { return *this = *this * o; }

    TSeries scaled(const R &s) const
    {
        TSeries r(names_, cutoff_);
        r.strict_ = strict_;
        for (const auto &[m, c] : terms_) {
            r.add(m, c * s);
        }
        return r;
    }

    friend bool operator==(const TSeries &a, const TSeries &b)
    {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

    // Formal partial derivative; the cutoff drops by one.
    TSeries partial_derivative(int index) const
    {
        TSeries r(names_, cutoff_ - 1);
        for (const auto &[m, c] : terms_) {
            const int e = m[static_cast<std::size_t>(index)];
            if (e == 0) {
                continue;
            }
            Monomial k = m;
            --k[static_cast<std::size_t>(index)];
            r.add(std::move(k), c * R(e));
        }
        return r;
    }

    // Substitute 0 for variable `index`.
    TSeries without(int index) const
    {
        TSeries r(names_, cutoff_);
        for (const auto &[m, c] : terms_) {
            if (m[static_cast<std::size_t>(index)] == 0) {
                r.add(m, c);
            }
        }
        return r;
    }

  private:
    int combine_cutoff(const TSeries &o) const
    {
        if (cutoff_ != o.cutoff_ && (strict_ || o.strict_)) {
            throw IncompatibleCutoff(std::to_string(cutoff_) + " vs " + std::to_string(o.cutoff_));
        }
        return std::min(cutoff_, o.cutoff_);
    }

    Names names_;
    int cutoff_ = 0;
    bool strict_ = false;
    std::map<Monomial, R, MonomialOrder> terms_;
};

template <typename R>
bool is_zero(const TSeries<R> &s)
{
    return s.is_zero();
}

template <typename R>
TSeries<R> pow(const TSeries<R> &s, int k)
{
    TSeries<R> r = TSeries<R>::constant(s.names(), s.cutoff(), R(1));
    for (int i = 0; i < k; ++i) {
        r *= s;
    }
    return r;
}

// sum_{k<=D} s^k/k!
template <typename R>
TSeries<R> series_exp(const TSeries<R> &s)
{
    if (!is_zero(s.constant_term())) {
        throw NonzeroConstantTerm("exp needs a series without constant term");
    }
    TSeries<R> term = TSeries<R>::constant(s.names(), s.cutoff(), R(1));
    TSeries<R> sum = term;
    for (int k = 1; k <= s.cutoff(); ++k) {
        term = (term * s).scaled(R(Rational(1, k)));
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum;
}

// -sum_{k<=D} (1-s)^k/k
template <typename R>
TSeries<R> series_log(const TSeries<R> &s)
{
    if (!(s.constant_term() == R(1))) {
        throw ConstantTermNotOne("log needs constant term 1");
    }
    const TSeries<R> u = TSeries<R>::constant(s.names(), s.cutoff(), R(1)) - s;
    TSeries<R> power = u;
    TSeries<R> sum(s.names(), s.cutoff());
    for (int k = 1; k <= s.cutoff() && !power.is_zero(); ++k) {
        sum -= power.scaled(R(Rational(1, k)));
        power *= u;
    }
    return sum;
}

// 1/s for s with invertible constant term.
template <typename R>
TSeries<R> series_inverse(const TSeries<R> &s)
{
    const R c = s.constant_term();
    const R ci = R(1) / c;
    const TSeries<R> one = TSeries<R>::constant(s.names(), s.cutoff(), R(1));
    const TSeries<R> u = one - s.scaled(ci);
    TSeries<R> power = one;
    TSeries<R> sum = one;
    for (int k = 1; k <= s.cutoff(); ++k) {
        power *= u;
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum.scaled(ci);
}

template <typename R>
struct FixedPointResult {
    TSeries<R> value;
    std::vector<TSeries<R>> iterates; // tau_0 = seed, tau_1, ...
};

// Iterates phi from seed until stationary. The ideal order of successive
// differences must strictly increase; otherwise NoContraction is thrown.
template <typename R, typename Phi>
FixedPointResult<R> fixed_point(Phi &&phi, TSeries<R> seed, int cutoff)
{
    FixedPointResult<R> out;
    TSeries<R> cur = seed.truncated(cutoff);
    out.iterates.push_back(cur);
    IdealOrder last{-1};
    for (int step = 0; step <= cutoff + 2; ++step) {
        TSeries<R> next = phi(cur).truncated(cutoff);
        const IdealOrder ord = (next - cur).ideal_order();
        out.iterates.push_back(next);
        if (ord.is_infinite()) {
            out.value = std::move(next);
            return out;
        }
        if (ord <= last) {
            throw NoContraction("ideal order of successive differences did not increase (" +
                                std::to_string(last.value) + " -> " + std::to_string(ord.value) + ")");
        }
        last = ord;
        cur = std::move(next);
    }
    throw NoContraction("no fixed point within cutoff + 2 iterations");
}

template <typename R>
std::string coeff_string(const R &c)
{
    using qk1::to_string;
    return to_string(c);
}

// "t0 + t0*t1 + 1/2*t0^2*t2 + t0*t1^2"
template <typename R>
std::string to_string(const TSeries<R> &s)
{
    if (s.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : s.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += (*s.names())[i];
            if (m[i] > 1) {
                mono += '^' + std::to_string(m[i]);
            }
        }
        std::string cs = coeff_string(c);
        bool neg = false;
        const bool simple = cs.find_first_of("+*()", 1) == std::string::npos &&
                            cs.find(" - ") == std::string::npos;
        if (simple && !cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (mono.empty()) {
            body = simple ? cs : "(" + cs + ")";
        } else if (cs == "1") {
            body = mono;
        } else {
            body = (simple ? cs : "(" + cs + ")") + "*" + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
        first = false;
    }
    return out;
}

} // namespace qk1
