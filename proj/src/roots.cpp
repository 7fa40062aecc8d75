#include "ffr/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffr {

namespace {

// Scale by a positive rational so the coefficients become coprime integers.
// Positive scaling keeps every sign pattern of the chain intact.
ExactPolynomial primitive_scale(const ExactPolynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& c : p.coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer num_gcd(0);
    for (const auto& c : p.coeffs) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return Rational(den_lcm) / Rational(num_gcd) * p;
}

int sign_at_pos_inf(const ExactPolynomial& p) {
    if (p.is_zero()) return 0;
    return sgn(p.lead());
}

int sign_at_neg_inf(const ExactPolynomial& p) {
    if (p.is_zero()) return 0;
    const int s = sgn(p.lead());
    return p.degree() % 2 == 0 ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

SturmChain::SturmChain(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    sf_ = squarefree_part(p);
    chain_.push_back(primitive_scale(sf_));
    if (sf_.degree() == 0) return;
    chain_.push_back(primitive_scale(derivative(chain_[0])));
    while (chain_.back().degree() > 0) {
        const ExactPolynomial rem =
            divide(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (rem.is_zero()) break;  // cannot happen for a squarefree start
        chain_.push_back(primitive_scale(Rational(-1) * rem));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& f : chain_) signs.push_back(sgn(evaluate(f, x)));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& f : chain_) signs.push_back(sign_at_pos_inf(f));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& f : chain_) signs.push_back(sign_at_neg_inf(f));
    return count_variations(signs);
}

int SturmChain::count(const std::optional<Rational>& lo,
                      const std::optional<Rational>& hi) const {
    if (lo && hi && *lo >= *hi) return 0;
    const int vlo = lo ? variations_at(*lo) : variations_at_neg_inf();
    const int vhi = hi ? variations_at(*hi) : variations_at_pos_inf();
    return vlo - vhi;
}

int SturmChain::count_all() const { return count(std::nullopt, std::nullopt); }

int real_root_count(const ExactPolynomial& p, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi) {
    return SturmChain(p).count(lo, hi);
}

int real_root_count(const ExactPolynomial& p) {
    return real_root_count(p, std::nullopt, std::nullopt);
}

Rational cauchy_root_bound(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rational best(0);
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
        Rational ratio = abs(p.coeffs[i] / p.lead());
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

namespace {

// Smallest power of two >= b. Power-of-two brackets keep every bisection
// midpoint dyadic, so dyadic roots are eventually hit exactly.
Rational dyadic_upper(const Rational& b) {
    const Integer q = (b.get_num() + b.get_den() - 1) / b.get_den();
    const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    const Rational pow2 = Rational(Integer(1) << bits);
    const Rational half = pow2 / 2;
    return half >= b ? half : pow2;
}

// Largest distinct root of chain.squarefree() inside (lo, hi], which must
// contain at least one root. Bisects with Sturm counts until a single root is
// bracketed, then by sign alone.
RootInterval isolate_largest(const SturmChain& chain, Rational lo, Rational hi,
                             const Rational& width) {
    const ExactPolynomial& sf = chain.squarefree();
    if (sgn(evaluate(sf, hi)) == 0) return {hi, hi, true};

    int vlo = chain.variations_at(lo);
    int vhi = chain.variations_at(hi);
    while (vlo - vhi > 1) {
        const Rational mid = (lo + hi) / 2;
        const int vmid = chain.variations_at(mid);
        if (vmid - vhi >= 1) {
            lo = mid;
            vlo = vmid;
        } else {
            if (sgn(evaluate(sf, mid)) == 0) return {mid, mid, true};
            hi = mid;
            vhi = vmid;
        }
    }

    const int hi_sign = sgn(evaluate(sf, hi));
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int s = sgn(evaluate(sf, mid));
        if (s == 0) return {mid, mid, true};
        if (s == hi_sign)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, false};
}

}  // namespace

RootInterval max_real_root_interval(const ExactPolynomial& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("max_real_root: zero polynomial");
    if (p.degree() == 0) throw std::domain_error("max_real_root: no real root");
    const SturmChain chain(p);
    if (chain.count_all() == 0) throw std::domain_error("max_real_root: no real root");
    const Rational bound = dyadic_upper(cauchy_root_bound(chain.squarefree()));
    return isolate_largest(chain, -bound, bound, width);
}

RootInterval max_real_root_interval_below(const ExactPolynomial& p, const Rational& below,
                                          const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("max_real_root: zero polynomial");
    if (p.degree() == 0) throw std::domain_error("max_real_root: no real root");
    const SturmChain chain(p);
    const ExactPolynomial& sf = chain.squarefree();
    const Rational bound = dyadic_upper(cauchy_root_bound(sf));
    Rational hi = below < bound ? below : bound;
    if (hi <= -bound)
        throw std::domain_error("max_real_root: no real root below the cutoff");
    // Anchor the bracket at the cutoff with a power-of-two span so every
    // bisection midpoint stays on the dyadic lattice through hi; dyadic roots
    // are then guaranteed to be probed (and reported exact) eventually.
    Rational lo = hi - dyadic_upper(hi + bound);

    // Exclude a root sitting exactly at the cutoff, then isolate as usual.
    int excluded = sgn(evaluate(sf, hi)) == 0 ? 1 : 0;
    if (chain.count(lo, hi) - excluded == 0)
        throw std::domain_error("max_real_root: no real root below the cutoff");
    while (excluded == 1) {
        const Rational mid = (lo + hi) / 2;
        if (sgn(evaluate(sf, mid)) == 0) {
            if (chain.count(mid, hi) - excluded == 0) return {mid, mid, true};
            lo = mid;
            continue;
        }
        if (chain.count(mid, hi) - excluded >= 1)
            lo = mid;
        else {
            hi = mid;
            excluded = 0;
        }
    }
    return isolate_largest(chain, lo, hi, width);
}

RootInterval max_real_root_interval_upto(const ExactPolynomial& p, const Rational& hi,
                                         const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("max_real_root: zero polynomial");
    if (p.degree() == 0) throw std::domain_error("max_real_root: no real root");
    const SturmChain chain(p);
    const Rational bound = dyadic_upper(cauchy_root_bound(chain.squarefree()));
    const Rational top = hi < bound ? hi : bound;
    if (top <= -bound)
        throw std::domain_error("max_real_root: no real root at or below the cutoff");
    const Rational lo = top - dyadic_upper(top + bound);
    if (chain.count(lo, top) == 0)
        throw std::domain_error("max_real_root: no real root at or below the cutoff");
    return isolate_largest(chain, lo, top, width);
}

namespace {

void collect_roots(const SturmChain& chain, const Rational& lo, const Rational& hi,
                   int vlo, int vhi, const Rational& width,
                   std::vector<RootInterval>& out) {
    const int roots_here = vlo - vhi;
    if (roots_here == 0) return;
    if (roots_here == 1) {
        out.push_back(isolate_largest(chain, lo, hi, width));
        return;
    }
    const Rational mid = (lo + hi) / 2;
    const int vmid = chain.variations_at(mid);
    collect_roots(chain, lo, mid, vlo, vmid, width, out);
    collect_roots(chain, mid, hi, vmid, vhi, width, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p,
                                             const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    const SturmChain chain(p);
    const Rational bound = dyadic_upper(cauchy_root_bound(chain.squarefree()));
    collect_roots(chain, -bound, bound, chain.variations_at(-bound),
                  chain.variations_at(bound), width, out);
    return out;
}

double max_real_root(const ExactPolynomial& p, const RootIsolationConfig& cfg) {
    if (cfg.abs_tol <= 0 || cfg.rel_tol <= 0)
        throw std::invalid_argument("max_real_root: tolerances must be positive");
    const RootInterval iv = max_real_root_interval(p, rational_from_double(cfg.abs_tol));
    return to_double(iv.midpoint());
}

double max_real_root(const FloatPolynomial& p, const RootIsolationConfig& cfg) {
    return max_real_root(to_exact(p), cfg);
}

NonnegReport is_nonneg_rooted(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_nonneg_rooted: zero polynomial");
    NonnegReport report;
    if (p.degree() == 0) {
        report.nonneg_rooted = true;
        report.cls = sgn(p.lead()) > 0 ? NonnegClass::ClosureOnly : NonnegClass::Neither;
        return report;
    }
    const SturmChain chain(p);
    const ExactPolynomial& sf = chain.squarefree();
    const int distinct_real = chain.count_all();
    const bool all_real = distinct_real == sf.degree();
    const int upto_zero = chain.count(std::nullopt, Rational(0));
    const bool zero_is_root = sgn(evaluate(sf, Rational(0))) == 0;
    const int negative_roots = upto_zero - (zero_is_root ? 1 : 0);
    report.nonneg_rooted = all_real && negative_roots == 0;
    if (!report.nonneg_rooted || sgn(p.lead()) < 0) {
        report.cls = NonnegClass::Neither;
        return report;
    }
    bool pure_power = true;
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i)
        if (sgn(p.coeffs[i]) != 0) pure_power = false;
    if (pure_power) {
        report.cls = NonnegClass::ClosureOnly;
        return report;
    }
    const int positive_roots = chain.count(Rational(0), std::nullopt);
    report.cls = positive_roots >= 1 ? NonnegClass::InClass : NonnegClass::Neither;
    return report;
}

}  // namespace ffr
