// Exact real-root counting (Sturm sequences) and certified isolation of the
// largest real root.
#pragma once

#include "ffr/polynomial.hpp"

#include <optional>
#include <vector>

namespace ffr {

struct RootIsolationConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_bisections = 200;
};

// Sturm chain of the squarefree part of p. Counts are of distinct real roots.
class SturmChain {
  public:
    explicit SturmChain(const ExactPolynomial& p);

    const ExactPolynomial& squarefree() const { return sf_; }

    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    // Distinct roots in (lo, hi]; nullopt endpoints mean -inf / +inf.
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;
    int count_all() const;

  private:
    ExactPolynomial sf_;
    std::vector<ExactPolynomial> chain_;
};

// Distinct real roots of p in (lo, hi]; nullopt endpoints mean -inf / +inf.
int real_root_count(const ExactPolynomial& p, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi);
int real_root_count(const ExactPolynomial& p);

// Strict bound B with every real root in (-B, B): 1 + max |a_i / a_deg|.
Rational cauchy_root_bound(const ExactPolynomial& p);

// Certified bracket for a root: the root lies in [lo, hi]; exact means lo == hi.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    Rational midpoint() const { return exact ? hi : Rational((lo + hi) / 2); }
};

// Largest real root of p, bracketed to the requested width (exact arithmetic).
// Throws std::domain_error when p has no real root.
RootInterval max_real_root_interval(const ExactPolynomial& p, const Rational& width);
// Largest real root of p strictly below `below`.
RootInterval max_real_root_interval_below(const ExactPolynomial& p, const Rational& below,
                                          const Rational& width);
// Largest real root of p that is <= hi.
RootInterval max_real_root_interval_upto(const ExactPolynomial& p, const Rational& hi,
                                         const Rational& width);
// All distinct real roots of p, ascending, pairwise-disjoint brackets.
std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p,
                                             const Rational& width);

double max_real_root(const ExactPolynomial& p, const RootIsolationConfig& cfg = {});
double max_real_root(const FloatPolynomial& p, const RootIsolationConfig& cfg = {});

enum class NonnegClass {
    InClass,      // all roots real and >= 0, at least one positive, positive lead
    ClosureOnly,  // c * x^deg with c > 0 (degree-0 positive constants included)
    Neither,
};

struct NonnegReport {
    bool nonneg_rooted = false;  // all roots real and >= 0
    NonnegClass cls = NonnegClass::Neither;
};

NonnegReport is_nonneg_rooted(const ExactPolynomial& p);

}  // namespace ffr
