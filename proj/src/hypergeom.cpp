#include "xlmhg/hypergeom.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace xlmhg {
namespace {

std::string describe(const HGParams& p) {
    std::ostringstream out;
    out << "(N=" << p.N << ", K=" << p.K << ", n=" << p.n << ", k=" << p.k << ")";
    return out.str();
}

double log_choose(std::int64_t a, std::int64_t b) {
    return std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
           std::lgamma(static_cast<double>(a - b) + 1.0);
}

void require_target(const HGParams& target, const char* op) {
    if (!target.valid()) {
        throw DomainError(std::string(op) + ": target index leaves the support " + describe(target));
    }
}

}  // namespace

void check_params(const HGParams& p) {
    if (!p.valid()) throw DomainError("invalid hypergeometric parameters " + describe(p));
}

double pmf_direct(const HGParams& p) {
    check_params(p);
    const double log_f = log_choose(p.K, p.k) + log_choose(p.N - p.K, p.n - p.k) - log_choose(p.N, p.n);
    return std::min(1.0, std::exp(log_f));
}

double tail_sf(const HGParams& p) {
    // k may sit below the support (tail is then 1) but not above n
    check_params({p.N, p.K, p.n, p.k_min()});
    if (p.k < 0 || p.k > p.n) throw DomainError("tail_sf: k must lie in [0, n]");
    if (p.k <= p.k_min()) return 1.0;
    if (p.k > p.k_max()) return 0.0;
    double total = 0.0;
    HGParams term = p;
    for (std::int64_t i = p.k_max(); i >= p.k; --i) {
        term.k = i;
        total += pmf_direct(term);
    }
    return std::min(1.0, total);
}

double step_inc_k(double f, const HGParams& p) {
    check_params(p);
    require_target({p.N, p.K, p.n, p.k + 1}, "step_inc_k");
    return f * factor_inc_k(p.N, p.K, p.n, p.k);
}

double step_inc_n(double f, const HGParams& p) {
    check_params(p);
    require_target({p.N, p.K, p.n + 1, p.k}, "step_inc_n");
    return f * factor_inc_n(p.N, p.K, p.n, p.k);
}

double step_inc_kn(double f, const HGParams& p) {
    check_params(p);
    require_target({p.N, p.K, p.n + 1, p.k + 1}, "step_inc_kn");
    return f * factor_inc_kn(p.N, p.K, p.n, p.k);
}

double step_diag(double f, const HGParams& p) {
    check_params(p);
    if (p.k != p.n) throw DomainError("step_diag: source must satisfy k == n " + describe(p));
    const std::int64_t m = p.n + 1;
    if (m > p.K) throw DomainError("step_diag: requires n <= K for the target " + describe(p));
    require_target({p.N, p.K, m, m}, "step_diag");
    return f * factor_diag(p.N, p.K, m);
}

double step_k_eq_K(double f, const HGParams& p) {
    check_params(p);
    if (p.k != p.K) throw DomainError("step_k_eq_K: source must satisfy k == K " + describe(p));
    const std::int64_t m = p.n + 1;
    if (m <= p.K) throw DomainError("step_k_eq_K: requires n > K for the target " + describe(p));
    require_target({p.N, p.K, m, p.K}, "step_k_eq_K");
    return f * factor_k_eq_K(p.K, m);
}

double step_dec_k(double f, const HGParams& p) {
    check_params(p);
    require_target({p.N, p.K, p.n, p.k - 1}, "step_dec_k");
    return f * factor_dec_k(p.N, p.K, p.n, p.k);
}

double hgp_from_pmf(double f, std::int64_t k, std::int64_t N, std::int64_t K, std::int64_t n) {
    check_params({N, K, n, k});
    return std::min(1.0, tail_from_pmf(f, k, N, K, n));
}

}  // namespace xlmhg
