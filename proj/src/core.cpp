#include "bcjulia/core.hpp"

#include <algorithm>

namespace bcjulia {

bool is_null_cone(const Bicomplex& w, double tol) {
    const IdempotentPair p = to_idempotent(w);
    const double smaller = std::min(std::abs(p.w1), std::abs(p.w2));
    return smaller <= tol * std::max(1.0, norm(w));
}

Bicomplex inverse(const Bicomplex& w, double tol) {
    if (is_null_cone(w, tol)) {
        throw NullConeError("inverse: element lies in the null-cone");
    }
    const Complex m = mod_sq_i1(w);
    const Bicomplex c = conj(ConjKind::swap, w);
    return {c.z1 / m, c.z2 / m};
}

Bicomplex divide(const Bicomplex& a, const Bicomplex& b, double tol) { return mul(a, inverse(b, tol)); }

Bicomplex divide_idempotent(const Bicomplex& a, const Bicomplex& b, double tol) {
    if (is_null_cone(b, tol)) {
        throw NullConeError("divide: divisor lies in the null-cone");
    }
    const IdempotentPair pa = to_idempotent(a);
    const IdempotentPair pb = to_idempotent(b);
    return from_idempotent({pa.w1 / pb.w1, pa.w2 / pb.w2});
}

}  // namespace bcjulia
