#pragma once

#include <cstdint>
#include <vector>

#include "toricode/errors.hpp"

namespace toricode {

/// Canonical element index in [0, q). The index encodes the coefficient
/// vector of the element base p, low coefficient in the least significant
/// digit, so constants c have index c.
using Fe = std::uint16_t;

/// GF(p^e) with log/exp tables over a fixed primitive element.
///
/// The modulus is the lexicographically smallest monic irreducible of
/// degree e over GF(p) (integer encoding of the lower coefficients,
/// increasing), and the generator is the smallest element of
/// multiplicative order q-1 in canonical element order. Both choices are
/// deterministic across runs. Immutable after construction.
class Field {
  public:
    Field(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    /// Modulus coefficients, low to high; size e+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    Fe generator() const { return gen_; }

    /// [g^0, g^1, ..., g^{q-2}] for the fixed generator g.
    const std::vector<Fe>& units() const { return units_; }

    Fe add(Fe a, Fe b) const {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) {
            int s = int(a) + int(b);
            return Fe(s >= p_ ? s - p_ : s);
        }
        return add_ext(a, b);
    }

    Fe neg(Fe a) const {
        if (p_ == 2) return a;
        if (e_ == 1) return a == 0 ? 0 : Fe(p_ - a);
        return neg_ext(a);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    Fe inv(Fe a) const {
        if (a == 0) fail(Errc::IndexOutOfRange, "inverse of zero");
        if (a == 1) return 1;
        return exp_[q_ - 1 - log_[a]];
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    /// a^n for a != 0 or n > 0; 0^0 = 1 by convention (empty product).
    Fe pow(Fe a, long long n) const;

    /// Discrete log base the generator; a must be nonzero.
    int log(Fe a) const {
        if (a == 0) fail(Errc::IndexOutOfRange, "log of zero");
        return log_[a];
    }

    /// g^(i mod (q-1)).
    Fe exp_at(long long i) const {
        long long r = i % (q_ - 1);
        if (r < 0) r += q_ - 1;
        return exp_[size_t(r)];
    }

    bool same_field(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

  private:
    Fe add_ext(Fe a, Fe b) const;
    Fe neg_ext(Fe a) const;

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    Fe gen_ = 0;
    std::vector<Fe> exp_;   // exp_[i] = g^i, i in [0, q-1)
    std::vector<int> log_;  // log_[x] for x in [1, q)
    std::vector<Fe> units_;
};

/// Embedding GF(small.q) -> GF(big.q), returned as a table indexed by the
/// canonical element index of the small field. Requires big.q to be a
/// power of small.q with the same characteristic. The small generator is
/// sent to the smallest (canonical order) root in the big field of its
/// minimal polynomial over GF(p).
std::vector<Fe> embed_map(const Field& small, const Field& big);

} // namespace toricode
