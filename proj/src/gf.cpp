#include "toricode/gf.hpp"

#include <algorithm>
#include <string>

namespace toricode {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateIndex: return "DuplicateIndex";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::NotNondecreasing: return "NotNondecreasing";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PolytopeTooLargeForField: return "PolytopeTooLargeForField";
    case Errc::DoesNotFit: return "DoesNotFit";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::TooFewLatticePoints: return "TooFewLatticePoints";
    case Errc::WrongTupleSize: return "WrongTupleSize";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

using Poly = std::vector<int>; // coefficients low to high, over GF(p)

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of a mod b over GF(p); b monic
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db && !a.empty()) {
        int shift = int(a.size()) - 1 - db;
        int c = a.back();
        for (int i = 0; i <= db; ++i) {
            a[shift + i] = ((a[shift + i] - (long long)c * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = int((r[i + j] + (long long)a[i] * b[j]) % p);
    return r;
}

// integer encoding n -> monic polynomial of degree d whose lower
// coefficients are the base-p digits of n
Poly decode_monic(long long n, int d, int p) {
    Poly f(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        f[i] = int(n % p);
        n /= p;
    }
    f[d] = 1;
    return f;
}

bool divides(const Poly& d, const Poly& f, int p) { return poly_mod(f, d, p).empty(); }

bool is_irreducible(const Poly& f, int p) {
    const int deg = int(f.size()) - 1;
    if (f[0] == 0) return deg == 1;
    for (int dd = 1; 2 * dd <= deg; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long n = 0; n < count; ++n) {
            if (divides(decode_monic(n, dd, p), f, p)) return false;
        }
    }
    return true;
}

Poly index_to_poly(Fe x, int p, int e) {
    Poly f(e, 0);
    int v = x;
    for (int i = 0; i < e; ++i) {
        f[i] = v % p;
        v /= p;
    }
    trim(f);
    return f;
}

Fe poly_to_index(const Poly& f, int p) {
    long long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return Fe(v);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int d = 2; (long long)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(Errc::SizeExceeded, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) fail(Errc::SizeExceeded, "q = p^e exceeds 2^16");
    }
    q_ = int(q);

    if (e_ == 1) {
        modulus_ = {0, 1}; // x, the smallest monic degree-1 polynomial
    } else {
        long long count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        for (long long n = 0; n < count; ++n) {
            Poly f = decode_monic(n, e_, p_);
            if (is_irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    auto raw_mul = [&](Fe a, Fe b) -> Fe {
        if (e_ == 1) return Fe((long long)a * b % p_);
        Poly r = poly_mod(poly_mul(index_to_poly(a, p_, e_), index_to_poly(b, p_, e_), p_), modulus_, p_);
        return poly_to_index(r, p_);
    };
    auto raw_pow = [&](Fe a, long long n) -> Fe {
        Fe r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            n >>= 1;
        }
        return r;
    };

    const auto factors = prime_factors(q_ - 1);
    for (int g = 1; g < q_; ++g) {
        bool primitive = true;
        for (int f : factors) {
            if (raw_pow(Fe(g), (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = Fe(g);
            break;
        }
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    Fe x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = raw_mul(x, gen_);
    }
    units_ = exp_;
}

Fe Field::add_ext(Fe a, Fe b) const {
    // digitwise addition base p on the canonical index
    int r = 0, mult = 1, av = a, bv = b;
    for (int i = 0; i < e_; ++i) {
        int s = av % p_ + bv % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
        av /= p_;
        bv /= p_;
    }
    return Fe(r);
}

Fe Field::neg_ext(Fe a) const {
    int r = 0, mult = 1, av = a;
    for (int i = 0; i < e_; ++i) {
        int d = av % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        av /= p_;
    }
    return Fe(r);
}

Fe Field::pow(Fe a, long long n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) fail(Errc::IndexOutOfRange, "negative power of zero");
        return 0;
    }
    return exp_at((long long)log_[a] * (n % (q_ - 1)));
}

std::vector<Fe> embed_map(const Field& small, const Field& big) {
    if (small.p() != big.p())
        fail(Errc::NotASubfield, "different characteristic");
    long long r = small.q();
    bool subfield = false;
    while (r <= big.q()) {
        if (r == big.q()) {
            subfield = true;
            break;
        }
        r *= small.q();
    }
    if (!subfield)
        fail(Errc::NotASubfield, std::to_string(big.q()) + " is not a power of " + std::to_string(small.q()));

    // minimal polynomial of the small generator over GF(p), computed from
    // its Frobenius conjugates inside the small field
    const int p = small.p();
    std::vector<Fe> conjugates;
    Fe g = small.generator();
    Fe c = g;
    do {
        conjugates.push_back(c);
        c = small.pow(c, p);
    } while (c != g);

    std::vector<Fe> minpoly{1}; // product of (t - conj), coefficients in the small field
    for (Fe conj : conjugates) {
        std::vector<Fe> next(minpoly.size() + 1, 0);
        for (size_t i = 0; i < minpoly.size(); ++i) {
            next[i + 1] = small.add(next[i + 1], minpoly[i]);
            next[i] = small.add(next[i], small.mul(minpoly[i], small.neg(conj)));
        }
        minpoly = next;
    }
    for (Fe coeff : minpoly) {
        if (coeff >= p) fail(Errc::InternalInconsistency, "minimal polynomial not over the prime field");
    }

    // smallest root of the minimal polynomial in the big field; constants
    // have the same index in both fields
    Fe root = 0;
    bool found = false;
    for (int y = 1; y < big.q(); ++y) {
        Fe acc = 0;
        for (size_t i = minpoly.size(); i-- > 0;) {
            acc = big.add(big.mul(acc, Fe(y)), Fe(minpoly[i]));
        }
        if (acc == 0) {
            root = Fe(y);
            found = true;
            break;
        }
    }
    if (!found) fail(Errc::InternalInconsistency, "no root of the minimal polynomial in the big field");

    std::vector<Fe> map(small.q(), 0);
    for (int i = 0; i < small.q() - 1; ++i) {
        map[small.units()[i]] = big.pow(root, i);
    }
    return map;
}

} // namespace toricode
