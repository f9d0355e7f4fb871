#include "toricode/stats.hpp"

#include <algorithm>
#include <set>

namespace toricode {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    // rejection below the largest multiple of n, uniform and portable
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t v = rng();
        if (v >= threshold) return v % n;
    }
}

std::vector<int> sample_subset(std::mt19937_64& rng, int n, int s) {
    std::vector<int> pick(s);
    for (;;) {
        for (int i = 0; i < s; ++i) pick[i] = int(bounded_draw(rng, std::uint64_t(n)));
        std::sort(pick.begin(), pick.end());
        bool distinct = true;
        for (int i = 1; i < s; ++i)
            if (pick[i] == pick[i - 1]) {
                distinct = false;
                break;
            }
        if (distinct) return pick;
    }
}

long long binom_capped(long long n, long long s, long long cap) {
    if (s < 0 || s > n) return 0;
    __int128 r = 1;
    for (long long i = 1; i <= s; ++i) {
        r = r * (n - s + i) / i;
        if (r > cap) return cap + 1;
    }
    return (long long)r;
}

namespace {

constexpr long long kSpanEnumBudget = 200'000;

// a dual word with support exactly equal to the inserted rows exists iff
// some dependency combination is nonzero in every coordinate
bool has_full_support_word(const Field& F, const DependencyTracker& tracker) {
    auto deps = tracker.dependencies();
    const int d = int(deps.size());
    if (d == 0) return false;
    const int n = tracker.inserted();
    if (d == 1) {
        for (Fe x : deps[0])
            if (x == 0) return false;
        return true;
    }
    __int128 qd = 1;
    for (int i = 0; i < d - 1; ++i) qd *= F.q();
    __int128 classes = (qd * F.q() - 1) / (F.q() - 1);
    if (classes > kSpanEnumBudget) fail(Errc::BudgetExceeded, "dependency space too large");
    // projective representatives: leading coefficient 1
    std::vector<Fe> coeff(d, 0);
    std::vector<Fe> word(n, 0);
    for (int lead = 0; lead < d; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        for (;;) {
            std::fill(word.begin(), word.end(), 0);
            for (int i = lead; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (int j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(coeff[i], deps[i][j]));
            }
            bool full = true;
            for (Fe x : word)
                if (x == 0) {
                    full = false;
                    break;
                }
            if (full) return true;
            int i = d - 1;
            while (i > lead && coeff[i] == F.q() - 1) {
                coeff[i] = 0;
                --i;
            }
            if (i == lead) break;
            ++coeff[i];
        }
    }
    return false;
}

void check_rows(const Matrix& m, std::span<const int> s, bool allow_dup) {
    std::set<int> seen;
    for (int r : s) {
        if (r < 0 || r >= m.rows) fail(Errc::IndexOutOfRange, "row index " + std::to_string(r));
        if (!seen.insert(r).second && !allow_dup)
            fail(Errc::DuplicateIndex, "row index " + std::to_string(r));
    }
}

} // namespace

WsResult w_s(const EvaluationMatrix& a, std::span<const int> s, int max_extension) {
    check_rows(a.a, s, false);
    if (s.size() > 20) fail(Errc::BudgetExceeded, "|S| > 20");
    const Field& F = a.field;
    const int t = a.a.rows;

    DependencyTracker base(F, a.a.cols);
    for (int r : s) base.insert(a.a.row(r));

    std::vector<int> others;
    others.reserve(t);
    {
        std::set<int> in_s(s.begin(), s.end());
        for (int i = 0; i < t; ++i)
            if (!in_s.count(i)) others.push_back(i);
    }

    for (int e = 0; e <= max_extension; ++e) {
        if (e == 0) {
            if (has_full_support_word(F, base)) return {false, int(s.size())};
            continue;
        }
        if (e > int(others.size())) break;
        // e-combinations of the remaining rows in lexicographic order
        std::vector<int> comb(e);
        for (int i = 0; i < e; ++i) comb[i] = i;
        for (;;) {
            DependencyTracker ext = base;
            for (int i : comb) ext.insert(a.a.row(others[i]));
            if (has_full_support_word(F, ext)) return {false, int(s.size()) + e};
            int i = e - 1;
            while (i >= 0 && comb[i] == int(others.size()) - e + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < e; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {true, 0};
}

ModeReport mode_over(const EvaluationMatrix& a, const std::vector<int>& b, int s,
                     const ModeConfig& cfg) {
    check_rows(a.a, b, false);
    if (s < 1 || s > int(b.size())) fail(Errc::IndexOutOfRange, "subset size out of range");
    std::vector<int> base = b;
    std::sort(base.begin(), base.end());

    ModeReport rep;
    rep.s = s;
    rep.seed = cfg.seed;
    rep.max_extension = cfg.max_extension;
    rep.field_p = a.field.p();
    rep.field_e = a.field.e();
    rep.polytope_dim = a.polytope.dim();
    rep.polytope_points = a.polytope.lattice_point_count();

    auto record = [&](const std::vector<int>& rows) {
        WsResult w = w_s(a, rows, cfg.max_extension);
        if (w.unbounded)
            ++rep.unbounded_count;
        else
            ++rep.histogram[w.w];
        ++rep.sample_count;
    };

    const long long total = binom_capped((long long)base.size(), s, cfg.exhaustive_threshold);
    if (total <= cfg.exhaustive_threshold) {
        rep.exhaustive = true;
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i) comb[i] = i;
        std::vector<int> rows(s);
        for (;;) {
            for (int i = 0; i < s; ++i) rows[i] = base[comb[i]];
            record(rows);
            int i = s - 1;
            while (i >= 0 && comb[i] == int(base.size()) - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(cfg.seed);
        std::vector<int> rows(s);
        for (long long n = 0; n < cfg.samples; ++n) {
            std::vector<int> pick = sample_subset(rng, int(base.size()), s);
            for (int i = 0; i < s; ++i) rows[i] = base[pick[i]];
            record(rows);
        }
    }

    long long best_count = -1;
    for (const auto& [w, count] : rep.histogram) {
        if (count > best_count) {
            best_count = count;
            rep.mode = w;
        }
    }
    if (rep.unbounded_count > best_count) {
        rep.mode_unbounded = true;
        rep.mode = 0;
    }
    return rep;
}

ModeReport mode(const EvaluationMatrix& a, int s, const ModeConfig& cfg) {
    std::vector<int> all(a.a.rows);
    for (int i = 0; i < a.a.rows; ++i) all[i] = i;
    return mode_over(a, all, s, cfg);
}

ModeReport relative_mode(const LatticePolytope& p, const Field& base_field, int ext_degree,
                         int s, const ModeConfig& cfg) {
    if (ext_degree < 1) fail(Errc::NonPositiveEntry, "extension degree must be positive");
    for (const Point& n : p.lattice_points()) {
        for (long long c : n) {
            if (c < 0 || c > base_field.q() - 1)
                fail(Errc::PolytopeTooLargeForField, "polytope does not fit the base field");
        }
    }
    Field big(base_field.p(), base_field.e() * ext_degree);
    std::vector<Fe> emb = embed_map(base_field, big);
    std::vector<bool> in_image(big.q(), false);
    for (Fe u : base_field.units()) in_image[emb[u]] = true;

    EvaluationMatrix a = evaluation_matrix(p, big);
    std::vector<int> b;
    for (int r = 0; r < a.torus_size(); ++r) {
        bool all_base = true;
        for (Fe c : a.torus_point(r)) {
            if (!in_image[c]) {
                all_base = false;
                break;
            }
        }
        if (all_base) b.push_back(r);
    }
    return mode_over(a, b, s, cfg);
}

GenericityReport is_generic_tuple(const EvaluationMatrix& a, std::span<const int> tuple) {
    const long long c = a.polytope.codim();
    if ((long long)tuple.size() != c + 1)
        fail(Errc::WrongTupleSize, "tuple must have codim+1 entries");
    check_rows(a.a, tuple, true);

    GenericityReport rep;
    rep.tuple.assign(tuple.begin(), tuple.end());
    DependencyTracker t(a.field, a.a.cols);
    for (int r : tuple) t.insert(a.a.row(r));
    rep.span_rank = t.rank();
    rep.condition1_ok = (rep.span_rank == c + 1);

    std::set<int> in_tuple(tuple.begin(), tuple.end());
    for (int r = 0; r < a.a.rows; ++r) {
        if (in_tuple.count(r)) continue;
        if (t.in_span(a.a.row(r))) rep.points_in_span.push_back(r);
    }
    return rep;
}

Fraction generic_fraction_estimate(const LatticePolytope& p, const Field& field,
                                   long long samples, std::uint64_t seed) {
    if (samples < 1) fail(Errc::NonPositiveEntry, "samples must be positive");
    EvaluationMatrix a = evaluation_matrix(p, field);
    const long long c = p.codim();
    const int t = a.torus_size();
    const int len = int(c + 1);

    __int128 space = 1;
    bool exhaustive = true;
    for (int i = 0; i < len; ++i) {
        space *= t;
        if (space > 1'000'000) {
            exhaustive = false;
            break;
        }
    }

    auto passes = [&](const std::vector<int>& tuple) {
        DependencyTracker tr(field, a.a.cols);
        for (int r : tuple) tr.insert(a.a.row(r));
        return tr.rank() == len;
    };

    Fraction f;
    f.exhaustive = exhaustive;
    std::vector<int> tuple(len, 0);
    if (exhaustive) {
        f.den = (long long)space;
        for (;;) {
            if (passes(tuple)) ++f.num;
            int i = len - 1;
            while (i >= 0 && tuple[i] == t - 1) {
                tuple[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++tuple[i];
        }
    } else {
        f.den = samples;
        std::mt19937_64 rng(seed);
        for (long long n = 0; n < samples; ++n) {
            for (int i = 0; i < len; ++i) tuple[i] = int(bounded_draw(rng, std::uint64_t(t)));
            if (passes(tuple)) ++f.num;
        }
    }
    return f;
}

} // namespace toricode
