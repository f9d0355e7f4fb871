#pragma once

#include <array>
#include <string>
#include <vector>

#include "toricode/polytope.hpp"

namespace toricode {

/// A polytope of degree one: an iterated pyramid over a Lawrence prism or
/// over the exceptional simplex.
struct DegreeOneDescriptor {
    bool is_delta2 = false;
    std::vector<long long> a; // Lawrence heights, ignored when is_delta2
    int pyramid_levels = 0;

    int realized_dim() const { return (is_delta2 ? 2 : int(a.size())) + pyramid_levels; }
    long long realized_rank() const;
    void validate() const;
};

LatticePolytope realize(const DegreeOneDescriptor& desc);

enum class PredictionSource { Delta2Case, LawrenceStrict, LawrenceEqual };

struct ParamPrediction {
    long long n = 0;
    long long k = 0;
    long long dmin = 0;
    PredictionSource source = PredictionSource::Delta2Case;
    int q = 0;
};

/// Closed-form (n, k, dmin) for the primal code of a degree-one polytope.
ParamPrediction degree_one_params(const DegreeOneDescriptor& desc, int q);

struct DualDminPrediction {
    int value = 0; // 3 or 4
    bool small_q_caveat = true; // valid for all but finitely many fields
};

DualDminPrediction dual_dmin_predicted(const DegreeOneDescriptor& desc);

struct ModePrediction {
    int value = 0; // c+2 or c+3
    bool cofinal_caveat = false;
};

/// c+3 for minimal degree (= degree one), else c+2 with the cofinal-field
/// caveat.
ModePrediction mode_predicted(const LatticePolytope& p);

/// (3, codim+3); the upper bound holds over a cofinal set of fields.
std::pair<long long, long long> dual_dmin_bound(const LatticePolytope& p);

struct Table1Row {
    int q;
    std::array<long long, 3> a;
    long long n, k, dmin;
};

extern const std::array<Table1Row, 7> kTable1;

struct Table1Check {
    Table1Row row;
    long long n_formula = 0, k_formula = 0, dmin_formula = 0;
    bool k_match = false, dmin_match = false, n_match = false;
    bool match = false; // k and dmin both reproduce the printed values
    std::vector<std::string> notes;
};

std::vector<Table1Check> verify_table1();

} // namespace toricode
