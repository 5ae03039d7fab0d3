#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace curvelab {

// Weighted-homogeneous plane curve germ u^p + v^q = 0 with 2 <= p <= q and
// its closed-form invariants.  For these germs tau equals mu, so the
// equianalytic Tjurina number never needs a separate computation.
struct TpqSing {
    int p = 0, q = 0;
    int mu = 0;        // (p-1)(q-1)
    int tau_es = 0;    // codimension of the equisingular ideal
    int m_es = 0;      // mu - tau_es, the equisingular modality contribution
    int modality = 0;  // mu - tau_es for these quasi-homogeneous germs
    int tau() const { return mu; }
    bool is_simple() const { return m_es == 0; }
};

// Throws std::invalid_argument unless 2 <= p <= q.
TpqSing tpq_invariants(int p, int q);

// Accepts "A_<n>" (n >= 1), "D4", "E6" and "T(<p>,<q>)".  D_n with n >= 5,
// E7 and E8 are not of two-term form and raise UnsupportedGermType.
TpqSing named_type(std::string_view name);

// Parses a comma-separated germ list such as "A_2,A_2,T(4,5)" or
// "D4,D4,D4,A_1x7" (an optional xN suffix repeats the germ N times).
std::vector<TpqSing> parse_germ_list(std::string_view text);

std::string germ_name(const TpqSing& g);

}  // namespace curvelab
