#include <curvelab/errors.hpp>
#include <curvelab/local_sing.hpp>

#include <cctype>
#include <stdexcept>

namespace curvelab {

TpqSing tpq_invariants(int p, int q) {
    if (p < 2 || q < p) throw std::invalid_argument("T(p,q) requires 2 <= p <= q");
    TpqSing g;
    g.p = p;
    g.q = q;
    g.mu = (p - 1) * (q - 1);
    // Standard monomials below the equisingular staircase: u^a v^b with
    // a <= p-2, b <= q-2 (below u^{p-1}, v^{q-1}) and aq + bp < pq.
    int count = 0;
    for (int a = 0; a <= p - 2; ++a)
        for (int b = 0; b <= q - 2; ++b)
            if (a * q + b * p < p * q) ++count;
    g.tau_es = count;
    g.m_es = g.mu - g.tau_es;
    g.modality = g.mu - g.tau_es;
    return g;
}

namespace {

int parse_int(std::string_view s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw UnsupportedGermType("expected digits in germ name");
    return std::stoi(std::string(s.substr(start, i - start)));
}

}  // namespace

TpqSing named_type(std::string_view name) {
    size_t i = 0;
    while (i < name.size() && std::isspace(static_cast<unsigned char>(name[i]))) ++i;
    size_t end = name.size();
    while (end > i && std::isspace(static_cast<unsigned char>(name[end - 1]))) --end;
    std::string_view s = name.substr(i, end - i);

    if (s.empty()) throw UnsupportedGermType("empty germ name");
    if (s[0] == 'A') {
        size_t j = 1;
        if (j < s.size() && s[j] == '_') ++j;
        int n = parse_int(s, j);
        if (j != s.size()) throw UnsupportedGermType("malformed A-series name: " + std::string(s));
        if (n < 1) throw UnsupportedGermType("A_n requires n >= 1");
        return tpq_invariants(2, n + 1);
    }
    if (s == "D4" || s == "D_4") return tpq_invariants(3, 3);
    if (s == "E6" || s == "E_6") return tpq_invariants(3, 4);
    if (s[0] == 'D' || s[0] == 'E')
        throw UnsupportedGermType(
            "germ " + std::string(s) +
            " is not of two-term weighted-homogeneous form u^p+v^q; general equisingular "
            "ideals (Campillo-Greuel-Lossen algorithm) are not implemented");
    if (s[0] == 'T') {
        size_t j = 1;
        if (j >= s.size() || s[j] != '(')
            throw UnsupportedGermType("malformed T(p,q) name: " + std::string(s));
        ++j;
        int p = parse_int(s, j);
        if (j >= s.size() || s[j] != ',')
            throw UnsupportedGermType("malformed T(p,q) name: " + std::string(s));
        ++j;
        int q = parse_int(s, j);
        if (j >= s.size() || s[j] != ')' || j + 1 != s.size())
            throw UnsupportedGermType("malformed T(p,q) name: " + std::string(s));
        if (p < 2 || q < p) throw UnsupportedGermType("T(p,q) requires 2 <= p <= q");
        return tpq_invariants(p, q);
    }
    throw UnsupportedGermType("unknown germ name: " + std::string(s));
}

std::vector<TpqSing> parse_germ_list(std::string_view text) {
    std::vector<TpqSing> out;
    size_t i = 0;
    while (i <= text.size()) {
        size_t depth = 0, j = i;
        while (j < text.size() && (text[j] != ',' || depth > 0)) {
            if (text[j] == '(') ++depth;
            if (text[j] == ')' && depth > 0) --depth;
            ++j;
        }
        std::string item(text.substr(i, j - i));
        int repeat = 1;
        // optional multiplicity suffix: "A_1x7" or "A_1×7"
        for (size_t k = item.size(); k-- > 0;) {
            if (std::isdigit(static_cast<unsigned char>(item[k]))) continue;
            bool ascii_x = item[k] == 'x';
            bool utf_x = k >= 1 && static_cast<unsigned char>(item[k - 1]) == 0xC3 &&
                         static_cast<unsigned char>(item[k]) == 0x97;
            if ((ascii_x || utf_x) && k + 1 < item.size()) {
                // 'x' directly after a complete germ name; A-series names also
                // end in digits, so require a non-empty tail of digits only.
                std::string head = item.substr(0, utf_x ? k - 1 : k);
                if (!head.empty() && head.back() != '_' && head.back() != ',') {
                    repeat = std::stoi(item.substr(k + 1));
                    item = head;
                }
            }
            break;
        }
        if (!item.empty()) {
            TpqSing g = named_type(item);
            for (int r = 0; r < repeat; ++r) out.push_back(g);
        }
        i = j + 1;
        if (j >= text.size()) break;
    }
    return out;
}

std::string germ_name(const TpqSing& g) {
    if (g.p == 2) return "A_" + std::to_string(g.q - 1);
    if (g.p == 3 && g.q == 3) return "D4";
    if (g.p == 3 && g.q == 4) return "E6";
    return "T(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
}

}  // namespace curvelab
