#include "tables.hpp"

#include "char_sums.hpp"
#include "curves.hpp"
#include "field.hpp"

namespace charsum {

Table make_table(const TableSpec& spec) {
    auto F = Field::make(spec.p, spec.r);
    Table t;
    if (spec.family == "count_mm") {
        if (spec.m < 1) fail(Errc::InvalidArgument, "m must be positive");
        t.columns = {"p", "r", "m", "n", "a", "b", "count", "psi"};
        for (std::int64_t ai = 1; ai < F->q(); ++ai) {
            for (std::int64_t bi = 1; bi < F->q(); ++bi) {
                if (ai == bi) continue;
                auto a = F->element(ai), b = F->element(bi);
                auto fam = count_family_mm(*F, spec.m, a, b);
                t.rows.push_back({spec.p, spec.r, spec.m, spec.m, ai, bi, fam.count_c, fam.psi});
            }
        }
    } else if (spec.family == "count_psi24") {
        t.columns = {"p",     "r",   "m",            "n",
                     "a",     "b",   "count",        "psi",
                     "trace_lambda", "trace_invlambda"};
        for (std::int64_t ai = 1; ai < F->q(); ++ai) {
            for (std::int64_t bi = 1; bi < F->q(); ++bi) {
                auto a = F->element(ai), b = F->element(bi);
                FieldElement lambda = a * a / b;
                if ((lambda + F->one()).is_zero()) continue;
                auto r = count_psi24_curve(*F, a, b);
                std::int64_t psi = brute_pair_sum(*F, 2, 4, a, b, PairFlavor::Psi);
                t.rows.push_back({spec.p, spec.r, 2, 4, ai, bi, r.count, psi,
                                  trace_clausen(*F, lambda).value,
                                  trace_clausen(*F, lambda.inv()).value});
            }
        }
    } else if (spec.family == "jacobsthal") {
        t.columns = {"p", "r", "n", "a", "psi_n", "phi_n"};
        for (std::int64_t ai = 1; ai < F->q(); ++ai) {
            auto a = F->element(ai);
            t.rows.push_back({spec.p, spec.r, spec.n, ai,
                              brute_jacobsthal(*F, spec.n, a, JacobsthalFlavor::PsiN),
                              brute_jacobsthal(*F, spec.n, a, JacobsthalFlavor::PhiN)});
        }
    } else {
        fail(Errc::InvalidArgument, "unknown table family: " + spec.family);
    }
    return t;
}

std::string table_to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ",";
        out += t.columns[i];
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::json table_to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        arr.push_back(obj);
    }
    return arr;
}

} // namespace charsum
