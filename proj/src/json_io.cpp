#include "sipoly/json_io.hpp"

namespace sipoly {

using nlohmann::json;

json to_json(const Rational& x) { return to_string(x); }

json to_json(const std::vector<Rational>& xs) {
    json arr = json::array();
    for (const Rational& x : xs) arr.push_back(to_string(x));
    return arr;
}

json to_json(const IsolatingInterval& iv) {
    return {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
}

json to_json(const HurwitzMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= m.n; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const LaurentCoeffs& s) {
    return {{"constant", to_string(s.constant)}, {"s", to_json(s.s)}};
}

json to_json(const HankelData& data) {
    return {{"s", to_json(data.s.s)}, {"D", to_json(data.D)}, {"Dhat", to_json(data.Dhat)}};
}

json to_json(const ContinuedFraction& cf) {
    return {{"c", to_json(cf.c)}, {"terminal", to_string(cf.terminal)}};
}

json to_json(const CriterionResult& r) {
    json out = {{"verdict", r.verdict}, {"witness", r.witness}};
    if (r.boundary) out["boundary"] = true;
    return out;
}

json to_json(const CriteriaSet& c) {
    return {{"stodola", to_json(c.stodola)},
            {"si_hurwitz", to_json(c.si_hurwitz)},
            {"si_lienard_chipart", to_json(c.si_lienard_chipart)},
            {"hurwitz_classic", to_json(c.hurwitz_classic)},
            {"stability_hankel", to_json(c.stability_hankel)}};
}

json to_json(const SiVerdict& v) {
    json intervals = json::array();
    for (const IsolatingInterval& iv : v.witnesses) intervals.push_back(to_json(iv));
    json out = {{"kind", to_string(v.kind)}, {"witnesses", std::move(intervals)}};
    if (v.kind == SiKind::not_si) out["reason"] = to_string(v.reason);
    if (v.indeterminate) out["indeterminate"] = true;
    return out;
}

json to_json(const IdentityReport& r) {
    json entries = json::array();
    for (const IdentityEntry& e : r.entries)
        entries.push_back({{"j", e.j},
                           {"lhs", to_string(e.lhs)},
                           {"rhs", to_string(e.rhs)},
                           {"ok", e.ok}});
    return {{"entries", std::move(entries)}, {"pass", r.pass}};
}

json to_json(const ClassificationReport& report) {
    json criteria = to_json(report.criteria);
    criteria["duality_consistency"] = {{"verdict", report.duality_consistency}};
    return {{"input", report.input_text},
            {"normalized", report.normalized},
            {"criteria", std::move(criteria)},
            {"oracle",
             {{"si", to_string(report.si.kind)},
              {"stability", to_string(report.stability)}}},
            {"dual",
             {{"polynomial", report.dual_text},
              {"criteria", to_json(report.dual_criteria)},
              {"oracle",
               {{"si", to_string(report.dual_si.kind)},
                {"stability", to_string(report.dual_stability)}}}}},
            {"reflected",
             {{"polynomial", report.reflected_text},
              {"criteria", to_json(report.reflected_criteria)}}},
            {"si_witnesses", to_json(report.si).at("witnesses")},
            {"consistent", report.consistent},
            {"flags", report.flags}};
}

json minors_payload(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::domain_error("minor payload requires degree >= 1");
    const Polynomial q = normalize_leading(p);
    const int n = q.degree();
    const int l = q.half_up();
    const int r = q.half_down();

    json out;
    out["polynomial"] = q.to_text();
    const std::vector<Rational> delta = leading_minors(q);
    out["delta"] = to_json(delta);

    const LaurentCoeffs s_r = laurent_coeffs(r_function(q), 2 * n - 2);
    json d_r = json::array();
    for (int j = 1; j <= n; ++j) d_r.push_back(to_string(hankel_D(s_r, j)));
    out["D_R"] = std::move(d_r);

    const LaurentCoeffs s_phi =
        laurent_coeffs(associated_phi(q), std::max(2 * l, 2 * r + 1));
    json d_phi = json::array();
    for (int j = 1; j <= l; ++j) d_phi.push_back(to_string(hankel_D(s_phi, j)));
    out["D_phi"] = std::move(d_phi);
    json dhat_phi = json::array();
    for (int j = 1; j <= r; ++j) dhat_phi.push_back(to_string(hankel_Dhat(s_phi, j)));
    out["Dhat_phi"] = std::move(dhat_phi);

    json notes = json::array();
    for (const Rational& d : delta)
        if (d == 0) {
            notes.push_back("degenerate: zero Hurwitz minor");
            break;
        }
    if (gcd(q, q.reflect()).degree() >= 1)
        notes.push_back("degenerate: p and p(-z) share roots (Hankel rank collapse)");
    out["notes"] = std::move(notes);
    return out;
}

}  // namespace sipoly
