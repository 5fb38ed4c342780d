#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinbar/abacus.hpp"
#include "spinbar/barcomb.hpp"
#include "spinbar/congruence.hpp"
#include "spinbar/identities.hpp"
#include "spinbar/spincounts.hpp"
#include "spinbar/truncseries.hpp"

namespace spinbar {

using json = nlohmann::json;

/* Coefficients travel as decimal strings: they routinely exceed 64 bits and
 * JSON numbers cannot carry them exactly. */
inline json to_json(const TruncSeries& s) {
    json coeffs = json::array();
    for (std::size_t i = 0; i <= s.order(); ++i) coeffs.push_back(s[i].str());
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline TruncSeries series_from_json(const json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1)
        throw std::invalid_argument("series_from_json: order and coefficient count disagree");
    TruncSeries s(order);
    for (std::size_t i = 0; i <= order; ++i)
        s.coeff(i) = Int(coeffs.at(i).get<std::string>());
    return s;
}

inline json to_json(const Partition& p) { return json(p.parts); }
inline json to_json(const BarPartition& p) { return json(p.parts); }

inline json to_json(const BarLengthTable& t) { return json{{"rows", t.rows}}; }

inline json to_json(const BarAbacus& ab) {
    return json{{"p", ab.p}, {"runners", ab.runners}};
}

inline BarAbacus abacus_from_json(const json& j) {
    BarAbacus ab;
    ab.p = j.at("p").get<long long>();
    ab.runners = j.at("runners").get<std::vector<std::vector<int>>>();
    return ab;
}

inline std::string counter_name(Counter c) {
    switch (c) {
        case Counter::PartitionFn: return "p";
        case Counter::StrictPartitionFn: return "q";
        case Counter::FShat: return "f-shat";
        case Counter::FAhat: return "f-ahat";
        case Counter::FPbar: return "f-pbar";
        case Counter::FPbarPlus: return "f-pbar-plus";
        case Counter::FPbarMinus: return "f-pbar-minus";
        case Counter::FDefectZeroShat: return "f0-shat";
        case Counter::FDefectZeroAhat: return "f0-ahat";
        case Counter::FPosDefectShat: return "fpos-shat";
        case Counter::FPosDefectAhat: return "fpos-ahat";
    }
    return "?";
}

inline Counter counter_from_name(const std::string& name) {
    for (Counter c : {Counter::PartitionFn, Counter::StrictPartitionFn, Counter::FShat,
                      Counter::FAhat, Counter::FPbar, Counter::FPbarPlus, Counter::FPbarMinus,
                      Counter::FDefectZeroShat, Counter::FDefectZeroAhat,
                      Counter::FPosDefectShat, Counter::FPosDefectAhat})
        if (counter_name(c) == name) return c;
    throw std::invalid_argument("unknown counter '" + name + "'");
}

inline json to_json(const CongruenceFamily& f) {
    json j{{"source", f.source},
           {"counter", counter_name(f.counter)},
           {"A", f.A},
           {"B", f.B},
           {"M", f.M.str()}};
    j["p"] = f.p ? json(*f.p) : json(nullptr);
    return j;
}

inline json to_json(const VerificationReport& r) {
    json j = to_json(r.family);
    j["n_max"] = r.n_max;
    j["holds"] = r.holds;
    j["counterexample"] =
        r.first_counterexample ? json(*r.first_counterexample) : json(nullptr);
    return j;
}

inline json to_json(const SpinCountRecord& r) {
    json per_p = json::array();
    for (const auto& pp : r.per_p)
        per_p.push_back(json{{"p", pp.p},
                             {"f_pbar", pp.f_pbar.str()},
                             {"f_pbar_plus", pp.f_pbar_plus.str()},
                             {"f_pbar_minus", pp.f_pbar_minus.str()},
                             {"f_defect0_shat", pp.f_defect0_shat.str()},
                             {"f_defect0_ahat", pp.f_defect0_ahat.str()}});
    return json{{"n", r.n},
                {"f_shat", r.f_shat.str()},
                {"f_ahat", r.f_ahat.str()},
                {"per_p", std::move(per_p)}};
}

inline json to_json(const IdentityCheck& c) {
    return json{{"name", c.name},
                {"specialization", c.specialization},
                {"order", c.lhs.order()},
                {"matches", c.matches}};
}

/* CSV table of spin count records: one row per n, per-prime column groups. */
inline void write_spin_counts_csv(std::ostream& os, const std::vector<SpinCountRecord>& recs) {
    os << "n,f_shat,f_ahat";
    if (!recs.empty())
        for (const auto& pp : recs.front().per_p) {
            const std::string s = std::to_string(pp.p);
            os << ",f_pbar_" << s << ",f_pbar_plus_" << s << ",f_pbar_minus_" << s
               << ",f_defect0_shat_" << s << ",f_defect0_ahat_" << s;
        }
    os << '\n';
    for (const auto& r : recs) {
        os << r.n << ',' << r.f_shat << ',' << r.f_ahat;
        for (const auto& pp : r.per_p)
            os << ',' << pp.f_pbar << ',' << pp.f_pbar_plus << ',' << pp.f_pbar_minus << ','
               << pp.f_defect0_shat << ',' << pp.f_defect0_ahat;
        os << '\n';
    }
}

inline void write_series_csv(std::ostream& os, const TruncSeries& s) {
    os << "n,coefficient\n";
    for (std::size_t i = 0; i <= s.order(); ++i) os << i << ',' << s[i] << '\n';
}

/* Parses "16,9,4,2" (or the empty string) into parts. */
inline std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty component in partition '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    return parts;
}

} // namespace spinbar
