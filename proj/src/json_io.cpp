#include "fatpoints/json_io.hpp"

namespace fatpoints {

using nlohmann::ordered_json;

namespace {

ordered_json class_array(const DivisorClass& f) {
    ordered_json arr = ordered_json::array();
    arr.push_back(f.d);
    for (int i = 0; i < kPoints; ++i) arr.push_back(f.m[i]);
    return arr;
}

}  // namespace

ordered_json render(const GradedResolution& res) {
    ordered_json j;
    j["mults"] = res.mults;
    j["alpha"] = res.alpha;
    ordered_json hj = ordered_json::array();
    for (const auto& [t, h] : res.hilbert) hj.push_back(ordered_json::array({t, h}));
    j["hilbert"] = std::move(hj);
    ordered_json gen = ordered_json::object();
    for (const auto& [t, v] : res.generators) gen[std::to_string(t)] = v;
    j["generators"] = std::move(gen);
    ordered_json syz = ordered_json::object();
    for (const auto& [t, v] : res.syzygies) syz[std::to_string(t)] = v;
    j["syzygies"] = std::move(syz);
    return j;
}

ordered_json render(const DivisorClass& f) { return class_array(f); }

ordered_json render(const MuRankReport& rep, const DivisorClass& input) {
    ordered_json j;
    j["class"] = class_array(input);
    j["ker"] = rep.ker;
    j["cok"] = rep.cok;
    ordered_json trace = ordered_json::array();
    for (const MuTraceEvent& ev : rep.trace) {
        ordered_json e;
        e["case"] = to_string(ev.kind);
        e["at"] = class_array(ev.cls);
        if (ev.subtracted) e["subtract"] = class_array(ev.subtracted->cls);
        if (ev.kind == MuCase::case_c_ii) e["r"] = ev.r;
        e["ker"] = ev.ker;
        e["cok"] = ev.cok;
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    return j;
}

ordered_json render(const CurveClass& c) {
    ordered_json j;
    j["class"] = class_array(c.cls);
    j["kind"] = c.kind == CurveKind::exceptional ? "exceptional" : "square-zero";
    j["lambda"] = c.lambda;
    j["Lambda"] = c.Lambda;
    j["m_C"] = c.max_point_mult;
    return j;
}

ordered_json render(const CompareLine& line) {
    ordered_json j;
    j["mults"] = line.mults;
    j["t"] = line.t;
    j["engine"] = {{"h", line.engine_h}, {"ker", line.engine_ker}, {"cok", line.engine_cok}};
    j["oracle"] = {{"h", line.oracle_h}, {"ker", line.oracle_ker}, {"cok", line.oracle_cok}};
    j["match"] = line.match();
    return j;
}

}  // namespace fatpoints
