#include "swcontract/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace swc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidInput("at " + path + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

double as_number(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

}  // namespace

Json jnum(double v) {
    if (!std::isfinite(v)) return Json(v);  // serialized as null, the JSON convention
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return Json(std::strtod(buf, nullptr));
}

Json vector_to_json(const Vec& x) {
    Json j = Json::array();
    for (double v : x) j.push_back(jnum(v));
    return j;
}

Vec vector_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    Vec out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Json matrix_to_json(const Mat& a) {
    Json j = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(jnum(a(i, c)));
        j.push_back(std::move(row));
    }
    return j;
}

Mat matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(path + "[0]", "expected a non-empty row");
    Mat a(static_cast<int>(j.size()), static_cast<int>(cols));
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) fail(rp, "ragged matrix row");
        for (size_t c = 0; c < cols; ++c)
            a(static_cast<int>(i), static_cast<int>(c)) =
                as_number(j[i][c], rp + "[" + std::to_string(c) + "]");
    }
    return a;
}

namespace {

Json lp_p_to_json(LpOrder p) {
    switch (p) {
        case LpOrder::one: return Json(1);
        case LpOrder::two: return Json(2);
        case LpOrder::inf: return Json("inf");
    }
    return Json();
}

LpOrder lp_p_from_json(const Json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return LpOrder::inf;
        fail(path, "p must be 1, 2 or \"inf\"");
    }
    if (j.is_number_integer()) {
        const int p = j.get<int>();
        if (p == 1) return LpOrder::one;
        if (p == 2) return LpOrder::two;
    }
    fail(path, "p must be 1, 2 or \"inf\"");
}

Json basic_to_json(const BasicNorm& b) { return norm_to_json(from_basic(b)); }

}  // namespace

Json norm_to_json(const NormSpec& spec) {
    Json j;
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) {
        j["type"] = "lp";
        j["p"] = lp_p_to_json(lp->p);
        j["weights"] = vector_to_json(lp->weights);
    } else if (const auto* q = std::get_if<Quadratic>(&spec)) {
        j["type"] = "quadratic";
        j["P"] = matrix_to_json(q->P);
    } else {
        const auto& s = std::get<Structured>(spec);
        j["type"] = "structured";
        Json part = Json::array();
        for (int b : s.partition) part.push_back(b);
        j["partition"] = std::move(part);
        Json inner = Json::array();
        for (const BasicNorm& b : s.inner) inner.push_back(basic_to_json(b));
        j["inner"] = std::move(inner);
        j["outer"] = basic_to_json(s.outer);
    }
    return j;
}

NormSpec norm_from_json(const Json& j, const std::string& path) {
    const Json& type = require(j, "type", path);
    if (!type.is_string()) fail(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "lp") {
        WeightedLp lp;
        lp.p = lp_p_from_json(require(j, "p", path), path + ".p");
        lp.weights = vector_from_json(require(j, "weights", path), path + ".weights");
        NormSpec spec = lp;
        validate_norm(spec);
        return spec;
    }
    if (t == "quadratic") {
        Mat p;
        if (j.contains("P"))
            p = matrix_from_json(j["P"], path + ".P");
        else if (j.contains("Theta")) {
            const Mat theta = matrix_from_json(j["Theta"], path + ".Theta");
            p = quadratic_from_factor(theta).P;
        } else
            fail(path, "quadratic norm needs P or Theta");
        NormSpec spec = Quadratic{p};
        validate_norm(spec);
        return spec;
    }
    if (t == "structured") {
        Structured s;
        const Json& part = require(j, "partition", path);
        if (!part.is_array()) fail(path + ".partition", "expected an array");
        for (size_t i = 0; i < part.size(); ++i)
            s.partition.push_back(as_int(part[i], path + ".partition[" + std::to_string(i) + "]"));
        const Json& inner = require(j, "inner", path);
        if (!inner.is_array()) fail(path + ".inner", "expected an array");
        for (size_t i = 0; i < inner.size(); ++i)
            s.inner.push_back(
                to_basic(norm_from_json(inner[i], path + ".inner[" + std::to_string(i) + "]")));
        s.outer = to_basic(norm_from_json(require(j, "outer", path), path + ".outer"));
        NormSpec spec = s;
        validate_norm(spec);
        return spec;
    }
    fail(path + ".type", "unknown norm type '" + t + "'");
}

Json signal_to_json(const SwitchingSignal& signal) {
    Json j;
    Json segs = Json::array();
    for (const Segment& s : signal.segments()) segs.push_back(Json::array({s.mode, jnum(s.dwell)}));
    j["segments"] = std::move(segs);
    j["periodic"] = signal.periodic();
    j["t0"] = jnum(signal.t0());
    return j;
}

SwitchingSignal signal_from_json(const Json& j, const std::string& path) {
    const Json& segs = require(j, "segments", path);
    if (!segs.is_array() || segs.empty()) fail(path + ".segments", "expected a non-empty array");
    std::vector<Segment> segments;
    for (size_t i = 0; i < segs.size(); ++i) {
        const std::string sp = path + ".segments[" + std::to_string(i) + "]";
        if (!segs[i].is_array() || segs[i].size() != 2) fail(sp, "expected [mode, dwell]");
        segments.push_back({as_int(segs[i][0], sp + "[0]"), as_number(segs[i][1], sp + "[1]")});
    }
    bool periodic = false;
    if (j.contains("periodic")) {
        if (!j["periodic"].is_boolean()) fail(path + ".periodic", "expected a boolean");
        periodic = j["periodic"].get<bool>();
    }
    double t0 = 0.0;
    if (j.contains("t0")) t0 = as_number(j["t0"], path + ".t0");
    try {
        return SwitchingSignal(segments, periodic, t0);
    } catch (const InvalidInput& e) {
        fail(path + ".segments", e.what());
    }
}

Json graph_to_json(const Graph& graph) {
    Json j;
    j["nodes"] = graph.nodes;
    Json edges = Json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    j["undirected"] = graph.undirected;
    return j;
}

Graph graph_from_json(const Json& j, const std::string& path) {
    Graph g;
    g.nodes = as_int(require(j, "nodes", path), path + ".nodes");
    const Json& edges = require(j, "edges", path);
    if (!edges.is_array()) fail(path + ".edges", "expected an array");
    for (size_t i = 0; i < edges.size(); ++i) {
        const std::string ep = path + ".edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) fail(ep, "expected [i, j]");
        g.edges.push_back({as_int(edges[i][0], ep + "[0]"), as_int(edges[i][1], ep + "[1]")});
    }
    if (j.contains("undirected")) {
        if (!j["undirected"].is_boolean()) fail(path + ".undirected", "expected a boolean");
        g.undirected = j["undirected"].get<bool>();
    }
    try {
        validate_graph(g);
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
    return g;
}

Json measure_to_json(const MeasureResult& r) {
    Json j;
    j["value"] = jnum(r.value);
    j["method"] = r.method == MeasureResult::Method::closed_form ? "closed_form" : "limit_oracle";
    return j;
}

Json beta_to_json(const BetaResult& r) {
    Json j;
    j["value"] = jnum(r.value);
    switch (r.kind) {
        case BetaResult::Kind::exact: j["kind"] = "exact"; break;
        case BetaResult::Kind::paper_bound: j["kind"] = "upper_bound"; break;
        case BetaResult::Kind::sampled_lower: j["kind"] = "sampled_lower"; break;
    }
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["c"] = jnum(c.c);
    j["satisfied"] = c.satisfied;
    j["c_min"] = jnum(c.c_min);
    j["kind"] = c.kind;
    Json b;
    b["alpha_term"] = jnum(c.breakdown.alpha_term);
    b["log_beta_term"] = jnum(c.breakdown.log_beta_term);
    b["binding_T"] = jnum(c.breakdown.binding_T);
    j["breakdown"] = std::move(b);
    Json w;
    w["T0"] = jnum(c.window_T0);
    w["Tmax"] = jnum(c.window_Tmax);
    j["window"] = std::move(w);
    if (c.literal_rate) {
        j["literal_rate"] = jnum(*c.literal_rate);
        j["forms_disagree"] = c.forms_disagree;
    }
    return j;
}

Json coppel_to_json(const CoppelReport& r) {
    Json j;
    j["max_ratio"] = jnum(r.max_ratio);
    j["violated"] = r.violated;
    j["tol"] = jnum(r.tol);
    j["alpha_precheck_ok"] = r.alpha_precheck_ok;
    j["alpha_gaps"] = vector_to_json(r.alpha_gaps);
    return j;
}

}  // namespace swc
