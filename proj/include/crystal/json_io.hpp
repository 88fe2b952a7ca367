#pragma once
// JSON encodings: tableau = rows, polynomial = [{exp_x2, coef}] sorted, rc = levels of [{len, rig}],
// tensor elements listed left to right with "order": "paper".

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fermionic.hpp"

namespace crystal::io {

using json = nlohmann::ordered_json;

inline json to_json(const Tableau& t) { return t.rows; }

inline Tableau tableau_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
    Tableau t(j.get<std::vector<std::vector<int>>>());
    if (!t.is_semistandard()) throw std::invalid_argument("tableau is not semistandard");
    return t;
}

inline json to_json(const QLaurent& p) {
    json a = json::array();
    for (auto& [e, c] : p.terms()) a.push_back({{"exp_x2", e}, {"coef", c}});
    return a;
}

inline json to_json(const Path& p) {
    json f = json::array();
    for (int k = p.length() - 1; k >= 0; --k) f.push_back({{"r", p.R[k].r}, {"s", p.R[k].s}, {"rows", to_json(p.b[k])}});
    return {{"n", p.n}, {"order", "paper"}, {"factors", f}};
}

// Accepts {"n": .., "factors": [{"rows": ..}, ..]} with factors left to right; r, s read off the rows.
inline Path path_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("factors")) throw std::invalid_argument("path needs \"n\" and \"factors\"");
    if (j.contains("order") && j["order"] != "paper") throw std::invalid_argument("only \"order\": \"paper\" is supported");
    int n = j["n"].get<int>();
    Rects R;
    std::vector<Tableau> b;
    auto& fs = j["factors"];
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        const json& rows = it->contains("rows") ? (*it)["rows"] : *it;
        Tableau t = tableau_from_json(rows);
        Partition sh = t.shape();
        if (sh.empty()) throw std::invalid_argument("empty factor");
        for (int x : sh)
            if (x != sh[0]) throw std::invalid_argument("factor is not rectangular");
        R.push_back({static_cast<int>(sh.size()), sh[0]});
        b.push_back(t);
    }
    return make_path(n, R, b);
}

inline json to_json(const RC& rc, const Rects* vacRt = nullptr, int levels = -1) {
    json a = json::array();
    auto nu = rc.parts();
    int L = levels < 0 ? rc.levels() : levels;
    for (int k = 1; k <= L; ++k) {
        json l = json::array();
        for (auto& s : rc.level(k)) {
            json x{{"len", s.len}, {"rig", s.rig}};
            if (vacRt) x["vac"] = vacancy(nu, *vacRt, k, s.len);
            l.push_back(x);
        }
        a.push_back(l);
    }
    return a;
}

inline RC rc_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("rigged configuration must be an array of levels");
    RC rc;
    for (auto& l : j) {
        std::vector<RString> v;
        for (auto& s : l) v.push_back({s.at("len").get<int>(), s.at("rig").get<int>()});
        rc.lv.push_back(v);
    }
    return rc.canon();
}

inline json to_json(const Rects& R) {
    json a = json::array();
    for (auto& x : R) a.push_back({x.r, x.s});
    return a;
}

inline json to_json(const VRects& R) {
    json a = json::array();
    for (auto& x : R) a.push_back({x.r, x.s});
    return a;
}

// rectangles as "2x1,1x3" (r x s) or [[r,s],..]; a bare integer is a column of that height
inline Rects parse_rects(const std::string& s) {
    Rects R;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        auto x = item.find('x');
        try {
            size_t used = 0;
            if (x == std::string::npos) {
                int r = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument("");
                R.push_back({r, 1});
            } else {
                int r = std::stoi(item.substr(0, x), &used);
                if (used != x) throw std::invalid_argument("");
                std::string rest = item.substr(x + 1);
                int c = std::stoi(rest, &used);
                if (used != rest.size()) throw std::invalid_argument("");
                R.push_back({r, c});
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cannot parse rectangle '" + item + "' (expected r x s like 2x1, or a height)");
        }
        if (R.back().r < 1 || R.back().s < 1) throw std::invalid_argument("rectangle dimensions must be positive");
    }
    return R;
}

inline Rects rects_from_json(const json& j) {
    if (j.is_string()) return parse_rects(j.get<std::string>());
    Rects R;
    for (auto& x : j) {
        if (x.is_number()) R.push_back({x.get<int>(), 1});
        else R.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
    }
    return R;
}

inline VRects to_vrects(const Rects& R) {
    VRects out;
    for (auto& x : R) out.push_back({x.r, x.s});
    return out;
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        size_t used = 0;
        int x;
        try {
            x = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cannot parse integer '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("cannot parse integer '" + item + "'");
        v.push_back(x);
    }
    return v;
}

inline json trace_to_json(const std::vector<TraceStep>& tr) {
    json a = json::array();
    int levels = 0;
    for (auto& st : tr) levels = std::max(levels, st.rc.levels());
    for (auto& st : tr) {
        json ell = json::array();
        for (int v : st.ell) ell.push_back(v >= kInfinity ? json("inf") : json(v));
        a.push_back({{"x", st.x},
                     {"block", st.block + 1},
                     {"c", st.c},
                     {"cprime", st.cprime},
                     {"ell", ell},
                     {"rc", to_json(st.rc, &st.Rt, levels)}});
    }
    return a;
}

inline json to_json(const XMReport& rep, bool timing = true) {
    json rows = json::array();
    for (auto& r : rep.rows)
        rows.push_back({{"Lambda", r.weight},
                        {"x_paths", to_json(r.x_paths)},
                        {"x_rc_filtered", to_json(r.x_rc)},
                        {"m_sum", to_json(r.m)},
                        {"verdict", r.ok() ? "pass" : "fail"}});
    std::string verdict = rep.ok() ? "pass" : "fail";
    if (rep.experimental) verdict = rep.ok() ? "experimental-pass" : "experimental-counterexample";
    json out{{"tag", rep.tag.name()}, {"n", rep.tag.n}, {"R", to_json(rep.R)}, {"Lambda", rows}, {"verdict", verdict}};
    if (auto* bad = rep.first_mismatch())
        out["counterexample"] = {{"Lambda", bad->weight},
                                 {"x_paths", to_json(bad->x_paths)},
                                 {"x_rc_filtered", to_json(bad->x_rc)},
                                 {"m_sum", to_json(bad->m)}};
    if (timing) out["runtime_ms"] = rep.runtime_ms;
    return out;
}

inline json load_json_arg(const std::string& arg) {
    std::string s = arg;
    auto first = s.find_first_not_of(" \t\n");
    if (first == std::string::npos || (s[first] != '{' && s[first] != '[')) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        s = buf.str();
    }
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace crystal::io
