#include "cli/job.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace okb::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

unsigned parse_positive(const std::string& s, const char* what) {
    std::string t = trim(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 9)
        throw Error(ErrorKind::InvalidArgument, std::string("malformed ") + what + " '" + s + "'");
    unsigned v = static_cast<unsigned>(std::stoul(t));
    if (v == 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be positive");
    return v;
}

Rat rat_from_json(const json& j, const char* field) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' must be an integer or a \"p/q\" string");
}

json cls_json(const std::pair<Rat, Rat>& ab) { return json{{"a", to_json(ab.first)}, {"b", to_json(ab.second)}}; }

const std::pair<Rat, Rat>& need_class(const JobSpec& job) { return job.cls.value(); }

Permutation flag_of(const JobSpec& job) { return job.w.value_or(Permutation::identity(job.hn.rank())); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// Vertices of a convex polygon in counter-clockwise order, compared exactly.
std::vector<RatVec> ccw_order(std::vector<RatVec> p) {
    if (p.size() < 3) return p;
    Rat cx = 0, cy = 0;
    for (const auto& q : p) {
        cx += q[0];
        cy += q[1];
    }
    cx /= static_cast<unsigned long>(p.size());
    cy /= static_cast<unsigned long>(p.size());
    auto upper = [&](const RatVec& q) { return q[1] > cy || (q[1] == cy && q[0] > cx); };
    std::sort(p.begin(), p.end(), [&](const RatVec& a, const RatVec& b) {
        bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        Rat cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
        return cross > 0;
    });
    return p;
}

std::string emit(const JobSpec& job, const json& doc, const VRep* drawable, const char* xl, const char* yl) {
    if (job.output == Output::json) return doc.dump(2) + "\n";
    if (drawable == nullptr || drawable->dim != 2)
        throw Error(ErrorKind::InvalidArgument, "SVG output is only available for 2-D results");
    return render_svg(*drawable, job.svg_scale, xl, yl);
}

} // namespace

Command parse_command(const std::string& name) {
    static const std::pair<const char*, Command> table[] = {
        {"cones", Command::cones},     {"volume", Command::volume},   {"restricted", Command::restricted},
        {"body", Command::body},       {"slice", Command::slice},     {"global", Command::global},
        {"zariski", Command::zariski}, {"polygon", Command::polygon}, {"sympow", Command::sympow},
    };
    for (const auto& [n, c] : table)
        if (name == n) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + name + "'");
}

const char* command_name(Command c) {
    switch (c) {
    case Command::cones: return "cones";
    case Command::volume: return "volume";
    case Command::restricted: return "restricted";
    case Command::body: return "body";
    case Command::slice: return "slice";
    case Command::global: return "global";
    case Command::zariski: return "zariski";
    case Command::polygon: return "polygon";
    case Command::sympow: return "sympow";
    }
    return "?";
}

HNData parse_hn(const std::string& text) {
    std::vector<HNQuotient> q;
    for (const auto& item : split(text, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "HN entry '" + item + "' is not of the form rank:slope");
        q.push_back({parse_positive(item.substr(0, colon), "rank"), parse_rat(trim(item.substr(colon + 1)))});
    }
    return HNData(std::move(q));
}

std::pair<Rat, Rat> parse_class(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "class must be given as a,b");
    return {parse_rat(trim(parts[0])), parse_rat(trim(parts[1]))};
}

Permutation parse_permutation(const std::string& text) {
    std::vector<unsigned> w;
    for (const auto& item : split(text, ',')) w.push_back(parse_positive(item, "permutation entry"));
    return Permutation(std::move(w));
}

JobSpec job_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::InvalidArgument, "job document must be a JSON object");
    JobSpec job;
    if (!doc.contains("command") || !doc["command"].is_string())
        throw Error(ErrorKind::InvalidArgument, "job needs a string field 'command'");
    job.command = parse_command(doc["command"].get<std::string>());
    if (!doc.contains("hn")) throw Error(ErrorKind::InvalidArgument, "job needs field 'hn'");
    const json& hn = doc["hn"];
    if (hn.is_string()) {
        job.hn = parse_hn(hn.get<std::string>());
    } else if (hn.is_array()) {
        std::vector<HNQuotient> q;
        for (const auto& e : hn) {
            if (!e.is_object() || !e.contains("rank") || !e.contains("slope") || !e["rank"].is_number_unsigned())
                throw Error(ErrorKind::InvalidArgument, "hn entries must be {\"rank\": n, \"slope\": \"p/q\"}");
            q.push_back({e["rank"].get<unsigned>(), rat_from_json(e["slope"], "slope")});
        }
        job.hn = HNData(std::move(q));
    } else {
        throw Error(ErrorKind::InvalidArgument, "field 'hn' must be a string or an array");
    }
    if (doc.contains("class")) {
        const json& c = doc["class"];
        if (c.is_string())
            job.cls = parse_class(c.get<std::string>());
        else if (c.is_array() && c.size() == 2)
            job.cls = std::make_pair(rat_from_json(c[0], "class"), rat_from_json(c[1], "class"));
        else
            throw Error(ErrorKind::InvalidArgument, "field 'class' must be \"a,b\" or [a, b]");
    }
    if (doc.contains("t")) job.t = rat_from_json(doc["t"], "t");
    if (doc.contains("tau")) job.tau = rat_from_json(doc["tau"], "tau");
    if (doc.contains("w")) {
        const json& w = doc["w"];
        if (w.is_string()) {
            job.w = parse_permutation(w.get<std::string>());
        } else if (w.is_array()) {
            std::vector<unsigned> img;
            for (const auto& e : w) {
                if (!e.is_number_unsigned()) throw Error(ErrorKind::InvalidArgument, "permutation entries must be positive integers");
                img.push_back(e.get<unsigned>());
            }
            job.w = Permutation(std::move(img));
        } else {
            throw Error(ErrorKind::InvalidArgument, "field 'w' must be a string or an array");
        }
    }
    if (doc.contains("m")) {
        if (!doc["m"].is_number_unsigned() || doc["m"].get<unsigned>() == 0)
            throw Error(ErrorKind::InvalidArgument, "field 'm' must be a positive integer");
        job.m = doc["m"].get<unsigned>();
    }
    if (doc.contains("through")) {
        if (!doc["through"].is_boolean()) throw Error(ErrorKind::InvalidArgument, "field 'through' must be a boolean");
        job.through = doc["through"].get<bool>();
    }
    if (doc.contains("output")) {
        const std::string o = doc["output"].is_string() ? doc["output"].get<std::string>() : "";
        if (o == "json")
            job.output = Output::json;
        else if (o == "svg")
            job.output = Output::svg;
        else
            throw Error(ErrorKind::InvalidArgument, "field 'output' must be \"json\" or \"svg\"");
    }
    if (doc.contains("svg_scale")) {
        if (!doc["svg_scale"].is_number_unsigned() || doc["svg_scale"].get<unsigned>() == 0)
            throw Error(ErrorKind::InvalidArgument, "field 'svg_scale' must be a positive integer");
        job.svg_scale = doc["svg_scale"].get<unsigned>();
    }
    return job;
}

void validate(const JobSpec& job) {
    auto need = [&](bool present, const char* what) {
        if (!present)
            throw Error(ErrorKind::InvalidArgument, std::string(command_name(job.command)) + " requires " + what);
    };
    switch (job.command) {
    case Command::cones:
    case Command::global: break;
    case Command::volume:
        need(job.t.has_value() != job.cls.has_value(), "exactly one of --t or --class");
        break;
    case Command::restricted: need(job.t.has_value(), "--t"); break;
    case Command::body:
    case Command::zariski:
    case Command::polygon: need(job.cls.has_value(), "--class"); break;
    case Command::slice:
        need(job.cls.has_value(), "--class");
        need(job.tau.has_value(), "--tau");
        break;
    case Command::sympow: need(job.m.has_value(), "--m"); break;
    }
    if (job.w && job.w->size() != job.hn.rank())
        throw Error(ErrorKind::InvalidArgument, "permutation size must equal the rank");
}

json to_json(const Rat& q) { return to_string(q); }

json to_json(const HRep& h) {
    json hs = json::array();
    for (const auto& s : h.halfspaces()) {
        json n = json::array();
        for (const auto& c : s.normal) n.push_back(to_json(c));
        hs.push_back({{"normal", n}, {"offset", to_json(s.offset)}});
    }
    return {{"dim", h.dim()}, {"halfspaces", hs}};
}

json to_json(const VRep& v) {
    json vs = json::array();
    for (const auto& x : v.vertices) {
        json p = json::array();
        for (const auto& c : x) p.push_back(to_json(c));
        vs.push_back(p);
    }
    return {{"dim", v.dim}, {"vertices", vs}};
}

json to_json(const DivisorClass& c) { return {{"xi", to_json(c.xi)}, {"f", to_json(c.f)}}; }

HRep hrep_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("halfspaces"))
        throw Error(ErrorKind::InvalidArgument, "H-rep document needs 'dim' and 'halfspaces'");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<HalfSpace> hs;
    for (const auto& s : doc["halfspaces"]) {
        RatVec normal;
        for (const auto& c : s.at("normal")) normal.push_back(rat_from_json(c, "normal"));
        hs.push_back({std::move(normal), rat_from_json(s.at("offset"), "offset")});
    }
    return HRep(dim, std::move(hs));
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string run(const JobSpec& job) {
    validate(job);
    const HNData& hn = job.hn;
    switch (job.command) {
    case Command::cones: {
        auto gens = [](const ConeGenerators& g) { return json::array({to_json(g.slope_ray), to_json(g.fiber_ray)}); };
        json doc = {
            {"rank", hn.rank()},
            {"degree", to_json(hn.degree())},
            {"slope", to_json(hn.slope())},
            {"mu_min", to_json(hn.mu_min())},
            {"mu_max", to_json(hn.mu_max())},
            {"nef", gens(nef_cone(hn))},
            {"psef", gens(psef_cone(hn))},
            {"semistable", is_semistable(hn)},
        };
        return emit(job, doc, nullptr, "", "");
    }
    case Command::volume: {
        json doc;
        if (job.t) {
            doc = {{"wolfe", to_json(wolfe_volume(hn, *job.t))},
                   {"chen", to_json(chen_volume(hn, *job.t))},
                   {"restricted", to_json(restricted_volume(hn, *job.t))}};
        } else {
            const auto& [a, b] = need_class(job);
            doc = {{"volume", to_json(volume_class(hn, a, b))},
                   {"top_self_intersection", to_json(top_self_intersection(hn, a, b))},
                   {"class", cls_json({a, b})}};
        }
        return emit(job, doc, nullptr, "", "");
    }
    case Command::restricted: {
        json doc = {{"restricted", to_json(restricted_volume(hn, *job.t))}};
        if (job.tau) doc["slice_volume"] = to_json(slice_volume(hn, *job.t, *job.tau));
        return emit(job, doc, nullptr, "", "");
    }
    case Command::body: {
        const auto& [a, b] = need_class(job);
        BodySpec spec(hn, a, b, flag_of(job));
        HRep h = body(spec);
        VRep v = vertex_enumerate(h);
        json doc = {
            {"dim", h.dim()},
            {"hrep", to_json(h)},
            {"vrep", to_json(v)},
            {"volume", to_json(volume(h))},
            {"class_volume", to_json(volume_class(hn, a, b))},
            {"t_star", to_json(spec.t_star())},
            {"projection", json::array({to_json(projection_interval(spec).first), to_json(projection_interval(spec).second)})},
        };
        return emit(job, doc, &v, "nu_1", "nu_2");
    }
    case Command::slice: {
        const auto& [a, b] = need_class(job);
        BodySpec spec(hn, a, b, flag_of(job));
        HRep h = slice(spec, *job.tau);
        VRep v = vertex_enumerate(h);
        json doc = {{"dim", h.dim()}, {"hrep", to_json(h)}, {"vrep", to_json(v)}, {"volume", to_json(volume(h))}};
        return emit(job, doc, &v, "nu_2", "nu_3");
    }
    case Command::global: {
        GlobalBody g = global_body(hn, flag_of(job));
        json coords = json::array();
        for (unsigned i = 1; i <= hn.rank(); ++i) coords.push_back("nu_" + std::to_string(i));
        coords.push_back("a");
        coords.push_back("b");
        json doc = {{"dim", g.cone.dim()}, {"coordinates", coords}, {"hrep", to_json(g.cone)}};
        return emit(job, doc, nullptr, "", "");
    }
    case Command::zariski: {
        const auto& [a, b] = need_class(job);
        ZariskiResult z = zariski(hn, a, b);
        json doc = {
            {"positive", to_json(z.positive)},
            {"negative", to_json(z.negative)},
            {"t_star", to_json(z.t_star)},
            {"nef", z.t_star >= 0},
            {"positive_square", to_json(intersect(hn, z.positive, z.positive))},
            {"volume", to_json(volume_class(hn, a, b))},
        };
        return emit(job, doc, nullptr, "", "");
    }
    case Command::polygon: {
        const auto& [a, b] = need_class(job);
        VRep v = polygon(hn, a, b, job.through);
        json doc = {{"vrep", to_json(v)}, {"through", job.through}, {"area", to_json(volume(body(BodySpec(
                        hn, a, b, job.through ? Permutation::identity(2) : Permutation::reversal(2)))))}};
        return emit(job, doc, &v, "nu_1", "nu_2");
    }
    case Command::sympow: {
        SymPowerHN s = sym_power_hn(hn, *job.m);
        json groups = json::array();
        for (const auto& g : s.groups) {
            json parts = json::array();
            for (const auto& p : g.parts) parts.push_back({{"partition", p.partition}, {"rank", p.rank.get_str()}});
            groups.push_back({{"slope", to_json(g.slope)}, {"rank", g.rank.get_str()}, {"parts", parts}});
        }
        auto [lo, hi] = sym_mu_extremes(hn, *job.m);
        json doc = {{"m", s.m}, {"total_rank", s.total_rank().get_str()}, {"groups", groups},
                    {"mu_min", to_json(lo)}, {"mu_max", to_json(hi)}};
        return emit(job, doc, nullptr, "", "");
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unhandled command");
}

std::string render_svg(const VRep& v, unsigned scale, const std::string& x_label, const std::string& y_label) {
    if (v.dim != 2) throw Error(ErrorKind::InvalidArgument, "SVG output is only available for 2-D results");
    // Bounding box of the polygon together with the origin, so both axes show.
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const auto& p : v.vertices) {
        minx = std::min(minx, p[0].get_d());
        maxx = std::max(maxx, p[0].get_d());
        miny = std::min(miny, p[1].get_d());
        maxy = std::max(maxy, p[1].get_d());
    }
    double w = maxx - minx, h = maxy - miny;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    minx -= 0.05 * w;
    maxx += 0.05 * w;
    miny -= 0.05 * h;
    maxy += 0.05 * h;
    const double s = scale;
    auto X = [&](double x) { return fmt((x - minx) * s); };
    auto Y = [&](double y) { return fmt((maxy - y) * s); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((maxx - minx) * s) << "\" height=\""
        << fmt((maxy - miny) * s) << "\" viewBox=\"0 0 " << fmt((maxx - minx) * s) << " " << fmt((maxy - miny) * s)
        << "\">\n";
    out << "  <line x1=\"" << X(minx) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(maxx) << "\" y2=\"" << Y(0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(miny) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(maxy)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << X(maxx) << "\" y=\"" << Y(0) << "\" font-size=\"10\" text-anchor=\"end\" dy=\"-3\">"
        << x_label << "</text>\n";
    out << "  <text x=\"" << X(0) << "\" y=\"" << Y(maxy) << "\" font-size=\"10\" dx=\"3\" dy=\"10\">" << y_label
        << "</text>\n";
    const auto ordered = ccw_order(v.vertices);
    if (!ordered.empty()) {
        out << "  <polygon points=\"";
        for (std::size_t i = 0; i < ordered.size(); ++i)
            out << (i ? " " : "") << X(ordered[i][0].get_d()) << "," << Y(ordered[i][1].get_d());
        out << "\" fill=\"gray\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : ordered) {
        out << "  <circle cx=\"" << X(p[0].get_d()) << "\" cy=\"" << Y(p[1].get_d()) << "\" r=\"2\"/>\n";
        out << "  <text x=\"" << X(p[0].get_d()) << "\" y=\"" << Y(p[1].get_d())
            << "\" font-size=\"10\" dx=\"3\" dy=\"-3\">(" << to_string(p[0]) << ", " << to_string(p[1])
            << ")</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace okb::cli
