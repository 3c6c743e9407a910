#pragma once

#include "okb/okb.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace okb::cli {

enum class Command { cones, volume, restricted, body, slice, global, zariski, polygon, sympow };
enum class Output { json, svg };

/// A fully parsed request. Which optional fields are required depends on the command.
struct JobSpec {
    Command command = Command::cones;
    HNData hn = HNData::semistable(2, Rat(0));
    std::optional<std::pair<Rat, Rat>> cls; // (a, b)
    std::optional<Rat> t;
    std::optional<Rat> tau;
    std::optional<Permutation> w;
    std::optional<unsigned> m;
    bool through = false;
    Output output = Output::json;
    unsigned svg_scale = 100;
};

Command parse_command(const std::string& name);
const char* command_name(Command c);

/// "r1:mu1,r2:mu2,…" with slopes as integers or p/q.
HNData parse_hn(const std::string& text);
/// "a,b"
std::pair<Rat, Rat> parse_class(const std::string& text);
/// "w(1),w(2),…", 1-based.
Permutation parse_permutation(const std::string& text);

/// Reads a JobSpec document (the --stdin form).
JobSpec job_from_json(const nlohmann::json& doc);

/// Throws Error{InvalidArgument} when a command-specific field is missing.
void validate(const JobSpec& job);

/// Runs the job and returns the output document (JSON text or SVG).
std::string run(const JobSpec& job);

nlohmann::json to_json(const Rat& q);
nlohmann::json to_json(const HRep& h);
nlohmann::json to_json(const VRep& v);
nlohmann::json to_json(const DivisorClass& c);
HRep hrep_from_json(const nlohmann::json& doc);

nlohmann::json error_json(const std::string& kind, const std::string& message);

/// SVG drawing of a 2-D convex polygon with axes and rational vertex labels.
std::string render_svg(const VRep& v, unsigned scale, const std::string& x_label, const std::string& y_label);

} // namespace okb::cli
