#include "tallcol/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tallcol::io {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

nlohmann::ordered_json profile_json(const ColumnProfile& p) {
    nlohmann::ordered_json j;
    j["bc"] = bc_name(p.bc);
    j["lambda"] = p.lambda;
    j["s_min"] = p.s_min;
    j["extended"] = p.extended;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& s : p.samples)
        rows.push_back({s.s, s.a, s.b, s.theta, s.extended ? 1 : 0});
    j["columns"] = {"s", "a", "b", "theta", "extended"};
    j["samples"] = std::move(rows);
    return j;
}

}  // namespace

std::string bc_name(BoundaryKind bc) {
    return bc == BoundaryKind::Clamped ? "clamped" : "hinged";
}

BoundaryKind bc_from_name(const std::string& name) {
    if (name == "clamped") return BoundaryKind::Clamped;
    if (name == "hinged") return BoundaryKind::Hinged;
    throw std::invalid_argument("unknown boundary kind: " + name);
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_profile_csv(const ColumnProfile& p, const std::string& path) {
    auto out = open_out(path);
    out << "s,a,b,theta,extended\n";
    for (const auto& s : p.samples)
        out << format_double(s.s) << ',' << format_double(s.a) << ','
            << format_double(s.b) << ',' << format_double(s.theta) << ','
            << (s.extended ? 1 : 0) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_profile_json(const ColumnProfile& p, const std::string& path) {
    auto out = open_out(path);
    out << profile_json(p).dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_trajectory_csv(const Solution& sol, const std::string& path) {
    auto out = open_out(path);
    out << "t,tau,w,beta,alpha\n";
    for (const auto& smp : sol.trajectory)
        out << format_double(smp.t) << ',' << format_double(smp.state.tau) << ','
            << format_double(smp.state.w) << ',' << format_double(smp.state.beta)
            << ',' << format_double(smp.state.alpha) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_summary_json(const Summary& s, const std::string& path) {
    nlohmann::ordered_json j;
    j["bc"] = s.bc;
    j["lambda"] = s.lambda;
    j["delta"] = s.delta;
    j["t_stop"] = s.t_stop;
    j["volume"] = s.volume;
    j["rel_tol"] = s.rel_tol;
    j["abs_tol"] = s.abs_tol;
    j["n_points"] = s.n_points;
    j["s_floor"] = s.s_floor;
    j["format"] = s.format;
    auto out = open_out(path);
    out << j.dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

Summary read_summary_json(const std::string& path) {
    auto in = open_in(path);
    nlohmann::json j;
    in >> j;
    Summary s;
    s.bc = j.at("bc").get<std::string>();
    s.lambda = j.at("lambda").get<double>();
    s.delta = j.at("delta").get<double>();
    s.t_stop = j.at("t_stop").get<double>();
    s.volume = j.at("volume").get<double>();
    s.rel_tol = j.at("rel_tol").get<double>();
    s.abs_tol = j.at("abs_tol").get<double>();
    s.n_points = j.at("n_points").get<int>();
    s.s_floor = j.at("s_floor").get<double>();
    s.format = j.at("format").get<std::string>();
    return s;
}

ColumnProfile read_profile(const std::string& path, const std::string& format,
                           BoundaryKind bc, double lambda) {
    ColumnProfile p{};
    p.bc = bc;
    p.lambda = lambda;
    p.s_min = 0.0;
    p.extended = false;

    if (format == "json") {
        auto in = open_in(path);
        nlohmann::json j;
        in >> j;
        p.s_min = j.at("s_min").get<double>();
        p.extended = j.at("extended").get<bool>();
        for (const auto& row : j.at("samples")) {
            ProfileSample s{};
            s.s = row.at(0).get<double>();
            s.a = row.at(1).get<double>();
            s.b = row.at(2).get<double>();
            s.theta = row.at(3).get<double>();
            s.extended = row.at(4).get<int>() != 0;
            p.samples.push_back(s);
        }
    } else {
        auto in = open_in(path);
        std::string line;
        if (!std::getline(in, line) || line != "s,a,b,theta,extended")
            throw std::runtime_error("bad profile header in " + path);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream row(line);
            std::string field;
            double vals[4];
            for (double& v : vals) {
                if (!std::getline(row, field, ','))
                    throw std::runtime_error("short profile row in " + path);
                v = std::stod(field);
            }
            if (!std::getline(row, field, ','))
                throw std::runtime_error("short profile row in " + path);
            ProfileSample s{vals[0], vals[1], vals[2], vals[3], field == "1"};
            p.samples.push_back(s);
            if (s.extended) p.extended = true;
        }
        p.s_min = p.samples.empty() ? 0.0 : p.samples.front().s;
        for (const auto& s : p.samples)
            if (!s.extended) {
                p.s_min = s.s;
                break;
            }
    }
    if (p.samples.size() < 2)
        throw std::runtime_error("profile has fewer than 2 samples: " + path);
    return p;
}

}  // namespace tallcol::io
