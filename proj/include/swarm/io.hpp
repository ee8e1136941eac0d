#ifndef SWARM_IO_HPP
#define SWARM_IO_HPP

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swarm/harness.hpp"
#include "swarm/solver.hpp"

namespace swarm {

inline constexpr const char* kCsvHeader =
    "function,dim,agents,q,mode,runs,successes,rate,mean_iters,mean_fevals,mean_gevals,"
    "errors,base_seed";

namespace detail {

// shortest round-trippable decimal form
inline std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return os.str();
}

}  // namespace detail

inline void write_csv(std::ostream& os, const BenchResult& result) {
    os << kCsvHeader << "\n";
    for (const auto& c : result.cells) {
        os << c.function << ',' << c.dim << ',' << c.agents << ','
           << detail::fmt_double(c.q) << ',' << to_string(c.mode) << ',' << c.runs << ','
           << c.successes << ',' << detail::fmt_double(c.rate) << ','
           << detail::fmt_double(c.mean_iters) << ',' << detail::fmt_double(c.mean_fevals)
           << ',' << detail::fmt_double(c.mean_gevals) << ',' << c.errors << ','
           << c.base_seed << "\n";
    }
}

inline nlohmann::json to_json(const CellResult& c) {
    return nlohmann::json{{"function", c.function},
                          {"dim", c.dim},
                          {"agents", c.agents},
                          {"q", c.q},
                          {"mode", to_string(c.mode)},
                          {"runs", c.runs},
                          {"successes", c.successes},
                          {"rate", c.rate},
                          {"mean_iters", c.mean_iters},
                          {"mean_fevals", c.mean_fevals},
                          {"mean_gevals", c.mean_gevals},
                          {"errors", c.errors},
                          {"base_seed", c.base_seed}};
}

inline void write_json(std::ostream& os, const BenchResult& result) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : result.cells) cells.push_back(to_json(c));
    os << nlohmann::json{{"cells", cells}}.dump(2) << "\n";
}

inline BenchResult read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw std::runtime_error("bad CSV header");
    BenchResult result;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 13) throw std::runtime_error("bad CSV row: " + line);
        CellResult c;
        c.function = fields[0];
        c.dim = std::stoul(fields[1]);
        c.agents = std::stoul(fields[2]);
        c.q = std::stod(fields[3]);
        c.mode = mode_from_string(fields[4]);
        c.runs = std::stoul(fields[5]);
        c.successes = std::stoul(fields[6]);
        c.rate = std::stod(fields[7]);
        c.mean_iters = std::stod(fields[8]);
        c.mean_fevals = std::stod(fields[9]);
        c.mean_gevals = std::stod(fields[10]);
        c.errors = std::stoul(fields[11]);
        c.base_seed = std::stoull(fields[12]);
        result.cells.push_back(std::move(c));
    }
    return result;
}

inline BenchResult read_json(std::istream& is) {
    const nlohmann::json j = nlohmann::json::parse(is);
    BenchResult result;
    for (const auto& jc : j.at("cells")) {
        CellResult c;
        c.function = jc.at("function").get<std::string>();
        c.dim = jc.at("dim").get<std::size_t>();
        c.agents = jc.at("agents").get<std::size_t>();
        c.q = jc.at("q").get<double>();
        c.mode = mode_from_string(jc.at("mode").get<std::string>());
        c.runs = jc.at("runs").get<std::size_t>();
        c.successes = jc.at("successes").get<std::size_t>();
        c.rate = jc.at("rate").get<double>();
        c.mean_iters = jc.at("mean_iters").get<double>();
        c.mean_fevals = jc.at("mean_fevals").get<double>();
        c.mean_gevals = jc.at("mean_gevals").get<double>();
        c.errors = jc.at("errors").get<std::size_t>();
        c.base_seed = jc.at("base_seed").get<std::uint64_t>();
        result.cells.push_back(std::move(c));
    }
    return result;
}

/// One JSON object per line, one line per iteration.
inline void write_trace(std::ostream& os, const RunResult& result) {
    for (const auto& rec : result.trace) {
        nlohmann::json j{{"n", rec.n},
                         {"n_active", rec.n_active},
                         {"f_min", rec.f_min},
                         {"f_max", rec.f_max},
                         {"minimizer_pos", rec.minimizer_pos},
                         {"heaviest_mass", rec.heaviest_mass},
                         {"heaviest_prev_pos", rec.heaviest_prev_pos},
                         {"total_evals", rec.total_evals},
                         {"total_grad_evals", rec.total_grad_evals},
                         {"mean_step", rec.mean_step}};
        os << j.dump() << "\n";
    }
}

}  // namespace swarm

#endif
