#include "mmcc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mmcc {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
    EdgeListData data;
    std::string line;
    int line_no = 0;
    auto intern = [&](long long ext) {
        auto [it, fresh] = data.to_internal.try_emplace(ext, data.n);
        if (fresh) {
            data.external_ids.push_back(ext);
            ++data.n;
        }
        return it->second;
    };
    std::vector<std::pair<int, int>> raw;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream iss(line);
        long long a, b;
        std::string extra;
        if (!(iss >> a >> b) || (iss >> extra))
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected two integer vertex ids");
        int u = intern(a);
        int v = intern(b);
        raw.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    data.edges = std::move(raw);
    return data;
}

void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<long long>* external_ids) {
    for (const auto& [u, v] : g.edge_list()) {
        if (external_ids)
            out << (*external_ids)[static_cast<std::size_t>(u)] << ' '
                << (*external_ids)[static_cast<std::size_t>(v)] << '\n';
        else
            out << u << ' ' << v << '\n';
    }
}

CircleSet parse_circles(std::istream& in, const EdgeListData& ids) {
    CircleSet set;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream iss(line);
        Circle c;
        if (!(iss >> c.label))
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected a circle label");
        std::string token;
        while (iss >> token) {
            long long ext;
            try {
                std::size_t used = 0;
                ext = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                         ": bad member id '" + token + "'");
            }
            auto it = ids.to_internal.find(ext);
            if (it == ids.to_internal.end())
                ++set.dropped_members;
            else
                c.members.push_back(it->second);
        }
        std::sort(c.members.begin(), c.members.end());
        c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
        set.circles.push_back(std::move(c));
    }
    return set;
}

void dump_metric_csv(std::ostream& out, const DistanceOracle& oracle) {
    if (oracle.kind() == OracleKind::sparse_exact) {
        for (int u = 0; u < oracle.n(); ++u) {
            for (const auto& e : oracle.sparse_row(u)) {
                if (e.v <= u) continue;
                Rational d = oracle.distance(u, e.v);
                out << u << ',' << e.v << ',' << d.num << ',' << d.den << '\n';
            }
        }
        return;
    }
    for (int u = 0; u < oracle.n(); ++u) {
        for (int v = u + 1; v < oracle.n(); ++v) {
            if (oracle.kind() == OracleKind::dense_exact) {
                Rational d = oracle.distance(u, v);
                out << u << ',' << v << ',' << d.num << ',' << d.den << '\n';
            } else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", oracle.distance_value(u, v));
                out << u << ',' << v << ',' << buf << '\n';
            }
        }
    }
}

}  // namespace mmcc
