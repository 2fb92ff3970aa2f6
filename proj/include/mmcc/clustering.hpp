#pragma once

#include <stdexcept>
#include <vector>

namespace mmcc {

// Partition of [0,n) into labeled clusters; ids follow creation order.
struct Clustering {
    std::vector<int> assignment;            // vertex -> cluster id
    std::vector<std::vector<int>> clusters; // sorted member lists
    std::vector<int> centers;               // one per cluster where the
                                            // algorithm has a notion of center
    int n() const { return static_cast<int>(assignment.size()); }
    int num_clusters() const { return static_cast<int>(clusters.size()); }

    static Clustering from_assignment(std::vector<int> assignment, int num_clusters) {
        Clustering c;
        c.assignment = std::move(assignment);
        c.clusters.resize(static_cast<std::size_t>(num_clusters));
        for (int u = 0; u < c.n(); ++u) {
            int t = c.assignment[static_cast<std::size_t>(u)];
            if (t < 0 || t >= num_clusters)
                throw std::invalid_argument("cluster id out of range");
            c.clusters[static_cast<std::size_t>(t)].push_back(u);
        }
        for (const auto& cl : c.clusters)
            if (cl.empty()) throw std::invalid_argument("empty cluster in assignment");
        return c;
    }
};

}  // namespace mmcc
