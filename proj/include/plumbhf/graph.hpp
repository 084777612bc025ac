#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plumbhf {

// Weighted tree. Coordinates are file order; ids are the labels used in the file.
struct PlumbingGraph {
    std::vector<int> ids;
    std::vector<int> weights;
    std::vector<std::pair<int, int>> edges;  // coordinate pairs

    int size() const { return static_cast<int>(weights.size()); }
    int degree(int v) const;
    std::vector<std::vector<int>> adjacency() const;
};

class GraphError : public std::runtime_error {
public:
    GraphError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Ids default to 0..n-1 in coordinate order.
PlumbingGraph make_graph(std::vector<int> weights, std::vector<std::pair<int, int>> edges);

// Structural defect (self-loop, multi-edge, disconnected, cycle, bad ids), if any.
std::optional<std::string> structure_error(const PlumbingGraph& g);

PlumbingGraph parse_graph(std::string_view text);
PlumbingGraph load_graph(const std::string& path);
std::string to_text(const PlumbingGraph& g);

// Star with one chain per leg, each chain listed outward from the centre.
PlumbingGraph star_graph(int centre, const std::vector<std::vector<int>>& legs);

}  // namespace plumbhf
