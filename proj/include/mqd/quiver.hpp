#pragma once

#include <map>
#include <string>
#include <vector>

#include "mqd/errors.hpp"

namespace mqd {

struct Arrow {
  std::string name;
  int source;
  int target;
};

// Directed multigraph with named vertices and arrows.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertices() const { return vertices_; }

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  bool operator==(const Quiver& o) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_by_name_;
  std::map<std::string, int> arrow_by_name_;
};

} // namespace mqd
