#include "mqd/quiver.hpp"

#include <tuple>

namespace mqd {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw input_error("empty vertex name");
    if (!vertex_by_name_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw input_error("duplicate vertex name: " + vertices_[i]);
  }
  for (auto& [name, src, tgt] : arrows) {
    if (name.empty()) throw input_error("empty arrow name");
    auto s = vertex_by_name_.find(src);
    auto t = vertex_by_name_.find(tgt);
    if (s == vertex_by_name_.end())
      throw input_error("arrow " + name + " has unknown source vertex: " + src);
    if (t == vertex_by_name_.end())
      throw input_error("arrow " + name + " has unknown target vertex: " + tgt);
    if (!arrow_by_name_.emplace(name, static_cast<int>(arrows_.size())).second)
      throw input_error("duplicate arrow name: " + name);
    arrows_.push_back({name, s->second, t->second});
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) throw input_error("unknown vertex: " + name);
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) throw input_error("unknown arrow: " + name);
  return it->second;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name != o.arrows_[i].name || arrows_[i].source != o.arrows_[i].source ||
        arrows_[i].target != o.arrows_[i].target)
      return false;
  return true;
}

} // namespace mqd
