#include "equimon/group.hpp"

#include <map>
#include <queue>
#include <string>

#include "equimon/errors.hpp"

namespace equimon {

GroupTable GroupTable::from_generators(const std::vector<Perm>& generators,
                                       Point degree, std::uint32_t max_order) {
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw Error("degree mismatch: generator has degree " +
                  std::to_string(g.degree()) + ", expected " +
                  std::to_string(degree));
  }

  GroupTable table;
  table.degree_ = degree;

  std::map<Perm, Elem> index_of;
  std::queue<Elem> frontier;

  table.elements_.push_back(Perm::identity(degree));
  index_of.emplace(table.elements_[0], 0);
  frontier.push(0);

  while (!frontier.empty()) {
    Elem cur = frontier.front();
    frontier.pop();
    for (const Perm& gen : generators) {
      Perm next = compose(table.elements_[cur], gen);
      auto [it, inserted] = index_of.emplace(next, static_cast<Elem>(table.elements_.size()));
      if (inserted) {
        if (table.elements_.size() >= max_order)
          throw Error("group too large: closure exceeds max order " +
                      std::to_string(max_order));
        table.elements_.push_back(std::move(next));
        frontier.push(it->second);
      }
    }
  }

  const std::uint32_t n = table.order();
  table.mul_.resize(static_cast<std::size_t>(n) * n);
  table.inv_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      table.mul_[a * n + b] = index_of.at(compose(table.elements_[a], table.elements_[b]));
    table.inv_[a] = index_of.at(table.elements_[a].inverse());
  }

  table.generator_indices_.reserve(generators.size());
  for (const Perm& g : generators) table.generator_indices_.push_back(index_of.at(g));

  return table;
}

}  // namespace equimon
