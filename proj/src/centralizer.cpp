#include "pcconj/centralizer.hpp"

#include <unordered_set>

#include "pcconj/conjugacy.hpp"

namespace pcconj {

std::vector<NormalForm> centralizer_elements(const NormalForm& a) {
  const auto graph = summit_set(a);
  const auto& x = graph.from_input();
  const auto x_inv = x.inverse();

  std::vector<NormalForm> path_inverse;
  path_inverse.reserve(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    path_inverse.push_back(graph.to_vertex(i).inverse());
  }

  std::vector<NormalForm> out;
  std::unordered_set<NormalForm> seen;
  for (std::size_t k = 0; k < graph.arrows().size(); ++k) {
    const auto& arrow = graph.arrows()[k];
    if (graph.tree_arrow(arrow.target) == k) continue;  // tree edge: trivial loop
    auto loop = graph.to_vertex(arrow.source);
    loop *= NormalForm::from_simple(arrow.simple);
    loop *= path_inverse[arrow.target];
    auto g = x * loop * x_inv;
    if (g.is_identity() || !seen.insert(g).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<BraidWord> centralizer_generators(const BraidWord& a) {
  std::vector<BraidWord> out;
  for (const auto& g : centralizer_elements(normal_form(a))) {
    out.push_back(g.word());
  }
  return out;
}

}  // namespace pcconj
