// Walks through the Hirzebruch surface F_d: roots, collections, the
// automorphism relating them, and the G_a^2 action in Cox coordinates.

#include <cstdlib>
#include <iostream>

#include "toric/toric.hpp"

int main(int argc, char** argv) {
  long d = argc > 1 ? std::atol(argv[1]) : 2;
  toric::Fan fan = toric::builtin::hirzebruch(d);

  for (const auto& r : toric::listed_roots(toric::all_roots(fan)))
    std::cout << "root " << toric::to_string(r.e) << " on ray " << r.ray << ": " << toric::render(toric::derivation(r))
              << "\n";

  auto collections = toric::complete_collections(fan);
  for (const auto& c : collections) {
    std::cout << "collection on rays";
    for (auto i : c.rays()) std::cout << " " << i;
    std::cout << "\n";
    for (const auto& line : toric::render(toric::action_formulas(fan, c))) std::cout << "  " << line << "\n";
  }
  if (collections.size() == 2) {
    auto w = toric::find_equivalence(fan, collections[0], collections[1]);
    std::cout << "gamma = " << toric::to_string(w.automorphism.matrix()) << "\n";
  }
  std::cout << "Cox degrees (canonical) " << toric::to_string(toric::canonical_degrees(toric::cox_presentation(fan)))
            << "\n";
}
