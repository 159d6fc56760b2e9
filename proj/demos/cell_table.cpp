// Cells of U^- v I in I w I for one reduced word: endpoint, polynomial,
// path kinds. Usage: cell_table [TYPE] [WORD]
#include <iostream>
#include <string>

#include "affold/folding.hpp"

int main(int argc, char** argv)
{
  using namespace affold;
  const std::string type = argc > 1 ? argv[1] : "A2";
  const std::string word = argc > 2 ? argv[2] : "0,1,2,0";
  try {
    const AffineWeylGroup W(cartan_from_label(type));
    const Word w = parse_word(word);
    CountPolynomial total;
    for (const auto& [v, cell] : cells_by_endpoint(W, w)) {
      const auto rw = W.reduced_word(v);
      std::cout << (rw.empty() ? "e" : word_to_string(rw)) << "\t" << cell.count.to_string() << "\t";
      for (const auto& p : cell.paths) std::cout << p.kinds_string() << " ";
      std::cout << "\n";
      total += cell.count;
    }
    std::cout << "total\t" << total.to_string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
