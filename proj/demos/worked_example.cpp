// Runs the SL_3 executor on the word 2,1,0,2,0,1,0,2,0 and prints u, v, b and
// the factorization of u.
#include <iostream>

#include "affold/example8.hpp"

int main()
{
  using namespace affold;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<Rational> G(W);
  const auto st = execute_folding(G, example8::word(), example8::labels());

  std::cout << "u =\n" << st.u.to_string() << "\n\nv_rep =\n" << st.v_rep.to_string() << "\n\nb =\n" << st.b.to_string() << "\n\n";
  std::cout << "u = ";
  for (const auto& f : st.u_factors) std::cout << "x[" << W.to_string(f.wall) << "](" << f.coeff.get_str() << ") ";
  std::cout << "\nstep kinds: ";
  for (auto k : st.kinds) std::cout << step_code(k);
  std::cout << "\nendpoint:   " << word_to_string(W.reduced_word(st.v)) << "\n";
}
