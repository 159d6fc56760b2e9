// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "affold/example8.hpp"
#include "golden_scenes.hpp"

using namespace affold;
using RF = RationalFunction<Rational>;
using Matrix = GroupMatrix<Rational>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why)
  {
    if (ok) detail = why;
    ok = false;
  }
};

// Elements of length <= max_len by breadth-first search on the Cayley graph.
std::vector<AffineWeylElement> ball(const AffineWeylGroup& W, int max_len)
{
  std::set<AffineWeylElement> seen{W.identity()};
  std::vector<AffineWeylElement> layer{W.identity()}, all{W.identity()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& g : layer)
      for (int i = 0; i <= W.rank(); ++i) {
        auto h = W.mul(g, W.simple_reflection(i));
        if (seen.insert(h).second) next.push_back(h);
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::map<AffineWeylElement, CountPolynomial> counts(const AffineWeylGroup& W, const Word& w)
{
  std::map<AffineWeylElement, CountPolynomial> out;
  for (const auto& [v, cell] : cells_by_endpoint(W, w)) out[v] = cell.count;
  return out;
}

Outcome matrix_reproduction()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<Rational> G(W);
  const auto st = execute_folding(G, example8::word(), example8::labels());
  if (st.u(1, 0) != example8::laurent({{Rational(1, 2), 0}, {Rational(-5, 12), 1}})) o.fail("u9(2,1) = " + st.u(1, 0).to_string());
  if (st.u(2, 0) != RF::monomial(Rational(1, 6), -2)) o.fail("u9(3,1) = " + st.u(2, 0).to_string());
  if (st.u != example8::expected_u9()) o.fail("u9: " + example8::matrix_diff(st.u, example8::expected_u9()));
  if (st.v_rep != example8::expected_v9()) o.fail("v9: " + example8::matrix_diff(st.v_rep, example8::expected_v9()));
  if (st.b(1, 0) != RF::monomial(-1, 2)) o.fail("b9(2,1) = " + st.b(1, 0).to_string() + ", expected -t^2");
  if (st.b != example8::expected_b9()) o.fail("b9: " + example8::matrix_diff(st.b, example8::expected_b9()));
  return o;
}

Outcome factor_labels()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<Rational> G(W);
  const auto st = execute_folding(G, example8::word(), example8::labels());
  const auto want = example8::expected_factors();
  if (st.u_factors.size() != want.size()) {
    o.fail("factor count");
    return o;
  }
  for (std::size_t k = 0; k < want.size(); ++k)
    if (st.u_factors[k].wall != want[k].wall || st.u_factors[k].coeff != want[k].coeff)
      o.fail("step " + std::to_string(k + 1) + ": " + W.to_string(st.u_factors[k].wall) + " : " + st.u_factors[k].coeff.get_str());
  return o;
}

Outcome combinatorial_cell()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const auto end = W.from_word(example8::endpoint_word());
  std::vector<FoldedPath> hits;
  for (auto& p : enumerate_folded_paths(W, example8::word()))
    if (p.endpoint == end) hits.push_back(std::move(p));
  if (hits.size() != 1) {
    o.fail(std::to_string(hits.size()) + " paths");
    return o;
  }
  const auto& p = hits.front();
  if (p.kinds_string() != "ZZZZFZFPZ") o.fail("kinds " + p.kinds_string());
  if (count_polynomial(p).to_string() != "q^3-2q^2+q") o.fail("count " + count_polynomial(p).to_string());
  if (p.dimension() != 3) o.fail("dimension " + std::to_string(p.dimension()));
  return o;
}

Outcome sum_rule()
{
  Outcome o;
  std::size_t words = 0;
  for (const char* label : {"A1", "A2"}) {
    const AffineWeylGroup W(cartan_from_label(label));
    for (const auto& g : ball(W, 6))
      for (const auto& w : W.all_reduced_words(g, 6)) {
        CountPolynomial total;
        for (const auto& [v, c] : counts(W, w)) total += c;
        ++words;
        if (total != CountPolynomial::q_power(static_cast<int>(w.size())))
          o.fail(std::string(label) + " " + word_to_string(w) + ": " + total.to_string());
      }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(words) + " words";
  return o;
}

Outcome finite_field_oracle()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A1"));
  const LoopGroup<ModP> G(W);
  for (const auto& g : ball(W, 4))
    for (const auto& w : W.all_reduced_words(g, 4))
      for (unsigned p : {2u, 3u}) {
        const auto brute = brute_force_cells(G, w, p);
        const auto cells = counts(W, w);
        std::set<AffineWeylElement> ends;
        for (const auto& [v, n] : brute) ends.insert(v);
        for (const auto& [v, c] : cells) ends.insert(v);
        for (const auto& v : ends) {
          const auto b = brute.count(v) ? brute.at(v) : 0;
          const auto c = cells.count(v) ? cells.at(v).eval(p) : 0;
          if (b != c) o.fail(word_to_string(w) + " p=" + std::to_string(p) + ": " + std::to_string(b) + " vs " + std::to_string(c));
        }
      }
  return o;
}

Outcome reduced_word_independence()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  for (const auto& g : ball(W, 5)) {
    const auto words = W.all_reduced_words(g, 5);
    const auto first = counts(W, words.front());
    for (const auto& w : words)
      if (counts(W, w) != first) o.fail(word_to_string(w) + " differs from " + word_to_string(words.front()));
  }
  return o;
}

Outcome finite_bruhat()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<ModP> G(W);
  std::vector<GroupMatrix<ModP>> reps;
  for (const auto& w0 : W.root_system().weyl_group_elements()) {
    bool first_word = true;
    for (const auto& full : W.all_reduced_words(AffineWeylElement{Coweight{{0, 0}}, w0}, 3)) {
      std::vector<GroupMatrix<ModP>> mine;
      for (unsigned mask = 0; mask < (1u << full.size()); ++mask) {
        std::vector<ModP> labels;
        for (std::size_t k = 0; k < full.size(); ++k) labels.emplace_back((mask >> k) & 1u, 2u);
        mine.push_back(bruhat_point_finite(G, full, labels));
      }
      for (std::size_t x = 0; x < mine.size(); ++x)
        for (std::size_t y = x + 1; y < mine.size(); ++y)
          if (coset_equal_B(mine[x], mine[y])) o.fail("repeated coset for word " + word_to_string(full));
      if (first_word) reps.insert(reps.end(), mine.begin(), mine.end());
      first_word = false;
    }
  }
  if (reps.size() != 21) o.fail(std::to_string(reps.size()) + " cosets in total");
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = x + 1; y < reps.size(); ++y)
      if (coset_equal_B(reps[x], reps[y])) o.fail("two Bruhat cells share a coset");
  return o;
}

Outcome relations()
{
  Outcome o;
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<Rational> G(W);
  const auto& rs = W.root_system();
  const std::vector<Rational> samples{Rational(2), Rational(-1, 3), Rational(5, 2), Rational(7), Rational(-4, 9)};
  for (int i = 0; i <= 2; ++i) {
    const AffineRoot a = W.simple_root(i);
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const Rational c = samples[s];
      const auto lhs = G.x_simple(i, c) * G.n_simple_inv(i);
      const auto rhs = G.x_root(-a, RF(1 / c)) * G.x_simple(i, -c) * G.h_coroot(i, RF(c));
      if (lhs != rhs) o.fail("folding law at simple root " + std::to_string(i));
      for (int j = 0; j <= 2; ++j) {
        const AffineRoot b = W.simple_root(j);
        const int e = rs.pairing(rs.coroot(a.finite), b.finite);
        const Rational f = samples[(s + 2) % samples.size()];
        const auto n = G.n_root(a, RF(c));
        const Rational got = G.root_coefficient(n * G.x_root(b, RF(f)) * n.inverse(), W.act(W.simple_reflection(i), b));
        Rational mag = f;
        for (int p = 0; p < std::abs(e); ++p) mag = e > 0 ? Rational(mag / c) : Rational(mag * c);
        if (got != mag && got != -mag) o.fail("conjugation " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome render_structure()
{
  Outcome o;
  const auto svg = render_arrangement(golden::a2_radius2());
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  if (count("<line class=\"hyperplane\"") != 15) o.fail(std::to_string(count("<line class=\"hyperplane\"")) + " hyperplane lines");
  if (count("<polygon class=\"alcove-fundamental\"") != 1) o.fail("fundamental alcove count");
  if (svg != golden::read("a2_radius2.svg")) o.fail("differs from golden a2_radius2.svg");
  if (render_arrangement(golden::a2_worked_path()) != golden::read("a2_worked_path.svg")) o.fail("differs from golden a2_worked_path.svg");
  return o;
}

}  // namespace

int main()
{
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 worked example u9, v9, b9", 1, matrix_reproduction},
      {"2 worked example factor walls and labels", 1, factor_labels},
      {"3 worked example combinatorial cell", 1, combinatorial_cell},
      {"4 sum rule A1, A2 length <= 6", 60, sum_rule},
      {"5 finite-field oracle A1 length <= 4, p in {2,3}", 60, finite_field_oracle},
      {"6 reduced-word independence A2 length <= 5", 60, reduced_word_independence},
      {"7 finite Bruhat cells SL3(F2)", 10, finite_bruhat},
      {"8 conjugation and folding relations", 10, relations},
      {"9 render structure and golden files", 10, render_structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    std::printf("%s  %-50s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
