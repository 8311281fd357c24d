// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "caus/dsl.hpp"
#include "caus/hermitian.hpp"
#include "caus/suite.hpp"
#include "support.hpp"

using namespace caus;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const CheckReport& r, std::size_t min_instances) {
  std::string d = r.check + ": " + std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) +
                  " failures";
  if (!r.failures.empty()) d += "; first: " + r.failures.front().inputs.substr(0, 160);
  return {r.passed() && r.instances >= min_instances, d};
}

Outcome check(const char* name, std::size_t min_instances) { return from_report(run_check(name), min_instances); }

Outcome first_order_two_routes() {
  struct Row {
    const char* expr;
    Backend backend;
    bool expected;
  };
  const Row rows[] = {
      {"C[2]", Backend::ClassicalNonneg, true},       {"C[3]", Backend::ClassicalNonneg, true},
      {"Q[2]", Backend::QuantumCP, true},             {"C[2]&C[2]", Backend::ClassicalNonneg, false},
      {"C[2]+C[3]", Backend::ClassicalNonneg, true},  {"C[2]-oC[2]", Backend::ClassicalNonneg, false},
      {"U[2]", Backend::ClassicalNonneg, false},
  };
  std::string got;
  bool ok = true;
  for (const auto& r : rows) {
    const CausalSet c = eval(parse(r.expr), r.backend);
    const bool classify = is_first_order(c);
    const bool equality = set_equal(par(dual(c), c), seq(dual(c), c));
    got += classify ? 'T' : 'F';
    ok = ok && classify == r.expected && equality == r.expected;
  }
  const Outcome suite = check("first_order_char", 14);
  return {ok && suite.ok, "catalogue " + got + " (expected TTTFTFF) by classify and by par = seq; " + suite.detail};
}

Outcome gnst_facts() {
  const CausalSet g = gnst_system(2, 2);
  const CausalSet t = tensor(g, g);
  const bool pr = member(t, pr_box());
  const bool sig_par = member(par(g, g), signalling_box());
  const bool sig_tensor = member(t, signalling_box());
  const long chan = eval(parse("C[2] -o C[2]"), Backend::ClassicalNonneg).body().dim();
  const long qchan = eval(parse("Q[2] -o Q[2]"), Backend::QuantumCP).body().dim();
  // Unit column sums remove one parameter per input basis state; trace preservation removes d^2.
  const long chan_expected = 2 * 2 - 2;
  const long qchan_expected = 4 * 4 - 4;
  const Outcome suite = check("gnst", 10);
  const bool ok = pr && sig_par && !sig_tensor && chan == chan_expected && qchan == qchan_expected && suite.ok;
  return {ok, std::string("PR in tensor ") + (pr ? "yes" : "no") + ", signalling box in par " + (sig_par ? "yes" : "no") +
                  " / in tensor " + (sig_tensor ? "yes" : "no") + ", C[2]-oC[2] dim " + std::to_string(chan) +
                  ", Q[2]-oQ[2] dim " + std::to_string(qchan) + "; " + suite.detail};
}

Outcome parser_checks() {
  std::mt19937_64 rng(500);
  std::size_t round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const Expr e = caus::testing::random_expr(rng, 5);
    if (expr_equal(parse(render(e)), e)) ++round_trips;
  }
  const char* ambiguous[] = {
      "C[2] x C[2] | C[2]",        "C[2] | C[2] x C[2]",          "C[2] & C[2] + C[2]",
      "C[2] + C[2] & C[2]",        "C[2] < C[2] < C[2]",          "C[2] > C[2] > C[2]",
      "C[2] < C[2] > C[2]",        "C[2] > C[2] < C[2]",          "I x I | I x I",
      "I & I + I",                 "(C[2] x C[2] | C[2])",        "C[2]* x C[3] | C[2]*",
      "Q[2] + Q[2] & Q[2]",        "U[2] | U[2] x U[2]",          "C[2] -o C[2] x C[2] | C[2]",
      "(I + I) & (I + I) + I",     "C[2] x (C[2] | C[2]) | C[2]", "ONE < ZERO < I",
      "C[2] < (C[2] x C[2]) > C[2]", "C[3] & C[3] + C[3] -o C[3]",
  };
  std::size_t rejected = 0;
  for (const char* s : ambiguous) {
    try {
      parse(s);
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  return {round_trips == 500 && rejected == 20, std::to_string(round_trips) + "/500 round trips, " +
                                                    std::to_string(rejected) + "/20 ambiguous strings rejected"};
}

Outcome cone_oracle() {
  std::mt19937_64 rng(13);
  std::size_t disagreements = 0;
  std::size_t psd = 0;
  for (int i = 0; i < 500; ++i) {
    const auto d = static_cast<std::size_t>(caus::testing::pick(rng, 1, 3));
    const ComplexMatrix m = caus::testing::random_hermitian(rng, d);
    const bool exact = is_psd(m);
    const bool approx = caus::testing::min_eigenvalue(m) >= -1e-9;
    psd += exact ? 1 : 0;
    disagreements += exact == approx ? 0 : 1;
  }
  return {disagreements == 0, "500 matrices (" + std::to_string(psd) + " PSD), " + std::to_string(disagreements) +
                                  " disagreements"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "double-dual closure", 60, [] { return check("affine_closure", 600); }},
      {2, "dimension laws", 30, [] { return check("dimension_laws", 300); }},
      {3, "non-signalling equals tensor", 120, [] { return check("nonsignalling_eq", 60); }},
      {4, "seq self-duality", 120, [] { return check("seq_selfdual", 60); }},
      {5, "first-order characterisation", 30, first_order_two_routes},
      {6, "causality exception", 10, [] { return check("causality_exception", 10); }},
      {7, "BV structure", 60, [] { return check("bv_interchange", 100); }},
      {8, "additives", 30, [] { return check("additives", 150); }},
      {9, "zero-object tables", 5, [] { return check("zero_tables", 48); }},
      {10, "subtractive closure laws", 30, [] { return check("sub_laws", 200); }},
      {11, "(n,k)-systems and PR box", 30, gnst_facts},
      {12, "parser round trip and ambiguity", 5, parser_checks},
      {13, "quantum cone oracle agreement", 10, cone_oracle},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && secs < c.limit_s;
    all = all && ok;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                c.limit_s);
  }
  return all ? 0 : 1;
}
