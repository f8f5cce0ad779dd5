// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "desargues/desargues.hpp"
#include "support/cli_runner.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace desargues;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

constexpr MapFamily kFamilies[] = {MapFamily::A, MapFamily::B, MapFamily::C, MapFamily::D};

// ---------------------------------------------------------------------------
// 1. axioms

template <class S>
void check_axioms(Tally& t, const S& a, const S& b, const S& c, const S& zero, const S& one) {
  t.expect((a + b) + c == a + (b + c), "add associative");
  t.expect(a + b == b + a, "add commutative");
  t.expect((a * b) * c == a * (b * c), "mul associative");
  t.expect(a * (b + c) == a * b + a * c, "left distributive");
  t.expect((a + b) * c == a * c + b * c, "right distributive");
  t.expect(a + zero == a && zero + a == a, "zero neutral");
  t.expect(a * one == a && one * a == a, "one neutral");
  t.expect(is_zero(a + (-a)), "additive inverse");
  if (!is_zero(a)) t.expect(a * inv(a) == one && inv(a) * a == one, "multiplicative inverse");
  if (!is_zero(a) && !is_zero(b)) t.expect(!is_zero(a * b), "no zero divisors");
  if (is_zero(a * b)) t.expect(is_zero(a) || is_zero(b), "zero product has a zero factor");
}

Tally criterion_axioms() {
  Tally t;
  const PrimeField gf5(5);
  for (const auto& a : gf5.elements()) {
    for (const auto& b : gf5.elements()) {
      for (const auto& c : gf5.elements()) check_axioms(t, a, b, c, gf5.zero(), gf5.one());
    }
  }
  Rng rng(101);
  RationalField rf;
  QuaternionField qf;
  for (int n = 0; n < 1000; ++n) {
    const auto a = rf.sample(rng), b = rf.sample(rng), c = rf.sample(rng);
    check_axioms(t, a, b, c, rf.zero(), rf.one());
    t.expect(oracle::to_frac(a * b) == oracle::to_frac(a) * oracle::to_frac(b), "rational product oracle");
    const auto x = sample_nonzero(rf, rng), y = sample_nonzero(rf, rng);
    t.expect(!is_zero(x * y), "rational zero divisor");
  }
  for (int n = 0; n < 1000; ++n) {
    const auto a = qf.sample(rng), b = qf.sample(rng), c = qf.sample(rng);
    check_axioms(t, a, b, c, qf.zero(), qf.one());
    t.expect(oracle::to_quat(a * b) == oracle::mul(oracle::to_quat(a), oracle::to_quat(b)),
             "quaternion product oracle");
    const auto x = sample_nonzero(qf, rng), y = sample_nonzero(qf, rng);
    t.expect(!is_zero(x * y), "quaternion zero divisor " + to_string(x) + " " + to_string(y));
  }
  return t;
}

// ---------------------------------------------------------------------------
// 2. non-commutativity

Tally criterion_noncommutative() {
  Tally t;
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  t.expect(i * j == k, "i*j = k");
  t.expect(j * i == -k, "j*i = -k");
  t.expect(!(k == -k), "k != -k");
  t.expect(!(i * j == j * i), "i*j != j*i");
  const oracle::Quat qi{0, 1, 0, 0}, qj{0, 0, 1, 0};
  t.expect(oracle::to_quat(i * j) == oracle::mul(qi, qj), "table i*j");
  t.expect(oracle::to_quat(j * i) == oracle::mul(qj, qi), "table j*i");
  return t;
}

// ---------------------------------------------------------------------------
// 3, 4. constructions

template <SkewField F>
std::vector<Point<scalar_t<F>>> distinct_aux(const F& field, const LineFrame<scalar_t<F>>& frame,
                                             Rng& rng, std::size_t n) {
  std::vector<Point<scalar_t<F>>> out;
  while (out.size() < n) {
    auto p = sample_aux(field, frame, rng);
    bool fresh = true;
    for (const auto& x : out) fresh = fresh && !(x == p);
    if (fresh) out.push_back(std::move(p));
  }
  return out;
}

template <SkewField F, class Oracle>
void equivalence(Tally& t, const F& field, std::uint64_t seed, int pairs, Oracle&& oracle_of) {
  const auto frame = LineFrame<scalar_t<F>>::canonical(field);
  Rng rng(seed);
  for (int n = 0; n < pairs; ++n) {
    const auto a = field.sample(rng), b = field.sample(rng);
    const auto [sum, product] = oracle_of(a, b);
    for (const auto& aux : distinct_aux(field, frame, rng, 10)) {
      const auto pa = frame.embed(a), pb = frame.embed(b);
      t.expect(frame.extract(geometric_add(frame, pa, pb, aux)) == sum,
               field.name() + " add " + to_string(a) + ", " + to_string(b));
      t.expect(frame.extract(geometric_mul(frame, pa, pb, aux)) == product,
               field.name() + " mul " + to_string(a) + ", " + to_string(b));
    }
  }
}

Tally criterion_coordinatization() {
  Tally t;
  equivalence(t, RationalField{}, 301, 500, [](const Rational& a, const Rational& b) {
    const auto fa = oracle::to_frac(a), fb = oracle::to_frac(b);
    return std::pair{oracle::to_rational(fa + fb), oracle::to_rational(fa * fb)};
  });
  equivalence(t, QuaternionField{}, 302, 500, [](const Quaternion& a, const Quaternion& b) {
    const auto qa = oracle::to_quat(a), qb = oracle::to_quat(b);
    return std::pair{oracle::from_quat(oracle::add(qa, qb)), oracle::from_quat(oracle::mul(qa, qb))};
  });
  const PrimeField gf3(3);
  const auto frame = LineFrame<PrimeFieldElement>::canonical(gf3);
  for (const auto& a : gf3.elements()) {
    for (const auto& b : gf3.elements()) {
      for (const auto& aux : testgen::all_points(gf3)) {
        if (frame.line().contains(aux)) continue;
        const auto ra = static_cast<std::int64_t>(a.residue()), rb = static_cast<std::int64_t>(b.residue());
        const auto pa = frame.embed(a), pb = frame.embed(b);
        t.expect(frame.extract(geometric_add(frame, pa, pb, aux)).residue() ==
                     static_cast<std::uint64_t>(oracle::mod(ra + rb, 3)),
                 "gf3 add");
        t.expect(frame.extract(geometric_mul(frame, pa, pb, aux)).residue() ==
                     static_cast<std::uint64_t>(oracle::mod(ra * rb, 3)),
                 "gf3 mul");
      }
    }
  }
  return t;
}

template <SkewField F>
void aux_independence(Tally& t, const F& field, std::uint64_t seed) {
  const auto frame = LineFrame<scalar_t<F>>::canonical(field);
  Rng rng(seed);
  for (int n = 0; n < 100; ++n) {
    const auto pa = frame.embed(field.sample(rng)), pb = frame.embed(field.sample(rng));
    const auto auxes = distinct_aux(field, frame, rng, 10);
    const auto sum = geometric_add(frame, pa, pb, auxes[0]);
    const auto product = geometric_mul(frame, pa, pb, auxes[0]);
    for (std::size_t k = 1; k < auxes.size(); ++k) {
      t.expect(geometric_add(frame, pa, pb, auxes[k]) == sum, field.name() + " add depends on aux");
      t.expect(geometric_mul(frame, pa, pb, auxes[k]) == product, field.name() + " mul depends on aux");
    }
  }
}

Tally criterion_aux_independence() {
  Tally t;
  aux_independence(t, RationalField{}, 401);
  aux_independence(t, QuaternionField{}, 402);
  aux_independence(t, PrimeField(5), 403);
  return t;
}

// ---------------------------------------------------------------------------
// 5. Desargues

template <SkewField F>
void desargues_instances(Tally& t, const F& field) {
  for (auto kind : {AxesKind::Parallel, AxesKind::Concurrent}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto cfg = generate_desargues_config(field, 5000 + seed, kind);
      t.expect(check_desargues(cfg), field.name() + " config seed " + std::to_string(seed));
    }
  }
}

Tally criterion_desargues() {
  Tally t;
  desargues_instances(t, RationalField{});
  desargues_instances(t, QuaternionField{});
  desargues_instances(t, PrimeField(5));
  for (std::uint64_t p : {2, 3}) {
    try {
      const std::size_t pairs = testgen::check_playfair(p);
      t.expect(pairs == p * (p + 1) * (p * p - p), "Playfair pair count over GF(" + std::to_string(p) + ")");
    } catch (const std::exception& e) {
      t.expect(false, e.what());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 6. worked value through the CLI

Tally criterion_worked_value() {
  Tally t;
  const auto expected = oracle::classical_cross_ratio(2, 3, 1, 5);
  t.expect(expected == oracle::Frac(1, 3), "oracle value");
  const auto r = clirun::run(DESARGUES_CLI, {"eval", "--backend", "rational", "cr(2,3;1,5)"});
  t.expect(r.code == 0, "exit code " + std::to_string(r.code));
  t.expect(r.out == "1/3\n", "printed '" + r.out + "'");
  return t;
}

// ---------------------------------------------------------------------------
// 7. family identities

template <SkewField F>
void family_identities(Tally& t, const F& field, std::uint64_t seed, bool exhaustive) {
  Rng rng(seed);
  for (auto family : kFamilies) {
    const auto base = sample_base(field, family, rng);
    const SampleSpec spec{seed, 100, exhaustive};
    const Report report = verify_family(field, base, spec);
    for (const auto& line : report.lines) {
      if (line.observation) continue;
      const bool point_law = line.name == "add.zero_point" || line.name == "mul.unit_point";
      t.expect(line.passed, field.name() + " " + base.describe() + " " + format_line(line));
      if (!point_law && !exhaustive) t.expect(line.samples >= 100, "too few samples: " + format_line(line));
      if (!point_law && exhaustive) t.expect(line.samples > 0, "empty enumeration: " + format_line(line));
    }
  }
}

Tally criterion_family_identities() {
  Tally t;
  family_identities(t, RationalField{}, 701, false);
  family_identities(t, QuaternionField{}, 702, false);
  family_identities(t, PrimeField(5), 703, false);
  family_identities(t, PrimeField(5), 704, true);
  return t;
}

// ---------------------------------------------------------------------------
// 8. displayed inverse formulas

Tally criterion_inverse_formulas() {
  Tally t;
  QuaternionField field;
  Rng rng(801);
  for (auto family : kFamilies) {
    const auto base = sample_base(field, family, rng);
    const auto& p = base.points();
    int samples = 0;
    while (samples < 100) {
      const auto x = field.sample(rng);
      if (x == singular_point(base) || x == zero_point(base)) continue;
      Quaternion displayed;
      switch (family) {
        case MapFamily::A: displayed = cross_ratio(x, p[0], p[2], p[1]); break;  // c_r(X,B;D,C)
        case MapFamily::B: displayed = cross_ratio(p[0], x, p[2], p[1]); break;  // c_r(A,X;D,C)
        case MapFamily::C: displayed = cross_ratio(p[0], p[1], p[2], x); break;  // c_r(A,B;D,X)
        case MapFamily::D: displayed = cross_ratio(p[0], p[1], x, p[2]); break;  // c_r(A,B;X,C)
      }
      const auto value = evaluate(base, x);
      const auto inverse = inverse_value(base, x);
      t.expect(inverse == displayed, base.describe() + " X=" + to_string(x));
      t.expect(oracle::is_one(oracle::mul(oracle::to_quat(value), oracle::to_quat(inverse))), "right inverse");
      t.expect(oracle::is_one(oracle::mul(oracle::to_quat(inverse), oracle::to_quat(value))), "left inverse");
      ++samples;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 9. CLI conformance

template <SkewField F>
void round_trip(Tally& t, const F& field, std::uint64_t seed) {
  Rng rng(seed);
  for (int n = 0; n < 200; ++n) {
    const auto e = testgen::random_expression(field, rng, 4);
    const std::string text = print_expression(e);
    try {
      t.expect(parse_expression(field, text) == e, "round trip " + text);
    } catch (const Error& err) {
      t.expect(false, text + ": " + err.what());
    }
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Tally criterion_cli() {
  Tally t;
  round_trip(t, RationalField{}, 901);
  round_trip(t, QuaternionField{}, 902);
  round_trip(t, PrimeField(7), 903);

  const std::string scratch = DESARGUES_SCRATCH;
  std::filesystem::create_directories(scratch);
  for (const char* op : {"add", "mul"}) {
    const std::string a = scratch + "/acc-" + op + "-1.svg", b = scratch + "/acc-" + op + "-2.svg";
    const std::vector<std::string> base{"construct", op, "--a", "2", "--b", "3", "--aux", "(0,1)", "--svg"};
    auto args = base;
    args.push_back(a);
    t.expect(clirun::run(DESARGUES_CLI, args).code == 0, std::string(op) + " svg run");
    args.back() = b;
    clirun::run(DESARGUES_CLI, args);
    const std::string svg = slurp(a);
    t.expect(!svg.empty() && svg == slurp(b), std::string(op) + " svg bytes differ");
    std::size_t labels = 0;
    for (auto at = svg.find("<text "); at != std::string::npos; at = svg.find("<text ", at + 1)) ++labels;
    t.expect(labels == 7, std::string(op) + " svg has " + std::to_string(labels) + " labels");
  }

  for (const auto& inv : clirun::exit_code_matrix(DESARGUES_SAMPLES, scratch)) {
    const int code = clirun::run(DESARGUES_CLI, inv.args).code;
    std::string shown;
    for (const auto& a : inv.args) shown += a + " ";
    t.expect(code == inv.expected, "'" + shown + "' exited " + std::to_string(code) + ", expected " +
                                       std::to_string(inv.expected));
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "skew-field axioms (GF(5) exhaustive, 1000 random over Q and H, no zero divisors)", criterion_axioms},
      {2, "non-commutativity witness i*j = k, j*i = -k", criterion_noncommutative},
      {3, "geometric + and * match algebra (Q, GF(3) exhaustive, H 500 pairs x 10 aux)", criterion_coordinatization},
      {4, "construction results independent of the auxiliary point", criterion_aux_independence},
      {5, "Desargues on 200 configurations per variant per backend, Playfair over GF(2), GF(3)", criterion_desargues},
      {6, "cr(2,3;1,5) = 1/3 through the command line", criterion_worked_value},
      {7, "cross-ratio family identities, all families and backends", criterion_family_identities},
      {8, "displayed inverse formulas, two-sided, 100 quaternion samples per family", criterion_inverse_formulas},
      {9, "expression round trip, deterministic SVG, exit-code matrix", criterion_cli},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    all = all && t.ok();
    std::cout << (t.ok() ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << t.checked
              << " checks)\n";
    for (const auto& f : t.failures) std::cout << "       " << f << "\n";
  }
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
