#include "cmprob/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "cmprob/taxicab.hpp"

namespace cmprob {

void Report::merge(Report other) {
  results_.insert(results_.end(), std::make_move_iterator(other.results_.begin()),
                  std::make_move_iterator(other.results_.end()));
}

void Report::sort() {
  std::stable_sort(results_.begin(), results_.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return std::tie(a.suite, a.instance) <
                            std::tie(b.suite, b.instance);
                   });
}

std::size_t Report::passed() const {
  return std::count_if(results_.begin(), results_.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::size_t Report::failed() const { return results_.size() - passed(); }

Json Report::to_json() const {
  Json out = Json::array();
  for (const auto& r : results_) {
    Json j{{"suite", r.suite},
           {"instance", r.instance},
           {"status", r.pass ? "pass" : "fail"},
           {"lhs", r.lhs},
           {"rhs", r.rhs}};
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

std::string Report::summary() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_suite;
  for (const auto& r : results_) {
    auto& [p, f] = by_suite[r.suite];
    (r.pass ? p : f) += 1;
  }
  std::ostringstream os;
  for (const auto& [s, pf] : by_suite)
    os << s << ": " << pf.first << " passed, " << pf.second << " failed\n";
  for (const auto& r : results_)
    if (!r.pass) {
      os << "FAIL " << r.suite << " " << r.instance;
      if (!r.note.empty()) os << " (" << r.note << ")";
      os << "\n";
    }
  os << "total: " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

namespace {

Json map_value(const LinearMap& f) {
  if (f.matrix.rows() == 1 && f.matrix.cols() == 1) return to_json(f.matrix(0, 0));
  return to_json(f);
}

bool small(const LinearMap& f) {
  return f.matrix.rows() == 1 && f.matrix.cols() == 1;
}

CheckResult failure(std::string suite, std::string instance, std::string note) {
  CheckResult r{std::move(suite), std::move(instance), false, nullptr, nullptr,
                std::move(note)};
  return r;
}

CheckResult compare_matrix(std::string suite, std::string instance,
                           const LMatrix& lhs, const LMatrix& rhs) {
  CheckResult r{std::move(suite), std::move(instance), lhs == rhs, nullptr,
                nullptr, ""};
  bool scalar = lhs.rows() == 1 && lhs.cols() == 1 && rhs.rows() == 1 &&
                rhs.cols() == 1;
  if (scalar) {
    r.lhs = to_json(lhs(0, 0));
    r.rhs = to_json(rhs(0, 0));
  } else if (!r.pass) {
    LinearMap a{{}, {}, lhs}, b{{}, {}, rhs};
    r.lhs = to_json(a)["entries"];
    r.rhs = to_json(b)["entries"];
  }
  return r;
}

std::string axis_tag(Axis a) { return std::string(axis_name(a)); }

// All matrices of weight 1..max_weight.
std::vector<ContingencyMatrix> all_up_to(int max_weight) {
  std::vector<ContingencyMatrix> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto e = enumerate(w);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

LMatrix embed(const LMatrix& f, std::size_t left, std::size_t right) {
  return kron(kron(LMatrix::identity(left), f), LMatrix::identity(right));
}

std::size_t dims_product(const std::vector<std::size_t>& d, std::size_t from,
                         std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= d[i];
  return p;
}

// The braiding of the target category between two ordered tensor products
// of components, built from the oracle's pairwise braids: every left leg
// crosses every right leg positively.
LMatrix block_braid(const BialgebraOracle& o, const std::vector<int>& left,
                    const std::vector<int>& right) {
  std::vector<int> seq = left;
  seq.insert(seq.end(), right.begin(), right.end());
  std::vector<std::size_t> dims;
  for (int d : seq) dims.push_back(o.dim(d));
  LMatrix acc = LMatrix::identity(dims_product(dims, 0, dims.size()));
  for (std::size_t i = left.size(); i-- > 0;) {
    for (std::size_t pos = i; pos < i + right.size(); ++pos) {
      const LMatrix& b = o.braid(seq[pos], seq[pos + 1]);
      acc = embed(b, dims_product(dims, 0, pos),
                  dims_product(dims, pos + 2, dims.size())) *
            acc;
      std::swap(seq[pos], seq[pos + 1]);
      std::swap(dims[pos], dims[pos + 1]);
    }
  }
  return acc;
}

std::vector<int> lex_degrees(const ContingencyMatrix& m) {
  std::vector<int> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (int d = m.at(i, j)) out.push_back(d);
  return out;
}

bool lines_apart(const ContingencyMatrix& m, Axis axis, std::size_t a,
                 std::size_t b) {
  std::size_t other = axis == Axis::Vertical ? m.cols() : m.rows();
  for (std::size_t t = 0; t < other; ++t) {
    long x = axis == Axis::Vertical ? m.at(a, t) : m.at(t, a);
    long y = axis == Axis::Vertical ? m.at(b, t) : m.at(t, b);
    if (x && y) return false;
  }
  return true;
}

// Exchanges at the given 1-based positions, each along its own axis.
MorphismWord exchange_path(const ContingencyMatrix& m,
                           const std::vector<std::pair<Axis, std::size_t>>& moves) {
  MorphismWord w(m);
  for (auto [axis, k] : moves) w = compose(w, exchange_word(w.codomain(), axis, k));
  return w;
}

// Forward generators whose expanded matrix has weight w.
std::vector<GenStep> generators_of_weight(int w) {
  std::vector<GenStep> out;
  for (const auto& n : enumerate(w)) {
    for (std::size_t k = 1; k < n.cols(); ++k)
      out.push_back(GenStep::delta_fwd(n, k));
    for (std::size_t k = 1; k < n.rows(); ++k) out.push_back(GenStep::mu_fwd(n, k));
  }
  return out;
}

std::string step_tag(const GenStep& g) {
  return std::string(g.axis() == Axis::Horizontal ? "delta" : "mu") + "(" +
         g.expanded.key() + ",k=" + std::to_string(g.k) + ")";
}

MorphismWord single(const GenStep& g) {
  MorphismWord w(g.domain);
  w.append(g);
  return w;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

CheckResult compare_maps(std::string suite, std::string instance,
                         const LinearMap& lhs, const LinearMap& rhs) {
  CheckResult r = compare_matrix(std::move(suite), std::move(instance),
                                 lhs.matrix, rhs.matrix);
  if (!small(lhs) && !r.pass) {
    r.lhs = map_value(lhs);
    r.rhs = map_value(rhs);
  }
  return r;
}

std::size_t worker_count() {
  if (const char* s = std::getenv("CMPROB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

Report run_parallel(std::size_t n, const std::string& suite,
                    const std::function<void(std::size_t, Report&)>& task) {
  std::vector<Report> parts(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        task(i, parts[i]);
      } catch (const Error& e) {
        parts[i].add(failure(suite, "task " + std::to_string(i), e.what()));
      }
    }
  };
  std::size_t threads = std::min(worker_count(), n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  Report out;
  for (auto& p : parts) out.merge(std::move(p));
  out.sort();
  return out;
}

Report verify_chain_independence(const Evaluator& ev, int max_weight) {
  struct Pair {
    ContingencyMatrix m, n;
    Axis axis;
  };
  std::vector<Pair> pairs;
  for (const auto& n : all_up_to(max_weight))
    for (Axis axis : {Axis::Horizontal, Axis::Vertical})
      for (const auto& m : down_set(n, axis))
        if (m != n) pairs.push_back({m, n, axis});
  const std::string suite = "chain-independence";
  return run_parallel(pairs.size(), suite, [&](std::size_t i, Report& rep) {
    const auto& [m, n, axis] = pairs[i];
    auto chains = contraction_chains(m, n, axis);
    LinearMap first = chain_map(ev, chains.front());
    LinearMap other = first;
    for (std::size_t c = 1; c < chains.size(); ++c) {
      other = chain_map(ev, chains[c]);
      if (!(other.matrix == first.matrix)) break;
    }
    CheckResult r = compare_maps(
        suite, axis_tag(axis) + " " + m.key() + " <= " + n.key(), first, other);
    r.note = std::to_string(chains.size()) + " chains";
    rep.add(std::move(r));
  });
}

Report verify_transitivity(const Evaluator& ev, int max_weight) {
  struct Triple {
    ContingencyMatrix l, m, n;
    Axis axis;
  };
  std::vector<Triple> triples;
  for (const auto& n : all_up_to(max_weight))
    for (Axis axis : {Axis::Horizontal, Axis::Vertical})
      for (const auto& m : down_set(n, axis)) {
        if (m == n) continue;
        for (const auto& l : down_set(m, axis))
          if (l != m) triples.push_back({l, m, n, axis});
      }
  const std::string suite = "transitivity";
  return run_parallel(triples.size(), suite, [&](std::size_t i, Report& rep) {
    const auto& [l, m, n, axis] = triples[i];
    // Horizontal chains run small to large, vertical ones large to small.
    LinearMap whole = chain_map(ev, l, n, axis);
    LinearMap lm = chain_map(ev, l, m, axis), mn = chain_map(ev, m, n, axis);
    LinearMap parts = axis == Axis::Horizontal ? compose(mn, lm) : compose(lm, mn);
    rep.add(compare_maps(suite,
                         axis_tag(axis) + " " + l.key() + " <= " + m.key() +
                             " <= " + n.key(),
                         whole, parts));
  });
}

CheckResult verify_cm2(const ContingencyMatrix& m, const ContingencyMatrix& n,
                       const ContingencyMatrix& l, const Evaluator& ev) {
  const std::string suite = "base-change";
  std::string inst = "M=" + m.key() + " N=" + n.key() + " L=" + l.key();
  if (!leq(n, m, Axis::Vertical) || !leq(n, l, Axis::Horizontal))
    return failure(suite, inst, "precondition: M >='' N <=' L does not hold");
  MorphismWord lhs = compose(mu_chain_word(m, n), delta_chain_word(n, l));
  FormalSum rhs(m, l);
  auto sup = sup_set(m, l);
  for (const auto& o : sup)
    rhs.add(1, compose(delta_chain_word(m, o), mu_chain_word(o, l)));
  CheckResult r = compare_maps(suite, inst, evaluate(lhs, ev), evaluate(rhs, ev));
  r.note = std::to_string(sup.size()) + " terms";
  return r;
}

Report verify_cm2_all(const Evaluator& ev, int max_weight) {
  struct Triple {
    ContingencyMatrix m, n, l;
  };
  std::vector<Triple> triples;
  for (const auto& n : all_up_to(max_weight)) {
    auto ms = up_set(n, Axis::Vertical);
    auto ls = up_set(n, Axis::Horizontal);
    for (const auto& m : ms)
      for (const auto& l : ls) triples.push_back({m, n, l});
  }
  return run_parallel(triples.size(), "base-change",
                      [&](std::size_t i, Report& rep) {
                        const auto& t = triples[i];
                        rep.add(verify_cm2(t.m, t.n, t.l, ev));
                      });
}

Report verify_anodyne_invertibility(const Evaluator& ev, int max_weight) {
  auto mats = all_up_to(max_weight);
  const std::string suite = "anodyne-invertibility";
  return run_parallel(mats.size(), suite, [&](std::size_t i, Report& rep) {
    const auto& x = mats[i];
    for (Axis axis : {Axis::Horizontal, Axis::Vertical})
      for (std::size_t k = 1; k < x.lines(axis); ++k) {
        if (!is_anodyne_step(x, axis, k)) continue;
        std::string inst = axis_tag(axis) + " k=" + std::to_string(k) + " " + x.key();
        const LinearMap& f = ev.generator(x, axis, k);
        if (!is_invertible(f)) {
          rep.add(failure(suite, inst, "singular"));
          continue;
        }
        const LinearMap& g = ev.generator_inverse(x, axis, k);
        rep.add(compare_matrix(suite, inst, g.matrix * f.matrix,
                               LMatrix::identity(f.matrix.cols())));
      }
  });
}

Report verify_relations(const Evaluator& ev, int max_weight) {
  Report r = verify_chain_independence(ev, max_weight);
  r.merge(verify_transitivity(ev, max_weight));
  r.merge(verify_cm2_all(ev, max_weight));
  r.merge(verify_anodyne_invertibility(ev, max_weight));
  r.sort();
  return r;
}

Report verify_path_independence(const ContingencyMatrix& m,
                                const ContingencyMatrix& l, const Evaluator& ev) {
  Report rep;
  std::string inst = "M=" + m.key() + " L=" + l.key();
  if (!meet(m, l)) {
    rep.add(failure("path-independence", inst, "no common contraction"));
    return rep;
  }
  auto [a, b] = taxicab_rectangle(m, l);
  auto paths = taxicab_paths(a, b);
  TensorSpace src = ev.space(m), dst = ev.space(l);
  auto sum_of = [&](const std::vector<GammaChain>& chains) {
    LinearMap acc{src, dst, LMatrix(dst.dim(), src.dim())};
    for (const auto& c : chains) acc = acc + evaluate(c.word, ev);
    return acc;
  };
  std::vector<GammaChain> lowest = gamma_chains(paths.front(), m, l);
  LinearMap first = sum_of(lowest), other = first;
  for (std::size_t p = 1; p < paths.size(); ++p) {
    other = sum_of(gamma_chains(paths[p], m, l));
    if (!(other.matrix == first.matrix)) break;
  }
  CheckResult r = compare_maps("path-independence", inst, first, other);
  r.note = std::to_string(paths.size()) + " paths";
  rep.add(std::move(r));

  CheckResult low{"gamma-lowest", inst, lowest.size() == 1,
                  static_cast<long>(lowest.size()), 1, ""};
  rep.add(std::move(low));

  auto top = gamma_chains(paths.back(), m, l);
  std::vector<ContingencyMatrix> corners;
  for (const auto& c : top) corners.push_back(c.mats[b]);
  std::sort(corners.begin(), corners.end());
  auto sup = sup_set(m, l);
  CheckResult high{"gamma-highest", inst, corners == sup,
                   static_cast<long>(top.size()), static_cast<long>(sup.size()), ""};
  if (!high.pass) high.note = "corner matrices differ from Sup(M, L)";
  rep.add(std::move(high));
  return rep;
}

Report verify_path_independence_all(const Evaluator& ev, int max_weight) {
  std::vector<std::pair<ContingencyMatrix, ContingencyMatrix>> pairs;
  for (const auto& n : all_up_to(max_weight)) {
    auto ms = up_set(n, Axis::Vertical);
    auto ls = up_set(n, Axis::Horizontal);
    for (const auto& m : ms)
      for (const auto& l : ls) pairs.emplace_back(m, l);
  }
  return run_parallel(pairs.size(), "path-independence",
                      [&](std::size_t i, Report& rep) {
                        rep.merge(verify_path_independence(pairs[i].first,
                                                           pairs[i].second, ev));
                      });
}

namespace {

void exchange_relations(const ContingencyMatrix& x, const Evaluator& ev,
                        Report& rep) {
  auto eq = [&](const std::string& suite, const std::string& inst,
                const MorphismWord& w1, const MorphismWord& w2) {
    if (w1.codomain() != w2.codomain()) {
      rep.add(failure(suite, inst, "paths end at different objects"));
      return;
    }
    rep.add(compare_maps(suite, inst, evaluate(w1, ev), evaluate(w2, ev)));
  };
  using Moves = std::vector<std::pair<Axis, std::size_t>>;
  for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
    std::size_t len = x.lines(axis);
    for (std::size_t k = 1; k + 2 <= len; ++k) {
      if (!lines_apart(x, axis, k - 1, k) || !lines_apart(x, axis, k, k + 1) ||
          !lines_apart(x, axis, k - 1, k + 1))
        continue;
      eq("hexagon", axis_tag(axis) + " k=" + std::to_string(k) + " " + x.key(),
         exchange_path(x, Moves{{axis, k}, {axis, k + 1}, {axis, k}}),
         exchange_path(x, Moves{{axis, k + 1}, {axis, k}, {axis, k + 1}}));
    }
    for (std::size_t k = 1; k + 3 <= len; ++k) {
      bool ok = true;
      for (std::size_t a : {k - 1, k})
        for (std::size_t b : {k + 1, k + 2}) ok = ok && lines_apart(x, axis, a, b);
      if (!ok) continue;
      eq("diamond", axis_tag(axis) + " k=" + std::to_string(k) + " " + x.key(),
         exchange_path(x, Moves{{axis, k + 1}, {axis, k}, {axis, k + 2}, {axis, k + 1}}),
         exchange_path(x, Moves{{axis, k + 1}, {axis, k + 2}, {axis, k}, {axis, k + 1}}));
    }
    for (std::size_t k = 1; k < len; ++k)
      for (std::size_t l = k + 2; l < len; ++l) {
        if (!lines_disjoint(x, axis, k) || !lines_disjoint(x, axis, l)) continue;
        eq("exchange-commute",
           axis_tag(axis) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
               " " + x.key(),
           exchange_path(x, Moves{{axis, k}, {axis, l}}),
           exchange_path(x, Moves{{axis, l}, {axis, k}}));
      }
  }
  for (std::size_t k = 1; k < x.rows(); ++k)
    for (std::size_t l = 1; l < x.cols(); ++l) {
      if (!lines_disjoint(x, Axis::Vertical, k) ||
          !lines_disjoint(x, Axis::Horizontal, l))
        continue;
      // Exchanges sharing a nonzero cell do not commute.
      if (x.at(k - 1, l - 1) || x.at(k - 1, l) || x.at(k, l - 1) || x.at(k, l))
        continue;
      eq("exchange-commute",
         "V k=" + std::to_string(k) + " H l=" + std::to_string(l) + " " + x.key(),
         exchange_path(x, Moves{{Axis::Vertical, k}, {Axis::Horizontal, l}}),
         exchange_path(x, Moves{{Axis::Horizontal, l}, {Axis::Vertical, k}}));
    }
}

}  // namespace

Report verify_coherence(const Evaluator& ev, int max_weight) {
  const BialgebraOracle& o = ev.oracle();
  std::vector<std::function<void(Report&)>> tasks;
  auto mats = all_up_to(max_weight);

  for (const auto& x : mats)
    tasks.push_back([&ev, x](Report& rep) { exchange_relations(x, ev, rep); });

  // Naturality in both variables, and tensoring generators with objects.
  for (int wg = 2; wg < max_weight; ++wg)
    for (const GenStep& g : generators_of_weight(wg))
      for (int wn = 1; wg + wn <= max_weight; ++wn)
        for (const auto& n : enumerate(wn))
          tasks.push_back([&ev, g, n](Report& rep) {
            MorphismWord phi = single(g);
            const ContingencyMatrix& a = g.domain;
            const ContingencyMatrix& b = g.codomain;
            std::string inst = step_tag(g) + " N=" + n.key();
            rep.add(compare_maps(
                "naturality", "first " + inst,
                evaluate(compose(tensor_right(phi, n), braiding_word(b, n)), ev),
                evaluate(compose(braiding_word(a, n), tensor_left(n, phi)), ev)));
            rep.add(compare_maps(
                "naturality", "second " + inst,
                evaluate(compose(tensor_left(n, phi), braiding_word(n, b)), ev),
                evaluate(compose(braiding_word(n, a), tensor_right(phi, n)), ev)));
            LMatrix f = evaluate(phi, ev).matrix;
            LMatrix id = LMatrix::identity(ev.space(n).dim());
            rep.add(compare_matrix("monoidal-compat", "right " + inst,
                                   evaluate(tensor_right(phi, n), ev).matrix,
                                   kron(f, id)));
            rep.add(compare_matrix("monoidal-compat", "left " + inst,
                                   evaluate(tensor_left(n, phi), ev).matrix,
                                   kron(id, f)));
          });

  // Pairs: Lex juxtaposition, braiding against the target, interleavings.
  for (int wa = 1; wa < max_weight; ++wa)
    for (int wb = 1; wa + wb <= max_weight; ++wb)
      for (const auto& a : enumerate(wa))
        for (const auto& b : enumerate(wb))
          tasks.push_back([&ev, &o, a, b](Report& rep) {
            std::string inst = a.key() + " (+) " + b.key();
            TensorSpace sa = ev.space(a), sb = ev.space(b),
                        sab = ev.space(direct_sum(a, b));
            std::vector<std::size_t> dims = sa.dims;
            dims.insert(dims.end(), sb.dims.begin(), sb.dims.end());
            std::vector<int> deg_a = lex_degrees(a), deg_b = lex_degrees(b);
            std::vector<int> deg = deg_a;
            deg.insert(deg.end(), deg_b.begin(), deg_b.end());
            std::vector<int> deg_ab;
            for (const auto& leg : sab.legs) deg_ab.push_back(leg.degree);
            bool same = dims == sab.dims && deg == deg_ab;
            rep.add(CheckResult{"monoidal-compat", "lex " + inst, same, nullptr,
                                nullptr, same ? "" : "legs are not juxtaposed"});
            LinearMap r = evaluate(braiding_word(a, b), ev);
            rep.add(compare_matrix("braiding-target", inst, r.matrix,
                                   block_braid(o, deg_a, deg_b)));
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
              rep.add(compare_maps("interleaving",
                                   inst + " seed=" + std::to_string(seed),
                                   evaluate(braiding_word(a, b, seed), ev), r));
          });

  // Braiding triangles of both classes.
  for (int wa = 1; wa + 2 <= max_weight; ++wa)
    for (int wb = 1; wa + wb + 1 <= max_weight; ++wb)
      for (int wc = 1; wa + wb + wc <= max_weight; ++wc)
        for (const auto& a : enumerate(wa))
          for (const auto& b : enumerate(wb))
            for (const auto& c : enumerate(wc))
              tasks.push_back([&ev, a, b, c](Report& rep) {
                std::string inst = a.key() + "," + b.key() + "," + c.key();
                rep.add(compare_maps(
                    "braiding-triangle", "first " + inst,
                    evaluate(braiding_word(direct_sum(a, b), c), ev),
                    evaluate(compose(tensor_left(a, braiding_word(b, c)),
                                     tensor_right(braiding_word(a, c), b)),
                             ev)));
                rep.add(compare_maps(
                    "braiding-triangle", "second " + inst,
                    evaluate(braiding_word(a, direct_sum(b, c)), ev),
                    evaluate(compose(tensor_right(braiding_word(a, b), c),
                                     tensor_left(b, braiding_word(a, c))),
                             ev)));
              });

  // Single-entry objects against the oracle braiding.
  for (int m = 1; m < max_weight; ++m)
    for (int n = 1; m + n <= max_weight; ++n)
      tasks.push_back([&ev, &o, m, n](Report& rep) {
        rep.add(compare_matrix("point-braiding",
                               "[" + std::to_string(m) + "],[" + std::to_string(n) + "]",
                               evaluate(braiding_word(point(m), point(n)), ev).matrix,
                               o.braid(m, n)));
      });

  return run_parallel(tasks.size(), "coherence",
                      [&](std::size_t i, Report& rep) { tasks[i](rep); });
}

namespace {

// (mu_{a,c} (x) mu_{b,d}) o (id (x) R_{b,c} (x) id) o (Delta_{a,b} (x) Delta_{c,d})
// as a word in single-entry objects.
MorphismWord table_word(int a, int b, int c, int d) {
  MorphismWord split = tensor(a_delta_word(a, b), a_delta_word(c, d));
  MorphismWord cross =
      tensor_left(point(a), tensor_right(braiding_word(point(b), point(c)), point(d)));
  MorphismWord merge = tensor(a_mu_word(a, c), a_mu_word(b, d));
  return compose(compose(split, cross), merge);
}

LMatrix table_oracle(const BialgebraOracle& o, int a, int b, int c, int d) {
  LMatrix split = kron(o.delta(a, b), o.delta(c, d));
  LMatrix cross = embed(o.braid(b, c), o.dim(a), o.dim(d));
  LMatrix merge = kron(o.mu(a, c), o.mu(b, d));
  return merge * cross * split;
}

std::string degs(std::initializer_list<int> v) {
  std::string s = "(";
  for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

Report verify_a_bialgebra(const Evaluator& ev, int max_weight) {
  const BialgebraOracle& o = ev.oracle();
  bool classical = o.dim(1) == 1 && !o.q_value() && o.name().rfind("rank1", 0) == 0;
  std::vector<std::function<void(Report&)>> tasks;

  for (int m = 1; m < max_weight; ++m)
    for (int n = 1; m + n <= max_weight; ++n)
      tasks.push_back([&ev, &o, m, n, classical](Report& rep) {
        std::string inst = degs({m, n});
        LinearMap mu = evaluate(a_mu_word(m, n), ev);
        LinearMap de = evaluate(a_delta_word(m, n), ev);
        rep.add(compare_matrix("structure-maps", "mu " + inst, mu.matrix, o.mu(m, n)));
        rep.add(compare_matrix("structure-maps", "delta " + inst, de.matrix,
                               o.delta(m, n)));
        if (classical) {
          Rational got = de.matrix(0, 0).evaluate(1);
          Rational want(binomial(m + n, m));
          rep.add(CheckResult{"classical-limit", "delta " + inst, got == want,
                              got.get_str(), want.get_str(), ""});
        }
      });

  for (int m = 1; m + 2 <= max_weight; ++m)
    for (int n = 1; m + n + 1 <= max_weight; ++n)
      for (int p = 1; m + n + p <= max_weight; ++p)
        tasks.push_back([&ev, m, n, p, classical](Report& rep) {
          std::string inst = degs({m, n, p});
          rep.add(compare_maps(
              "associativity", inst,
              evaluate(compose(tensor_right(a_mu_word(m, n), point(p)),
                               a_mu_word(m + n, p)),
                       ev),
              evaluate(compose(tensor_left(point(m), a_mu_word(n, p)),
                               a_mu_word(m, n + p)),
                       ev)));
          LinearMap lhs = evaluate(compose(a_delta_word(m, n + p),
                                           tensor_left(point(m), a_delta_word(n, p))),
                                   ev);
          rep.add(compare_maps(
              "coassociativity", inst, lhs,
              evaluate(compose(a_delta_word(m + n, p),
                               tensor_right(a_delta_word(m, n), point(p))),
                       ev)));
          if (classical) {
            Rational got = lhs.matrix(0, 0).evaluate(1);
            Rational want(binomial(m + n + p, m) * binomial(n + p, n));
            rep.add(CheckResult{"classical-limit", "coassociativity " + inst,
                                got == want, got.get_str(), want.get_str(), ""});
          }
        });

  for (int m1 = 1; m1 < max_weight; ++m1)
    for (int m2 = 1; m1 + m2 <= max_weight; ++m2)
      for (int l1 = 1; l1 < m1 + m2; ++l1)
        tasks.push_back([&ev, &o, m1, m2, l1, classical](Report& rep) {
          int l2 = m1 + m2 - l1;
          std::string inst = degs({m1, m2}) + "->" + degs({l1, l2});
          LinearMap lhs = evaluate(compose(a_mu_word(m1, m2), a_delta_word(l1, l2)), ev);
          TensorSpace src = ev.space(diagonal({m1, m2})),
                      dst = ev.space(diagonal({l1, l2}));
          LinearMap sum{src, dst, LMatrix(dst.dim(), src.dim())};
          for (int a = 0; a <= std::min(m1, l1); ++a) {
            int b = m1 - a, c = l1 - a, d = m2 - c;
            if (b < 0 || c < 0 || d < 0) continue;
            std::string term = inst + " table " + degs({a, b, c, d});
            LinearMap t = evaluate(table_word(a, b, c, d), ev);
            sum = sum + t;
            rep.add(compare_matrix("compatibility-term", "oracle " + term, t.matrix,
                                   table_oracle(o, a, b, c, d)));
            // The same term through the contingency matrix of the table.
            ContingencyMatrix table = validate({{a, b}, {c, d}});
            MorphismWord w(diagonal({m1, m2}));
            w.append(GenStep::delta_inv(diagonal({m1, m2}), 1));
            w.append(GenStep::delta_fwd(table, 1));
            w.append(GenStep::mu_fwd(table, 1));
            w.append(GenStep::mu_inv(diagonal({l1, l2}), 1));
            rep.add(compare_maps("compatibility-term", "table " + term,
                                 evaluate(w, ev), t));
          }
          rep.add(compare_maps("compatibility", inst, lhs, sum));
          if (classical) {
            Rational got = lhs.matrix(0, 0).evaluate(1);
            Rational want(binomial(m1 + m2, l1));
            rep.add(CheckResult{"classical-limit", "compatibility " + inst,
                                got == want, got.get_str(), want.get_str(), ""});
          }
        });

  return run_parallel(tasks.size(), "bialgebra",
                      [&](std::size_t i, Report& rep) { tasks[i](rep); });
}

MorphismWord random_word(const ContingencyMatrix& x, std::size_t length,
                         std::mt19937_64& rng) {
  MorphismWord w(x);
  for (std::size_t i = 0; i < length; ++i) {
    auto steps = steps_from(w.codomain());
    if (steps.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    w.append(steps[pick(rng)]);
  }
  return w;
}

Report verify_functoriality(const Evaluator& ev, int max_weight,
                            std::size_t samples, std::uint64_t seed) {
  std::vector<std::vector<ContingencyMatrix>> by_weight;
  for (int w = 2; w <= max_weight; ++w) by_weight.push_back(enumerate(w));
  const std::string suite = "functoriality";
  return run_parallel(samples, suite, [&](std::size_t i, Report& rep) {
    std::mt19937_64 rng(seed + i);
    const auto& pool = by_weight[std::uniform_int_distribution<std::size_t>(
        0, by_weight.size() - 1)(rng)];
    const auto& x = pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> len(1, 4);
    MorphismWord w1 = random_word(x, len(rng), rng);
    MorphismWord w2 = random_word(w1.codomain(), len(rng), rng);
    LinearMap whole = evaluate(compose(w1, w2), ev);
    LinearMap parts = compose(evaluate(w2, ev), evaluate(w1, ev));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06zu ", i);
    rep.add(compare_maps(suite,
                         buf + x.key() + " steps=" + std::to_string(w1.size()) +
                             "+" + std::to_string(w2.size()),
                         whole, parts));
  });
}

}  // namespace cmprob
