// Acceptance gate: one pass/fail line per criterion.  Every comparison here
// is exact; there are no tolerances to tune.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "perfcong/classify.hpp"
#include "perfcong/errors.hpp"
#include "perfcong/io.hpp"
#include "perfcong/oracle.hpp"

using namespace perfcong;

namespace {

std::string spec_path(const std::string& name) {
  return std::string(PERFCONG_SPECS_DIR) + "/" + name;
}

struct Criterion {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// All elements with indices <= w; group coordinates are exhaustive on the
// finite backend and max-norm bounded on the abelian one.
std::vector<BrElement> window_elements(const BrContext& s, long long w,
                                       long long norm = 2) {
  std::vector<GroupElement> gs;
  if (s.group.is_finite()) {
    for (int i = 0; i < s.group.order(); ++i) gs.push_back(s.group.element(i));
  } else {
    for (auto& v : vectors_up_to_norm(s.group.rank(), norm))
      gs.push_back(s.group.element(v));
  }
  std::vector<BrElement> out;
  for (long long m = 0; m <= w; ++m)
    for (long long n = 0; n <= w; ++n)
      for (const auto& g : gs) out.push_back({m, g, n});
  return out;
}

// ---- criterion 1: the classical chain over the trivial group ----

void criterion1(Criterion& c) {
  auto sys = load_group_file(spec_path("trivial.spec"));
  auto s = sys.br_context();
  auto e = s.group.identity();

  auto specs = catalog(s, 3);
  c.require(specs.size() == 5, "catalog size != 5");
  c.require(specs[0].kind() == CongruenceKind::IdempotentSeparating &&
                specs[0].n() == trivial_subgroup(s.group),
            "first spec is not equality");
  for (long long k = 0; k <= 3; ++k) {
    const auto& sp = specs[k + 1];
    c.require(sp.is_group() && sp.k() == k, "chain spec out of order");
    bool perfect = classify(s, sp).perfect();
    c.require(perfect == (k >= 1), "classification of the chain is wrong");
  }

  auto zeta0 = specs[1];
  auto r = falsify_perfectness(s, zeta0, 4, 8, 8);
  c.require(r.has_value(), "no witness found for the k = 0 congruence");
  if (r) {
    c.require(r->x == BrElement{1, e, 0} && r->y == BrElement{0, e, 1},
              "unexpected witness pair");
    c.require(r->uncovered == std::vector<BrElement>{{0, e, 0}},
              "unexpected uncovered set");
  }
  for (long long k = 1; k <= 3; ++k) {
    c.require(!falsify_perfectness(s, specs[k + 1], 4, 8, 8).has_value(),
              "false witness at k = " + std::to_string(k));
  }
}

// ---- criterion 2: idempotent-separating congruences, exhaustively ----

void criterion2(Criterion& c) {
  for (const char* name : {"z4.spec", "z6.spec", "s3-id.spec",
                           "s3-sign.spec"}) {
    auto sys = load_group_file(spec_path(name));
    auto s = sys.br_context();
    auto win = window_elements(s, 3);
    int is_count = 0;
    for (const auto& spec : catalog(s, 0)) {
      if (spec.is_group()) continue;
      ++is_count;
      auto v = classify(s, spec);
      c.require(v.perfect() &&
                    v.reason == VerdictReason::IdempotentSeparating,
                std::string(name) + ": IS spec not classified perfect");
      for (const auto& x : win)
        for (const auto& y : win) {
          auto r = set_product_window(s, spec, x, y, 6, 6, 6);
          if (!r.covered() || r.bound_relative) {
            c.require(false, std::string(name) + ": uncovered pair " +
                                 format_br(s, x) + " * " + format_br(s, y));
            return;
          }
        }
    }
    c.require(is_count >= 3, std::string(name) + ": too few IS specs");
  }
}

// ---- criterion 3: k = 0 congruences are never perfect ----

void criterion3(Criterion& c) {
  for (const char* name : {"trivial.spec", "z2.spec", "z4.spec", "z6.spec",
                           "s3-id.spec", "s3-sign.spec", "int-double.spec"}) {
    auto sys = load_group_file(spec_path(name));
    auto s = sys.br_context();
    auto e = s.group.identity();

    std::vector<CongruenceSpec> specs;
    if (s.group.is_finite()) {
      specs = catalog(s, 0);
    } else {
      auto pool = sys.subgroup_pool();
      specs = catalog(s, 0, &pool);
    }
    specs.push_back(sigma_spec(s));

    for (const auto& spec : specs) {
      if (!spec.is_group()) continue;
      auto v = classify(s, spec);
      c.require(!v.perfect() && v.reason == VerdictReason::KZero,
                std::string(name) + ": a k = 0 spec classified perfect");
      auto r = divisibility_closure_check(s, spec, 4, 8, 4);
      c.require(!r.holds, std::string(name) + ": closure check passed");
      c.require(r.failing_pair.has_value() &&
                    r.failing_pair->first == BrElement{1, e, 0} &&
                    r.failing_pair->second == BrElement{0, e, 0},
                std::string(name) + ": wrong refuting pair");
    }
  }
}

// ---- criterion 4: a perfect group congruence over the integers ----

void criterion4(Criterion& c) {
  auto sys = load_group_file(spec_path("int-double.spec"));
  auto s = sys.br_context();
  auto three = *sys.find_subgroup("three");

  auto spec = validate_gc(s, three, s.group.identity(), 2);
  c.require(spec.certificate().twist, "certificate incomplete");

  c.require(coset_coverage(s, three).holds, "coset coverage fails for 3Z");

  auto v = classify(s, spec);
  c.require(v.perfect() && v.reason == VerdictReason::CosetCover,
            "spec not classified perfect");

  c.require(!falsify_perfectness(s, spec, 3, 9, 12).has_value(),
            "oracle falsified a perfect congruence");

  auto gap = coset_coverage(s, trivial_subgroup(s.group));
  c.require(!gap.holds, "coverage holds for the trivial subgroup");
  c.require(gap.gap.has_value() && gap.gap->n == 1 &&
                gap.gap->x == s.group.element(Col{1}),
            "wrong gap evidence");
}

// ---- criterion 5: catalog counts against a brute-force classifier ----

// Independent pair classifier: subgroups found by subset scan, conditions
// evaluated directly from their definitions, relations deduplicated by their
// partition of a window.  No catalog or congruence machinery involved.
std::set<std::vector<int>> brute_force_partitions(const BrContext& s,
                                                  long long kmax) {
  const GroupContext& g = s.group;
  const int order = g.order();
  auto win = window_elements(s, kmax + 2);

  auto signature = [&](const std::function<bool(const BrElement&,
                                                const BrElement&)>& rel) {
    std::vector<int> id(win.size(), -1);
    int next = 0;
    for (size_t i = 0; i < win.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (rel(win[j], win[i])) {
          id[i] = id[j];
          break;
        }
      }
      if (id[i] < 0) id[i] = next++;
    }
    return id;
  };

  // every subgroup, as a membership vector, by subset scan
  std::vector<std::vector<bool>> subgroups;
  for (int mask = 1; mask < (1 << order); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity (index 0)
    std::vector<bool> in(order, false);
    for (int i = 0; i < order; ++i) in[i] = (mask >> i) & 1;
    bool closed = true;
    for (int i = 0; i < order && closed; ++i)
      for (int j = 0; j < order && closed; ++j)
        if (in[i] && in[j])
          closed = in[g.mul(g.element(i), g.element(j)).index];
    for (int i = 0; i < order && closed; ++i)
      if (in[i]) closed = in[g.inv(g.element(i)).index];
    if (closed) subgroups.push_back(in);
  }

  auto alpha_of = [&](int i, long long times) {
    return endo_apply_power(g, s.alpha, times, g.element(i)).index;
  };
  auto normal = [&](const std::vector<bool>& in) {
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        if (in[j]) {
          auto conj = g.mul(g.mul(g.element(i), g.element(j)),
                            g.inv(g.element(i)));
          if (!in[conj.index]) return false;
        }
    return true;
  };

  std::set<std::vector<int>> partitions;
  for (const auto& in : subgroups) {
    if (!normal(in)) continue;

    bool admissible = true;
    for (int i = 0; i < order; ++i)
      if (in[i] && !in[alpha_of(i, 1)]) admissible = false;
    if (admissible) {
      partitions.insert(signature([&](const BrElement& x, const BrElement& y) {
        return x.m == y.m && x.n == y.n &&
               in[g.mul(x.g, g.inv(y.g)).index];
      }));
    }

    bool invariant = true;
    for (int i = 0; i < order; ++i)
      if (in[alpha_of(i, 1)] != in[i]) invariant = false;
    if (!invariant) continue;

    for (int zi = 0; zi < order; ++zi) {
      GroupElement z = g.element(zi);
      if (!in[g.mul(endo_apply(g, s.alpha, z), g.inv(z)).index]) continue;
      for (long long k = 0; k <= kmax; ++k) {
        bool twist = true;
        for (int i = 0; i < order; ++i) {
          auto lhs = g.mul(g.mul(g.inv(g.element(i)), z),
                           g.element(alpha_of(i, k)));
          if (!in[g.mul(lhs, g.inv(z)).index]) twist = false;
        }
        if (!twist) continue;
        partitions.insert(
            signature([&, z, k](const BrElement& x, const BrElement& y) {
              long long diff = (y.n - y.m) - (x.n - x.m);
              if (k == 0 ? diff != 0 : diff % k != 0) return false;
              long long l = k == 0 ? 0 : diff / k;
              auto lhs = endo_apply_power(g, s.alpha, x.n, y.g);
              auto rhs = endo_apply_power(g, s.alpha, y.n, x.g);
              auto nu = g.mul(g.mul(lhs, g.inv(rhs)), g.inv(g.pow(z, l)));
              return static_cast<bool>(in[nu.index]);
            }));
      }
    }
  }
  return partitions;
}

void criterion5(Criterion& c) {
  struct Case {
    const char* file;
    long long kmax;
    size_t expected;
  };
  for (const auto& cs : {Case{"z4.spec", 3, 7}, Case{"z2.spec", 1, 7}}) {
    auto sys = load_group_file(spec_path(cs.file));
    auto s = sys.br_context();

    auto brute = brute_force_partitions(s, cs.kmax);
    c.require(brute.size() == cs.expected,
              std::string(cs.file) + ": brute-force count " +
                  std::to_string(brute.size()));

    auto specs = catalog(s, cs.kmax);
    c.require(specs.size() == cs.expected,
              std::string(cs.file) + ": catalog count " +
                  std::to_string(specs.size()));

    // the two enumerations induce the same partitions of the window
    auto win = window_elements(s, cs.kmax + 2);
    std::set<std::vector<int>> from_catalog;
    for (const auto& spec : specs) {
      std::vector<int> id(win.size(), -1);
      int next = 0;
      for (size_t i = 0; i < win.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
          if (contains(s, spec, win[j], win[i])) {
            id[i] = id[j];
            break;
          }
        }
        if (id[i] < 0) id[i] = next++;
      }
      from_catalog.insert(id);
    }
    c.require(from_catalog == brute,
              std::string(cs.file) + ": partitions disagree");
  }
}

// ---- criterion 6: consistency guards ----

void criterion6(Criterion& c) {
  for (const char* name : {"trivial.spec", "z2.spec", "z4.spec", "z6.spec",
                           "s3-id.spec", "s3-sign.spec", "int-double.spec"}) {
    auto sys = load_group_file(spec_path(name));
    auto s = sys.br_context();
    const GroupContext& g = s.group;

    std::vector<CongruenceSpec> specs;
    if (g.is_finite()) {
      specs = catalog(s, 3);
    } else {
      auto pool = sys.subgroup_pool();
      specs = catalog(s, 3, &pool);
    }

    for (const auto& spec : specs) {
      if (spec.is_group()) {
        // the n = 1 reduction self-checks against n <= 8 and throws on any
        // disagreement
        coset_coverage(s, spec.n(), 8);
      } else {
        // the subgroup is recoverable from the identity class
        if (g.is_finite()) {
          std::vector<int> members;
          for (int i = 0; i < g.order(); ++i)
            if (contains(s, spec, {0, g.element(i), 0}, br_idempotent(s, 0)))
              members.push_back(i);
          c.require(subgroup_from_elements(g, members) == spec.n(),
                    std::string(name) + ": subgroup recovery failed");
        } else {
          for (auto& v : vectors_up_to_norm(g.rank(), 3)) {
            GroupElement a = g.element(v);
            bool in_class =
                contains(s, spec, {0, a, 0}, br_idempotent(s, 0));
            c.require(in_class == subgroup_contains(g, spec.n(), a),
                      std::string(name) + ": subgroup recovery failed");
          }
        }
      }
    }

    for (const auto& spec : specs) {
      if (!spec.is_group() || spec.k() < 1) continue;
      if (!classify(s, spec).perfect()) continue;
      for (const auto& x : window_elements(s, 3)) {
        auto w = class_witnesses(s, spec, x);
        bool good = w.left.m == 0 && w.right.n == 0 &&
                    contains(s, spec, x, w.left) &&
                    contains(s, spec, x, w.right);
        if (!good) {
          c.require(false, std::string(name) + ": bad witness for " +
                               format_br(s, x));
          return;
        }
      }
    }
  }
}

// ---- criterion 7: algebra laws, exhaustively on a window ----

void criterion7(Criterion& c) {
  for (const char* name : {"trivial.spec", "z2.spec", "z4.spec", "z6.spec",
                           "s3-id.spec", "s3-sign.spec"}) {
    auto sys = load_group_file(spec_path(name));
    auto s = sys.br_context();
    auto win = window_elements(s, 3);

    for (const auto& x : win)
      for (const auto& y : win) {
        if (forgetful(br_mul(s, x, y)) !=
            b_mul(forgetful(x), forgetful(y))) {
          c.require(false, std::string(name) + ": forgetful map broke");
          return;
        }
        for (const auto& z : win) {
          if (br_mul(s, br_mul(s, x, y), z) !=
              br_mul(s, x, br_mul(s, y, z))) {
            c.require(false, std::string(name) + ": associativity broke");
            return;
          }
        }
      }

    for (const auto& x : win) {
      auto xi = br_inv(s, x);
      c.require(br_mul(s, br_mul(s, x, xi), x) == x,
                std::string(name) + ": inverse law broke");
      c.require(br_mul(s, br_mul(s, xi, x), xi) == xi,
                std::string(name) + ": inverse law broke");
      c.require(br_inv(s, xi) == x, std::string(name) + ": double inverse");
    }

    for (long long i = 0; i <= 3; ++i)
      for (long long j = 0; j <= 3; ++j)
        c.require(br_mul(s, br_idempotent(s, i), br_idempotent(s, j)) ==
                      br_idempotent(s, std::max(i, j)),
                  std::string(name) + ": idempotent chain broke");

    for (const auto& spec : catalog(s, 2)) {
      for (const auto& x : win)
        for (const auto& y : win) {
          if (!contains(s, spec, x, y)) continue;
          for (const auto& t : win) {
            bool compat =
                contains(s, spec, br_mul(s, x, t), br_mul(s, y, t)) &&
                contains(s, spec, br_mul(s, t, x), br_mul(s, t, y));
            if (!compat) {
              c.require(false, std::string(name) + ": compatibility broke");
              return;
            }
          }
        }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {"criterion 1 (classical chain reproduction)", criterion1},
      {"criterion 2 (idempotent-separating suite)", criterion2},
      {"criterion 3 (k = 0 refutation suite)", criterion3},
      {"criterion 4 (perfect congruence over the integers)", criterion4},
      {"criterion 5 (catalog counts vs brute force)", criterion5},
      {"criterion 6 (consistency guards)", criterion6},
      {"criterion 7 (algebra suite)", criterion7},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << std::fixed << std::setprecision(2);
    if (c.ok) {
      std::cout << entry.label << ": pass [" << secs << "s]\n";
    } else {
      std::cout << entry.label << ": FAIL (" << c.detail << ") [" << secs
                << "s]\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
