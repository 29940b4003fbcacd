#include "perfcong/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "perfcong/errors.hpp"

namespace perfcong {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long to_ll(const std::string& tok, const std::string& source, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, line, "expected an integer, got '" + tok + "'");
  }
}

Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer in JSON input");
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());  // decimal string for values beyond 64 bits
}

}  // namespace

const Subgroup* GroupSystem::find_subgroup(const std::string& name) const {
  for (const auto& [n, h] : subgroups) {
    if (n == name) return &h;
  }
  return nullptr;
}

std::vector<Subgroup> GroupSystem::subgroup_pool() const {
  std::vector<Subgroup> pool;
  for (const auto& [n, h] : subgroups) pool.push_back(h);
  return pool;
}

GroupSystem parse_group_file(std::istream& in, const std::string& source) {
  std::string backend;
  long long order = -1, identity = -1, rank = -1;
  std::vector<int> table;
  bool have_table = false;
  std::vector<int> endo_image;
  bool have_endo = false;
  RowMatrix endo_matrix;
  bool have_endo_matrix = false;
  // name, raw value, line
  std::vector<std::tuple<std::string, std::string, int>> subgroup_lines;

  std::string raw;
  int lineno = 0;
  int backend_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError(source, lineno, "expected 'key: value'");
    }
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "backend") {
      backend = value;
      backend_line = lineno;
      if (backend != "finite-cayley" && backend != "free-abelian") {
        throw ParseError(source, lineno, "unknown backend '" + value + "'");
      }
    } else if (key == "order") {
      order = to_ll(value, source, lineno);
    } else if (key == "identity") {
      identity = to_ll(value, source, lineno);
    } else if (key == "rank") {
      rank = to_ll(value, source, lineno);
    } else if (key == "table") {
      std::string rows = value;
      std::replace(rows.begin(), rows.end(), '/', ' ');
      for (const auto& tok : split_ws(rows)) {
        table.push_back(static_cast<int>(to_ll(tok, source, lineno)));
      }
      have_table = true;
    } else if (key == "endo") {
      for (const auto& tok : split_ws(value)) {
        endo_image.push_back(static_cast<int>(to_ll(tok, source, lineno)));
      }
      have_endo = true;
    } else if (key == "endo-matrix") {
      auto toks = split_ws(value);
      if (rank <= 0) {
        throw ParseError(source, lineno, "'rank' must precede 'endo-matrix'");
      }
      if (static_cast<long long>(toks.size()) != rank * rank) {
        throw ParseError(source, lineno, "endo-matrix needs rank*rank entries");
      }
      endo_matrix.assign(rank, Col(rank, 0));
      for (long long i = 0; i < rank * rank; ++i) {
        endo_matrix[i / rank][i % rank] = Int(toks[i]);
      }
      have_endo_matrix = true;
    } else if (key.starts_with("subgroup ")) {
      subgroup_lines.emplace_back(trim(key.substr(9)), value, lineno);
    } else {
      throw ParseError(source, lineno, "unknown key '" + key + "'");
    }
  }

  if (backend.empty()) throw ParseError(source, 1, "missing 'backend' line");
  GroupSystem sys;
  try {
    if (backend == "finite-cayley") {
      if (order <= 0) throw ParseError(source, backend_line, "missing 'order'");
      if (identity < 0) {
        throw ParseError(source, backend_line, "missing 'identity'");
      }
      if (!have_table) throw ParseError(source, backend_line, "missing 'table'");
      if (!have_endo) throw ParseError(source, backend_line, "missing 'endo'");
      sys.group = GroupContext::finite_cayley(static_cast<int>(order), table,
                                              static_cast<int>(identity));
      sys.alpha = make_endo_finite(sys.group, endo_image);
    } else {
      if (rank <= 0) throw ParseError(source, backend_line, "missing 'rank'");
      if (!have_endo_matrix) {
        throw ParseError(source, backend_line, "missing 'endo-matrix'");
      }
      sys.group = GroupContext::free_abelian(static_cast<int>(rank));
      sys.alpha = make_endo_abelian(sys.group, endo_matrix);
    }
  } catch (const ValidationError& e) {
    throw ParseError(source, backend_line, e.what());
  }

  for (const auto& [name, value, line] : subgroup_lines) {
    if (name.empty()) throw ParseError(source, line, "subgroup needs a name");
    if (sys.find_subgroup(name) != nullptr) {
      throw ParseError(source, line, "duplicate subgroup '" + name + "'");
    }
    try {
      if (sys.group.is_finite()) {
        std::vector<int> idxs;
        for (const auto& tok : split_ws(value)) {
          idxs.push_back(static_cast<int>(to_ll(tok, source, line)));
        }
        sys.subgroups.emplace_back(name,
                                   subgroup_from_elements(sys.group, idxs));
      } else {
        auto toks = split_ws(value);
        if (toks.empty() || toks[0] != "basis") {
          throw ParseError(source, line,
                           "abelian subgroup needs 'basis <integers>'");
        }
        long long count = static_cast<long long>(toks.size()) - 1;
        long long r = sys.group.rank();
        if (count % r != 0) {
          throw ParseError(source, line,
                           "basis entry count must be a multiple of the rank");
        }
        ColMatrix cols(count / r, Col(r, 0));
        for (long long i = 0; i < count; ++i) {
          cols[i / r][i % r] = Int(toks[i + 1]);  // column-major
        }
        sys.subgroups.emplace_back(name, subgroup_from_basis(sys.group, cols));
      }
    } catch (const ValidationError& e) {
      throw ParseError(source, line, e.what());
    } catch (const Error& e) {
      throw ParseError(source, line, e.what());
    }
  }
  return sys;
}

GroupSystem load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_group_file(in, path);
}

GroupElement parse_group_element(const GroupContext& g,
                                 const std::string& text) {
  std::string t = trim(text);
  if (g.is_finite()) {
    return g.element(static_cast<int>(to_ll(t, "element", 0)));
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("abelian element must look like '[a b c]', got '" + text +
                     "'");
  }
  Col v;
  for (const auto& tok : split_ws(t.substr(1, t.size() - 2))) {
    v.push_back(Int(tok));
  }
  return g.element(std::move(v));
}

BrElement parse_br_element(const GroupContext& g, const std::string& text) {
  auto first = text.find(',');
  auto last = text.rfind(',');
  if (first == std::string::npos || first == last) {
    throw ParseError("element must look like 'm,g,n', got '" + text + "'");
  }
  long long m = to_ll(trim(text.substr(0, first)), "element", 0);
  long long n = to_ll(trim(text.substr(last + 1)), "element", 0);
  if (m < 0 || n < 0) throw ParseError("indices must be nonnegative");
  GroupElement ge =
      parse_group_element(g, text.substr(first + 1, last - first - 1));
  return BrElement{m, ge, n};
}

CongruenceSpec parse_congruence_string(const BrContext& s,
                                       const GroupSystem& sys,
                                       const std::string& text) {
  auto resolve = [&](const std::string& name) -> const Subgroup& {
    const Subgroup* h = sys.find_subgroup(trim(name));
    if (h == nullptr) {
      throw ParseError("unknown subgroup '" + trim(name) + "'");
    }
    return *h;
  };
  if (text.starts_with("is:")) {
    return validate_is(s, resolve(text.substr(3)));
  }
  if (text.starts_with("gc:")) {
    std::string rest = text.substr(3);
    auto c1 = rest.find(',');
    auto c2 = rest.rfind(',');
    if (c1 == std::string::npos || c1 == c2) {
      throw ParseError("expected 'gc:<name>,z=<element>,k=<int>'");
    }
    std::string zpart = trim(rest.substr(c1 + 1, c2 - c1 - 1));
    std::string kpart = trim(rest.substr(c2 + 1));
    if (!zpart.starts_with("z=") || !kpart.starts_with("k=")) {
      throw ParseError("expected 'gc:<name>,z=<element>,k=<int>'");
    }
    GroupElement z = parse_group_element(s.group, zpart.substr(2));
    long long k = to_ll(trim(kpart.substr(2)), "congruence", 0);
    return validate_gc(s, resolve(rest.substr(0, c1)), z, k);
  }
  throw ParseError("congruence must start with 'is:' or 'gc:', got '" + text +
                   "'");
}

json element_to_json(const GroupContext& g, const GroupElement& a) {
  if (g.is_finite()) return json(a.index);
  json arr = json::array();
  for (const auto& v : a.coords) arr.push_back(int_to_json(v));
  return arr;
}

GroupElement element_from_json(const GroupContext& g, const json& j) {
  if (g.is_finite()) return g.element(j.get<int>());
  Col v;
  for (const auto& e : j) v.push_back(json_to_int(e));
  return g.element(std::move(v));
}

json subgroup_to_json(const GroupContext& g, const Subgroup& h) {
  json out;
  if (g.is_finite()) {
    out["elements"] = h.members();
  } else {
    json basis = json::array();
    for (const auto& col : h.basis) {
      json c = json::array();
      for (const auto& v : col) c.push_back(int_to_json(v));
      basis.push_back(c);
    }
    out["basis"] = basis;
  }
  return out;
}

Subgroup subgroup_from_json(const GroupContext& g, const json& j) {
  if (g.is_finite()) {
    return subgroup_from_elements(g, j.at("elements").get<std::vector<int>>());
  }
  ColMatrix cols;
  for (const auto& c : j.at("basis")) {
    Col col;
    for (const auto& v : c) col.push_back(json_to_int(v));
    cols.push_back(std::move(col));
  }
  return subgroup_from_basis(g, std::move(cols));
}

json spec_to_json(const BrContext& s, const CongruenceSpec& spec) {
  json out;
  out["variant"] = spec.is_group() ? "gc" : "is";
  out["N"] = subgroup_to_json(s.group, spec.n());
  if (spec.is_group()) {
    out["z"] = element_to_json(s.group, spec.z());
    out["k"] = spec.k();
  }
  const Certificate& c = spec.certificate();
  out["certificate"] = {{"normal", c.normal},
                        {"admissible", c.admissible},
                        {"invariant", c.invariant},
                        {"coset-shift", c.coset_shift},
                        {"twist", c.twist}};
  return out;
}

CongruenceSpec spec_from_json(const BrContext& s, const json& j) {
  Subgroup n = subgroup_from_json(s.group, j.at("N"));
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "is") return validate_is(s, n);
  if (variant == "gc") {
    return validate_gc(s, n, element_from_json(s.group, j.at("z")),
                       j.at("k").get<long long>());
  }
  throw ParseError("unknown congruence variant '" + variant + "'");
}

json br_element_to_json(const GroupContext& g, const BrElement& x) {
  return json::array({x.m, element_to_json(g, x.g), x.n});
}

BrElement br_element_from_json(const GroupContext& g, const json& j) {
  return BrElement{j.at(0).get<long long>(), element_from_json(g, j.at(1)),
                   j.at(2).get<long long>()};
}

json verdict_to_json(const BrContext& s, const PerfectVerdict& v) {
  json out;
  out["status"] = v.perfect() ? "perfect" : "not-perfect";
  out["reason"] = reason_tag(v.reason);
  if (v.evidence) {
    out["evidence"] = {{"n", v.evidence->n},
                       {"x", element_to_json(s.group, v.evidence->x)}};
  }
  return out;
}

PerfectVerdict verdict_from_json(const BrContext& s, const json& j) {
  PerfectVerdict v;
  std::string status = j.at("status").get<std::string>();
  if (status != "perfect" && status != "not-perfect") {
    throw ParseError("unknown verdict status '" + status + "'");
  }
  v.status = status == "perfect" ? VerdictStatus::Perfect
                                 : VerdictStatus::NotPerfect;
  v.reason = reason_from_tag(j.at("reason").get<std::string>());
  if (j.contains("evidence")) {
    v.evidence = CosetGapEvidence{
        j.at("evidence").at("n").get<long long>(),
        element_from_json(s.group, j.at("evidence").at("x"))};
  }
  return v;
}

json report_to_json(const BrContext& s, const VerificationReport& r) {
  json uncovered = json::array();
  for (const auto& w : r.uncovered) {
    uncovered.push_back(br_element_to_json(s.group, w));
  }
  return json{{"pair", json::array({br_element_to_json(s.group, r.x),
                                    br_element_to_json(s.group, r.y)})},
              {"window", r.window},
              {"bound", r.bound},
              {"norm-bound", r.norm_bound},
              {"status", r.covered() ? "covered" : "uncovered-within-bound"},
              {"covered", r.covered_count},
              {"uncovered", uncovered},
              {"bound-relative", r.bound_relative}};
}

VerificationReport report_from_json(const BrContext& s, const json& j) {
  VerificationReport r;
  r.x = br_element_from_json(s.group, j.at("pair").at(0));
  r.y = br_element_from_json(s.group, j.at("pair").at(1));
  r.window = j.at("window").get<long long>();
  r.bound = j.at("bound").get<long long>();
  r.norm_bound = j.at("norm-bound").get<long long>();
  r.covered_count = j.at("covered").get<long long>();
  for (const auto& w : j.at("uncovered")) {
    r.uncovered.push_back(br_element_from_json(s.group, w));
  }
  r.bound_relative = j.at("bound-relative").get<bool>();
  return r;
}

std::string format_spec(const BrContext& s, const CongruenceSpec& spec) {
  std::ostringstream os;
  if (spec.is_group()) {
    os << "gc N=" << format_subgroup(s.group, spec.n())
       << " z=" << s.group.format(spec.z()) << " k=" << spec.k();
  } else {
    os << "is N=" << format_subgroup(s.group, spec.n());
  }
  return os.str();
}

std::string format_verdict(const BrContext& s, const PerfectVerdict& v) {
  std::ostringstream os;
  os << (v.perfect() ? "perfect" : "not-perfect") << " ("
     << reason_tag(v.reason) << ")";
  if (v.evidence) {
    os << " evidence: n=" << v.evidence->n
       << " x=" << s.group.format(v.evidence->x);
  }
  return os.str();
}

}  // namespace perfcong
