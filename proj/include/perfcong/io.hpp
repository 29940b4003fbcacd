#ifndef PERFCONG_IO_HPP_
#define PERFCONG_IO_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "perfcong/classify.hpp"
#include "perfcong/congruence.hpp"
#include "perfcong/oracle.hpp"

namespace perfcong {

// A parsed group spec file: the group, its endomorphism, and the named
// subgroups declared in the file (in file order).
struct GroupSystem {
  GroupContext group;
  Endo alpha;
  std::vector<std::pair<std::string, Subgroup>> subgroups;
  const Subgroup* find_subgroup(const std::string& name) const;
  BrContext br_context() const { return make_br_context(group, alpha); }
  std::vector<Subgroup> subgroup_pool() const;
};

// Line-oriented `key: value` format with `#` comments; see README for the
// full grammar.  Errors report the source name and line number.
GroupSystem parse_group_file(std::istream& in, const std::string& source);
GroupSystem load_group_file(const std::string& path);

// `is:<subgroup-name>` or `gc:<subgroup-name>,z=<element>,k=<int>`, resolved
// against the named subgroups of the file.
CongruenceSpec parse_congruence_string(const BrContext& s,
                                       const GroupSystem& sys,
                                       const std::string& text);

// Finite backend: a bare index.  Abelian backend: `[a b c]`.
GroupElement parse_group_element(const GroupContext& g, const std::string& text);

// `m,g,n` with g in the element syntax above.
BrElement parse_br_element(const GroupContext& g, const std::string& text);

nlohmann::json element_to_json(const GroupContext& g, const GroupElement& a);
GroupElement element_from_json(const GroupContext& g, const nlohmann::json& j);

nlohmann::json subgroup_to_json(const GroupContext& g, const Subgroup& h);
Subgroup subgroup_from_json(const GroupContext& g, const nlohmann::json& j);

nlohmann::json spec_to_json(const BrContext& s, const CongruenceSpec& spec);
// Re-validates through the smart constructors.
CongruenceSpec spec_from_json(const BrContext& s, const nlohmann::json& j);

nlohmann::json verdict_to_json(const BrContext& s, const PerfectVerdict& v);
PerfectVerdict verdict_from_json(const BrContext& s, const nlohmann::json& j);

nlohmann::json report_to_json(const BrContext& s, const VerificationReport& r);
VerificationReport report_from_json(const BrContext& s,
                                    const nlohmann::json& j);

nlohmann::json br_element_to_json(const GroupContext& g, const BrElement& x);
BrElement br_element_from_json(const GroupContext& g, const nlohmann::json& j);

std::string format_spec(const BrContext& s, const CongruenceSpec& spec);
std::string format_verdict(const BrContext& s, const PerfectVerdict& v);

}  // namespace perfcong

#endif  // PERFCONG_IO_HPP_
