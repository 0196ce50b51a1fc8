#include "cgt/blocks.hpp"

#include <json.hpp>

#include "cgt/error.hpp"
#include "cgt/subgroups.hpp"

namespace cgt {

BigInt p_part(const BigInt& n, std::uint64_t p) {
  if (n < 1) fail(errc::bad_input, "p_part needs a positive integer");
  if (!is_prime(p)) fail(errc::not_prime, "p_part: p must be prime");
  BigInt part = 1, m = n;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

DefectReport defect_zero_characters(const CharacterTable& t, std::uint64_t p) {
  DefectReport rep;
  rep.prime = p;
  rep.group_p_part = p_part(t.group->order(), p);
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    if (p_part(t.degrees[i], p) == rep.group_p_part) {
      rep.defect_zero_rows.push_back(i);
      rep.defect_zero_degrees.push_back(t.degrees[i]);
    }
  }
  rep.p_core_trivial = p_core(t.group, p)->is_trivial();
  return rep;
}

std::string DefectReport::to_json() const {
  nlohmann::json j;
  j["p"] = prime;
  j["gp_part"] = group_p_part.str();
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : defect_zero_degrees) degs.push_back(d.str());
  j["defect_zero_degrees"] = std::move(degs);
  j["p_core_trivial"] = p_core_trivial;
  return j.dump();
}

std::optional<std::size_t> tsushima_witness(const GroupPtr& g, const ClassList& cl,
                                            std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) fail(errc::not_prime, "tsushima_witness: primes required");
  if (p == q) fail(errc::bad_input, "tsushima_witness: p and q must differ");
  for (std::size_t i = 0; i < cl.count(); ++i) {
    if (cl.classes[i].element_order != q) continue;
    if (cl.centralizer_order(i) % p != 0) return i;
  }
  return std::nullopt;
}

} // namespace cgt
