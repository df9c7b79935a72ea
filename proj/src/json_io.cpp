#include "ppart/json_io.hpp"

#include "ppart/errors.hpp"

#include <limits>

namespace ppart {

nlohmann::ordered_json bigint_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer())
    return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
      throw DomainError("malformed integer '" + s + "'");
    return BigInt(s);
  }
  throw DomainError("expected an integer, got " + j.dump());
}

nlohmann::ordered_json poly_to_json(const QPolynomial& f) {
  PolyEncoding e = encode(f);
  nlohmann::ordered_json num = nlohmann::ordered_json::array();
  for (const auto& c : e.numerators)
    num.push_back(bigint_to_json(c));
  nlohmann::ordered_json j;
  j["num"] = std::move(num);
  j["den"] = bigint_to_json(e.denominator);
  return j;
}

QPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j["num"].is_array())
    throw DomainError("polynomial must be an object with a \"num\" array");
  PolyEncoding e;
  for (const auto& c : j["num"])
    e.numerators.push_back(bigint_from_json(c));
  e.denominator = j.contains("den") ? bigint_from_json(j["den"]) : BigInt(1);
  return decode(e);
}

} // namespace ppart
