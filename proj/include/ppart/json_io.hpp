#pragma once

#include "ppart/qpoly.hpp"

#include <json.hpp>

namespace ppart {

/// {"num": [...], "den": d}. Integers outside the int64 range are written as
/// decimal strings.
nlohmann::ordered_json poly_to_json(const QPolynomial& f);
/// Throws DomainError on malformed input.
QPolynomial poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json bigint_to_json(const BigInt& n);
BigInt bigint_from_json(const nlohmann::json& j);

} // namespace ppart
