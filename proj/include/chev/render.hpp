#pragma once

#include <string>

#include "chev/charpoly.hpp"
#include "json.hpp"

namespace chev {

using json = nlohmann::json;

std::string weight_text(const Weight& mu);   // "2w1-3w2", "0"
std::string weight_latex(const Weight& mu);  // "2\varpi_1-3\varpi_2"

std::string poly_text(const CharPoly& p, Var var = Var::y);
std::string poly_latex(const CharPoly& p, Var var = Var::y);
// Factored display of each weight coefficient, e.g. "(y + 1)^2*(y^2 + y + 1)*e^{w1}"
std::string poly_factored(const CharPoly& p, Var var = Var::y);
std::string scalar_factored(const Scalar& s, Var var = Var::y);
std::string scalar_factored_latex(const Scalar& s, Var var = Var::y);  // "(q - 1)^{2}"

// [{"weight":[..], "coeff":[[k, c], ...]}] with c * v^k, v^2 = q = -y
json poly_json(const CharPoly& p);
CharPoly poly_from_json(const json& j, int rank);
json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

std::string frac_text(const CharFrac& f, Var var = Var::y);

}  // namespace chev
