#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "harmonia/cubature.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/hierarchy.hpp"
#include "harmonia/kernel.hpp"
#include "harmonia/polynomial.hpp"

namespace harmonia {

/// %.17g; "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double v);

/// {"n": 3, "degree": 6, "terms": [{"exp": [2,4,0], "coef": 1.0}, ...]}
std::string polynomial_to_json(const HomogeneousPolynomial& f);
/// Throws IoError on malformed JSON and DegreeError/DimensionError on
/// inconsistent exponents.
HomogeneousPolynomial polynomial_from_json(std::string_view text);
HomogeneousPolynomial read_polynomial(const std::filesystem::path& path);

/// JSON array of the components, entry j holding the degree-2j part.
std::string expansion_to_json(const HarmonicExpansion& e);
/// Inverse of expansion_to_json; n and k are read off the components.
HarmonicExpansion expansion_from_json(std::string_view text);

/// {"n": N, "s": S, "lambdas": [...]}
std::string kernel_to_json(const GegenbauerKernel& kernel);

/// Header x1,...,xn,weight, then one node per row.
void write_rule_csv(std::ostream& os, const CubatureRule& rule);
/// Reads a rule written by write_rule_csv. The algebraic degree is not
/// stored in the file and must be supplied.
CubatureRule read_rule_csv(std::istream& is, int algebraic_degree);

/// Product rule of degree 2t backed by dir/rule_nN_tT.csv: loaded when the
/// file exists, computed and written otherwise.
std::shared_ptr<const CubatureRule> disk_cached_rule(
    const std::filesystem::path& dir, int n, int t);

/// Header s,kernel,tau,lower,upper,cubature_size,elapsed_ms.
void write_bounds_csv(std::ostream& os, std::span<const BoundResult> levels);
/// Array of objects with the CSV column names as keys; non-finite values
/// are written as null.
void write_bounds_json(std::ostream& os, std::span<const BoundResult> levels);

}  // namespace harmonia
