#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fhsforge/bounds.hpp"
#include "fhsforge/constructions.hpp"
#include "fhsforge/cyclic.hpp"
#include "fhsforge/fhs.hpp"

namespace fhsforge {

using Json = nlohmann::ordered_json;

/// Fits in 64 bits: a JSON number. Otherwise a decimal string.
Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& value);

Json to_json(const std::vector<CyclotomicCoset>& cosets);
Json to_json(const CosetFactorization& factorization);
/// {n, p, m, modulus, defining_set, dimension, generator}
Json to_json(const CyclicCode& code);

/// {n, ell, N, lambda, provenance: {family, q, k, n}, sequences}, sequences
/// sorted lexicographically. lambda is null when never measured.
Json to_json(const FhsSet& set);
/// Inverse of to_json(FhsSet). Throws ParseError on anything malformed and
/// propagates FhsSet validation errors.
FhsSet fhs_set_from_json(const Json& json);
FhsSet read_fhs_set(const std::string& path);
/// One sequence per row, symbols separated by commas.
std::string to_csv(const FhsSet& set);

/// {n,N,ell,lambda,I,J,pf1,pf2,singleton_max_N,sphere_max_N,meets:{...}}.
/// Big integers are decimal strings.
Json to_json(const BoundReport& report);

Json to_json(const IdentitySweepReport& report);

/// {family, q, m?, n, k?, M?, p?, claimed: {N, lambda}, verified: {...}}
Json to_json(const FamilyInstance& instance);

/// Two-space indentation, scalar arrays on one line, trailing newline.
std::string dump(const Json& json);
void write_file(const std::string& path, const std::string& contents);

} // namespace fhsforge
