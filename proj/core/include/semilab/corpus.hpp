#pragma once

// Deterministic element corpora. Ambient elements are generated layer by
// layer over (degree d, exact height h), layers ordered by d + h and then d.
// Within a layer the support is the d + 1 smallest ambient exponents and the
// coefficients run through an odometer with the constant position fastest.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semilab/semidomain.hpp"

namespace semilab {

/// Coefficients of height <= h in `ring`, ordered by (height, value).
std::vector<Coeff> coefficient_alphabet(Ring ring, std::size_t h);

/// The n smallest exponents available in the ambient of `inst`.
std::vector<Exp> ambient_support(const SemidomainInstance& inst, std::size_t n);

/// Visits nonzero ambient elements in staircase order until `visit` returns
/// false or bounds.max_candidates elements were visited.
void for_each_ambient(const SemidomainInstance& inst, const Bounds& bounds,
                      const std::function<bool(const Poly&)>& visit);

std::vector<Poly> ambient_corpus(const SemidomainInstance& inst, const Bounds& bounds);
/// Nonzero members of S, at most bounds.max_candidates of them.
std::vector<Poly> member_corpus(const SemidomainInstance& inst, const Bounds& bounds);

/// A uniformly drawn nonzero ambient element within the bounds.
Poly sample_ambient(const SemidomainInstance& inst, const Bounds& bounds, std::mt19937_64& rng);
std::vector<Poly> sample_members(const SemidomainInstance& inst, const Bounds& bounds, std::size_t count,
                                 std::uint64_t seed);

std::string corpus_descriptor(const SemidomainInstance& inst, const Bounds& bounds);

}  // namespace semilab
