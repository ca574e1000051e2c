#pragma once

// Instance lookup by id for the command line and the theorem harness.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/localization.hpp"
#include "semilab/semidomain.hpp"

namespace semilab {

struct InstanceParams {
  std::vector<long> primes{2, 3, 5};
  unsigned rank = 3;
};

/// A catalog entry. Polynomial instances set `poly`; localized ones set
/// `loc`; hfs-loc sets both (numerators f/1 and the full fraction model).
struct AnyInstance {
  std::string id;
  std::optional<SemidomainInstance> poly;
  std::optional<LocalizedSemidomain> loc;

  /// Throws UnsupportedElement when the entry has no polynomial model.
  const SemidomainInstance& require_poly() const;
  const LocalizedSemidomain& require_loc() const;
};

struct InstanceInfo {
  std::string id;
  std::string alias;
  std::string description;
  std::string ambient;
  bool truncated;
};

/// Accepts "nat", "sign-c0c1", "natq", "natz", "posq-gauss", "posmonalg",
/// "hfs-loc", "nat-dyadic", the aliases I0..I6, and inline parameters such
/// as "posmonalg(2,3)" or "hfs-loc(4)". Throws UnknownInstance.
AnyInstance make_instance(std::string_view id, const InstanceParams& params = {});
std::vector<InstanceInfo> list_instances(const InstanceParams& params = {});

}  // namespace semilab
