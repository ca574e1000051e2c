#include "semilab/registry.hpp"

#include <charconv>

namespace semilab {

const SemidomainInstance& AnyInstance::require_poly() const {
  if (!poly) raise(Errc::UnsupportedElement, id + " has no polynomial model; use fractions");
  return *poly;
}

const LocalizedSemidomain& AnyInstance::require_loc() const {
  if (!loc) raise(Errc::UnsupportedElement, id + " is not a localized instance");
  return *loc;
}

namespace {

struct Entry {
  const char* id;
  const char* alias;
};

constexpr Entry kEntries[] = {
    {"nat", "I0"},     {"sign-c0c1", "I1"},  {"natq", "I2"},    {"natz", "I3"},
    {"posq-gauss", "I4"}, {"posmonalg", "I5"}, {"hfs-loc", "I6"}, {"nat-dyadic", ""},
};

std::vector<long> parse_list(std::string_view text) {
  std::vector<long> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    long v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      raise(Errc::UnknownInstance, "bad instance parameter '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

AnyInstance make_instance(std::string_view id, const InstanceParams& params) {
  InstanceParams p = params;
  std::string_view name = id;
  if (auto open = id.find('('); open != std::string_view::npos) {
    if (id.back() != ')') raise(Errc::UnknownInstance, "unknown instance '" + std::string(id) + "'");
    name = id.substr(0, open);
    auto args = parse_list(id.substr(open + 1, id.size() - open - 2));
    if (name == "posmonalg" || name == "I5") {
      p.primes = args;
    } else if ((name == "hfs-loc" || name == "I6") && args.size() == 1 && args[0] > 0) {
      p.rank = static_cast<unsigned>(args[0]);
    } else {
      raise(Errc::UnknownInstance, "instance '" + std::string(name) + "' takes no such parameters");
    }
  }
  for (const auto& e : kEntries) {
    if (name == e.alias && *e.alias) name = e.id;
  }
  AnyInstance out;
  if (name == "nat") out.poly = SemidomainInstance::nat();
  else if (name == "sign-c0c1") out.poly = SemidomainInstance::sign_c0c1();
  else if (name == "natq") out.poly = SemidomainInstance::natq();
  else if (name == "natz") out.poly = SemidomainInstance::natz();
  else if (name == "posq-gauss") out.poly = SemidomainInstance::posq_gauss();
  else if (name == "posmonalg") out.poly = SemidomainInstance::posmonalg(p.primes);
  else if (name == "hfs-loc") {
    out.poly = SemidomainInstance::hfs_loc(p.rank);
    out.loc = LocalizedSemidomain::hfs_loc(p.rank);
  } else if (name == "nat-dyadic") {
    out.loc = LocalizedSemidomain::nat_dyadic();
  } else {
    raise(Errc::UnknownInstance, "unknown instance '" + std::string(id) + "'");
  }
  out.id = out.poly ? out.poly->id() : out.loc->id();
  return out;
}

std::vector<InstanceInfo> list_instances(const InstanceParams& params) {
  std::vector<InstanceInfo> out;
  for (const auto& e : kEntries) {
    auto inst = make_instance(e.id, params);
    InstanceInfo info;
    info.id = inst.id;
    info.alias = e.alias;
    if (inst.poly) {
      info.description = inst.poly->description();
      info.ambient = std::string(to_string(inst.poly->ambient_kind()));
      info.truncated = inst.poly->truncated();
    } else {
      info.description = "localization " + inst.loc->id() + " of " + inst.loc->base().description();
      info.ambient = "D^-1 " + std::string(to_string(inst.loc->base().ambient_kind()));
      info.truncated = inst.loc->base().truncated();
    }
    out.push_back(std::move(info));
  }
  return out;
}

}  // namespace semilab
