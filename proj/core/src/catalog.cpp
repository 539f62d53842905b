#include "pcv/catalog.hpp"

#include <mutex>
#include <unordered_map>

#include "eval_util.hpp"
#include "pcv/errors.hpp"

namespace pcv {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::ExistentialWitness: return "existential-witness";
    case Kind::Representation: return "representation";
    case Kind::Inequality: return "inequality";
    case Kind::SetCover: return "set-cover";
    case Kind::SetEquality: return "set-equality";
    case Kind::ExceptionList: return "exception-list";
    case Kind::WitnessEnumeration: return "witness-enumeration";
    case Kind::ChainSearch: return "chain-search";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Exempt: return "exempt";
    case Outcome::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

std::vector<ConjectureSpec> build_catalog() {
  std::vector<ConjectureSpec> out;
  out.reserve(160);
  detail::add_section2(out);
  detail::add_section3(out);
  detail::add_section4(out);
  return out;
}

const std::unordered_map<std::string_view, const ConjectureSpec*>& index() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string_view, const ConjectureSpec*>();
    for (const auto& e : catalog()) (*m)[e.id] = &e;
    return m;
  }();
  return *map;
}

}  // namespace

const std::vector<ConjectureSpec>& catalog() {
  static const std::vector<ConjectureSpec> entries = build_catalog();
  return entries;
}

const ConjectureSpec* find_entry(std::string_view id) {
  const auto& m = index();
  auto it = m.find(id);
  return it == m.end() ? nullptr : it->second;
}

const ConjectureSpec& lookup(std::string_view id) {
  if (const auto* e = find_entry(id)) return *e;
  // A bare id whose lettered sub-entries exist resolves to the ".a" one.
  std::string with_a = std::string(id) + ".a";
  if (const auto* e = find_entry(with_a)) return *e;
  throw UsageError("unknown conjecture id: " + std::string(id));
}

}  // namespace pcv
