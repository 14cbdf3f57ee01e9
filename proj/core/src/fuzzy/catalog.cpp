#include "donormatch/fuzzy/catalog.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "donormatch/error.hpp"
#include "../io_util.hpp"

namespace donormatch::fuzzy {

bool iequals(std::string_view a, std::string_view b) noexcept {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

namespace {

bool matches_any(std::string_view name, std::string_view primary,
                 const std::vector<std::string>& aliases) {
  if (iequals(name, primary)) return true;
  return std::any_of(aliases.begin(), aliases.end(),
                     [&](const std::string& alias) { return iequals(name, alias); });
}

}  // namespace

bool FuzzySet::matches(std::string_view name) const { return matches_any(name, label, aliases); }

bool LinguisticVariable::matches(std::string_view n) const {
  return matches_any(n, name, aliases);
}

const FuzzySet* LinguisticVariable::find_set(std::string_view label) const {
  auto it = std::find_if(sets.begin(), sets.end(),
                         [&](const FuzzySet& s) { return s.matches(label); });
  return it == sets.end() ? nullptr : &*it;
}

Catalog::Catalog(std::vector<LinguisticVariable> variables) : variables_(std::move(variables)) {
  std::vector<std::string> names;
  for (const auto& var : variables_) {
    if (var.name.empty()) throw ValidationError("linguistic variable with empty name");
    if (var.sets.empty())
      throw ValidationError("linguistic variable '" + var.name + "' has no fuzzy sets");

    std::vector<std::string> labels;
    for (const auto& set : var.sets) {
      if (set.label.empty())
        throw ValidationError("fuzzy set with empty label in '" + var.name + "'");
      labels.push_back(set.label);
      labels.insert(labels.end(), set.aliases.begin(), set.aliases.end());
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (iequals(labels[i], labels[j]))
          throw ValidationError("duplicate label '" + labels[i] + "' in '" + var.name + "'");

    names.push_back(var.name);
    names.insert(names.end(), var.aliases.begin(), var.aliases.end());
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (iequals(names[i], names[j]))
        throw ValidationError("variable name or alias '" + names[i] + "' used twice");
}

const LinguisticVariable* Catalog::find(std::string_view name) const {
  auto it = std::find_if(variables_.begin(), variables_.end(),
                         [&](const LinguisticVariable& v) { return v.matches(name); });
  return it == variables_.end() ? nullptr : &*it;
}

Catalog standard_catalog() {
  // Triangle peaks: 33 for Baya, 5000 for AgakJauh, 195 for AgakLama.
  return Catalog({
      LinguisticVariable{
          "age",
          "years",
          {
              {"Muda", MembershipCurve::left_shoulder(17, 33), {"young"}},
              {"Baya", MembershipCurve::triangle(17, 33, 60), {"middle_aged", "paruh_baya"}},
              {"Tua", MembershipCurve::right_shoulder(33, 60), {"elderly"}},
          },
          {"usia"},
      },
      LinguisticVariable{
          "distance",
          "meters",
          {
              {"Dekat", MembershipCurve::left_shoulder(1000, 10000), {"near"}},
              {"AgakJauh", MembershipCurve::triangle(1000, 5000, 10000),
               {"agak_jauh", "a_bit_far"}},
              {"Jauh", MembershipCurve::right_shoulder(1000, 10000), {"far"}},
          },
          {"jarak"},
      },
      LinguisticVariable{
          "time",
          "days",
          {
              {"Baru", MembershipCurve::left_shoulder(90, 300), {"recent"}},
              {"AgakLama", MembershipCurve::triangle(90, 195, 300),
               {"agak_lama", "short_term"}},
              {"Lama", MembershipCurve::right_shoulder(90, 300), {"old"}},
          },
          {"waktu_donor", "donor_time"},
      },
  });
}

namespace {

FuzzySet set_from_json(const std::string& variable, const nlohmann::json& j) {
  const auto label = j.at("label").get<std::string>();
  const auto shape = j.at("shape").get<std::string>();
  const auto params = j.at("params").get<std::vector<double>>();
  auto expect = [&](std::size_t n) {
    if (params.size() != n)
      throw ValidationError(variable + "." + label + ": shape '" + shape + "' takes " +
                            std::to_string(n) + " params, got " + std::to_string(params.size()));
  };

  FuzzySet set{label, MembershipCurve::left_shoulder(0, 1)};
  if (shape == "left_shoulder") {
    expect(2);
    set.curve = MembershipCurve::left_shoulder(params[0], params[1]);
  } else if (shape == "triangle") {
    expect(3);
    set.curve = MembershipCurve::triangle(params[0], params[1], params[2]);
  } else if (shape == "right_shoulder") {
    expect(2);
    set.curve = MembershipCurve::right_shoulder(params[0], params[1]);
  } else {
    throw ValidationError(variable + "." + label + ": unknown shape '" + shape + "'");
  }
  if (j.contains("aliases")) set.aliases = j.at("aliases").get<std::vector<std::string>>();
  return set;
}

nlohmann::json params_of(const MembershipCurve& curve) {
  return std::visit(
      [](const auto& s) -> nlohmann::json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Triangle>)
          return {s.a, s.m, s.b};
        else
          return {s.a, s.b};
      },
      curve.shape());
}

}  // namespace

Catalog catalog_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("catalog document must be a JSON object");
  std::vector<LinguisticVariable> vars;
  try {
    for (const auto& [name, body] : doc.items()) {
      LinguisticVariable var{name, "", {}};
      const nlohmann::json* sets = &body;
      if (body.is_object()) {
        var.units = body.value("units", "");
        if (body.contains("aliases"))
          var.aliases = body.at("aliases").get<std::vector<std::string>>();
        sets = &body.at("sets");
      }
      if (!sets->is_array())
        throw ValidationError("variable '" + name + "' must list its fuzzy sets in an array");
      for (const auto& s : *sets) var.sets.push_back(set_from_json(name, s));
      vars.push_back(std::move(var));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed catalog: ") + e.what());
  }
  return Catalog(std::move(vars));
}

nlohmann::json catalog_to_json(const Catalog& catalog) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& var : catalog.variables()) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& set : var.sets) {
      nlohmann::json s = {{"label", set.label},
                          {"shape", set.curve.shape_name()},
                          {"params", params_of(set.curve)}};
      if (!set.aliases.empty()) s["aliases"] = set.aliases;
      sets.push_back(std::move(s));
    }
    doc[var.name] = {{"units", var.units}, {"aliases", var.aliases}, {"sets", std::move(sets)}};
  }
  return doc;
}

Catalog load_catalog(const std::filesystem::path& path) {
  return catalog_from_json(detail::parse_json(detail::read_file(path)));
}

}  // namespace donormatch::fuzzy
