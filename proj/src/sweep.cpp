#include "ppart/sweep.hpp"

#include <exception>

namespace ppart {

namespace {

// Runs body(i) for i in [0, n). Exceptions are captured per item and the one
// with the lowest index is rethrown, so both paths fail identically.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

struct ClassItem {
  std::size_t group;
  UnipotentClass cls;
};

std::vector<ClassItem> flatten_classes(const std::vector<GroupSpec>& groups, const DiagramLibrary& lib) {
  std::vector<ClassItem> items;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (auto& c : enumerate_classes(groups[gi], lib))
      items.push_back({gi, std::move(c)});
  return items;
}

std::vector<RootSystem> root_systems(const std::vector<GroupSpec>& groups) {
  std::vector<RootSystem> out;
  out.reserve(groups.size());
  for (const auto& g : groups)
    out.emplace_back(g);
  return out;
}

} // namespace

std::vector<VerificationReport> verify_batch(const std::vector<CharacterRecord>& characters, Execution exec,
                                             std::optional<std::pair<unsigned, unsigned>> numeric,
                                             const DiagramLibrary& lib) {
  std::vector<VerificationReport> out(characters.size());
  for_each_index(characters.size(), exec, [&](std::size_t i) {
    out[i] = numeric ? verify_character(characters[i], numeric->first, numeric->second, lib)
                     : verify_character(characters[i], lib);
  });
  return out;
}

std::vector<VerificationReport> sweep_gl(int n_min, int n_max, Execution exec) {
  std::vector<CharacterRecord> chars;
  for (int n = n_min; n <= n_max; ++n)
    for (auto& c : gl_unipotent_characters(n))
      chars.push_back(std::move(c));
  return verify_batch(chars, exec);
}

std::vector<IdentitySummary> identity_sweep(const std::vector<GroupSpec>& groups, Execution exec,
                                            const DiagramLibrary& lib) {
  if (exec == Execution::serial) {
    std::vector<IdentitySummary> out;
    for (const auto& g : groups)
      out.push_back(check_dimension_identities(g, lib));
    return out;
  }

  const auto items = flatten_classes(groups, lib);
  const auto systems = root_systems(groups);
  std::vector<std::vector<std::string>> failures(items.size());
  for_each_index(items.size(), exec, [&](std::size_t i) {
    if (items[i].cls.very_even != VeryEvenTag::II)
      failures[i] = identity_failures(systems[items[i].group], items[i].cls.diagram);
  });

  std::vector<IdentitySummary> out;
  for (const auto& g : groups)
    out.push_back({g, 0, 0, {}});
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& s = out[items[i].group];
    ++s.classes;
    if (items[i].cls.very_even == VeryEvenTag::II)
      continue;
    ++s.records;
    for (auto& what : failures[i])
      s.violations.push_back({items[i].cls.name(), std::move(what)});
  }
  return out;
}

std::vector<GradingDims> dims_sweep(const std::vector<GroupSpec>& groups, Execution exec,
                                    const DiagramLibrary& lib) {
  const auto items = flatten_classes(groups, lib);
  const auto systems = root_systems(groups);
  std::vector<GradingDims> out(items.size());
  for_each_index(items.size(), exec,
                 [&](std::size_t i) { out[i] = grading_dims(systems[items[i].group], items[i].cls.diagram); });
  return out;
}

} // namespace ppart
