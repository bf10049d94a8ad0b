#pragma once

#include <optional>
#include <string>

#include "qea/module.hpp"
#include "qea/variety.hpp"

namespace qea {

enum class ModuleKind { kA, kR, kRq };

/// A module file holds one of the three module types; loading re-validates
/// every defining relation and the consistency of q with (p, ℓ).
struct LoadedModule {
  ModuleKind kind = ModuleKind::kA;
  std::optional<ModuleRep> a;
  std::optional<RModule> r;
  std::optional<RqModule> rq;
  std::string label;

  const FieldCtx& ctx() const;
  std::uint32_t dim() const;
};

std::string module_to_json(const ModuleRep& M, const std::string& label = "");
std::string rmodule_to_json(const RModule& M, const std::string& label = "");
std::string rqmodule_to_json(const RqModule& M, const std::string& label = "");

LoadedModule module_from_json(const std::string& text);

/// kind is "variety" (canonical orbit representatives) or "psi"
/// (plain projective points, the Ψ-image).
std::string variety_to_json(const FieldCtx& ctx, const VarietySet& V, const std::string& kind);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qea
