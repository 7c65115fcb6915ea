#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bicoalg/yd.hpp"

namespace bicoalg {

/// A structure document. Every block is optional; YD and BCC blocks are
/// resolved against the document's bicoalgebroid or the context one.
struct Document {
  Field field;
  std::optional<Coalgebra> coalgebra;
  std::optional<Bicoalgebroid> bicoalgebroid;
  std::optional<YDModule> yd_module;
  std::optional<BCCData> bcc;
  std::vector<Bicomodule> bicomodules;   // "comodules" entries with kind "bicomodule"
  std::vector<HComodule> h_comodules;    // "comodules" entries with kind "h_comodule"
};

/// Validates and parses a document; throws SchemaError with a JSON pointer.
/// Comodules live over the document's coalgebra, else the base of its
/// bicoalgebroid, else the base of `context`.
Document parse_document(const std::string& text, const Bicoalgebroid* context = nullptr);
Document read_document(const std::filesystem::path& path, const Bicoalgebroid* context = nullptr);

std::string write_document(const Document& doc, int indent = 2);

/// {"passed": bool, "checks": [{"name", "passed", "evaluations", "witness"}]}
std::string report_json(const CheckReport& r, int indent = 2);

}  // namespace bicoalg
