#pragma once

#include <string>

#include "rootsets/gallery.hpp"
#include "rootsets/infinite.hpp"

namespace rootsets {

// Serialization uses sorted-key JSON so identical inputs produce identical
// bytes. Rationals serialize as "p/q" strings (q omitted when 1), quadratic
// scalars as {"a": "p/q", "b": "p/q", "d": n}.

std::string system_to_json(const RootSystem& sys);
std::string subset_to_json(const RootSubset& p);
std::string covector_to_json(const Covec& l);
std::string verdict_to_json(const Verdict& v);
std::string report_to_json(const CounterexampleReport& r);
std::string affine_classification_to_json(const AffineClassification& c);
std::string toroidal_witness_to_json(const ToroidalWitness& w);
std::string violation_to_json(const ParabolicViolation& v);

RootSystemPtr system_from_json(const std::string& text);
RootSubset subset_from_json(const std::string& text, RootSystemPtr sys);
Covec covector_from_json(const std::string& text);
Verdict verdict_from_json(const std::string& text);
AffineDescriptor affine_descriptor_from_json(const std::string& text);
std::string affine_descriptor_to_json(const AffineDescriptor& d);

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rootsets
