// Copyright 2026 The uncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNCERT_IO_HPP_
#define UNCERT_IO_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "uncert/channels.hpp"

namespace uncert {

// Malformed document: wrong JSON, missing or ill-typed field. The message
// names the offending field and location.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed document that is not a valid device. The message names the
// violated invariant and the measured residual.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk channel description, schema_version "1". Quantum input, classical
// letter + quantum factor output; one Choi block per output letter, each
// (dim_out * dim_in) square with [re, im] entries.
struct ChannelDocument {
  std::string schema_version = "1";
  int dim_in = 0;
  int dim_out = 0;
  std::vector<std::string> outcomes;  // optional letter labels
  std::vector<Matrix> blocks;
  std::map<std::string, std::string> metadata;  // free-form
};

ChannelDocument parse_channel_document(const std::string& text);

// Document -> device. With enforce set, blocks must be Hermitian and PSD and
// the letter-summed partial trace must be the identity, all to tol().io;
// violations raise InvariantError with the residual. enforce = false is the
// raw-inspection override.
Device document_to_device(const ChannelDocument& doc, bool enforce = true);

// Device -> document; the device must have a trivial classical input wire.
ChannelDocument device_to_document(const Device& e);

// Canonical serialization: fixed field order, two-space indentation, numbers
// with 17 significant digits (lossless double round-trip). Parsing a
// serialized document and serializing it again is byte-identical.
std::string serialize_channel_document(const ChannelDocument& doc);

// Basis mini-language: "conjugate:D:X" / "conjugate:D:Z" for the Fourier
// pair in dimension D, or "file:PATH" naming a JSON document
// {"dim": d, "label": text, "vectors": [[[re,im],...],...]} with orthonormal
// columns. SchemaError on a malformed spec or file; make_basis validates
// orthonormality.
Basis parse_basis_spec(const std::string& spec);

// JSON string escaping per RFC 8259.
std::string json_quote(const std::string& s);

// Shortest text with 17 significant digits; round-trips any finite double.
std::string json_number(double v);

}  // namespace uncert

#endif  // UNCERT_IO_HPP_
