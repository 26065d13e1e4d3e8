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

#include "uncert/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace uncert {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

void require_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(where + ": missing field \"" + key + "\"");
  }
}

int read_count(const json& j, const char* key, const std::string& where) {
  require_field(j, key, where);
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw SchemaError(where + ": field \"" + key +
                      "\" must be a positive integer");
  }
  return v.get<int>();
}

Complex read_entry(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw SchemaError(where + ": expected a [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Matrix read_matrix(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim) {
    throw SchemaError(where + ": expected " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = v[r];
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw SchemaError(row_where + ": expected " + std::to_string(dim) +
                        " entries");
    }
    for (int c = 0; c < dim; ++c) {
      m(r, c) = read_entry(row[c],
                           row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

void write_matrix(std::string& out, const Matrix& m,
                  const std::string& indent) {
  out += indent + "[\n";
  for (int r = 0; r < m.rows(); ++r) {
    out += indent + "  [";
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += "[" + json_number(m(r, c).real()) + ", " +
             json_number(m(r, c).imag()) + "]";
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += indent + "]";
}

}  // namespace

ChannelDocument parse_channel_document(const std::string& text) {
  const json j = parse_json(text, "channel document");
  if (!j.is_object()) {
    throw SchemaError("channel document: top level must be an object");
  }
  ChannelDocument doc;

  require_field(j, "schema_version", "channel document");
  if (!j.at("schema_version").is_string()) {
    throw SchemaError("channel document: field \"schema_version\" must be a "
                      "string");
  }
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != "1") {
    throw SchemaError("channel document: unsupported schema_version \"" +
                      doc.schema_version + "\"");
  }

  doc.dim_in = read_count(j, "dim_in", "channel document");
  doc.dim_out = read_count(j, "dim_out", "channel document");

  require_field(j, "blocks", "channel document");
  const json& blocks = j.at("blocks");
  if (!blocks.is_array() || blocks.empty()) {
    throw SchemaError("channel document: field \"blocks\" must be a "
                      "non-empty array");
  }
  const int dim = doc.dim_in * doc.dim_out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    doc.blocks.push_back(
        read_matrix(blocks[i], dim, "blocks[" + std::to_string(i) + "]"));
  }

  if (j.contains("outcomes")) {
    const json& outcomes = j.at("outcomes");
    if (!outcomes.is_array()) {
      throw SchemaError("channel document: field \"outcomes\" must be an "
                        "array of strings");
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].is_string()) {
        throw SchemaError("outcomes[" + std::to_string(i) +
                          "]: expected a string");
      }
      doc.outcomes.push_back(outcomes[i].get<std::string>());
    }
    if (doc.outcomes.size() != doc.blocks.size()) {
      throw SchemaError("channel document: " +
                        std::to_string(doc.outcomes.size()) +
                        " outcomes for " + std::to_string(doc.blocks.size()) +
                        " blocks");
    }
  }

  if (j.contains("metadata")) {
    const json& metadata = j.at("metadata");
    if (!metadata.is_object()) {
      throw SchemaError("channel document: field \"metadata\" must be an "
                        "object of strings");
    }
    for (const auto& [key, value] : metadata.items()) {
      if (!value.is_string()) {
        throw SchemaError("metadata." + key + ": expected a string");
      }
      doc.metadata[key] = value.get<std::string>();
    }
  }
  return doc;
}

Device document_to_device(const ChannelDocument& doc, bool enforce) {
  Device e;
  e.in = Wire{1, doc.dim_in};
  e.out = Wire{static_cast<int>(doc.blocks.size()), doc.dim_out};
  e.blocks = doc.blocks;
  if (enforce) {
    const double tolerance = tol().io;
    Matrix sum = Matrix::Zero(doc.dim_in, doc.dim_in);
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
      const Matrix& b = e.blocks[i];
      const double herm = (b - b.adjoint()).cwiseAbs().maxCoeff();
      if (herm > tolerance) {
        throw InvariantError("blocks[" + std::to_string(i) +
                             "] is not Hermitian (residual " +
                             json_number(herm) + ")");
      }
      const Matrix sym = 0.5 * (b + b.adjoint());
      const double bottom = min_eig_hermitian(sym);
      if (bottom < -tolerance) {
        throw InvariantError("blocks[" + std::to_string(i) +
                             "] is not positive semidefinite (minimum "
                             "eigenvalue " +
                             json_number(bottom) + ")");
      }
      sum += partial_trace(sym, {doc.dim_out, doc.dim_in}, {1});
    }
    const double tp =
        (sum - Matrix::Identity(doc.dim_in, doc.dim_in)).cwiseAbs().maxCoeff();
    if (tp > tolerance) {
      throw InvariantError("trace preservation residual " + json_number(tp));
    }
    // Downstream eigensolvers check hermiticity far tighter than the load
    // tolerance, so store the symmetrized blocks.
    for (Matrix& b : e.blocks) b = 0.5 * (b + b.adjoint());
  }
  return e;
}

ChannelDocument device_to_document(const Device& e) {
  if (e.in.letters != 1) {
    throw std::invalid_argument(
        "device_to_document: classical-input devices have no document form");
  }
  ChannelDocument doc;
  doc.dim_in = e.in.dim;
  doc.dim_out = e.out.dim;
  doc.blocks = e.blocks;
  return doc;
}

std::string serialize_channel_document(const ChannelDocument& doc) {
  std::string out = "{\n";
  out += "  \"schema_version\": " + json_quote(doc.schema_version) + ",\n";
  out += "  \"dim_in\": " + std::to_string(doc.dim_in) + ",\n";
  out += "  \"dim_out\": " + std::to_string(doc.dim_out) + ",\n";
  if (!doc.outcomes.empty()) {
    out += "  \"outcomes\": [";
    for (std::size_t i = 0; i < doc.outcomes.size(); ++i) {
      if (i > 0) out += ", ";
      out += json_quote(doc.outcomes[i]);
    }
    out += "],\n";
  }
  out += "  \"blocks\": [\n";
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    write_matrix(out, doc.blocks[i], "    ");
    out += i + 1 < doc.blocks.size() ? ",\n" : "\n";
  }
  out += "  ]";
  if (!doc.metadata.empty()) {
    out += ",\n  \"metadata\": {\n";
    std::size_t k = 0;
    for (const auto& [key, value] : doc.metadata) {
      out += "    " + json_quote(key) + ": " + json_quote(value);
      out += ++k < doc.metadata.size() ? ",\n" : "\n";
    }
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

Basis parse_basis_spec(const std::string& spec) {
  const std::size_t head = spec.find(':');
  if (head == std::string::npos) {
    throw SchemaError("basis spec \"" + spec +
                      "\": expected conjugate:D:X|Z or file:PATH");
  }
  const std::string kind = spec.substr(0, head);
  const std::string rest = spec.substr(head + 1);

  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw SchemaError("basis file \"" + rest + "\": cannot read");
    std::ostringstream buf;
    buf << in.rdbuf();
    const json j = parse_json(buf.str(), "basis file " + rest);
    const int dim = read_count(j, "dim", "basis file");
    std::string label = "file";
    if (j.contains("label")) {
      if (!j.at("label").is_string()) {
        throw SchemaError("basis file: field \"label\" must be a string");
      }
      label = j.at("label").get<std::string>();
    }
    require_field(j, "vectors", "basis file");
    const json& vectors = j.at("vectors");
    if (!vectors.is_array() || static_cast<int>(vectors.size()) != dim) {
      throw SchemaError("basis file: expected " + std::to_string(dim) +
                        " vectors");
    }
    std::vector<Vector> parsed;
    for (int k = 0; k < dim; ++k) {
      const json& v = vectors[k];
      const std::string where = "vectors[" + std::to_string(k) + "]";
      if (!v.is_array() || static_cast<int>(v.size()) != dim) {
        throw SchemaError(where + ": expected " + std::to_string(dim) +
                          " entries");
      }
      Vector vec(dim);
      for (int i = 0; i < dim; ++i) {
        vec(i) = read_entry(v[i], where + "[" + std::to_string(i) + "]");
      }
      parsed.push_back(std::move(vec));
    }
    return make_basis(std::move(parsed), std::move(label));
  }

  if (kind == "conjugate") {
    const std::size_t mid = rest.find(':');
    if (mid == std::string::npos) {
      throw SchemaError("basis spec \"" + spec +
                        "\": expected conjugate:D:X|Z");
    }
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(rest.substr(0, mid), &used);
      if (used != mid) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw SchemaError("basis spec \"" + spec + "\": bad dimension");
    }
    if (d < 2) {
      throw SchemaError("basis spec \"" + spec + "\": dimension must be >= 2");
    }
    const std::string which = rest.substr(mid + 1);
    if (which == "X") return conjugate_basis(d).phi;
    if (which == "Z") return conjugate_basis(d).theta;
    throw SchemaError("basis spec \"" + spec + "\": basis must be X or Z");
  }

  throw SchemaError("basis spec \"" + spec +
                    "\": expected conjugate:D:X|Z or file:PATH");
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += "\"";
  return out;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("json_number: non-finite value");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace uncert
