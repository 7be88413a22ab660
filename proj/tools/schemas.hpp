//
// Copyright 2026 The dmcag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DMCAG_TOOLS_SCHEMAS_HPP
#define DMCAG_TOOLS_SCHEMAS_HPP

// JSON Schemas (draft-07) for every JSON document the CLI writes.  The
// version suffix of each id changes whenever a field changes meaning.

#include <string_view>

namespace dmcag::cli {

inline constexpr std::string_view kDmaxSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "dmcag.dmax/1",
  "type": "object",
  "required": ["schema", "rows"],
  "additionalProperties": false,
  "properties": {
    "schema": {"const": "dmcag.dmax/1"},
    "generated_at": {"type": "string"},
    "rows": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["g", "dmax"],
        "additionalProperties": false,
        "properties": {
          "g": {"type": "integer", "minimum": 1},
          "dmax": {"type": "integer", "minimum": 0}
        }
      }
    }
  }
})json";

inline constexpr std::string_view kTablesSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "dmcag.tables/1",
  "type": "object",
  "required": ["schema", "tables"],
  "additionalProperties": false,
  "definitions": {
    "kind": {"enum": ["exact", "lower-bound", "upper-bound"]},
    "cell": {
      "type": "object",
      "required": ["value", "kind", "text", "provenance"],
      "additionalProperties": false,
      "properties": {
        "value": {"type": "integer"},
        "kind": {"$ref": "#/definitions/kind"},
        "text": {"type": "string", "pattern": "^(>=|<=)?[0-9]+$"},
        "provenance": {"type": "string"}
      }
    }
  },
  "properties": {
    "schema": {"const": "dmcag.tables/1"},
    "generated_at": {"type": "string"},
    "tables": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["id", "caption", "genera", "rows", "records"],
        "additionalProperties": false,
        "properties": {
          "id": {"type": "string"},
          "caption": {"type": "string"},
          "genera": {"type": "array", "items": {"type": "integer", "minimum": 1}},
          "rows": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["key", "label", "kind", "conjectural"],
              "additionalProperties": false,
              "properties": {
                "key": {"type": "string"},
                "label": {"type": "string"},
                "kind": {"$ref": "#/definitions/kind"},
                "conjectural": {"type": "boolean"}
              }
            }
          },
          "records": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["g"],
              "properties": {"g": {"type": "integer", "minimum": 1}},
              "additionalProperties": {"$ref": "#/definitions/cell"}
            }
          }
        }
      }
    }
  }
})json";

inline constexpr std::string_view kVerifySchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "dmcag.verify/1",
  "type": "object",
  "required": ["schema", "claim", "range", "status", "checked", "counterexamples",
               "witnesses", "equality_cases", "notes"],
  "additionalProperties": false,
  "properties": {
    "schema": {"const": "dmcag.verify/1"},
    "generated_at": {"type": "string"},
    "claim": {"type": "string"},
    "range": {"type": "object", "additionalProperties": {"type": "integer"}},
    "status": {"enum": ["pass", "fail"]},
    "checked": {"type": "integer", "minimum": 0},
    "counterexamples": {"type": "array"},
    "witnesses": {"type": "array"},
    "equality_cases": {"type": "array"},
    "notes": {"type": "array", "items": {"type": "string"}}
  }
})json";

inline constexpr std::string_view kExplainSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "dmcag.explain/1",
  "type": "object",
  "required": ["schema", "g", "dmc", "case", "summary", "attained_by"],
  "additionalProperties": false,
  "properties": {
    "schema": {"const": "dmcag.explain/1"},
    "generated_at": {"type": "string"},
    "g": {"type": "integer", "minimum": 1},
    "dmc": {"type": "integer", "minimum": 0},
    "case": {"enum": ["(o)", "(i)", "(ii)", "(iii)", "(iv)", "(v)"]},
    "summary": {"type": "string"},
    "attained_by": {
      "type": "array",
      "minItems": 1,
      "items": {
        "type": "object",
        "required": ["descriptor", "kind", "dim"],
        "additionalProperties": false,
        "properties": {
          "descriptor": {"type": "string"},
          "kind": {"enum": ["Point", "HodgeGeneric", "ShimuraCurve", "SpecialFamily", "ProductWithPoint"]},
          "dim": {"type": "integer", "minimum": 0}
        }
      }
    }
  }
})json";

inline constexpr std::string_view kCatalogSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "dmcag.catalog/1",
  "type": "object",
  "required": ["schema", "rep_max", "cases"],
  "additionalProperties": false,
  "properties": {
    "schema": {"const": "dmcag.catalog/1"},
    "generated_at": {"type": "string"},
    "rep_max": {"type": "integer", "minimum": 2},
    "cases": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["case", "params", "hss_dim", "rep_dim", "duality", "min_compact_factors"],
        "additionalProperties": false,
        "properties": {
          "case": {"enum": ["A1", "D4", "I", "Iprime", "II", "III1", "III2", "IV1even", "IV1odd", "IV2"]},
          "params": {"type": "object", "additionalProperties": {"type": "integer"}},
          "hss_dim": {"type": "integer", "minimum": 1},
          "rep_dim": {"type": "integer", "minimum": 2},
          "duality": {"enum": ["Symplectic", "Orthogonal", "NSD"]},
          "min_compact_factors": {"enum": [0, 1]}
        }
      }
    }
  }
})json";

} // namespace dmcag::cli

#endif // DMCAG_TOOLS_SCHEMAS_HPP
