// Copyright 2026 The coherework Authors
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

#include "scenario.h"

namespace coherework::cli {

namespace {

constexpr std::string_view kSchema = R"JSON({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "https://coherework.invalid/scenario.schema.json",
  "title": "coherework scenario",
  "type": "object",
  "required": ["kind"],
  "oneOf": [
    {"$ref": "#/$defs/project"},
    {"$ref": "#/$defs/protocol"},
    {"$ref": "#/$defs/bound_scan"},
    {"$ref": "#/$defs/jarzynski"},
    {"$ref": "#/$defs/singleshot_state"},
    {"$ref": "#/$defs/singleshot_distributions"},
    {"$ref": "#/$defs/correlations"}
  ],
  "$defs": {
    "complex": {
      "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
      ]
    },
    "matrix": {
      "description": "Row-major square matrix; entries are [re, im] pairs or real numbers.",
      "type": "array",
      "minItems": 1,
      "items": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/complex"}}
    },
    "seed": {"type": "integer", "minimum": 0},
    "dim": {"type": "integer", "minimum": 1, "maximum": 64},
    "beta": {"type": "number", "exclusiveMinimum": 0},
    "state": {
      "type": "object",
      "required": ["type"],
      "oneOf": [
        {"properties": {"type": {"const": "matrix"}, "entries": {"$ref": "#/$defs/matrix"}},
         "required": ["entries"], "additionalProperties": false},
        {"properties": {"type": {"const": "pure"}, "amplitudes": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/complex"}}},
         "required": ["amplitudes"], "additionalProperties": false},
        {"properties": {"type": {"const": "bloch"}, "a": {"type": "number", "minimum": 0, "maximum": 1},
                        "theta": {"type": "number"}, "phi": {"type": "number"}},
         "required": ["a", "theta"], "additionalProperties": false},
        {"properties": {"type": {"const": "gibbs"}}, "additionalProperties": false},
        {"properties": {"type": {"const": "maximally_mixed"}, "dim": {"$ref": "#/$defs/dim"}},
         "required": ["dim"], "additionalProperties": false},
        {"properties": {"type": {"const": "random"}, "dim": {"$ref": "#/$defs/dim"}, "seed": {"$ref": "#/$defs/seed"},
                        "rank": {"type": "integer", "minimum": 0}},
         "required": ["dim", "seed"], "additionalProperties": false}
      ]
    },
    "hamiltonian": {
      "type": "object",
      "required": ["type"],
      "oneOf": [
        {"properties": {"type": {"const": "diagonal"}, "energies": {"type": "array", "minItems": 1, "items": {"type": "number"}}},
         "required": ["energies"], "additionalProperties": false},
        {"properties": {"type": {"const": "matrix"}, "entries": {"$ref": "#/$defs/matrix"}},
         "required": ["entries"], "additionalProperties": false},
        {"properties": {"type": {"const": "random"}, "dim": {"$ref": "#/$defs/dim"}, "seed": {"$ref": "#/$defs/seed"}},
         "required": ["dim", "seed"], "additionalProperties": false}
      ]
    },
    "projectors": {
      "type": "object",
      "required": ["type"],
      "oneOf": [
        {"properties": {"type": {"const": "energy"}}, "additionalProperties": false},
        {"properties": {"type": {"const": "computational"}}, "additionalProperties": false},
        {"properties": {"type": {"const": "basis"}, "matrix": {"$ref": "#/$defs/matrix"}},
         "required": ["matrix"], "additionalProperties": false},
        {"properties": {"type": {"const": "projectors"}, "matrices": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/matrix"}}},
         "required": ["matrices"], "additionalProperties": false}
      ]
    },
    "unitary": {
      "type": "object",
      "required": ["type"],
      "oneOf": [
        {"properties": {"type": {"const": "identity"}}, "additionalProperties": false},
        {"properties": {"type": {"const": "matrix"}, "entries": {"$ref": "#/$defs/matrix"}},
         "required": ["entries"], "additionalProperties": false},
        {"properties": {"type": {"const": "random"}, "seed": {"$ref": "#/$defs/seed"}},
         "required": ["seed"], "additionalProperties": false}
      ]
    },
    "bipartite": {
      "type": "object",
      "required": ["type"],
      "oneOf": [
        {"properties": {"type": {"const": "purification"}, "system": {"$ref": "#/$defs/state"}},
         "required": ["system"], "additionalProperties": false},
        {"properties": {"type": {"const": "product"}, "system": {"$ref": "#/$defs/state"}, "ancilla": {"$ref": "#/$defs/state"}},
         "required": ["system", "ancilla"], "additionalProperties": false},
        {"properties": {"type": {"const": "matrix"}, "dim_s": {"$ref": "#/$defs/dim"}, "dim_a": {"$ref": "#/$defs/dim"},
                        "entries": {"$ref": "#/$defs/matrix"}},
         "required": ["dim_s", "dim_a", "entries"], "additionalProperties": false},
        {"properties": {"type": {"const": "random_extension"}, "system": {"$ref": "#/$defs/state"},
                        "dim_a": {"$ref": "#/$defs/dim"}, "dim_env": {"$ref": "#/$defs/dim"}, "seed": {"$ref": "#/$defs/seed"}},
         "required": ["system", "dim_a", "seed"], "additionalProperties": false}
      ]
    },
    "eps": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
    "n_copies": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1, "maximum": 100000}},
    "distribution": {"type": "array", "minItems": 1, "items": {"type": "number", "minimum": 0}},
    "project": {
      "properties": {"kind": {"const": "project"}, "state": {"$ref": "#/$defs/state"},
                     "hamiltonian": {"$ref": "#/$defs/hamiltonian"}, "beta": {"$ref": "#/$defs/beta"},
                     "projectors": {"$ref": "#/$defs/projectors"}},
      "required": ["state", "hamiltonian", "beta"], "additionalProperties": false
    },
    "protocol": {
      "properties": {"kind": {"const": "protocol"}, "state": {"$ref": "#/$defs/state"},
                     "hamiltonian": {"$ref": "#/$defs/hamiltonian"}, "beta": {"$ref": "#/$defs/beta"},
                     "steps": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1, "maximum": 10000000}},
                     "purity_clamp": {"type": "number", "minimum": 0, "maximum": 0.001},
                     "pairing": {"enum": ["descending_population", "index_order"]}},
      "required": ["state", "hamiltonian", "beta"], "additionalProperties": false
    },
    "bound_scan": {
      "properties": {"kind": {"const": "bound_scan"}, "a": {"type": "number", "minimum": 0, "maximum": 1},
                     "points": {"type": "integer", "minimum": 2, "maximum": 100000}, "phi": {"type": "number"}},
      "required": ["a"], "additionalProperties": false
    },
    "jarzynski": {
      "properties": {"kind": {"const": "jarzynski"}, "hamiltonian": {"$ref": "#/$defs/hamiltonian"},
                     "hamiltonian_final": {"$ref": "#/$defs/hamiltonian"}, "unitary": {"$ref": "#/$defs/unitary"},
                     "beta": {"$ref": "#/$defs/beta"},
                     "n_samples": {"type": "integer", "minimum": 0, "maximum": 100000000},
                     "seed": {"$ref": "#/$defs/seed"}},
      "required": ["hamiltonian", "hamiltonian_final", "unitary", "beta"], "additionalProperties": false
    },
    "singleshot_state": {
      "properties": {"kind": {"const": "singleshot"}, "state": {"$ref": "#/$defs/state"},
                     "hamiltonian": {"$ref": "#/$defs/hamiltonian"}, "beta": {"$ref": "#/$defs/beta"},
                     "eps": {"$ref": "#/$defs/eps"}, "n_copies": {"$ref": "#/$defs/n_copies"}},
      "required": ["state", "hamiltonian", "beta", "eps"], "additionalProperties": false
    },
    "singleshot_distributions": {
      "properties": {"kind": {"const": "singleshot"}, "p": {"$ref": "#/$defs/distribution"},
                     "q": {"$ref": "#/$defs/distribution"}, "eps": {"$ref": "#/$defs/eps"},
                     "n_copies": {"$ref": "#/$defs/n_copies"}},
      "required": ["p", "q", "eps"], "additionalProperties": false
    },
    "correlations": {
      "properties": {"kind": {"const": "correlations"}, "bipartite": {"$ref": "#/$defs/bipartite"},
                     "hamiltonian": {"$ref": "#/$defs/hamiltonian"}, "beta": {"$ref": "#/$defs/beta"},
                     "projectors": {"$ref": "#/$defs/projectors"}},
      "required": ["bipartite", "hamiltonian", "beta"], "additionalProperties": false
    },
    "series": {
      "type": "object",
      "properties": {"name": {"type": "string"}, "x_label": {"type": "string"}, "y_label": {"type": "string"},
                     "x": {"type": "array", "items": {"type": ["number", "null"]}},
                     "y": {"type": "array", "items": {"type": ["number", "null"]}}},
      "required": ["name", "x_label", "y_label", "x", "y"], "additionalProperties": false
    },
    "report": {
      "description": "Output of `coherework run`. Non-finite numbers are written as null.",
      "type": "object",
      "properties": {
        "kind": {"enum": ["project", "protocol", "bound_scan", "jarzynski", "singleshot", "correlations"]},
        "scenario": {"type": "object"},
        "results": {"type": "object"},
        "provenance": {
          "type": "object",
          "properties": {"tool": {"const": "coherework"}, "version": {"type": "string"},
                         "seeds": {"type": "array", "items": {"$ref": "#/$defs/seed"}},
                         "tolerances": {"type": "object", "additionalProperties": {"type": "number"}}},
          "required": ["tool", "version", "seeds", "tolerances"], "additionalProperties": false
        },
        "series": {"type": "array", "items": {"$ref": "#/$defs/series"}}
      },
      "required": ["kind", "scenario", "results", "provenance", "series"],
      "additionalProperties": false
    }
  }
}
)JSON";

}  // namespace

std::string_view scenario_schema() {
    return kSchema;
}

}  // namespace coherework::cli
