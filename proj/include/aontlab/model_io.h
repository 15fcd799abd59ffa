#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "aontlab/input_model.h"

namespace aontlab {

// Model files are JSON:
//
//   {"s": 2, "v": 3, "kind": "independent",
//    "columns": [[[1,4],[1,8],[5,8]], [[1,3],[1,6],[1,2]]]}
//
//   {"s": 3, "v": 2, "kind": "block-dependent",
//    "block": {"indices": [1,2],
//              "joint": [[[0,0],[1,2]], [[1,1],[1,2]]]}}
//
// Rationals are [numerator, denominator] with a positive denominator. Block
// tuples absent from "joint" have mass zero. Errors surface as
// Errc::parse_error or the model constructors' own codes.
InputModel parse_model_json(const std::string& text);
InputModel read_model_file(const std::filesystem::path& path);
std::string model_to_json(const InputModel& model);

}  // namespace aontlab
