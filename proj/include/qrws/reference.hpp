// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

namespace qrws {

/// Published reference values compiled in from data/reference_values.json.
/// Each block names its source table or figure.
const nlohmann::json &reference_values();

}  // namespace qrws
