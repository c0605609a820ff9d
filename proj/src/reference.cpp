// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/reference.hpp"

namespace qrws {

namespace detail {
extern const char kReferenceJson[];
}

const nlohmann::json &reference_values() {
    static const nlohmann::json doc = nlohmann::json::parse(detail::kReferenceJson);
    return doc;
}

}  // namespace qrws
